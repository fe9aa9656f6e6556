#pragma once

#include <cmath>
#include <stdexcept>

#include "qhf/hform.hpp"

namespace qhf {

// Horospherical coordinates of the Siegel domain closure:
// either the distinguished point at infinity, or (zeta, v, u) with
// v purely imaginary and u >= 0 (u = 0 on the boundary).
struct Horospherical {
    bool at_infinity = false;
    Quaternion<double> zeta;
    Quaternion<double> v;   // Im part only; w component must be 0
    double u = 0.0;

    static Horospherical infinity() {
        Horospherical h;
        h.at_infinity = true;
        return h;
    }
    static Horospherical finite(Quaternion<double> zeta, Quaternion<double> v, double u) {
        if (v.w != 0.0) throw std::invalid_argument("v must be purely imaginary");
        if (u < 0.0) throw std::invalid_argument("u must be nonnegative");
        Horospherical h;
        h.zeta = zeta;
        h.v = v;
        h.u = u;
        return h;
    }
};

// (zeta, v, u) -> (-|zeta|^2 - u + v, sqrt(2) zeta, 1)^t ; infinity -> e1.
inline ProjectivePoint<double> psi(const Horospherical& h) {
    if (h.at_infinity) return ProjectivePoint<double>::infinity();
    Vector3<double> p;
    p[0] = Quaternion<double>(-norm_sq(h.zeta) - h.u) + h.v;
    p[1] = h.zeta * std::sqrt(2.0);
    p[2] = Quaternion<double>::one();
    return ProjectivePoint<double>(p);
}

// Inverse of psi on the closure of the Siegel domain image.
inline Horospherical psi_inv(const ProjectivePoint<double>& p, double eps = 1e-12) {
    if (point_type(p, eps) == PointType::positive)
        throw std::invalid_argument("psi_inv: positive point is outside the closure");
    int k = last_nonzero_index(p.rep, eps);
    if (k == 0) return Horospherical::infinity();
    if (k != 2) throw std::invalid_argument("psi_inv: third coordinate vanishes off infinity");
    Vector3<double> c = p.rep * inverse(p.rep[2]);
    Quaternion<double> zeta = c[1] * (1.0 / std::sqrt(2.0));
    Quaternion<double> v = im(c[0]);
    double u = -re(c[0]) - norm_sq(zeta);
    if (u < 0.0) u = 0.0;  // clamp rounding noise on boundary points
    Horospherical h;
    h.zeta = zeta;
    h.v = v;
    h.u = u;
    return h;
}

// Membership in the standard quaternionic line of polar vector e2
// (second coordinate vanishes).
template <class S>
bool in_standard_hline(const ProjectivePoint<S>& p, const S& eps = S(0)) {
    // |<p, e2>| <= eps * ||p||, squared to stay sqrt-free
    Quaternion<S> h = herm(p.rep, Vector3<S>::e(1));
    return norm_sq(h) <= S(eps * eps * vec_norm_sq(p.rep));
}

// Membership in H^2_R: all components real after canonicalization.
template <class S>
bool in_standard_real_plane(const ProjectivePoint<S>& p, const S& eps = S(0)) {
    Vector3<S> c = canonicalize(p.rep, eps);
    S m{};
    for (int i = 0; i < 3; ++i) {
        S v = cheb(c[i]);
        if (v > m) m = v;
    }
    S thresh = S(eps * (S(1) + m));
    for (int i = 0; i < 3; ++i) {
        if (!is_real(c[i], thresh)) return false;
    }
    return true;
}

}  // namespace qhf
