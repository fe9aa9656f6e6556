#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "qhf/matrix.hpp"
#include "qhf/model.hpp"
#include "qhf/rng.hpp"

namespace qhf {

// Chordal-style distance on right quaternionic projective space:
// sin of the angle between the representative lines. Invariant under
// right scaling of either argument.
inline double projective_distance(const Vector3<double>& p, const Vector3<double>& q) {
    double np = std::sqrt(vec_norm_sq(p)), nq = std::sqrt(vec_norm_sq(q));
    Quaternion<double> ip;  // standard Euclidean pairing sum conj(q_i) p_i
    for (int i = 0; i < 3; ++i) ip = ip + conj(q[i]) * p[i];
    ip = ip * (1.0 / (np * nq));
    // residual of the best right-scalar fit q*ip to p; avoids the
    // catastrophic cancellation of sqrt(1 - |ip|^2) near coincidence
    double rsq = 0.0;
    for (int i = 0; i < 3; ++i)
        rsq += norm_sq(p[i] * (1.0 / np) - q[i] * (1.0 / nq) * ip);
    return std::sqrt(std::min(1.0, rsq));
}

inline double projective_distance(const ProjectivePoint<double>& p,
                                  const ProjectivePoint<double>& q) {
    return projective_distance(p.rep, q.rep);
}

inline Vector3<double> normalize_euclid(const Vector3<double>& p) {
    double n = std::sqrt(vec_norm_sq(p));
    Vector3<double> r;
    for (int i = 0; i < 3; ++i) r[i] = p[i] * (1.0 / n);
    return r;
}

struct FixedPointResult {
    bool loxodromic = false;
    ProjectivePoint<double> attracting;
    ProjectivePoint<double> repelling;
    std::string diagnostics;
};

namespace detail {

inline Matrix3<double> normalize_matrix(const Matrix3<double>& a) {
    double m = matrix_cheb(a);
    Matrix3<double> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = a(i, j) * (1.0 / m);
    return r;
}

// Dominant boundary direction of A: drive random null starts with
// repeatedly squared powers of A. Returns nothing when the starts
// disagree or the limit is not a fixed null point.
inline std::optional<ProjectivePoint<double>> dominant_null_direction(
    const Matrix3<double>& a, Rng& rng, int max_iters, double eps) {
    Matrix3<double> power = normalize_matrix(a);
    // A^(2^k); k squarings give convergence rate lambda^(-2^k)
    int squarings = std::min(max_iters, 64);
    for (int k = 0; k < squarings; ++k) power = normalize_matrix(power * power);

    std::optional<Vector3<double>> limit;
    for (int s = 0; s < 3; ++s) {
        Horospherical h;
        h.zeta = rng.quaternion(-2.0, 2.0);
        h.v = rng.pure_imaginary(-2.0, 2.0);
        h.u = 0.0;
        Vector3<double> p = normalize_euclid(power * psi(h).rep);
        // plain iterations to polish past roundoff of the squaring
        for (int it = 0; it < 40; ++it) p = normalize_euclid(a * p);
        if (limit && projective_distance(*limit, p) > eps) return std::nullopt;
        if (!limit) limit = p;
    }
    if (!limit) return std::nullopt;
    // must be an actual fixed null point
    if (projective_distance(a * *limit, *limit) > eps) return std::nullopt;
    ProjectivePoint<double> fp(*limit);
    if (point_type(fp, 1e-9) != PointType::null) return std::nullopt;
    return fp;
}

}  // namespace detail

// Attracting/repelling boundary fixed points by iteration of A and A^{-1}
// from random null starting points. "other" covers everything that is not
// loxodromic (or that fails to converge within max_iters).
inline FixedPointResult fixed_points_dynamical(const Matrix3<double>& a, int max_iters = 64,
                                               double eps = 1e-9, uint64_t seed = 0) {
    FixedPointResult r;
    Rng rng(seed ^ 0x51ed270b7a23c563ULL);
    auto att = detail::dominant_null_direction(a, rng, max_iters, eps);
    if (!att) {
        r.diagnostics = "no attracting limit (starts disagree or limit not fixed/null)";
        return r;
    }
    auto rep = detail::dominant_null_direction(inverse_formula(a), rng, max_iters, eps);
    if (!rep) {
        r.diagnostics = "no repelling limit";
        return r;
    }
    if (projective_distance(*att, *rep) <= eps) {
        r.diagnostics = "attracting and repelling limits coincide";
        return r;
    }
    r.loxodromic = true;
    r.attracting = *att;
    r.repelling = *rep;
    return r;
}

// Frame Q in Sp(2,1) sending p to infinity (e1) and q to 0 (e3).
// Columns of Q^{-1} are (p, e, q') with herm(q', p) = 1 and e a unit
// positive vector Hermitian-orthogonal to both. All scalings act on the
// right; pairings follow herm's (first-arg right-linear) convention, so
// the subtraction coefficients sit to the RIGHT of the column vectors.
inline Matrix3<double> frame_from_boundary_pair(const ProjectivePoint<double>& p,
                                                const ProjectivePoint<double>& q,
                                                double eps = 1e-9, uint64_t seed = 0) {
    const Vector3<double> pv = normalize_euclid(p.rep);
    Vector3<double> qv = normalize_euclid(q.rep);
    Quaternion<double> s = herm(qv, pv);
    if (abs(s) <= eps) throw std::invalid_argument("degenerate boundary pair: <q,p> ~ 0");
    qv = qv * inverse(s);  // now herm(qv, pv) = 1

    Rng rng(seed ^ 0x9a3c7f1d2b5e8406ULL);
    for (int attempt = 0; attempt < 4; ++attempt) {
        // e2 first: keeps standard configurations exactly standard
        Vector3<double> x = Vector3<double>::e(1);
        if (attempt == 1) x = Vector3<double>::e(0);
        if (attempt == 2) x = Vector3<double>::e(2);
        if (attempt >= 3)
            for (int i = 0; i < 3; ++i) x[i] = rng.quaternion();
        Vector3<double> e = x - pv * herm(x, qv) - qv * herm(x, pv);
        double nsq = re(herm(e, e));
        if (nsq <= eps * vec_norm_sq(e) || vec_norm_sq(e) <= eps) continue;
        e = e * Quaternion<double>(1.0 / std::sqrt(nsq));
        Matrix3<double> m;
        for (int i = 0; i < 3; ++i) {
            m(i, 0) = pv[i];
            m(i, 1) = e[i];
            m(i, 2) = qv[i];
        }
        if (sp21_residual(m) > 1e-6) continue;  // candidate was too close to span{p,q}
        return inverse_formula(m);
    }
    throw std::runtime_error("frame_from_boundary_pair: orthogonalization failed");
}

}  // namespace qhf
