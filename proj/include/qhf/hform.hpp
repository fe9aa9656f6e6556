#pragma once

#include <array>
#include <stdexcept>

#include "qhf/quaternion.hpp"

namespace qhf {

// Column vector in the right quaternionic vector space H^{2,1}.
// Scalars act on the RIGHT: (p * s)_i = p_i * s.
template <class S>
struct Vector3 {
    std::array<Quaternion<S>, 3> c{};

    Quaternion<S>& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const Quaternion<S>& operator[](int i) const { return c[static_cast<size_t>(i)]; }

    friend Vector3 operator+(const Vector3& a, const Vector3& b) {
        Vector3 r;
        for (int i = 0; i < 3; ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend Vector3 operator-(const Vector3& a, const Vector3& b) {
        Vector3 r;
        for (int i = 0; i < 3; ++i) r[i] = a[i] - b[i];
        return r;
    }
    // right scalar action
    friend Vector3 operator*(const Vector3& a, const Quaternion<S>& s) {
        Vector3 r;
        for (int i = 0; i < 3; ++i) r[i] = a[i] * s;
        return r;
    }

    static Vector3 e(int i) {
        Vector3 r;
        r[i] = Quaternion<S>::one();
        return r;
    }

    friend bool operator==(const Vector3& a, const Vector3& b) { return a.c == b.c; }
};

template <class S>
bool is_zero_vector(const Vector3<S>& p) {
    return p[0] == Quaternion<S>::zero() && p[1] == Quaternion<S>::zero() &&
           p[2] == Quaternion<S>::zero();
}

// Euclidean squared norm of the representative, |p1|^2+|p2|^2+|p3|^2.
template <class S>
S vec_norm_sq(const Vector3<S>& p) {
    return S(norm_sq(p[0]) + norm_sq(p[1]) + norm_sq(p[2]));
}

// Second Hermitian form, <p,q> = q* J p with J anti-diagonal:
//   <p,q> = conj(q1) p3 + conj(q2) p2 + conj(q3) p1.
// Right-linear in p, conjugate-linear in q:
//   herm(p*a, q*b) = conj(b) * herm(p,q) * a.
template <class S>
Quaternion<S> herm(const Vector3<S>& p, const Vector3<S>& q) {
    return conj(q[0]) * p[2] + conj(q[1]) * p[1] + conj(q[2]) * p[0];
}

enum class PointType { negative, null, positive };

// Right-projective class of a nonzero vector in H^{2,1}.
template <class S>
struct ProjectivePoint {
    Vector3<S> rep;

    ProjectivePoint() = default;
    explicit ProjectivePoint(Vector3<S> v) : rep(std::move(v)) {
        if (is_zero_vector(rep)) throw std::invalid_argument("zero representative");
    }

    static ProjectivePoint infinity() { return ProjectivePoint(Vector3<S>::e(0)); }
    static ProjectivePoint origin() { return ProjectivePoint(Vector3<S>::e(2)); }
};

// Index of the last coordinate distinguishable from zero, relative to the
// largest component. Exact backend compares against literal zero.
template <class S>
int last_nonzero_index(const Vector3<S>& p, const S& rel_eps = S(0)) {
    S m{};
    for (int i = 0; i < 3; ++i) {
        S c = cheb(p[i]);
        if (c > m) m = c;
    }
    S thresh = S(rel_eps * m);
    for (int i = 2; i >= 0; --i) {
        if (cheb(p[i]) > thresh) return i;
    }
    return -1;
}

// Canonical representative: last nonzero coordinate normalized to 1 by
// right multiplication with its inverse.
template <class S>
Vector3<S> canonicalize(const Vector3<S>& p, const S& rel_eps = S(0)) {
    int k = last_nonzero_index(p, rel_eps);
    if (k < 0) throw std::invalid_argument("zero vector has no canonical form");
    return p * inverse(p[k]);
}

template <class S>
PointType point_type(const ProjectivePoint<S>& p, const S& eps = S(0)) {
    S v = re(herm(p.rep, p.rep));
    S scale = S(eps * vec_norm_sq(p.rep));
    if (scalar_abs(v) <= scale) return PointType::null;
    return v < S(0) ? PointType::negative : PointType::positive;
}

}  // namespace qhf
