#pragma once

#include <cmath>
#include <stdexcept>

#include "qhf/scalar.hpp"

namespace qhf {

// Hamilton quaternion w + xi + yj + zk over a scalar backend S.
// Multiplication is NOT commutative; keep left/right factors in order.
template <class S>
struct Quaternion {
    S w{}, x{}, y{}, z{};

    Quaternion() = default;
    Quaternion(S w_, S x_, S y_, S z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    explicit Quaternion(S w_) : w(std::move(w_)) {}

    static Quaternion zero() { return Quaternion(); }
    static Quaternion one() { return Quaternion(S(1), S(0), S(0), S(0)); }
    static Quaternion i() { return Quaternion(S(0), S(1), S(0), S(0)); }
    static Quaternion j() { return Quaternion(S(0), S(0), S(1), S(0)); }
    static Quaternion k() { return Quaternion(S(0), S(0), S(0), S(1)); }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {S(a.w + b.w), S(a.x + b.x), S(a.y + b.y), S(a.z + b.z)};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {S(a.w - b.w), S(a.x - b.x), S(a.y - b.y), S(a.z - b.z)};
    }
    Quaternion operator-() const { return {S(-w), S(-x), S(-y), S(-z)}; }

    // Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {S(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z),
                S(a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y),
                S(a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x),
                S(a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w)};
    }
    friend Quaternion operator*(const Quaternion& a, const S& s) {
        return {S(a.w * s), S(a.x * s), S(a.y * s), S(a.z * s)};
    }
    friend Quaternion operator*(const S& s, const Quaternion& a) {
        return {S(s * a.w), S(s * a.x), S(s * a.y), S(s * a.z)};
    }

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

template <class S>
Quaternion<S> conj(const Quaternion<S>& q) {
    return {q.w, S(-q.x), S(-q.y), S(-q.z)};
}

template <class S>
S norm_sq(const Quaternion<S>& q) {
    return S(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}

inline double abs(const Quaternion<double>& q) { return std::sqrt(norm_sq(q)); }

// Chebyshev magnitude: max absolute component. Exact-friendly and within
// a factor 2 of the Euclidean norm; used for residual reporting.
template <class S>
S cheb(const Quaternion<S>& q) {
    S m = scalar_abs(q.w);
    S c = scalar_abs(q.x);
    if (c > m) m = c;
    c = scalar_abs(q.y);
    if (c > m) m = c;
    c = scalar_abs(q.z);
    if (c > m) m = c;
    return m;
}

template <class S>
Quaternion<S> inverse(const Quaternion<S>& q) {
    S n = norm_sq(q);
    if (n == S(0)) throw std::domain_error("quaternion inverse of zero");
    return {S(q.w / n), S(-q.x / n), S(-q.y / n), S(-q.z / n)};
}

template <class S>
bool is_real(const Quaternion<S>& q, const S& eps = S(0)) {
    return scalar_abs(q.x) <= eps && scalar_abs(q.y) <= eps && scalar_abs(q.z) <= eps;
}

template <class S>
bool is_pure_imaginary(const Quaternion<S>& q, const S& eps = S(0)) {
    return scalar_abs(q.w) <= eps;
}

template <class S>
S re(const Quaternion<S>& q) { return q.w; }

template <class S>
Quaternion<double> to_double(const Quaternion<S>& q) {
    using T = scalar_traits<S>;
    return {T::to_double(q.w), T::to_double(q.x), T::to_double(q.y), T::to_double(q.z)};
}

template <class S>
Quaternion<S> im(const Quaternion<S>& q) {
    return {S(0), q.x, q.y, q.z};
}

}  // namespace qhf
