#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhf/hform.hpp"

namespace qhf {

// 3x3 quaternionic matrix, candidate element of Sp(2,1) for the
// anti-diagonal form J. Acts on H^{2,1} by left multiplication.
template <class S>
struct Matrix3 {
    std::array<std::array<Quaternion<S>, 3>, 3> m{};

    Quaternion<S>& operator()(int i, int j) { return m[size_t(i)][size_t(j)]; }
    const Quaternion<S>& operator()(int i, int j) const { return m[size_t(i)][size_t(j)]; }

    static Matrix3 identity() {
        Matrix3 r;
        for (int i = 0; i < 3; ++i) r(i, i) = Quaternion<S>::one();
        return r;
    }
    static Matrix3 diagonal(Quaternion<S> d0, Quaternion<S> d1, Quaternion<S> d2) {
        Matrix3 r;
        r(0, 0) = std::move(d0);
        r(1, 1) = std::move(d1);
        r(2, 2) = std::move(d2);
        return r;
    }

    friend Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
        Matrix3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
        return r;
    }
    friend Vector3<S> operator*(const Matrix3& a, const Vector3<S>& p) {
        Vector3<S> r;
        for (int i = 0; i < 3; ++i) r[i] = a(i, 0) * p[0] + a(i, 1) * p[1] + a(i, 2) * p[2];
        return r;
    }
    friend Matrix3 operator-(const Matrix3& a, const Matrix3& b) {
        Matrix3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = a(i, j) - b(i, j);
        return r;
    }
    friend bool operator==(const Matrix3& a, const Matrix3& b) { return a.m == b.m; }
};

template <class S>
Matrix3<S> form_matrix_J() {
    Matrix3<S> j;
    j(0, 2) = Quaternion<S>::one();
    j(1, 1) = Quaternion<S>::one();
    j(2, 0) = Quaternion<S>::one();
    return j;
}

// Conjugate transpose A*.
template <class S>
Matrix3<S> adjoint(const Matrix3<S>& a) {
    Matrix3<S> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = conj(a(j, i));
    return r;
}

template <class S>
S matrix_cheb(const Matrix3<S>& a) {
    S m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            S c = cheb(a(i, j));
            if (c > m) m = c;
        }
    return m;
}

// Membership residual || A* J A - J ||_max; zero exactly on Sp(2,1).
template <class S>
S sp21_residual(const Matrix3<S>& a) {
    Matrix3<S> j = form_matrix_J<S>();
    return matrix_cheb(adjoint(a) * j * a - j);
}

template <class S>
bool is_in_sp21(const Matrix3<S>& a, const S& eps = S(0)) {
    return sp21_residual(a) <= eps;
}

// Closed-form inverse for A in Sp(2,1) with entries
//   [a b c; d e f; g h l]  ->  [conj(l) conj(f) conj(c); conj(h) conj(e) conj(b); conj(g) conj(d) conj(a)].
template <class S>
Matrix3<S> inverse_formula(const Matrix3<S>& a) {
    Matrix3<S> r;
    r(0, 0) = conj(a(2, 2));
    r(0, 1) = conj(a(1, 2));
    r(0, 2) = conj(a(0, 2));
    r(1, 0) = conj(a(2, 1));
    r(1, 1) = conj(a(1, 1));
    r(1, 2) = conj(a(0, 1));
    r(2, 0) = conj(a(2, 0));
    r(2, 1) = conj(a(1, 0));
    r(2, 2) = conj(a(0, 0));
    return r;
}

// The 18 relations forced by A A^{-1} = A^{-1} A = I, in display order.
// Residual i is the Chebyshev magnitude of (lhs_i - rhs_i).
// Relation 2 is a*conj(f) + b*conj(e) + c*conj(d) = 0, the form matrix
// multiplication forces.
template <class S>
std::array<S, 18> identities_residuals(const Matrix3<S>& A) {
    const Quaternion<S>&a = A(0, 0), &b = A(0, 1), &c = A(0, 2), &d = A(1, 0), &e = A(1, 1),
                       &f = A(1, 2), &g = A(2, 0), &h = A(2, 1), &l = A(2, 2);
    const Quaternion<S> one = Quaternion<S>::one();
    std::array<Quaternion<S>, 18> lhs = {
        a * conj(l) + b * conj(h) + c * conj(g) - one,
        a * conj(f) + b * conj(e) + c * conj(d),
        a * conj(c) + b * conj(b) + c * conj(a),
        d * conj(l) + e * conj(h) + f * conj(g),
        d * conj(f) + e * conj(e) + f * conj(d) - one,
        d * conj(c) + e * conj(b) + f * conj(a),
        g * conj(l) + h * conj(h) + l * conj(g),
        g * conj(f) + h * conj(e) + l * conj(d),
        g * conj(c) + h * conj(b) + l * conj(a) - one,
        conj(l) * a + conj(f) * d + conj(c) * g - one,
        conj(l) * b + conj(f) * e + conj(c) * h,
        conj(l) * c + conj(f) * f + conj(c) * l,
        conj(h) * a + conj(e) * d + conj(b) * g,
        conj(h) * b + conj(e) * e + conj(b) * h - one,
        conj(h) * c + conj(e) * f + conj(b) * l,
        conj(g) * a + conj(d) * d + conj(a) * g,
        conj(g) * b + conj(d) * e + conj(a) * h,
        conj(g) * c + conj(d) * f + conj(a) * l - one,
    };
    std::array<S, 18> r;
    for (int i = 0; i < 18; ++i) r[size_t(i)] = cheb(lhs[size_t(i)]);
    return r;
}

template <class S>
Quaternion<S> trace(const Matrix3<S>& a) {
    return a(0, 0) + a(1, 1) + a(2, 2);
}

template <class S>
bool is_real_trace(const Matrix3<S>& a, const S& eps = S(0)) {
    return is_real(trace(a), eps);
}

// Projective action: left-multiply the representative, re-canonicalize.
template <class S>
ProjectivePoint<S> apply(const Matrix3<S>& a, const ProjectivePoint<S>& p,
                         const S& rel_eps = S(0)) {
    return ProjectivePoint<S>(canonicalize(a * p.rep, rel_eps));
}

template <class S>
struct LoxodromicParams {
    S lambda;            // > 1
    Quaternion<S> mu;    // unit
    Quaternion<S> nu;    // unit
};

// diag(lambda*mu, nu, mu/lambda); the diagonal loxodromic normal form.
template <class S>
Matrix3<S> loxodromic_standard(const LoxodromicParams<S>& p, const S& eps = S(0)) {
    if (!(p.lambda > S(1))) throw std::invalid_argument("lambda must exceed 1");
    if (scalar_abs(S(norm_sq(p.mu) - S(1))) > eps || scalar_abs(S(norm_sq(p.nu) - S(1))) > eps)
        throw std::invalid_argument("mu and nu must be unit quaternions");
    return Matrix3<S>::diagonal(p.mu * p.lambda, p.nu, p.mu * S(S(1) / p.lambda));
}

// Q A Q^{-1} with the closed-form inverse, exact on the exact backend.
template <class S>
Matrix3<S> conjugate(const Matrix3<S>& a, const Matrix3<S>& q) {
    return q * a * inverse_formula(q);
}

// Imaginary parts (i, j, k) of tr(A^4) = (lambda^4 + 1/lambda^4) mu^4 + nu^4
// for the diagonal normal form after eliminating nu via the tr(A), tr(A^2)
// constraints:
//   i-part = 8 (l^4+l^2+1)/l^2 * [ ((l^2-1)^2/(l^2+1)^2) mu1^2 + mu2^2+mu3^2+mu4^2 ] * mu1 mu2,
// with the j- and k-parts carrying mu1 mu3 and mu1 mu4.
template <class S>
std::array<S, 3> tr_power_closed_form(const S& lambda, const Quaternion<S>& mu) {
    S l2 = S(lambda * lambda);
    S l4 = S(l2 * l2);
    S imag_sq = S(mu.x * mu.x + mu.y * mu.y + mu.z * mu.z);
    S front = S(S(8) * (l4 + l2 + S(1)) / l2);
    S ratio = S((l2 - S(1)) * (l2 - S(1)) / ((l2 + S(1)) * (l2 + S(1))));
    S bracket = S(ratio * mu.w * mu.w + imag_sq);
    S common = S(front * bracket * mu.w);
    return {S(common * mu.x), S(common * mu.y), S(common * mu.z)};
}

// nu forced by realness of tr(A) and tr(A^2) when mu has a nonzero
// imaginary part: nu = (l^4+1)/(l(l^2+1)) mu1 - (l + 1/l)(mu2 i + mu3 j + mu4 k).
template <class S>
Quaternion<S> nu_from_trace_constraints(const S& lambda, const Quaternion<S>& mu) {
    S l2 = S(lambda * lambda);
    S real_coef = S((l2 * l2 + S(1)) / (lambda * (l2 + S(1))));
    S imag_coef = S(lambda + S(1) / lambda);
    return {S(real_coef * mu.w), S(-imag_coef * mu.x), S(-imag_coef * mu.y),
            S(-imag_coef * mu.z)};
}

}  // namespace qhf
