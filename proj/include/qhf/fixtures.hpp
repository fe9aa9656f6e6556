#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhf/dynamics.hpp"
#include "qhf/fuchsian.hpp"
#include "qhf/rng.hpp"

namespace qhf {

struct FixtureSpec {
    std::string kind;        // so21-pair | hline-pair | generic-pair | single-diagonal
    uint64_t seed = 1;
    double lambda_min = 1.3;
    double lambda_max = 3.0;
    int word_len = 6;
    bool conjugate = true;   // apply the trace-preserving conjugator / rotation
};

namespace detail {

// Real 3x3 matrix exponential, scaling and squaring plus Taylor.
inline Matrix3<double> real_expm(const double x[3][3]) {
    double norm = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) norm = std::max(norm, std::fabs(x[i][j]));
    int s = 0;
    double scaled = norm;
    while (scaled > 0.5) {
        scaled *= 0.5;
        ++s;
    }
    double a[3][3];
    double inv = std::ldexp(1.0, -s);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = x[i][j] * inv;

    double result[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    double term[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int k = 1; k <= 24; ++k) {
        double next[3][3] = {};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int m = 0; m < 3; ++m) next[i][j] += term[i][m] * a[m][j] / k;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                term[i][j] = next[i][j];
                result[i][j] += next[i][j];
            }
    }
    for (int step = 0; step < s; ++step) {
        double sq[3][3] = {};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int m = 0; m < 3; ++m) sq[i][j] += result[i][m] * result[m][j];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) result[i][j] = sq[i][j];
    }
    Matrix3<double> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out(i, j) = Quaternion<double>(result[i][j]);
    return out;
}

// Element of the Lie algebra of SO(2,1) for the anti-diagonal form:
// X = J W with W antisymmetric, so X^t J + J X = 0.
inline void so21_algebra(double w1, double w2, double w3, double x[3][3]) {
    x[0][0] = -w2; x[0][1] = -w3; x[0][2] = 0;
    x[1][0] = -w1; x[1][1] = 0;   x[1][2] = w3;
    x[2][0] = 0;   x[2][1] = w1;  x[2][2] = w2;
}

inline Matrix3<double> random_so21(Rng& rng, double scale) {
    double x[3][3];
    so21_algebra(rng.uniform(-scale, scale), rng.uniform(-scale, scale),
                 rng.uniform(-scale, scale), x);
    return real_expm(x);
}

inline Matrix3<double> scalar_unit_conjugator(const Quaternion<double>& q) {
    return Matrix3<double>::diagonal(q, q, q);
}

// Unit quaternions with rational components (integer quadruple over a
// perfect-square norm), for exact-backend fixtures.
struct RationalUnit {
    long long w, x, y, z, den;
};

inline const std::vector<RationalUnit>& rational_unit_table() {
    static const std::vector<RationalUnit> table = {
        {1, 1, 1, 1, 2},  {1, 2, 2, 4, 5},  {2, 4, 5, 6, 9},  {0, 3, 4, 0, 5},
        {0, 1, 2, 2, 3},  {1, 0, 4, 8, 9},  {2, 3, 6, 0, 7},  {0, 2, 6, 9, 11},
        {3, 0, 0, 4, 5},  {1, 4, 8, 0, 9},  {4, 4, 7, 0, 9},  {0, 6, 6, 7, 11},
    };
    return table;
}

inline Quaternion<Rational> random_rational_unit(Rng& rng) {
    const auto& tab = rational_unit_table();
    const RationalUnit& u = tab[rng.next_below(tab.size())];
    long long sw = rng.next_below(2) ? 1 : -1;
    long long sx = rng.next_below(2) ? 1 : -1;
    long long sy = rng.next_below(2) ? 1 : -1;
    long long sz = rng.next_below(2) ? 1 : -1;
    return {Rational(sw * u.w, u.den), Rational(sx * u.x, u.den), Rational(sy * u.y, u.den),
            Rational(sz * u.z, u.den)};
}

// Pure-imaginary rational unit: Pythagorean quadruple (0, a, b, c)/d.
inline Quaternion<Rational> random_rational_imaginary_unit(Rng& rng) {
    static const std::vector<RationalUnit> table = {
        {0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {0, 3, 4, 0, 5},
        {0, 1, 2, 2, 3}, {0, 2, 3, 6, 7}, {0, 1, 4, 8, 9}, {0, 4, 4, 7, 9},
        {0, 2, 6, 9, 11}, {0, 6, 6, 7, 11},
    };
    const RationalUnit& u = table[rng.next_below(table.size())];
    long long sx = rng.next_below(2) ? 1 : -1;
    long long sy = rng.next_below(2) ? 1 : -1;
    long long sz = rng.next_below(2) ? 1 : -1;
    return {Rational(0), Rational(sx * u.x, u.den), Rational(sy * u.y, u.den),
            Rational(sz * u.z, u.den)};
}

inline Rational small_rational(Rng& rng, long long num_range, long long den_range) {
    long long num = (long long)rng.next_below(uint64_t(2 * num_range + 1)) - num_range;
    long long den = (long long)rng.next_below(uint64_t(den_range)) + 1;
    return Rational(num, den);
}

}  // namespace detail

template <class S>
Matrix3<Rational> to_rational(const Matrix3<S>&) = delete;

inline Matrix3<double> rational_to_double(const Matrix3<Rational>& m) {
    Matrix3<double> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = to_double(m(i, j));
    return r;
}

// Two real SO(2,1) loxodromics with disjoint axes, optionally conjugated
// by a trace-preserving composition: real SO(2,1) elements, diag(l,1,1/l),
// and scalar unit-quaternion conjugations diag(q,q,q). Conjugation by a
// real matrix preserves the full quaternionic trace of every word; the
// scalar one maps tr to q tr conj(q), fixing real traces.
inline GroupPresentation<double> gen_so21_pair(const FixtureSpec& spec) {
    Rng rng(spec.seed ^ 0x50321ULL);
    GroupPresentation<double> g;
    for (int attempt = 0; attempt < 400 && g.generators.size() < 2; ++attempt) {
        Matrix3<double> cand = detail::random_so21(rng, 1.0);
        FixedPointResult fp = fixed_points_dynamical(cand, 64, 1e-9, spec.seed);
        if (!fp.loxodromic) continue;
        if (!g.generators.empty()) {
            FixedPointResult prev = fixed_points_dynamical(g.generators[0], 64, 1e-9, spec.seed);
            double d = std::min(
                std::min(projective_distance(prev.attracting, fp.attracting),
                         projective_distance(prev.attracting, fp.repelling)),
                std::min(projective_distance(prev.repelling, fp.attracting),
                         projective_distance(prev.repelling, fp.repelling)));
            if (d < 0.05) continue;
        }
        g.generators.push_back(cand);
    }
    if (g.generators.size() < 2) throw std::runtime_error("so21-pair: sampling failed");
    if (spec.conjugate) {
        Matrix3<double> c = detail::random_so21(rng, 0.5);
        double l = rng.uniform(1.1, 1.5);
        c = c * Matrix3<double>::diagonal(Quaternion<double>(l), Quaternion<double>::one(),
                                          Quaternion<double>(1.0 / l));
        c = c * detail::scalar_unit_conjugator(rng.unit_quaternion());
        for (auto& m : g.generators) m = conjugate(m, c);
    }
    g.ensure_labels();
    return g;
}

// Pair preserving the standard quaternionic line: block matrices
// [[a,0,c],[0,s,0],[g,0,l]] with a,l rational, c,g rational multiples of
// one pure-imaginary unit u, membership reducing to a l + c0 g0 = 1,
// optionally rotated by diag(q,q,q) with q a rational unit. All entries
// stay rational, so the exact backend audits these word-for-word.
inline GroupPresentation<Rational> gen_hline_pair(const FixtureSpec& spec) {
    Rng rng(spec.seed ^ 0x41aeULL);
    Quaternion<Rational> u = detail::random_rational_imaginary_unit(rng);
    GroupPresentation<Rational> g;
    std::vector<Matrix3<double>> as_double;
    for (int attempt = 0; attempt < 400 && g.generators.size() < 2; ++attempt) {
        Rational a = detail::small_rational(rng, 6, 3);
        Rational l = detail::small_rational(rng, 6, 3);
        Rational c0 = detail::small_rational(rng, 4, 3);
        if (c0 == 0) continue;
        // |a + l| > 2 makes the block loxodromic (unit determinant, real trace)
        if (scalar_abs(Rational(a + l)) <= Rational(21, 10)) continue;
        Rational g0 = Rational((Rational(1) - a * l) / c0);
        if (scalar_abs(g0) > Rational(8)) continue;  // keep entries tame for float runs
        Rational s = rng.next_below(2) ? Rational(1) : Rational(-1);
        Matrix3<Rational> m;
        m(0, 0) = Quaternion<Rational>(a);
        m(0, 2) = u * c0;
        m(1, 1) = Quaternion<Rational>(s);
        m(2, 0) = u * g0;
        m(2, 2) = Quaternion<Rational>(l);
        if (sp21_residual(m) != Rational(0)) continue;
        Matrix3<double> md = rational_to_double(m);
        FixedPointResult fp = fixed_points_dynamical(md, 64, 1e-9, spec.seed);
        if (!fp.loxodromic) continue;
        if (!as_double.empty()) {
            FixedPointResult prev = fixed_points_dynamical(as_double[0], 64, 1e-9, spec.seed);
            double d = std::min(
                std::min(projective_distance(prev.attracting, fp.attracting),
                         projective_distance(prev.attracting, fp.repelling)),
                std::min(projective_distance(prev.repelling, fp.attracting),
                         projective_distance(prev.repelling, fp.repelling)));
            if (d < 0.05) continue;
        }
        g.generators.push_back(m);
        as_double.push_back(md);
    }
    if (g.generators.size() < 2) throw std::runtime_error("hline-pair: sampling failed");
    if (spec.conjugate) {
        Quaternion<Rational> q = detail::random_rational_unit(rng);
        Matrix3<Rational> c = Matrix3<Rational>::diagonal(q, q, q);
        for (auto& m : g.generators) m = conjugate(m, c);
    }
    g.ensure_labels();
    return g;
}

// Unconstrained Sp(2,1) loxodromics with generic unit mu, nu, built by
// conjugating the diagonal normal form through frames of random boundary
// pairs. Generically fails the real-trace audit at short word length.
inline GroupPresentation<double> gen_generic_pair(const FixtureSpec& spec) {
    Rng rng(spec.seed ^ 0x6e71cULL);
    GroupPresentation<double> g;
    while (g.generators.size() < 2) {
        Horospherical h1, h2;
        h1.zeta = rng.quaternion(-2.0, 2.0);
        h1.v = rng.pure_imaginary(-2.0, 2.0);
        h2.zeta = rng.quaternion(-2.0, 2.0);
        h2.v = rng.pure_imaginary(-2.0, 2.0);
        ProjectivePoint<double> p = psi(h1), q = psi(h2);
        if (projective_distance(p, q) < 0.1) continue;
        LoxodromicParams<double> lp{rng.uniform(spec.lambda_min, spec.lambda_max),
                                    rng.unit_quaternion(), rng.unit_quaternion()};
        Matrix3<double> d = loxodromic_standard(lp, 1e-12);
        Matrix3<double> f;
        try {
            f = frame_from_boundary_pair(p, q, 1e-9, spec.seed);
        } catch (const std::exception&) {
            continue;
        }
        g.generators.push_back(inverse_formula(f) * d * f);
    }
    g.ensure_labels();
    return g;
}

// diag(lambda mu, nu, mu / lambda) with seeded unit mu, nu.
inline GroupPresentation<double> gen_single_diagonal(const FixtureSpec& spec) {
    Rng rng(spec.seed ^ 0x1d1a6ULL);
    LoxodromicParams<double> lp{rng.uniform(spec.lambda_min, spec.lambda_max),
                                rng.unit_quaternion(), rng.unit_quaternion()};
    GroupPresentation<double> g;
    g.generators.push_back(loxodromic_standard(lp, 1e-12));
    g.ensure_labels();
    return g;
}

}  // namespace qhf
