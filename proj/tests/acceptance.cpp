// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Every randomized step is seeded; criterion 9 replays reports
// and compares the serialized bytes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qhf/cartan.hpp"
#include "qhf/fixtures.hpp"
#include "qhf/fuchsian.hpp"
#include "qhf/json_io.hpp"

using namespace qhf;
using QD = Quaternion<double>;
using QR = Quaternion<Rational>;
using MD = Matrix3<double>;
using MR = Matrix3<Rational>;

namespace {

int checks_failed = 0;

#define REQUIRE_ACC(cond)                                                       \
    do {                                                                        \
        if (!(cond)) {                                                          \
            if (++checks_failed <= 5)                                           \
                std::printf("    failed: %s (%s:%d)\n", #cond, __FILE__, __LINE__); \
            return false;                                                       \
        }                                                                       \
    } while (0)

ProjectivePoint<double> random_null(Rng& rng) {
    Horospherical h;
    h.zeta = rng.quaternion(-2, 2);
    h.v = rng.pure_imaginary(-2, 2);
    return psi(h);
}

ProjectivePoint<double> hline_boundary(Rng& rng) {
    Vector3<double> v;
    v[0] = rng.pure_imaginary(-2, 2);
    v[2] = QD::one();
    return ProjectivePoint<double>(v);
}

ProjectivePoint<double> rplane_boundary(Rng& rng) {
    double z = rng.uniform(-2, 2);
    Vector3<double> v;
    v[0] = QD(-z * z);
    v[1] = QD(std::sqrt(2.0) * z);
    v[2] = QD::one();
    return ProjectivePoint<double>(v);
}

QD nonzero_quat(Rng& rng) {
    for (;;) {
        QD q = rng.quaternion(-2, 2);
        if (abs(q) > 1e-2) return q;
    }
}

// --- criterion 1: algebra kernel -----------------------------------------

bool criterion1() {
    const QR one = QR::one(), i = QR::i(), j = QR::j(), k = QR::k();
    const QR units[4] = {one, i, j, k};
    const QR table[4][4] = {
        {one, i, j, k}, {i, -one, k, -j}, {j, -k, -one, i}, {k, j, -i, -one}};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) REQUIRE_ACC(units[a] * units[b] == table[a][b]);

    // b pure imaginary with ab real forces a pure imaginary
    Rng rng(101);
    for (int t = 0; t < 10000; ++t) {
        QD b = rng.pure_imaginary(-2, 2);
        if (abs(b) < 1e-3) continue;
        double r = rng.uniform(-3, 3);
        if (std::fabs(r) < 1e-3) continue;
        QD a = r * inverse(b);
        REQUIRE_ACC(is_real(a * b, 1e-9));
        REQUIRE_ACC(is_pure_imaginary(a, 1e-9));
    }
    // ab and a conj(b) real: both-real and both-imaginary branches
    for (int t = 0; t < 10000; ++t) {
        QD a{rng.uniform(-2, 2), 0, 0, 0}, b{rng.uniform(-2, 2), 0, 0, 0};
        REQUIRE_ACC(is_real(a * b, 1e-12));
        REQUIRE_ACC(is_real(a * conj(b), 1e-12));
        QD bi = rng.pure_imaginary(-2, 2);
        if (abs(bi) < 1e-3) continue;
        QD ai = rng.uniform(-3, 3) * inverse(bi);
        REQUIRE_ACC(is_real(ai * bi, 1e-9));
        REQUIRE_ACC(is_real(ai * conj(bi), 1e-9));
        REQUIRE_ACC(is_pure_imaginary(ai, 1e-9) && is_pure_imaginary(bi, 1e-9));
    }
    return true;
}

// --- criterion 2: Sp(2,1) structure --------------------------------------

bool check_structure(const MD& m) {
    REQUIRE_ACC(sp21_residual(m) <= 1e-12);
    MD inv = inverse_formula(m);
    REQUIRE_ACC(matrix_cheb(m * inv - MD::identity()) <= 1e-12);
    REQUIRE_ACC(matrix_cheb(inv * m - MD::identity()) <= 1e-12);
    for (double r : identities_residuals(m)) REQUIRE_ACC(r <= 1e-12);
    return true;
}

bool criterion2() {
    Rng rng(103);
    int count = 0;
    // frames of random boundary pairs
    while (count < 400) {
        auto p = random_null(rng), q = random_null(rng);
        if (projective_distance(p, q) < 0.05) continue;
        if (!check_structure(frame_from_boundary_pair(p, q, 1e-9, 103 + uint64_t(count))))
            return false;
        ++count;
    }
    // loxodromic diagonals
    for (int t = 0; t < 300; ++t, ++count) {
        LoxodromicParams<double> lp{rng.uniform(1.1, 4.0), rng.unit_quaternion(),
                                    rng.unit_quaternion()};
        if (!check_structure(loxodromic_standard(lp, 1e-12))) return false;
    }
    // fixture generators, float and exact
    for (uint64_t s = 1; s <= 75; ++s) {
        FixtureSpec spec;
        spec.kind = "so21-pair";
        spec.seed = s;
        for (const auto& m : gen_so21_pair(spec).generators) {
            if (!check_structure(m)) return false;
            ++count;
        }
    }
    for (uint64_t s = 1; s <= 75; ++s) {
        FixtureSpec spec;
        spec.kind = "hline-pair";
        spec.seed = s;
        for (const auto& m : gen_hline_pair(spec).generators) {
            // exact backend: membership and all 18 identities identically zero
            REQUIRE_ACC(sp21_residual(m) == Rational(0));
            MR inv = inverse_formula(m);
            REQUIRE_ACC(m * inv == MR::identity());
            for (const Rational& r : identities_residuals(m)) REQUIRE_ACC(r == Rational(0));
            ++count;
        }
    }
    REQUIRE_ACC(count >= 1000);
    return true;
}

// --- criterion 3: model round trip ---------------------------------------

bool criterion3() {
    Rng rng(107);
    for (int t = 0; t < 1000; ++t) {
        Horospherical h = Horospherical::finite(rng.quaternion(-2, 2), rng.pure_imaginary(-2, 2),
                                                t % 2 ? rng.uniform(0.0, 3.0) : 0.0);
        ProjectivePoint<double> p = psi(h);
        REQUIRE_ACC((point_type(p, 1e-12) == PointType::negative) == (h.u > 0.0));
        REQUIRE_ACC((point_type(p, 1e-12) == PointType::null) == (h.u == 0.0));
        Horospherical back = psi_inv(p);
        REQUIRE_ACC(!back.at_infinity);
        REQUIRE_ACC(cheb(back.zeta - h.zeta) <= 1e-12);
        REQUIRE_ACC(cheb(back.v - h.v) <= 1e-12);
        REQUIRE_ACC(std::fabs(back.u - h.u) <= 1e-12);
    }
    return true;
}

// --- criterion 4: Cartan dichotomy ---------------------------------------

bool criterion4() {
    const double pi_2 = 1.5707963267948966;
    Rng rng(109);
    int hline_done = 0, rplane_done = 0;
    while (hline_done < 1000 || rplane_done < 1000) {
        if (hline_done < 1000) {
            BoundaryTriple<double> t{hline_boundary(rng), hline_boundary(rng),
                                     hline_boundary(rng)};
            if (!triple_degenerate(t, 1e-9)) {
                REQUIRE_ACC(std::fabs(cartan_invariant(t) - pi_2) <= 1e-9);
                ++hline_done;
            }
        }
        if (rplane_done < 1000) {
            BoundaryTriple<double> t{rplane_boundary(rng), rplane_boundary(rng),
                                     rplane_boundary(rng)};
            if (!triple_degenerate(t, 1e-9)) {
                REQUIRE_ACC(cartan_invariant(t) <= 1e-9);
                ++rplane_done;
            }
        }
    }
    // permutation and lift invariance on mixed triples; range
    for (int t = 0; t < 300; ++t) {
        ProjectivePoint<double> ps[3] = {hline_boundary(rng), rplane_boundary(rng),
                                         hline_boundary(rng)};
        BoundaryTriple<double> base{ps[0], ps[1], ps[2]};
        if (triple_degenerate(base, 1e-6)) continue;
        double a0 = cartan_invariant(base);
        REQUIRE_ACC(a0 >= 0.0 && a0 <= pi_2 + 1e-15);
        const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                 {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& p : perms) {
            BoundaryTriple<double> tp{ps[p[0]], ps[p[1]], ps[p[2]]};
            REQUIRE_ACC(std::fabs(cartan_invariant(tp) - a0) <= 1e-9);
        }
        BoundaryTriple<double> scaled{ProjectivePoint<double>(ps[0].rep * nonzero_quat(rng)),
                                      ProjectivePoint<double>(ps[1].rep * nonzero_quat(rng)),
                                      ProjectivePoint<double>(ps[2].rep * nonzero_quat(rng))};
        REQUIRE_ACC(std::fabs(cartan_invariant(scaled) - a0) <= 1e-9);
    }
    return true;
}

// --- criterion 5: closed form for Im tr(A^4) -----------------------------

bool criterion5() {
    Rng rng(113);
    for (int t = 0; t < 10000; ++t) {
        double lambda = rng.uniform(1.0 + 1e-3, 10.0);
        QD mu = rng.quaternion(-2, 2);
        if (abs(mu) < 1e-3) continue;
        QD nu = nu_from_trace_constraints(lambda, mu);
        double l4 = std::pow(lambda, 4.0);
        QD mu2 = mu * mu, nu2 = nu * nu;
        QD direct = (l4 + 1.0 / l4) * (mu2 * mu2) + nu2 * nu2;
        auto cf = tr_power_closed_form(lambda, mu);
        double scale =
            std::max({1.0, std::fabs(direct.x), std::fabs(direct.y), std::fabs(direct.z)});
        REQUIRE_ACC(std::fabs(direct.x - cf[0]) <= 1e-10 * scale);
        REQUIRE_ACC(std::fabs(direct.y - cf[1]) <= 1e-10 * scale);
        REQUIRE_ACC(std::fabs(direct.z - cf[2]) <= 1e-10 * scale);
    }
    // exact slices: mu real (mu2 = mu3 = mu4 = 0) and mu pure imaginary (mu1 = 0)
    for (long long n = 1; n <= 5; ++n) {
        auto real_slice = tr_power_closed_form(Rational(n + 1), QR(Rational(n, 3)));
        auto imag_slice = tr_power_closed_form(
            Rational(n + 1), QR{Rational(0), Rational(n, 5), Rational(1, 2), Rational(-n, 7)});
        for (int c = 0; c < 3; ++c) {
            REQUIRE_ACC(real_slice[size_t(c)] == Rational(0));
            REQUIRE_ACC(imag_slice[size_t(c)] == Rational(0));
        }
    }
    return true;
}

// --- criterion 6: theorem round trip, Case II ----------------------------

bool criterion6() {
    for (uint64_t s = 1; s <= 100; ++s) {
        FixtureSpec spec;
        spec.kind = "so21-pair";
        spec.seed = s;
        GroupPresentation<double> g = gen_so21_pair(spec);
        REQUIRE_ACC(!trace_audit<double>(g.generators, 6, 1e-8).has_value());
        FuchsianVerdict v = fuchsian_detect(g);
        REQUIRE_ACC(v.kind == VerdictKind::real_fuchsian);
        for (const auto& m : g.generators) {
            MD c = conjugate(m, v.conjugator);
            double imag = 0.0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    imag = std::max({imag, std::fabs(c(i, j).x), std::fabs(c(i, j).y),
                                     std::fabs(c(i, j).z)});
            REQUIRE_ACC(imag <= 1e-8);
        }
    }
    return true;
}

// --- criterion 7: theorem round trip, Case I -----------------------------

bool criterion7() {
    Rng rng(127);
    for (uint64_t s = 1; s <= 100; ++s) {
        FixtureSpec spec;
        spec.kind = "hline-pair";
        spec.seed = s;
        GroupPresentation<Rational> ge = gen_hline_pair(spec);
        GroupPresentation<double> g;
        for (const auto& m : ge.generators) g.generators.push_back(rational_to_double(m));
        g.ensure_labels();
        FuchsianVerdict v = fuchsian_detect(g);
        REQUIRE_ACC(v.kind == VerdictKind::quaternionic_line);

        const Vector3<double>& P = v.polar;
        double pn = re(herm(P, P));
        REQUIRE_ACC(pn > 0.0);  // polar is a positive vector
        // 100 sample points on the line herm(p, P) = 0
        std::vector<Vector3<double>> pts;
        for (int t = 0; t < 100; ++t) {
            Vector3<double> x;
            for (int i = 0; i < 3; ++i) x[i] = rng.quaternion(-2, 2);
            Vector3<double> p = x - P * (herm(x, P) * (1.0 / pn));
            pts.push_back(p);
        }
        double pnorm = std::sqrt(vec_norm_sq(P));
        bool ok = true;
        enumerate_words<double>(g.generators, 6, [&](const Word&, const MD& m) {
            if (!ok) return;
            for (const auto& p : pts) {
                Vector3<double> img = m * p;
                if (abs(herm(img, P)) > 1e-8 * std::sqrt(vec_norm_sq(img)) * pnorm) {
                    ok = false;
                    return;
                }
            }
        });
        REQUIRE_ACC(ok);
    }
    return true;
}

// --- criterion 8: negative control ---------------------------------------

bool criterion8() {
    int short_witness = 0;
    for (uint64_t s = 1; s <= 100; ++s) {
        FixtureSpec spec;
        spec.kind = "generic-pair";
        spec.seed = s;
        GroupPresentation<double> g = gen_generic_pair(spec);
        DetectOptions opt;
        opt.max_word_len = 3;
        FuchsianVerdict v = fuchsian_detect(g, opt);
        REQUIRE_ACC(v.kind != VerdictKind::real_fuchsian);
        REQUIRE_ACC(v.kind != VerdictKind::quaternionic_line);
        if (v.kind == VerdictKind::not_real_trace && v.witness_word.size() <= 3) ++short_witness;
    }
    REQUIRE_ACC(short_witness >= 95);
    return true;
}

// --- criterion 9: determinism --------------------------------------------

std::string reports_digest() {
    std::string all;
    for (uint64_t s : {1ULL, 2ULL, 3ULL}) {
        FixtureSpec so;
        so.kind = "so21-pair";
        so.seed = s;
        GroupPresentation<double> g = gen_so21_pair(so);
        all += presentation_to_json(g).dump();
        all += verdict_to_json(fuchsian_detect(g), g.labels).dump();

        FixtureSpec hl;
        hl.kind = "hline-pair";
        hl.seed = s;
        GroupPresentation<Rational> ge = gen_hline_pair(hl);
        all += presentation_to_json(ge).dump();
        GroupPresentation<double> gd;
        for (const auto& m : ge.generators) gd.generators.push_back(rational_to_double(m));
        gd.ensure_labels();
        all += verdict_to_json(fuchsian_detect(gd), gd.labels).dump();

        FixtureSpec gp;
        gp.kind = "generic-pair";
        gp.seed = s;
        GroupPresentation<double> gg = gen_generic_pair(gp);
        all += presentation_to_json(gg).dump();
        all += verdict_to_json(fuchsian_detect(gg), gg.labels).dump();
    }
    return all;
}

bool criterion9() {
    std::string a = reports_digest();
    std::string b = reports_digest();
    REQUIRE_ACC(a == b);
    REQUIRE_ACC(!a.empty());
    return true;
}

struct Criterion {
    const char* name;
    std::function<bool()> run;
    double budget_s;  // 0 = no stated budget
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"1 algebra kernel (Hamilton table, Props 2.1/2.2 x10^4)", criterion1, 1.0},
        {"2 Sp(2,1) structure (10^3 matrices, inverse, 18 identities)", criterion2, 5.0},
        {"3 model round-trip (psi_inv o psi, point-type dichotomy)", criterion3, 0.0},
        {"4 Cartan dichotomy, permutation/lift invariance, range", criterion4, 5.0},
        {"5 closed form for Im tr(A^4), exact slices", criterion5, 0.0},
        {"6 Case II round-trip (100 so21-pair fixtures)", criterion6, 60.0},
        {"7 Case I round-trip (100 hline-pair fixtures, line preservation)", criterion7, 0.0},
        {"8 negative control (100 generic-pair fixtures)", criterion8, 0.0},
        {"9 determinism (byte-identical reports)", criterion9, 0.0},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& ex) {
            std::printf("    exception: %s\n", ex.what());
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && c.budget_s > 0.0 && dt > c.budget_s) ok = false;
        std::printf("criterion %s: %s (%.2f s)\n", c.name, ok ? "PASS" : "FAIL", dt);
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
