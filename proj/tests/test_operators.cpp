#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "conelab/operators.hpp"
#include "conelab/regions.hpp"

using namespace conelab;
using namespace conelab::ops;

TEST_CASE("solve_a root pairs") {
    for (double c1 : {-1.0, 0.0, 0.7, 2.0}) {
        auto zero = solve_a(c1, 0.0);
        CHECK(zero.first == doctest::Approx(std::min(0.0, 1.0 - 2.0 * c1)));
        CHECK(zero.second == doctest::Approx(std::max(0.0, 1.0 - 2.0 * c1)));
        auto twice = solve_a(c1, 2.0 * c1);
        CHECK(twice.first == doctest::Approx(std::min(1.0, -2.0 * c1)));
        CHECK(twice.second == doctest::Approx(std::max(1.0, -2.0 * c1)));
    }
    for (double kappa : {-1.5, 0.3, 2.0}) {
        auto roots = solve_a(0.0, kappa * (kappa - 1.0));
        CHECK(roots.first == doctest::Approx(std::min(kappa, 1.0 - kappa)));
        CHECK(roots.second == doctest::Approx(std::max(kappa, 1.0 - kappa)));
    }
    CHECK_THROWS_AS(solve_a(0.5, -1.0), std::domain_error);
}

TEST_CASE("exact base spectra") {
    auto lambda = exact_base_spectrum(0.0, 0.0, 1.0, 3);
    CHECK(lambda[0] == doctest::Approx(1.0));
    CHECK(lambda[2] == doctest::Approx(5.0));
    auto shifted = exact_base_spectrum(0.5, 0.0, 2.0, 2);
    CHECK(shifted[1] == doctest::Approx(6.0));
}

TEST_CASE("form matrices: unperturbed diagonality and the Gamma-ratio entry") {
    auto base = form_matrix(p_spec_flat(1.0, 0.5, 0.0, 1.0), 10);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) {
            const double want = i == j ? 4.0 * static_cast<double>(i) + 3.0 : 0.0;
            CHECK(std::abs(base(i, j) - want) <= 1e-10);
        }
    auto perturbed = form_matrix(p_spec_flat(1.0, 0.5, 1.0, 1.0), 10);
    CHECK(perturbed(0, 0) == doctest::Approx(3.0 + 1.0 / std::tgamma(1.5)).epsilon(1e-12));
}

TEST_CASE("ritz: exactness, base dominance, monotonicity, decoupling") {
    // xi = eta = 0 reproduces the exact base spectrum
    auto exact = ritz_spectrum(p_spec_flat(2.0, 0.5, 0.0, 0.25), 12);
    for (std::size_t i = 0; i < 12; ++i)
        CHECK(std::abs(exact.eigenvalues[i] -
                       (4.0 * static_cast<double>(i) + 1.0 + 0.5) * 2.0) <= 1e-10);

    // strict base dominance for xi > 0
    for (double u : {0.3, 0.7}) {
        auto spec = q_spec_flat(1.0, u, 0.8, 0.5);
        auto ritz = ritz_spectrum(spec, 14);
        for (std::size_t i = 0; i < 14; ++i) {
            const double base = (4.0 * static_cast<double>(i) + 3.0 + 1.0) * 1.0;
            CHECK(ritz.eigenvalues[i] > base);
        }
    }

    // variational monotonicity in K
    auto spec = p_spec_flat(1.0, 0.5, 1.0, 1.0);
    auto small = ritz_spectrum(spec, 16);
    auto large = ritz_spectrum(spec, 20);
    for (std::size_t i = 0; i < 16; ++i)
        CHECK(large.eigenvalues[i] <= small.eigenvalues[i] + 1e-10);

    // eta = 0 block decoupling: ritz(W) is the union of ritz(P) and ritz(Q)
    auto w = ritz_spectrum(w_spec_flat(1.0, 0.5, 1.0, 0.0, 1.0, 0.75, 0.5), 10);
    auto p = ritz_spectrum(p_spec_flat(1.0, 0.5, 1.0, 1.0), 10);
    auto q = ritz_spectrum(q_spec_flat(1.0, 0.5, 1.0, 0.75), 10);
    std::vector<double> merged = p.eigenvalues;
    merged.insert(merged.end(), q.eigenvalues.begin(), q.eigenvalues.end());
    std::sort(merged.begin(), merged.end());
    for (std::size_t i = 0; i < merged.size(); ++i)
        CHECK(std::abs(w.eigenvalues[i] - merged[i]) <= 1e-9 * (1.0 + merged[i]));
}

TEST_CASE("growth exponent recovers u") {
    const std::vector<double> scales = {1.0, 10.0, 100.0, 1000.0};
    auto s05 = growth_exponent(p_spec_flat(1.0, 0.5, 1.0, 1.0), 0, scales, 40);
    CHECK(s05 == doctest::Approx(0.5).epsilon(0.2));
    auto s07 = growth_exponent(p_spec_flat(1.0, 0.7, 1.0, 1.0), 0, scales, 40);
    CHECK(s07 == doctest::Approx(0.7).epsilon(0.2));
    CHECK_THROWS_AS(growth_exponent(p_spec_flat(1.0, 0.5, 0.0, 1.0), 0, scales, 20),
                    std::domain_error);
    CHECK_THROWS_AS(growth_exponent(p_spec_flat(1.0, 0.5, 1.0, 1.0), 1, scales, 20),
                    std::invalid_argument);  // odd index on a P operator
}

TEST_CASE("overlap norm") {
    // unperturbed: the Ritz basis is the eigenbasis
    CHECK(overlap_norm(p_spec_flat(1.0, 0.5, 0.0, 1.0), 0, 10) == doctest::Approx(1.0));
    // grows toward 1 along s
    double previous = 0.0;
    for (double s : {1.0, 100.0, 10000.0}) {
        const double value = overlap_norm(p_spec_flat(s, 0.5, 1.0, 1.0), 0, 40);
        CHECK(value > previous);
        previous = value;
    }
    CHECK(previous >= 0.99);
}

TEST_CASE("region predicates on the stated examples") {
    // (sigma, tau) = (1/2 + u, 1/2) with u = 2/5 lies in J1
    CHECK(in_J1(Rational(9, 10), Rational(1, 2)));
    CHECK_FALSE(in_J1(Rational(0), Rational(5)));
    // the same parameter line lies in J2 as well, through the
    // (1/2 <= tau < sigma - 1/2) clause for u > 1/2 and the
    // (1/2, sigma - 1/2 <= tau) clause for u <= 1/2
    for (long uj = 1; uj <= 9; ++uj) {
        const Rational u(uj, 10);
        CHECK(in_J2(Rational(1, 2) + u, Rational(1, 2)));
    }
    // and a point violating J2 outright: tau = 0 needs 1/2 < sigma < 1
    CHECK_FALSE(in_J2(Rational(2), Rational(0)));
    CHECK(in_J2(Rational(3, 4), Rational(0)));
}

TEST_CASE("individual region equivalences in the generic case") {
    // On the W21 parameter line (sigma, tau, theta) = (1-k, k+u, 1/2), away
    // from the three special kappa values, membership reduces to intervals:
    //   K1: -1-u/2 < k < -u/2      K1': -u/2 < k < 1-u/2
    //   K2, K2': -(1+u)/2 < k < (1-u)/2
    for (long uj : {1L, 3L, 5L, 7L}) {
        const Rational u(uj, 10);
        for (long j = -60; j <= 60; ++j) {
            const Rational kp(j, 30);
            if (kp == Rational(1, 2) || kp == Rational(1, 2) - u || kp == Rational(-1, 2) - u)
                continue;
            const Rational sg = Rational(1) - kp;
            const Rational ta = kp + u;
            const Rational th(1, 2);
            CHECK(in_K1(sg, ta, th) ==
                  (Rational(-1) - u / 2 < kp && kp < -u / 2));
            CHECK(in_K1p(sg, ta, th) == (-u / 2 < kp && kp < Rational(1) - u / 2));
            CHECK(in_K2(sg, ta, th) ==
                  (-(Rational(1) + u) / 2 < kp && kp < (Rational(1) - u) / 2));
            CHECK(in_K2p(sg, ta, th) ==
                  (-(Rational(1) + u) / 2 < kp && kp < (Rational(1) - u) / 2));
        }
    }
}

TEST_CASE("coupled-operator hypotheses dispatch") {
    const Rational u(1, 2);
    // W11 parameters (sigma = theta = kappa, tau = kappa + u), kappa > u - 1/2
    auto w11 = ww_hypotheses(Rational(1, 4), Rational(3, 4), Rational(1, 4), u);
    CHECK(w11.status == WwStatus::Satisfied);
    CHECK(w11.clause == "(a)");

    // W22 parameters at kappa < 1/2 - 2u go through clause (c)
    const Rational kappa(-2);
    auto w22 = ww_hypotheses(Rational(1) - kappa, Rational(-1) - kappa - u, -kappa - u, u);
    CHECK(w22.status == WwStatus::Satisfied);
    CHECK(w22.clause == "(c)");

    // theta at or below -1/2 violates the base condition (the W12 row always
    // carries theta = -1/2 - u and is impossible for every kappa)
    auto w12 = ww_hypotheses(Rational(1), Rational(0), Rational(-3, 5), u);
    CHECK(w12.status == WwStatus::Violated);
    CHECK(w12.clause == "theta > -1/2");

    // -N side condition: sigma = theta, tau - sigma = -1
    auto na = ww_hypotheses(Rational(2), Rational(1), Rational(2), Rational(1, 4));
    CHECK(na.status == WwStatus::NotApplicable);
}

TEST_CASE("positivity where the hypotheses hold") {
    const Rational u(1, 2);
    for (long j : {-1L, 0L, 1L}) {
        const Rational kappa(j, 4);
        const Rational sg = kappa;
        const Rational ta = kappa + u;
        const Rational th = kappa;
        if (!ww_hypotheses(sg, ta, th, u).ok()) continue;
        auto spec = w_spec_flat(1.0, 0.5, 1.0, -1.0, sg.to_double(), ta.to_double(),
                                th.to_double());
        auto ritz = ritz_spectrum(spec, 24);
        CHECK(ritz.eigenvalues.front() > 0.0);
    }
}
