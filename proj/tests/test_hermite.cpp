#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conelab/hermite.hpp"
#include "conelab/quadrature.hpp"
#include "conelab/rational.hpp"

using namespace conelab;
using hermite::Parity;

TEST_CASE("closed-form recurrence coefficients") {
    auto params = hermite::gen_hermite_params(1.0, 0.0, Parity::Even);
    auto beta = hermite::recurrence_coefficients(params, 3);
    CHECK(beta[0] == doctest::Approx(0.5));
    CHECK(beta[1] == doctest::Approx(1.0));
    CHECK(beta[2] == doctest::Approx(1.5));

    auto one = hermite::gen_hermite_params(1.0, 1.0, Parity::Even);
    CHECK(hermite::recurrence_coefficients(one, 1)[0] == doctest::Approx(1.5));

    // scaling: beta_k(s) = beta_k(1)/s
    auto scaled = hermite::gen_hermite_params(4.0, 0.75, Parity::Even);
    auto unit = hermite::gen_hermite_params(1.0, 0.75, Parity::Even);
    auto bs = hermite::recurrence_coefficients(scaled, 6);
    auto b1 = hermite::recurrence_coefficients(unit, 6);
    for (std::size_t k = 0; k < 6; ++k) CHECK(bs[k] == doctest::Approx(b1[k] / 4.0));
}

TEST_CASE("closed form agrees exactly with the Stieltjes moment oracle") {
    // moments of |x|^{2 sigma} e^{-s x^2} relative to m_0 are the Pochhammer
    // rationals (sigma+1/2)_j / s^j, so the oracle runs in exact arithmetic.
    for (const Rational& sigma :
         {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)}) {
        for (const Rational& s : {Rational(1), Rational(3)}) {
            auto moment = [&](std::size_t j) -> Rational {
                if (j % 2 == 1) return Rational(0);
                Rational m(1);
                for (std::size_t i = 0; i < j / 2; ++i)
                    m *= (sigma + Rational(1, 2) + Rational(static_cast<long>(i))) / s;
                return m;
            };
            auto oracle = stieltjes_recurrence<Rational>(moment, 20);
            for (long k = 1; k <= 20; ++k) {
                const Rational want = (k % 2 == 0)
                                          ? Rational(k / 2) / s
                                          : (Rational((k - 1) / 2) + sigma + Rational(1, 2)) / s;
                CHECK(oracle[static_cast<std::size_t>(k - 1)] == want);
            }
            // and the double-valued closed form matches to 1e-11
            auto params =
                hermite::gen_hermite_params(s.to_double(), sigma.to_double(), Parity::Even);
            auto closed = hermite::recurrence_coefficients(params, 20);
            for (std::size_t k = 0; k < 20; ++k)
                CHECK(std::abs(closed[k] - oracle[k].to_double()) <=
                      1e-11 * (1.0 + std::abs(closed[k])));
        }
    }
}

TEST_CASE("eval_phi values") {
    auto even = hermite::gen_hermite_params(1.0, 0.0, Parity::Even);
    const double quarter_pi = std::pow(M_PI, -0.25);
    CHECK(hermite::eval_phi(even, 0, 0.7) ==
          doctest::Approx(quarter_pi * std::exp(-0.49 / 2.0)).epsilon(1e-13));
    CHECK(hermite::eval_phi(even, 2, 0.0) ==
          doctest::Approx(-quarter_pi / std::sqrt(2.0)).epsilon(1e-13));

    auto odd = hermite::gen_hermite_params(1.0, 0.0, Parity::Odd);
    CHECK(hermite::eval_phi(odd, 1, 0.0) == 0.0);
    // far beyond the Gaussian range the value saturates to zero
    CHECK(hermite::eval_phi(even, 4, 1e6) == 0.0);
    CHECK_THROWS_AS(hermite::eval_phi(even, 1, 0.5), std::invalid_argument);

    // parameter validation
    CHECK_THROWS_AS(hermite::gen_hermite_params(1.0, -0.6, Parity::Even), std::domain_error);
    CHECK_NOTHROW(hermite::gen_hermite_params(1.0, -0.6, Parity::Odd));
    CHECK_THROWS_AS(hermite::gen_hermite_params(1.0, -1.6, Parity::Odd), std::domain_error);
}

TEST_CASE("scaling covariance of the functions") {
    // phi_{s,sigma,k}(x) is proportional to phi_{1,sigma,k}(sqrt{s} x); the
    // ratio must be an x-independent normalization.
    const double s = 4.0;
    for (double sigma : {0.0, 0.5, 1.0}) {
        auto scaled = hermite::gen_hermite_params(s, sigma, Parity::Even);
        auto unit = hermite::gen_hermite_params(1.0, sigma, Parity::Even);
        for (std::size_t k : {0ul, 2ul, 4ul}) {
            const double ref = hermite::eval_phi(scaled, k, 0.9) /
                               hermite::eval_phi(unit, k, std::sqrt(s) * 0.9);
            for (double x : {0.3, 0.55, 1.4, 2.2}) {
                const double ratio = hermite::eval_phi(scaled, k, x) /
                                     hermite::eval_phi(unit, k, std::sqrt(s) * x);
                CHECK(std::abs(ratio - ref) <= 1e-10 * std::abs(ref));
            }
        }
    }
}

TEST_CASE("orthonormality of the chi basis") {
    for (double exponent : {0.0, 0.25, 1.0, 2.0}) {
        for (double s : {1.0, 2.0}) {
            for (Parity parity : {Parity::Even, Parity::Odd}) {
                auto params = hermite::gen_hermite_params(s, exponent, parity);
                auto basis = hermite::chi_basis(params, exponent / 2.0, 40);
                auto gram = hermite::gram_negative_power(basis, 0.0);
                double dev = 0.0;
                for (std::size_t i = 0; i < 40; ++i)
                    for (std::size_t j = 0; j < 40; ++j)
                        dev = std::max(dev, std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)));
                CHECK(dev < 1e-10);
            }
        }
    }
}

TEST_CASE("negative-power Gram closed forms") {
    // sigma = 1, w = u = 1/2, s = 1: M_00 = Gamma(1)/Gamma(3/2)
    auto params = hermite::gen_hermite_params(1.0, 1.0, Parity::Even);
    auto basis = hermite::chi_basis(params, 1.0, 6);
    auto gram = hermite::gram_negative_power(basis, 0.5);
    CHECK(gram(0, 0) == doctest::Approx(1.0 / std::tgamma(1.5)).epsilon(1e-12));

    // same at s = 4 carries the factor s^w = 2
    auto params4 = hermite::gen_hermite_params(4.0, 1.0, Parity::Even);
    auto basis4 = hermite::chi_basis(params4, 1.0, 6);
    auto gram4 = hermite::gram_negative_power(basis4, 0.5);
    CHECK(gram4(0, 0) == doctest::Approx(2.0 / std::tgamma(1.5)).epsilon(1e-12));

    // integrability violation is refused with the exponent named
    CHECK_THROWS_AS(hermite::gram_negative_power(basis, 1.6), std::domain_error);
}

TEST_CASE("base form matrices are the diagonal base spectra") {
    for (double exponent : {0.0, 0.5, 1.5}) {
        auto even = hermite::gen_hermite_params(2.0, exponent, Parity::Even);
        auto fe = hermite::base_form_matrix(hermite::chi_basis(even, exponent, 12));
        for (std::size_t i = 0; i < 12; ++i)
            for (std::size_t j = 0; j < 12; ++j) {
                const double want =
                    i == j ? (4.0 * static_cast<double>(i) + 1.0 + 2.0 * exponent) * 2.0 : 0.0;
                CHECK(std::abs(fe(i, j) - want) <= 1e-10);
            }
        auto odd = hermite::gen_hermite_params(2.0, exponent, Parity::Odd);
        auto fo = hermite::base_form_matrix(hermite::chi_basis(odd, exponent, 12));
        for (std::size_t i = 0; i < 12; ++i)
            for (std::size_t j = 0; j < 12; ++j) {
                const double want =
                    i == j ? (4.0 * static_cast<double>(i) + 3.0 + 2.0 * exponent) * 2.0 : 0.0;
                CHECK(std::abs(fo(i, j) - want) <= 1e-10);
            }
    }
}

TEST_CASE("cross Gram: node-count stability and parity bookkeeping") {
    // the integrand pairs an odd and an even member against rho^{2 theta - 1},
    // which is even overall; entries must be finite and node-count independent
    auto even = hermite::gen_hermite_params(1.0, 0.0, Parity::Even);
    auto odd = hermite::gen_hermite_params(1.0, 0.0, Parity::Odd);
    auto cross_small = hermite::cross_gram(hermite::chi_basis(even, 0.0, 8),
                                           hermite::chi_basis(odd, 0.0, 8), 0.5);
    auto cross_large = hermite::cross_gram(hermite::chi_basis(even, 0.0, 8),
                                           hermite::chi_basis(odd, 0.0, 8), 0.5);
    // brute-force style oracle: independent quadrature of the defining integral
    auto rule = gauss_laguerre(0.0, 64, 1.0);     // alpha = theta - 1/2 = 0
    auto rule_big = gauss_laguerre(0.0, 128, 1.0);
    auto entry = [&](const QuadratureRule& r, std::size_t j, std::size_t k) {
        // C = 2 integral rho^{2 theta - 1} phi_even phi_odd drho
        //   = integral t^{theta-1} phi_even phi_odd dt; strip the e^{-t} the
        // rule supplies (each phi carries e^{-t/2})
        return r.integrate([&](double t) {
            const double x = std::sqrt(t);
            return hermite::eval_phi(even, 2 * j, x) * hermite::eval_phi(odd, 2 * k + 1, x) /
                   (x * std::exp(-t));
        });
    };
    // entry(0,0) in closed form: sqrt(2/pi)
    CHECK(cross_small[0][0] == doctest::Approx(std::sqrt(2.0 / M_PI)).epsilon(1e-12));
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
            const double a = entry(rule, j, k);
            const double b = entry(rule_big, j, k);
            CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)));
            CHECK(cross_small[j][k] == doctest::Approx(a).epsilon(1e-9));
            CHECK(cross_large[j][k] == doctest::Approx(b).epsilon(1e-9));
        }
    CHECK_THROWS_AS(hermite::cross_gram(hermite::chi_basis(even, 0.0, 4),
                                        hermite::chi_basis(odd, 0.0, 4), -0.6),
                    std::domain_error);
}
