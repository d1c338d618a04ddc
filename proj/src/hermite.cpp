#include "conelab/hermite.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "conelab/detail/ortho_eval.hpp"
#include "conelab/quadrature.hpp"

namespace conelab::hermite {

namespace {

// Extra nodes beyond the basis size; keeps every Gram and form integral in
// this module inside the rule's exactness degree.
constexpr std::size_t kNodeMargin = 10;

// Effective Laguerre exponent of the family seen as polynomials in t = x^2.
double t_exponent(const GenHermiteParams& p) {
    return p.parity == Parity::Even ? p.sigma - 0.5 : p.sigma + 0.5;
}

// Quadrature weights with e^{+s t_i} folded back in, matching the scaled
// polynomial values above.
struct ScaledRule {
    std::vector<double> nodes;
    std::vector<long double> weights;
};

ScaledRule scaled_rule(double alpha, std::size_t n, double s) {
    QuadratureRule rule = gauss_laguerre(alpha, n, s);
    ScaledRule out;
    out.nodes = rule.nodes;
    out.weights.resize(n);
    // Recomputing the weight as 1 / sum T^2 keeps full relative accuracy at
    // the extreme nodes, where the e^{+s t} unfolding would otherwise amplify
    // the eigenvector roundoff of the Golub-Welsch path.
    for (std::size_t i = 0; i < n; ++i)
        out.weights[i] = detail::scaled_christoffel_weight(alpha, s, rule.nodes[i], n);
    return out;
}

}  // namespace

GenHermiteParams gen_hermite_params(double s, double sigma, Parity parity) {
    if (!(s > 0.0)) throw std::domain_error("gen_hermite_params: scale must be positive");
    const double lower = parity == Parity::Even ? -0.5 : -1.5;
    if (!(sigma > lower))
        throw std::domain_error("gen_hermite_params: exponent " + std::to_string(sigma) +
                                " out of range (needs > " + std::to_string(lower) + ")");
    return GenHermiteParams{s, sigma, parity};
}

std::vector<double> recurrence_coefficients(const GenHermiteParams& params, std::size_t K) {
    std::vector<double> beta(K);
    for (std::size_t k = 1; k <= K; ++k) {
        if (k % 2 == 0)
            beta[k - 1] = static_cast<double>(k / 2) / params.s;
        else
            beta[k - 1] = (static_cast<double>((k - 1) / 2) + params.sigma + 0.5) / params.s;
    }
    return beta;
}

double eval_phi(const GenHermiteParams& params, std::size_t k, double x) {
    const bool k_even = (k % 2 == 0);
    if ((params.parity == Parity::Even) != k_even)
        throw std::invalid_argument("eval_phi: index parity does not match the family");
    if (0.5 * params.s * x * x > 11000.0) {
        static bool warned = false;
        if (!warned) {
            std::cerr << "eval_phi: Gaussian factor underflows, saturating to 0\n";
            warned = true;
        }
        return 0.0;
    }
    const std::size_t m = k / 2;
    std::vector<long double> val(m + 1);
    detail::eval_t_family(t_exponent(params), params.s, x * x, m + 1, val.data(), nullptr, nullptr);
    long double v = val[m];
    if (params.parity == Parity::Odd) v *= x;
    return static_cast<double>(v);
}

ChiBasis chi_basis(const GenHermiteParams& params, double rho_power, std::size_t K) {
    if (K == 0) throw std::invalid_argument("chi_basis: empty basis");
    return ChiBasis{params, rho_power, params.sigma - rho_power, K};
}

SymMatrix gram_negative_power(const ChiBasis& basis, double w) {
    const GenHermiteParams& p = basis.params;
    const double alpha = t_exponent(p) - w;
    if (!(alpha > -1.0))
        throw std::domain_error("gram_negative_power: exponent " + std::to_string(p.sigma) +
                                " - " + std::to_string(w) + " violates integrability at 0");
    const std::size_t K = basis.size;
    ScaledRule rule = scaled_rule(alpha, K + kNodeMargin, p.s);

    SymMatrix gram(K);
    std::vector<long double> val(K);
    std::vector<std::vector<long double>> acc(K, std::vector<long double>(K, 0.0L));
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        detail::eval_t_family(t_exponent(p), p.s, rule.nodes[i], K, val.data(), nullptr, nullptr);
        for (std::size_t j = 0; j < K; ++j)
            for (std::size_t k = j; k < K; ++k) acc[j][k] += rule.weights[i] * val[j] * val[k];
    }
    for (std::size_t j = 0; j < K; ++j)
        for (std::size_t k = j; k < K; ++k) gram.set(j, k, static_cast<double>(acc[j][k]));
    return gram;
}

SymMatrix base_form_matrix(const ChiBasis& basis) {
    const GenHermiteParams& p = basis.params;
    const double alpha = t_exponent(p);
    const double s = p.s;
    const std::size_t K = basis.size;
    ScaledRule rule = scaled_rule(alpha, K + kNodeMargin, s);

    SymMatrix form(K);
    std::vector<long double> val(K), der1(K), der2(K);
    std::vector<std::vector<long double>> acc(K, std::vector<long double>(K, 0.0L));
    // The rho^{-2} terms cancel against the root relation of the rho power, so
    // the conjugated operator applied to T_m(t) is polynomial:
    //   even:  -4 t T'' - (2 + 4 sigma - 4 s t) T' + (1 + 2 sigma) s T
    //   odd:   -4 t T'' - (6 + 4 tau   - 4 s t) T' + (3 + 2 tau)   s T
    const double c1 = p.parity == Parity::Even ? 2.0 + 4.0 * p.sigma : 6.0 + 4.0 * p.sigma;
    const double c0 = p.parity == Parity::Even ? (1.0 + 2.0 * p.sigma) * s : (3.0 + 2.0 * p.sigma) * s;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const long double t = rule.nodes[i];
        detail::eval_t_family(alpha, s, rule.nodes[i], K, val.data(), der1.data(), der2.data());
        for (std::size_t j = 0; j < K; ++j) {
            const long double bj =
                -4.0L * t * der2[j] - (c1 - 4.0L * s * t) * der1[j] + c0 * val[j];
            for (std::size_t k = 0; k < K; ++k) acc[j][k] += rule.weights[i] * bj * val[k];
        }
    }
    // The analytic form is symmetric; symmetrize the quadrature roundoff.
    for (std::size_t j = 0; j < K; ++j)
        for (std::size_t k = j; k < K; ++k)
            form.set(j, k, 0.5 * static_cast<double>(acc[j][k] + acc[k][j]));
    return form;
}

std::vector<std::vector<double>> cross_gram(const ChiBasis& even_basis,
                                            const ChiBasis& odd_basis, double theta) {
    if (even_basis.params.parity != Parity::Even || odd_basis.params.parity != Parity::Odd)
        throw std::invalid_argument("cross_gram: expects (even, odd) basis pair");
    if (even_basis.params.s != odd_basis.params.s)
        throw std::invalid_argument("cross_gram: bases must share the scale s");
    const double alpha = theta - 0.5;
    if (!(alpha > -1.0))
        throw std::domain_error("cross_gram: theta = " + std::to_string(theta) +
                                " violates integrability at 0");
    const double s = even_basis.params.s;
    const std::size_t Ke = even_basis.size, Ko = odd_basis.size;
    ScaledRule rule = scaled_rule(alpha, Ke + Ko + kNodeMargin, s);

    std::vector<long double> ev(Ke), ov(Ko);
    std::vector<std::vector<long double>> acc(Ke, std::vector<long double>(Ko, 0.0L));
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        detail::eval_t_family(t_exponent(even_basis.params), s, rule.nodes[i], Ke, ev.data(),
                              nullptr, nullptr);
        detail::eval_t_family(t_exponent(odd_basis.params), s, rule.nodes[i], Ko, ov.data(),
                              nullptr, nullptr);
        for (std::size_t j = 0; j < Ke; ++j)
            for (std::size_t k = 0; k < Ko; ++k) acc[j][k] += rule.weights[i] * ev[j] * ov[k];
    }
    std::vector<std::vector<double>> out(Ke, std::vector<double>(Ko));
    for (std::size_t j = 0; j < Ke; ++j)
        for (std::size_t k = 0; k < Ko; ++k) out[j][k] = static_cast<double>(acc[j][k]);
    return out;
}

}  // namespace conelab::hermite
