#include "conelab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace conelab::ops {

namespace {

void check_root_relation(double root, double lin, double cons, const char* what) {
    // root^2 + lin*root - cons must vanish (exactly in exact arithmetic;
    // allow the roundoff of a quadratic-formula evaluation).
    const double r = root * root + lin * root - cons;
    const double scale = 1.0 + std::abs(root * root) + std::abs(lin * root) + std::abs(cons);
    if (std::abs(r) > 1e-9 * scale)
        throw std::invalid_argument(std::string(what) + ": root relation violated");
}

void check_common(double s, double u, double xi) {
    if (!(s > 0.0)) throw std::domain_error("operator spec: s must be positive");
    if (!(u > 0.0 && u <= 1.0)) throw std::domain_error("operator spec: u must lie in (0,1]");
    if (xi < 0.0) throw std::domain_error("operator spec: xi must be >= 0");
}

double sigma_lower(double u, double xi) { return xi > 0.0 ? u - 0.5 : -0.5; }
double tau_lower(double u, double xi) { return xi > 0.0 ? u - 1.5 : -1.5; }

hermite::ChiBasis even_basis(const HalfLineOperatorSpec& spec, std::size_t K) {
    auto params = hermite::gen_hermite_params(spec.s, spec.sigma, hermite::Parity::Even);
    return hermite::chi_basis(params, spec.a, K);
}

hermite::ChiBasis odd_basis(const HalfLineOperatorSpec& spec, std::size_t K) {
    auto params = hermite::gen_hermite_params(spec.s, spec.tau, hermite::Parity::Odd);
    return hermite::chi_basis(params, spec.b, K);
}

}  // namespace

HalfLineOperatorSpec p_spec(double s, double u, double xi, double a, double c1, double c2) {
    check_common(s, u, xi);
    check_root_relation(a, 2.0 * c1 - 1.0, c2, "p_spec");
    HalfLineOperatorSpec spec;
    spec.kind = OperatorKind::P;
    spec.s = s;
    spec.u = u;
    spec.xi = xi;
    spec.a = a;
    spec.c1 = c1;
    spec.c2 = c2;
    spec.sigma = a + c1;
    if (!(spec.sigma > sigma_lower(u, xi)))
        throw std::domain_error("p_spec: sigma out of range");
    return spec;
}

HalfLineOperatorSpec q_spec(double s, double u, double xi, double b, double d1, double d2) {
    check_common(s, u, xi);
    check_root_relation(b, 2.0 * d1 + 1.0, d2, "q_spec");
    HalfLineOperatorSpec spec;
    spec.kind = OperatorKind::Q;
    spec.s = s;
    spec.u = u;
    spec.xi = xi;
    spec.b = b;
    spec.d1 = d1;
    spec.d2 = d2;
    spec.tau = b + d1;
    if (!(spec.tau > tau_lower(u, xi)))
        throw std::domain_error("q_spec: tau out of range");
    return spec;
}

HalfLineOperatorSpec p_spec_flat(double s, double u, double xi, double sigma) {
    return p_spec(s, u, xi, sigma, 0.0, sigma * sigma - sigma);
}

HalfLineOperatorSpec q_spec_flat(double s, double u, double xi, double tau) {
    return q_spec(s, u, xi, tau, 0.0, tau * tau + tau);
}

HalfLineOperatorSpec w_spec_flat(double s, double u, double xi, double eta, double sigma,
                                 double tau, double theta) {
    check_common(s, u, xi);
    HalfLineOperatorSpec spec;
    spec.kind = OperatorKind::W;
    spec.s = s;
    spec.u = u;
    spec.xi = xi;
    spec.eta = eta;
    spec.a = sigma;
    spec.b = tau;
    spec.c2 = sigma * sigma - sigma;
    spec.d2 = tau * tau + tau;
    spec.sigma = sigma;
    spec.tau = tau;
    spec.theta = theta;
    if (!(sigma > sigma_lower(u, xi))) throw std::domain_error("w_spec: sigma out of range");
    if (!(tau > tau_lower(u, xi))) throw std::domain_error("w_spec: tau out of range");
    if (eta != 0.0 && !(theta > -0.5)) throw std::domain_error("w_spec: theta must exceed -1/2");
    return spec;
}

std::pair<double, double> solve_a(double c1, double c2) {
    const double lin = 2.0 * c1 - 1.0;
    const double disc = lin * lin + 4.0 * c2;
    if (disc < 0.0) throw std::domain_error("solve_a: no real root");
    const double root = std::sqrt(disc);
    return {(-lin - root) / 2.0, (-lin + root) / 2.0};
}

std::pair<double, double> solve_b(double d1, double d2) {
    const double lin = 2.0 * d1 + 1.0;
    const double disc = lin * lin + 4.0 * d2;
    if (disc < 0.0) throw std::domain_error("solve_b: no real root");
    const double root = std::sqrt(disc);
    return {(-lin - root) / 2.0, (-lin + root) / 2.0};
}

std::vector<double> exact_base_spectrum(double sigma, double tau, double s, std::size_t K) {
    std::vector<double> lambda(K);
    for (std::size_t k = 0; k < K; ++k) {
        const double vs = (k % 2 == 0) ? sigma : tau;
        lambda[k] = (2.0 * static_cast<double>(k) + 1.0 + 2.0 * vs) * s;
    }
    return lambda;
}

SymMatrix form_matrix(const HalfLineOperatorSpec& spec, std::size_t K) {
    if (K == 0) throw std::invalid_argument("form_matrix: K must be positive");
    switch (spec.kind) {
        case OperatorKind::P: {
            auto basis = even_basis(spec, K);
            SymMatrix m = hermite::base_form_matrix(basis);
            if (spec.xi != 0.0) {
                SymMatrix g = hermite::gram_negative_power(basis, spec.u);
                for (std::size_t i = 0; i < K; ++i)
                    for (std::size_t j = i; j < K; ++j)
                        m.set(i, j, m(i, j) + spec.xi * g(i, j));
            }
            return m;
        }
        case OperatorKind::Q: {
            auto basis = odd_basis(spec, K);
            SymMatrix m = hermite::base_form_matrix(basis);
            if (spec.xi != 0.0) {
                SymMatrix g = hermite::gram_negative_power(basis, spec.u);
                for (std::size_t i = 0; i < K; ++i)
                    for (std::size_t j = i; j < K; ++j)
                        m.set(i, j, m(i, j) + spec.xi * g(i, j));
            }
            return m;
        }
        case OperatorKind::W: {
            auto ebasis = even_basis(spec, K);
            auto obasis = odd_basis(spec, K);
            SymMatrix pe = hermite::base_form_matrix(ebasis);
            SymMatrix qo = hermite::base_form_matrix(obasis);
            SymMatrix m(2 * K);
            if (spec.xi != 0.0) {
                SymMatrix ge = hermite::gram_negative_power(ebasis, spec.u);
                SymMatrix go = hermite::gram_negative_power(obasis, spec.u);
                for (std::size_t i = 0; i < K; ++i)
                    for (std::size_t j = i; j < K; ++j) {
                        m.set(i, j, pe(i, j) + spec.xi * ge(i, j));
                        m.set(K + i, K + j, qo(i, j) + spec.xi * go(i, j));
                    }
            } else {
                for (std::size_t i = 0; i < K; ++i)
                    for (std::size_t j = i; j < K; ++j) {
                        m.set(i, j, pe(i, j));
                        m.set(K + i, K + j, qo(i, j));
                    }
            }
            if (spec.eta != 0.0) {
                auto cross = hermite::cross_gram(ebasis, obasis, spec.theta);
                for (std::size_t i = 0; i < K; ++i)
                    for (std::size_t j = 0; j < K; ++j)
                        m.set(i, K + j, spec.eta * cross[i][j]);
            }
            return m;
        }
    }
    throw std::logic_error("form_matrix: unreachable");
}

RitzResult ritz_spectrum(const HalfLineOperatorSpec& spec, std::size_t K) {
    SymMatrix m = form_matrix(spec, K);
    EigenDecomposition eig = sym_eigen(m);
    return RitzResult{std::move(eig.values), std::move(eig.vectors), m.order()};
}

std::vector<double> ritz_values(const HalfLineOperatorSpec& spec, std::size_t K) {
    return sym_eigen_values(form_matrix(spec, K));
}

namespace {

std::size_t parity_index_to_ordinal(const HalfLineOperatorSpec& spec, std::size_t k) {
    if (spec.kind == OperatorKind::P) {
        if (k % 2 != 0) throw std::invalid_argument("index must be even for a P operator");
        return k / 2;
    }
    if (spec.kind == OperatorKind::Q) {
        if (k % 2 != 1) throw std::invalid_argument("index must be odd for a Q operator");
        return (k - 1) / 2;
    }
    throw std::invalid_argument("per-index operations support P and Q kinds only");
}

}  // namespace

double growth_exponent(const HalfLineOperatorSpec& spec, std::size_t k,
                       const std::vector<double>& s_list, std::size_t K) {
    if (!(spec.xi > 0.0)) throw std::domain_error("growth_exponent: needs xi > 0");
    if (spec.eta != 0.0) throw std::domain_error("growth_exponent: needs eta = 0");
    if (s_list.size() < 2) throw std::invalid_argument("growth_exponent: need >= 2 scales");
    const std::size_t ord = parity_index_to_ordinal(spec, k);
    if (ord >= K) throw std::invalid_argument("growth_exponent: index beyond basis");

    std::vector<double> xs, ys;
    for (double s : s_list) {
        HalfLineOperatorSpec at_s = spec;
        at_s.s = s;
        const std::vector<double> values = ritz_values(at_s, K);
        const double vs = (k % 2 == 0) ? spec.sigma : spec.tau;
        const double base = (2.0 * static_cast<double>(k) + 1.0 + 2.0 * vs) * s;
        const double gap = values[ord] - base;
        if (!(gap > 0.0))
            throw std::runtime_error("growth_exponent: non-positive gap at s = " +
                                     std::to_string(s) + " (precision exhausted)");
        xs.push_back(std::log(s));
        ys.push_back(std::log(gap));
    }
    const std::size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = static_cast<double>(n) * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("growth_exponent: degenerate scale list");
    return (static_cast<double>(n) * sxy - sx * sy) / denom;
}

double overlap_norm(const HalfLineOperatorSpec& spec, std::size_t k, std::size_t K) {
    const std::size_t ord = parity_index_to_ordinal(spec, k);
    if (ord >= K) throw std::invalid_argument("overlap_norm: index beyond basis");
    RitzResult ritz = ritz_spectrum(spec, K);
    const double cluster_tol = 1e-8 * spec.s;
    const double center = ritz.eigenvalues[ord];
    double mass = 0.0;
    for (std::size_t i = 0; i < ritz.eigenvalues.size(); ++i) {
        if (std::abs(ritz.eigenvalues[i] - center) < cluster_tol) {
            const double c = ritz.vectors[i][ord];
            mass += c * c;
        }
    }
    return std::sqrt(mass);
}

}  // namespace conelab::ops
