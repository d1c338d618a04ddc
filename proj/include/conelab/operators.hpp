#ifndef CONELAB_OPERATORS_HPP
#define CONELAB_OPERATORS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "conelab/hermite.hpp"
#include "conelab/sym_matrix.hpp"

namespace conelab::ops {

enum class OperatorKind { P, Q, W };

/// Full parameter record of one half-line model operator.
///
/// P acts on the even family (weight rho^{2 c1}), Q on the odd family
/// (rho^{2 d1}), W on the direct sum with a cross coupling of strength eta
/// through the weight exponent theta. The rho powers satisfy the root
/// relations a^2 + (2 c1 - 1) a - c2 = 0 and b^2 + (2 d1 + 1) b - d2 = 0,
/// which kill the rho^{-2} terms after conjugation; sigma = a + c1 and
/// tau = b + d1 are the effective family exponents.
struct HalfLineOperatorSpec {
    OperatorKind kind = OperatorKind::P;
    double s = 1.0;
    double u = 0.5;    // exponent of the rho^{-u} perturbation, in (0,1]
    double xi = 0.0;   // strength of xi <rho^{-u} ., rho^{-u} .>, >= 0
    double eta = 0.0;  // cross-coupling strength (W only)
    double a = 0.0, b = 0.0;
    double c1 = 0.0, c2 = 0.0, d1 = 0.0, d2 = 0.0;
    double sigma = 0.0, tau = 0.0, theta = 0.0;
};

/// Validated factories. The flat variants set c1 = d1 = 0 (so a = sigma,
/// b = tau) and derive c2/d2 from the root relations; this is the shape the
/// elliptic complexes use.
HalfLineOperatorSpec p_spec(double s, double u, double xi, double a, double c1, double c2);
HalfLineOperatorSpec q_spec(double s, double u, double xi, double b, double d1, double d2);
HalfLineOperatorSpec p_spec_flat(double s, double u, double xi, double sigma);
HalfLineOperatorSpec q_spec_flat(double s, double u, double xi, double tau);
HalfLineOperatorSpec w_spec_flat(double s, double u, double xi, double eta, double sigma,
                                 double tau, double theta);

/// Both real roots of a^2 + (2 c1 - 1) a - c2 = 0, ascending. Throws when the
/// discriminant is negative.
std::pair<double, double> solve_a(double c1, double c2);
/// Roots of b^2 + (2 d1 + 1) b - d2 = 0, ascending.
std::pair<double, double> solve_b(double d1, double d2);

/// lambda_k = (2k + 1 + 2 varsigma_k) s for k = 0..K-1, with varsigma_k =
/// sigma for even k and tau for odd k.
std::vector<double> exact_base_spectrum(double sigma, double tau, double s, std::size_t K);

/// Galerkin matrix of the quadratic form in the first K chi basis functions
/// per parity: P/Q give a K x K matrix (base form + xi * negative-power
/// Gram), W a 2K x 2K two-block matrix with eta-coupled off-diagonal blocks
/// (even block first).
SymMatrix form_matrix(const HalfLineOperatorSpec& spec, std::size_t K);

struct RitzResult {
    std::vector<double> eigenvalues;               // ascending
    std::vector<std::vector<double>> vectors;      // coordinates in the chi basis
    std::size_t basis_size = 0;                    // K (P/Q) or 2K packed (W)
};

/// Rayleigh-Ritz eigenvalues of the form matrix: upper bounds for the true
/// eigenvalues, non-increasing in K.
RitzResult ritz_spectrum(const HalfLineOperatorSpec& spec, std::size_t K);

/// Eigenvalues only; used where the Ritz vectors are not needed.
std::vector<double> ritz_values(const HalfLineOperatorSpec& spec, std::size_t K);

/// Least-squares slope of log(lambda_k^{Ritz}(s) - base_k(s)) against log s.
/// k is the parity-graded index (even for P, odd for Q). Requires xi > 0 and at
/// least two scales; throws a precision error when a gap is non-positive.
double growth_exponent(const HalfLineOperatorSpec& spec, std::size_t k,
                       const std::vector<double>& s_list, std::size_t K);

/// |coordinate of the k-th Ritz vector on chi_k|. When neighbouring Ritz
/// values cluster within 1e-8 * s the overlap is taken on the spanned
/// invariant subspace instead (multiplicity handling).
double overlap_norm(const HalfLineOperatorSpec& spec, std::size_t k, std::size_t K);

}  // namespace conelab::ops

#endif
