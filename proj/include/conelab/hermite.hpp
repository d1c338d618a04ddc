#ifndef CONELAB_HERMITE_HPP
#define CONELAB_HERMITE_HPP

#include <cstddef>
#include <vector>

#include "conelab/sym_matrix.hpp"

namespace conelab::hermite {

enum class Parity { Even, Odd };

/// Parameters of one generalized Hermite family: orthonormal polynomials
/// p_k for the weight |x|^{2 sigma} e^{-s x^2} on R, restricted to one parity.
///
/// Weight convention: the exponent is 2*sigma. This is forced by requiring
/// chi_k = sqrt(2) rho^a p_k e^{-s rho^2/2} (with sigma = a + c1) to be
/// orthonormal in L^2(rho^{2 c1} d rho); the alternative convention with the
/// exponent sigma/2 in the weight is not compatible with that normalization.
///
/// The odd sub-family stays well defined down to sigma > -3/2 (the odd
/// members only ever meet the measure through an extra x^2), which is why the
/// admissible range depends on the parity.
struct GenHermiteParams {
    double s;      // oscillator scale, > 0
    double sigma;  // weight exponent (called tau for odd families)
    Parity parity;
};

/// Validated constructor: requires s > 0 and sigma > -1/2 (even) or
/// sigma > -3/2 (odd).
GenHermiteParams gen_hermite_params(double s, double sigma, Parity parity);

/// Closed-form coefficients beta_1..beta_K of the orthonormal three-term
/// recurrence x p_{k-1} = sqrt(beta_k) p_k + sqrt(beta_{k-1}) p_{k-2} for the
/// full weight |x|^{2 sigma} e^{-s x^2}:
///     beta_{2j} = j/s,   beta_{2j+1} = (j + sigma + 1/2)/s.
/// Cross-validated in tests against the Stieltjes moment oracle.
std::vector<double> recurrence_coefficients(const GenHermiteParams& params, std::size_t K);

/// phi_k(x) = p_k(x) e^{-s x^2 / 2}, evaluated by recurrence in t = x^2 with
/// the Gaussian folded into the running values (never via expanded polynomial
/// coefficients). k must have the family's parity. Saturates to zero once the
/// Gaussian factor underflows.
double eval_phi(const GenHermiteParams& params, std::size_t k, double x);

/// Truncated basis chi_k = sqrt(2) rho^a phi_k (k running over one parity),
/// orthonormal in L^2(rho^{2 c1} d rho) with sigma = a + c1.
struct ChiBasis {
    GenHermiteParams params;
    double rho_power;   // a (even) or b (odd)
    double weight_exp;  // c1 or d1, always sigma - rho_power
    std::size_t size;   // number of retained basis functions
};

ChiBasis chi_basis(const GenHermiteParams& params, double rho_power, std::size_t K);

/// Gram matrix M_{jk} = <rho^{-w} chi_j, rho^{-w} chi_k> in the basis weight,
/// by Gauss-Laguerre quadrature (exact for the polynomial part). Requires
/// integrability at 0: sigma - w > -1/2 (even), tau - w > -3/2 (odd).
SymMatrix gram_negative_power(const ChiBasis& basis, double w);

/// Dirichlet-form matrix <P0 chi_j, chi_k> (even) or <Q0 chi_j, chi_k> (odd)
/// of the unperturbed half-line operator, evaluated by quadrature from the
/// recurrence and its derivatives. Diagonal (2k+1+2 sigma_k) s up to roundoff.
SymMatrix base_form_matrix(const ChiBasis& basis);

/// Coupling matrix C[j][k] = <rho^{-a-b-1} chi^{odd}_k, chi^{even}_j>_theta
/// between an even and an odd basis sharing the same scale s. The rho powers
/// a, b cancel against the weight, so only theta enters; requires theta > -1/2.
/// Row index runs over the even basis, column over the odd one.
std::vector<std::vector<double>> cross_gram(const ChiBasis& even_basis,
                                            const ChiBasis& odd_basis, double theta);

}  // namespace conelab::hermite

#endif
