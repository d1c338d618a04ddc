#ifndef CONELAB_MORSE_HPP
#define CONELAB_MORSE_HPP

#include <vector>

#include "conelab/complex1.hpp"
#include "conelab/perversity.hpp"
#include "conelab/spaces.hpp"

namespace conelab::morse {

using cx::Choice;
using cx::Sign;

/// One cone factor of a rel-critical point's local model: link stratum Betti
/// data (max/min flavors; equal for manifold links), codimension k = dim
/// link + 1, metric exponent u, and which side of f = (rho_+^2 - rho_-^2)/2
/// it sits on.
struct ConeFactor {
    long k = 1;
    Rational u;
    bool minus_side = false;
    std::vector<long> betti_max;  // length k
    std::vector<long> betti_min;
};

struct RelCriticalPoint {
    long m_plus = 0, m_minus = 0;
    std::vector<ConeFactor> factors;
    long ambient_dim() const;
};

/// Local contribution of one rel-critical point per degree (length dim+1):
///   nu^r = sum over (r_1..r_a) of prod beta^{r_i}(N_i), constrained by
///   r = m_- + sum r_i + #I_-, with the exact rational thresholds
///     max:  r_i <  (k_i-1)/2 + 1/(2u_i)  on I_+,   >= on I_-
///     min:  r_i <= (k_i-1)/2 - 1/(2u_i)  on I_+,   >  on I_-.
/// Strict-vs-nonstrict is encoded once in factor_vector(), used by both
/// routes below.
std::vector<long> nu_local(const RelCriticalPoint& point, Choice choice);

/// Same numbers by the independent route: convolution of the per-factor
/// cone harmonic dimensions with the degree shift of the Euclidean factors.
std::vector<long> nu_kunneth(const RelCriticalPoint& point, Choice choice);

enum class PerversityFlavor { PbarMax, QbarMin };

/// Combinatorial form of nu for a perversity p (max flavor) or q (min
/// flavor). Requires at most one cone factor per side and manifold links;
/// the two-sided case only exists when 2 p_k = k - 2.
std::vector<long> nu_perversity(const RelCriticalPoint& point, const strat::Perversity& p,
                                PerversityFlavor flavor);

/// nu summed over a list of critical points.
std::vector<long> nu_total(const std::vector<RelCriticalPoint>& points, Choice choice);

/// Harmonic dimensions of the deformed model on a space built from
/// manifolds, cones and products: manifolds contribute their Betti data,
/// cones go through the threshold table, products convolve.
std::vector<long> betti_witten(const strat::SpaceNode& space, Sign sign, Choice choice);

struct MorseReport {
    std::vector<long> beta, nu;
    std::vector<bool> inequality_ok;  // partial alternating sums, k = 0..n-1
    long chi_beta = 0, chi_nu = 0;
    bool euler_ok = false;
    bool all_ok() const;
};

/// Exact evaluation of the partial alternating inequalities
/// sum_{r<=k} (-1)^{k-r} beta_r <= sum_{r<=k} (-1)^{k-r} nu_r and of the
/// Euler equality.
MorseReport morse_inequalities(const std::vector<long>& beta, const std::vector<long>& nu);

/// Function-independence of the alternating sum: two critical-point datasets
/// on one space must give the same signed total.
bool euler_invariance(const std::vector<RelCriticalPoint>& f1,
                      const std::vector<RelCriticalPoint>& f2, Choice choice);

}  // namespace conelab::morse

#endif
