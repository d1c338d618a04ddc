#ifndef CONELAB_COMPLEX1_HPP
#define CONELAB_COMPLEX1_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "conelab/rational.hpp"

namespace conelab::cx {

/// Sign of the deformation f = +-rho^2/2.
enum class Sign { Plus, Minus };
/// Which ideal boundary condition.
enum class Choice { Max, Min };

/// kappa = (n - 2r - 1) u / 2: the weight exponent the degree-r piece of a
/// cone of stratum dimension n sees.
Rational kappa_exponent(long n, long r, const Rational& u);

/// Self-adjoint realizations of the degree components of the length-one
/// complex d = d/d rho - kappa rho^{-1} +- s rho.
enum class C1Variant { A1, A2, B1, B2 };

struct C1Row {
    bool defined;
    Rational parameter;  // sigma (A rows) or tau (B rows)
};

struct C1Table {
    C1Row a1, a2, b1, b2;
    bool a_overlap_equal;  // A1 = A2 (exactly at kappa = 1/2)
    bool b_overlap_equal;  // B1 = B2 (exactly at kappa = -1/2)
};

/// Definedness and parameters per realization:
///   A1: sigma = kappa     for kappa > -1/2      A2: sigma = 1 - kappa  for kappa < 3/2
///   B1: tau   = kappa     for kappa > -3/2      B2: tau   = -1 - kappa for kappa < 1/2
C1Table complex1_operator_table(const Rational& kappa);

struct C1Assignment {
    C1Variant degree0;
    C1Variant degree1;
};

/// Which realization the max/min boundary condition selects:
///   kappa >= 1/2: (A1,B1) both;  |kappa| < 1/2: max (A1,B1), min (A2,B2);
///   kappa <= -1/2: (A2,B2) both.
C1Assignment complex1_assignment(const Rational& kappa, Choice choice);

/// Closed-form eigenvalues of the chosen realization, derived from the
/// displayed Laplacian components (base (2k+1+2 varsigma)s plus the constant
/// shift) and checked against the sign table:
///   A1+: 2ks            A1-: 2(k+1+2 kappa)s
///   A2+: 2(k+1-2 kappa)s  A2-: 2(k+2)s
///   B1+: 2(k+1)s        B1-: 2(k+2 kappa)s
///   B2+: 2(k-2 kappa)s    B2-: 2(k-1)s
/// with k running over the K lowest even (A) or odd (B) naturals. Throws when
/// the variant is undefined at kappa.
std::vector<double> complex1_spectrum(const Rational& kappa, Sign sign, C1Variant variant,
                                      double s, std::size_t K);

}  // namespace conelab::cx

#endif
