#ifndef CONELAB_REGIONS_HPP
#define CONELAB_REGIONS_HPP

#include <string>

#include "conelab/rational.hpp"

namespace conelab::ops {

/// Region predicates deciding membership of (sigma, tau) resp. (sigma, tau,
/// theta) in the parameter sets that govern when the coupled half-line form
/// is realized by a positive self-adjoint operator. Each set is defined by a
/// list of guarded implications; a point belongs iff every implication holds.
/// All arithmetic is exact rational; no floating point enters these decisions.
bool in_J1(const Rational& sigma, const Rational& tau);
bool in_J2(const Rational& sigma, const Rational& tau);
bool in_K1(const Rational& sigma, const Rational& tau, const Rational& theta);
bool in_K1p(const Rational& sigma, const Rational& tau, const Rational& theta);
bool in_K2(const Rational& sigma, const Rational& tau, const Rational& theta);
bool in_K2p(const Rational& sigma, const Rational& tau, const Rational& theta);

enum class WwStatus { Satisfied, Violated, NotApplicable };

struct WwReport {
    WwStatus status;
    std::string clause;  // which clause decided, or why none applied
    bool ok() const { return status == WwStatus::Satisfied; }
};

/// Hypothesis check for the coupled operator: base parameter ranges
/// (sigma > u - 1/2, tau > u - 3/2, theta > -1/2), then dispatch on the case
/// pattern sigma/theta/tau with the -N membership side conditions, then the
/// matching clause:
///   (a) sigma = theta != tau : sigma-1 < tau < min(sigma+1, 2 sigma + 1/2)
///   (b) sigma != theta = tau : (sigma, tau) in J1 u J2
///   (c) sigma != theta = tau+1 : tau < min(3 sigma/2 - 9/4, sigma - 5/3)
///   (d) sigma != theta != tau : (sigma,tau,theta) in (K1 u K2) n (K1' u K2')
/// NotApplicable when no clause premise matches (equal triple, or a -N side
/// condition fails).
WwReport ww_hypotheses(const Rational& sigma, const Rational& tau, const Rational& theta,
                       const Rational& u);

}  // namespace conelab::ops

#endif
