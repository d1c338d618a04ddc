#ifndef CONELAB_COMPLEX2_HPP
#define CONELAB_COMPLEX2_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "conelab/complex1.hpp"
#include "conelab/rational.hpp"

namespace conelab::cx {

/// Self-adjoint realizations of the degree components of the length-two
/// complex with d_{0,1} = mu rho^{-u}. Unknown marks the grey kappa ranges
/// where the max/min tables leave the realization undescribed.
enum class C2Tag { P1, P2, Q1, Q2, W11, W22, W21, W12, Unknown };

std::string to_string(C2Tag tag);

struct C2Row {
    C2Tag tag;
    bool valid;            // printed table condition
    Rational sigma, tau, theta;  // theta only meaningful for W rows
    std::string condition;       // the printed condition, for reports
};

/// Parameter table of the realizations (W12 appears with valid = false; its
/// theta = -1/2-u fails theta > -1/2 for every kappa). Each row's validity is
/// re-derived from the operator hypotheses (ww_hypotheses for W rows, the
/// sigma/tau ranges for P/Q rows); a mismatch with the printed condition
/// throws, so a transcription error cannot pass silently.
std::vector<C2Row> complex2_parameters(const Rational& kappa, const Rational& u);

/// Max/min realization per degree (0, 1 or 2). Grey ranges return Unknown.
C2Tag complex2_assignment(const Rational& kappa, const Rational& u, Choice choice, int degree);

struct Complex2Spec {
    double s = 1.0;
    Rational kappa;
    Rational u;
    double mu = 1.0;  // positive coupling; xi = mu^2, eta = -2 mu u
    Sign sign = Sign::Plus;
};

/// Ritz eigenvalues of the tagged realization, shift included:
///   degree 0 (P rows):  -+ s (1 + 2(kappa+u))
///   degree 2 (Q rows):  +- s (1 - 2 kappa)
///   degree 1 (W rows):  block shifts -+ s (1+2 kappa) / -+ s (2(kappa+u)-1).
/// K basis functions per parity (so W rows give 2K values). Refuses Unknown.
std::vector<double> complex2_degree_spectrum(const Complex2Spec& spec, C2Tag tag, std::size_t K);

/// Ritz values of a W-row realization on the subspace spanned by the row's
/// chi pairs together with the exact images d0(chi) and delta1(chi) of the
/// companion degree-0/2 bases (W_{i,j} pairs P_i and Q_j). The images carry
/// the boundary behaviour of the true coupled eigenfunctions, which the
/// plain chi block alone approximates too slowly to be useful. Still an
/// upper bound for the same realization. Returns the 2K lowest values.
std::vector<double> w_degree_spectrum_augmented(const Complex2Spec& spec, C2Tag wtag,
                                                std::size_t K);

struct EvOddReport {
    std::vector<double> even;     // sorted Ritz values of Delta_0 + Delta_2
    std::vector<double> odd;      // sorted Ritz values of Delta_1
    double max_rel_deviation;     // over the first compared values
    std::size_t compared;
};

/// Compares the Ritz spectra of the even assembly (degree 0 and 2
/// realizations together) against the degree-1 realization for the given
/// boundary condition; the two agree with multiplicity in the limit. Throws
/// when any needed assignment is Unknown.
EvOddReport ev_odd_match(const Complex2Spec& spec, Choice choice, std::size_t K,
                         std::size_t compare = 5);

/// Exact check of the second goodness condition 1/u in 2Z + n + (0,1]
/// (guarded by 1/n <= u < 1), for u in (0,1).
bool goodness_congruence(long n, const Rational& u);

/// kappa(n,r,u) avoids (-1/2-u, -(1+u)/2] u [(1-u)/2, 1/2) for all 0<=r<=n.
bool kappa_avoids_excluded(long n, const Rational& u);

struct ExclusionReport {
    bool congruence;
    bool avoids;
    bool equivalent;     // congruence == avoids
    bool applicable;     // u < 1 (the equivalence is only claimed there)
    std::vector<long> hit_degrees;  // degrees whose kappa lands in the excluded set
};

ExclusionReport exclusion_lemma_check(long n, const Rational& u);

}  // namespace conelab::cx

#endif
