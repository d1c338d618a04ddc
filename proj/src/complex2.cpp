#include "conelab/complex2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "conelab/operators.hpp"
#include "conelab/regions.hpp"

namespace conelab::cx {

namespace {

const Rational kHalf(1, 2);

bool w_row_valid_by_hypotheses(const Rational& sg, const Rational& ta, const Rational& th,
                               const Rational& u) {
    return ops::ww_hypotheses(sg, ta, th, u).ok();
}

}  // namespace

std::string to_string(C2Tag tag) {
    switch (tag) {
        case C2Tag::P1: return "P1";
        case C2Tag::P2: return "P2";
        case C2Tag::Q1: return "Q1";
        case C2Tag::Q2: return "Q2";
        case C2Tag::W11: return "W11";
        case C2Tag::W22: return "W22";
        case C2Tag::W21: return "W21";
        case C2Tag::W12: return "W12";
        case C2Tag::Unknown: return "Unknown";
    }
    return "?";
}

std::vector<C2Row> complex2_parameters(const Rational& kappa, const Rational& u) {
    if (!(u > Rational(0) && u < Rational(1)))
        throw std::domain_error("complex2_parameters: u must lie in (0,1)");
    const Rational zero(0);
    std::vector<C2Row> rows;

    auto push = [&](C2Tag tag, bool table_valid, bool derived_valid, Rational sg, Rational ta,
                    Rational th, std::string cond) {
        if (table_valid != derived_valid)
            throw std::logic_error("complex2_parameters: table condition and operator "
                                   "hypotheses disagree for row " +
                                   to_string(tag) + " at kappa = " + kappa.str() +
                                   ", u = " + u.str());
        rows.push_back(C2Row{tag, table_valid, sg, ta, th, std::move(cond)});
    };

    // Degree 0 rows: validity is the sigma range sigma > u - 1/2.
    {
        Rational sg = kappa + u;
        push(C2Tag::P1, kappa > -kHalf, sg > u - kHalf, sg, zero, zero, "kappa > -1/2");
        sg = Rational(1) - kappa - u;
        push(C2Tag::P2, kappa < Rational(3, 2) - u * 2, sg > u - kHalf, sg, zero, zero,
             "kappa < 3/2 - 2u");
    }
    // Degree 2 rows: validity is the tau range tau > u - 3/2.
    {
        Rational ta = kappa;
        push(C2Tag::Q1, kappa > u - Rational(3, 2), ta > u - Rational(3, 2), zero, ta, zero,
             "kappa > u - 3/2");
        ta = Rational(-1) - kappa;
        push(C2Tag::Q2, kappa < kHalf - u, ta > u - Rational(3, 2), zero, ta, zero,
             "kappa < 1/2 - u");
    }
    // Degree 1 rows: validity from the coupled-operator hypotheses.
    {
        Rational sg = kappa, ta = kappa + u, th = kappa;
        push(C2Tag::W11, kappa > u - kHalf, w_row_valid_by_hypotheses(sg, ta, th, u), sg, ta, th,
             "kappa > u - 1/2");

        sg = Rational(1) - kappa;
        ta = Rational(-1) - kappa - u;
        th = -kappa - u;
        push(C2Tag::W22, kappa < kHalf - u * 2, w_row_valid_by_hypotheses(sg, ta, th, u), sg, ta,
             th, "kappa < 1/2 - 2u");

        sg = kappa;
        ta = Rational(-1) - kappa - u;
        th = -kHalf - u;
        push(C2Tag::W12, false, w_row_valid_by_hypotheses(sg, ta, th, u), sg, ta, th,
             "impossible (theta = -1/2 - u)");

        sg = Rational(1) - kappa;
        ta = kappa + u;
        th = kHalf;
        const bool w21_table = (-(Rational(1) + u) / 2 < kappa && kappa < (Rational(1) - u) / 2) ||
                               kappa == -kHalf - u || kappa == kHalf;
        push(C2Tag::W21, w21_table, w_row_valid_by_hypotheses(sg, ta, th, u), sg, ta, th,
             "-(1+u)/2 < kappa < (1-u)/2, or kappa = -1/2-u, 1/2");
    }
    return rows;
}

C2Tag complex2_assignment(const Rational& kappa, const Rational& u, Choice choice, int degree) {
    if (!(u > Rational(0) && u <= Rational(1)))
        throw std::domain_error("complex2_assignment: u must lie in (0,1]");
    switch (degree) {
        case 0:
            if (choice == Choice::Max) {
                if (kappa > -kHalf) return C2Tag::P1;
                if (kappa > -kHalf - u) return C2Tag::Unknown;  // (-1/2-u, -1/2]
                return C2Tag::P2;
            }
            return kappa >= kHalf - u ? C2Tag::P1 : C2Tag::P2;
        case 2:
            if (choice == Choice::Max) return kappa > -kHalf ? C2Tag::Q1 : C2Tag::Q2;
            if (kappa >= kHalf) return C2Tag::Q1;
            if (kappa >= kHalf - u) return C2Tag::Unknown;  // [1/2-u, 1/2)
            return C2Tag::Q2;
        case 1:
            if (choice == Choice::Max) {
                if (kappa > u - kHalf) return C2Tag::W11;
                if (kappa > -kHalf) return C2Tag::Unknown;  // (-1/2, u-1/2]
                if (kappa > -(Rational(1) + u) / 2) return C2Tag::W21;
                if (kappa > -kHalf - u) return C2Tag::Unknown;  // (-1/2-u, -(1+u)/2]
                return C2Tag::W22;
            }
            if (kappa >= kHalf) return C2Tag::W11;
            if (kappa >= (Rational(1) - u) / 2) return C2Tag::Unknown;  // [(1-u)/2, 1/2)
            if (kappa >= kHalf - u) return C2Tag::W21;
            if (kappa >= kHalf - u * 2) return C2Tag::Unknown;  // [1/2-2u, 1/2-u)
            return C2Tag::W22;
        default:
            throw std::invalid_argument("complex2_assignment: degree must be 0, 1 or 2");
    }
}

std::vector<double> complex2_degree_spectrum(const Complex2Spec& spec, C2Tag tag, std::size_t K) {
    if (tag == C2Tag::Unknown)
        throw std::domain_error(
            "complex2_degree_spectrum: realization unknown on this kappa range (grey cell); "
            "no spectrum is asserted there");
    if (tag == C2Tag::W12)
        throw std::domain_error("complex2_degree_spectrum: W12 is never realized");
    if (!(spec.mu > 0.0)) throw std::domain_error("complex2_degree_spectrum: mu must be positive");

    const double s = spec.s;
    const double u = spec.u.to_double();
    const double kp = spec.kappa.to_double();
    const double xi = spec.mu * spec.mu;
    const bool plus = spec.sign == Sign::Plus;

    auto shifted = [](std::vector<double> v, double shift) {
        for (double& x : v) x += shift;
        return v;
    };

    switch (tag) {
        case C2Tag::P1:
        case C2Tag::P2: {
            const double sg = tag == C2Tag::P1 ? kp + u : 1.0 - kp - u;
            auto values = ops::ritz_values(ops::p_spec_flat(s, u, xi, sg), K);
            const double shift = (plus ? -1.0 : 1.0) * s * (1.0 + 2.0 * (kp + u));
            return shifted(std::move(values), shift);
        }
        case C2Tag::Q1:
        case C2Tag::Q2: {
            const double ta = tag == C2Tag::Q1 ? kp : -1.0 - kp;
            auto values = ops::ritz_values(ops::q_spec_flat(s, u, xi, ta), K);
            const double shift = (plus ? 1.0 : -1.0) * s * (1.0 - 2.0 * kp);
            return shifted(std::move(values), shift);
        }
        case C2Tag::W11:
        case C2Tag::W22:
        case C2Tag::W21:
            return w_degree_spectrum_augmented(spec, tag, K);
        default:
            throw std::logic_error("complex2_degree_spectrum: unreachable");
    }
}

EvOddReport ev_odd_match(const Complex2Spec& spec, Choice choice, std::size_t K,
                         std::size_t compare) {
    const C2Tag t0 = complex2_assignment(spec.kappa, spec.u, choice, 0);
    const C2Tag t1 = complex2_assignment(spec.kappa, spec.u, choice, 1);
    const C2Tag t2 = complex2_assignment(spec.kappa, spec.u, choice, 2);
    if (t0 == C2Tag::Unknown || t1 == C2Tag::Unknown || t2 == C2Tag::Unknown)
        throw std::domain_error("ev_odd_match: an assignment is unknown at this kappa");

    EvOddReport report;
    report.even = complex2_degree_spectrum(spec, t0, K);
    auto q = complex2_degree_spectrum(spec, t2, K);
    report.even.insert(report.even.end(), q.begin(), q.end());
    std::sort(report.even.begin(), report.even.end());
    report.odd = complex2_degree_spectrum(spec, t1, K);
    std::sort(report.odd.begin(), report.odd.end());

    report.compared = std::min({compare, report.even.size(), report.odd.size()});
    double worst = 0.0;
    for (std::size_t i = 0; i < report.compared; ++i) {
        const double e = report.even[i];
        const double o = report.odd[i];
        const double denom = std::max({std::abs(e), std::abs(o), 1e-12});
        worst = std::max(worst, std::abs(e - o) / denom);
    }
    report.max_rel_deviation = worst;
    return report;
}

bool goodness_congruence(long n, const Rational& u) {
    if (!(u > Rational(0) && u < Rational(1)))
        throw std::domain_error("goodness_congruence: u must lie in (0,1)");
    const Rational inv = Rational(1) / u;
    if (inv > Rational(n)) return true;  // guard 1/n <= u inactive
    // 1/u in 2Z + n + (0,1]  <=>  ceil(1/u - n) is odd
    const long c = (inv - Rational(n)).ceil();
    return (c % 2 + 2) % 2 == 1;
}

bool kappa_avoids_excluded(long n, const Rational& u) {
    return exclusion_lemma_check(n, u).avoids;
}

ExclusionReport exclusion_lemma_check(long n, const Rational& u) {
    if (n < 0) throw std::invalid_argument("exclusion_lemma_check: n must be >= 0");
    if (!(u > Rational(0) && u <= Rational(1)))
        throw std::domain_error("exclusion_lemma_check: u must lie in (0,1]");
    ExclusionReport report;
    report.applicable = u < Rational(1);
    const Rational lo_open = -Rational(1, 2) - u;
    const Rational lo_closed = -(Rational(1) + u) / 2;
    const Rational hi_closed = (Rational(1) - u) / 2;
    const Rational hi_open(1, 2);
    for (long r = 0; r <= n; ++r) {
        const Rational kp = kappa_exponent(n, r, u);
        const bool hit = (lo_open < kp && kp <= lo_closed) || (hi_closed <= kp && kp < hi_open);
        if (hit) report.hit_degrees.push_back(r);
    }
    report.avoids = report.hit_degrees.empty();
    report.congruence = report.applicable ? goodness_congruence(n, u) : true;
    report.equivalent = (report.congruence == report.avoids);
    return report;
}

}  // namespace conelab::cx
