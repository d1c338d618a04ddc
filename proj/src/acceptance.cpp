#include "conelab/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "conelab/complex2.hpp"
#include "conelab/cone.hpp"
#include "conelab/hilbert.hpp"
#include "conelab/ih.hpp"
#include "conelab/morse.hpp"
#include "conelab/operators.hpp"
#include "conelab/perversity.hpp"
#include "conelab/regions.hpp"
#include "conelab/report.hpp"

namespace conelab::cli {

namespace {

using cx::Choice;
using cx::Sign;

std::string fmt(double v) { return format_double(v); }

// ---- criterion 1: exact base spectra ------------------------------------

CriterionResult criterion_exact_spectra() {
    const double grid[] = {0.0, 0.25, 0.5, 1.0, 2.0};
    const double scales[] = {1.0, 2.0};
    const std::size_t K = 20;
    double worst = 0.0;
    for (double exponent : grid) {
        for (double s : scales) {
            SymMatrix p = ops::form_matrix(ops::p_spec_flat(s, 0.5, 0.0, exponent), K);
            SymMatrix q = ops::form_matrix(ops::q_spec_flat(s, 0.5, 0.0, exponent), K);
            for (std::size_t i = 0; i < K; ++i)
                for (std::size_t j = 0; j < K; ++j) {
                    const double want_p =
                        i == j ? (4.0 * static_cast<double>(i) + 1.0 + 2.0 * exponent) * s : 0.0;
                    const double want_q =
                        i == j ? (4.0 * static_cast<double>(i) + 3.0 + 2.0 * exponent) * s : 0.0;
                    worst = std::max(worst, std::abs(p(i, j) - want_p));
                    worst = std::max(worst, std::abs(q(i, j) - want_q));
                }
        }
    }
    const bool pass = worst <= 1e-10;
    return {1, "exact base spectra (xi = eta = 0 forms diagonal)", pass,
            "max deviation " + fmt(worst) + " (tol 1e-10)"};
}

// ---- criterion 2: chi orthonormality ------------------------------------

CriterionResult criterion_orthonormality() {
    const double grid[] = {0.0, 0.25, 0.5, 1.0, 2.0};
    const std::size_t K = 30;
    double worst = 0.0;
    for (double exponent : grid) {
        for (auto parity : {hermite::Parity::Even, hermite::Parity::Odd}) {
            auto params = hermite::gen_hermite_params(1.0, exponent, parity);
            auto basis = hermite::chi_basis(params, exponent, K);
            SymMatrix g = hermite::gram_negative_power(basis, 0.0);
            for (std::size_t i = 0; i < K; ++i)
                for (std::size_t j = 0; j < K; ++j)
                    worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
        }
    }
    const bool pass = worst < 1e-10;
    return {2, "chi basis orthonormality at K = 30", pass,
            "max Gram deviation " + fmt(worst) + " (tol 1e-10)"};
}

// ---- shared grids for criteria 3 and 4 -----------------------------------

const std::vector<Rational>& kappa_grid() {
    static const std::vector<Rational> g = {Rational(-9, 10), Rational(-1, 2), Rational(-1, 4),
                                            Rational(0),      Rational(1, 4),  Rational(1, 2),
                                            Rational(9, 10)};
    return g;
}

const std::vector<Rational>& u_grid() {
    static const std::vector<Rational> g = {Rational(3, 10), Rational(1, 2), Rational(9, 10)};
    return g;
}

// ---- criterion 3: positivity ---------------------------------------------

CriterionResult criterion_positivity() {
    const std::size_t K = 40;
    const double mus[] = {1.0, 3.0};
    const double scales[] = {1.0, 10.0};
    double worst_min = std::numeric_limits<double>::infinity();
    std::size_t rows_checked = 0;
    for (const Rational& kp : kappa_grid()) {
        for (const Rational& u : u_grid()) {
            const auto rows = cx::complex2_parameters(kp, u);
            const double ud = u.to_double();
            for (const auto& row : rows) {
                if (!row.valid) continue;
                for (double mu : mus) {
                    for (double s : scales) {
                        const double xi = mu * mu;
                        std::vector<double> values;
                        switch (row.tag) {
                            case cx::C2Tag::P1:
                            case cx::C2Tag::P2:
                                values = ops::ritz_values(
                                    ops::p_spec_flat(s, ud, xi, row.sigma.to_double()), K);
                                break;
                            case cx::C2Tag::Q1:
                            case cx::C2Tag::Q2:
                                values = ops::ritz_values(
                                    ops::q_spec_flat(s, ud, xi, row.tau.to_double()), K);
                                break;
                            default:
                                values = ops::ritz_values(
                                    ops::w_spec_flat(s, ud, xi, -2.0 * mu * ud,
                                                     row.sigma.to_double(), row.tau.to_double(),
                                                     row.theta.to_double()),
                                    K);
                                break;
                        }
                        ++rows_checked;
                        worst_min = std::min(worst_min, values.front());
                    }
                }
            }
        }
    }
    const bool pass = worst_min > 0.0;
    return {3, "positivity of the perturbed operators on the valid rows", pass,
            std::to_string(rows_checked) + " spectra, smallest Ritz value " + fmt(worst_min)};
}

// ---- criterion 4: even/odd spectral matching ------------------------------

CriterionResult criterion_ev_odd() {
    const std::size_t K = 60;
    const double mus[] = {1.0, 3.0};
    const double scales[] = {1.0, 10.0};

    struct Task {
        Rational kp, u;
        Choice choice;
        double mu, s;
        Sign sign;
    };
    std::vector<Task> tasks;
    for (const Rational& kp : kappa_grid()) {
        for (const Rational& u : u_grid()) {
            for (Choice choice : {Choice::Max, Choice::Min}) {
                const auto t0 = cx::complex2_assignment(kp, u, choice, 0);
                const auto t1 = cx::complex2_assignment(kp, u, choice, 1);
                const auto t2 = cx::complex2_assignment(kp, u, choice, 2);
                if (t0 == cx::C2Tag::Unknown || t1 == cx::C2Tag::Unknown ||
                    t2 == cx::C2Tag::Unknown)
                    continue;
                for (double mu : mus)
                    for (double s : scales)
                        for (Sign sign : {Sign::Plus, Sign::Minus})
                            tasks.push_back({kp, u, choice, mu, s, sign});
            }
        }
    }
    // Pure grid evaluation: run the assemblies on a few workers, reduce in a
    // fixed order afterwards.
    std::vector<double> deviation(tasks.size(), 0.0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            cx::Complex2Spec spec{t.s, t.kp, t.u, t.mu, t.sign};
            deviation[i] = cx::ev_odd_match(spec, t.choice, K, 5).max_rel_deviation;
        }
    };
    {
        const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        for (unsigned w = 0; w + 1 < workers; ++w) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
    }
    double worst = 0.0;
    for (double d : deviation) worst = std::max(worst, d);
    const bool pass = worst < 1e-2;
    return {4, "even/odd spectral matching on non-grey assignments", pass,
            std::to_string(tasks.size()) + " assemblies, worst relative deviation " + fmt(worst) +
                " (tol 1e-2)"};
}

// ---- criterion 5: growth exponent -----------------------------------------

CriterionResult criterion_growth() {
    const std::size_t K = 60;
    const std::vector<double> scales = {1.0, 10.0, 100.0, 1000.0};
    struct Case {
        double sigma, u;
    };
    const Case cases[] = {{1.0, 0.4}, {1.0, 0.7}, {1.5, 0.5}};
    bool pass = true;
    std::ostringstream detail;
    for (const Case& c : cases) {
        for (std::size_t k : {0ul, 2ul}) {
            auto spec = ops::p_spec_flat(1.0, c.u, 1.0, c.sigma);
            const double slope = ops::growth_exponent(spec, k, scales, K);
            const bool ok = slope >= c.u - 0.15 && slope <= c.u + 0.15;
            pass = pass && ok;
            detail << "(sigma=" << c.sigma << ",u=" << c.u << ",k=" << k << "): " << fmt(slope)
                   << (ok ? " " : " OUT ");
        }
    }
    return {5, "perturbation gap grows like s^u (slope within +-0.15)", pass, detail.str()};
}

// ---- criterion 6: overlap limit --------------------------------------------

CriterionResult criterion_overlap() {
    const std::size_t K = 60;
    auto at = [&](double s) {
        return ops::overlap_norm(ops::p_spec_flat(s, 0.5, 1.0, 1.0), 0, K);
    };
    const double at_1 = at(1.0);
    const double at_1e4 = at(1e4);
    const bool pass = at_1e4 >= 0.99 && at_1e4 > at_1;
    return {6, "ground-state overlap approaches 1 as s grows", pass,
            "overlap(1) = " + fmt(at_1) + ", overlap(1e4) = " + fmt(at_1e4) +
                " (needs >= 0.99 and increasing)"};
}

// ---- criterion 7: region equivalences ---------------------------------------

CriterionResult criterion_regions() {
    std::size_t checked = 0, mismatches = 0;
    std::string first_mismatch;
    for (long uj = 1; uj <= 9; ++uj) {
        const Rational u(uj, 10);
        for (long j = -80; j <= 80; ++j) {
            const Rational kp(j, 40);
            // (i) combined region of the W21 parameters vs the kappa interval
            const Rational sg = Rational(1) - kp;
            const Rational ta = kp + u;
            const Rational th(1, 2);
            const bool in_region = (ops::in_K1(sg, ta, th) || ops::in_K2(sg, ta, th)) &&
                                   (ops::in_K1p(sg, ta, th) || ops::in_K2p(sg, ta, th));
            const bool in_interval =
                -(Rational(1) + u) / 2 < kp && kp < (Rational(1) - u) / 2;
            ++checked;
            if (in_region != in_interval) {
                ++mismatches;
                if (first_mismatch.empty())
                    first_mismatch = " first at kappa=" + kp.str() + ", u=" + u.str();
            }
            // (ii) printed table conditions vs operator hypotheses: the call
            // throws on any disagreement.
            try {
                (void)cx::complex2_parameters(kp, u);
            } catch (const std::logic_error& e) {
                ++mismatches;
                if (first_mismatch.empty()) first_mismatch = std::string(" ") + e.what();
            }
            ++checked;
        }
    }
    const bool pass = mismatches == 0;
    return {7, "exact region equivalences on the rational grid", pass,
            std::to_string(checked) + " checks, " + std::to_string(mismatches) + " mismatches" +
                first_mismatch};
}

// ---- criterion 8: exclusion equivalence --------------------------------------

CriterionResult criterion_exclusion() {
    std::size_t checked = 0, failures = 0;
    std::string first;
    std::set<std::pair<long, long>> seen;
    for (long den = 2; den <= 24; ++den) {
        for (long num = 1; num < den; ++num) {
            const Rational u(num, den);
            if (!seen.insert({u.num_long(), u.den_long()}).second) continue;
            for (long n = 0; n <= 8; ++n) {
                const auto rep = cx::exclusion_lemma_check(n, u);
                ++checked;
                if (!rep.equivalent) {
                    ++failures;
                    if (first.empty()) first = " first at n=" + std::to_string(n) + ", u=" + u.str();
                }
            }
        }
    }
    const bool pass = failures == 0;
    return {8, "goodness congruence <=> kappa avoids the excluded set", pass,
            std::to_string(checked) + " (n,u) pairs, " + std::to_string(failures) + " failures" +
                first};
}

// ---- criterion 9: nu cross-check ---------------------------------------------

struct LinkChoice {
    long k;
    std::vector<long> betti;
};

const std::vector<LinkChoice>& link_pool() {
    static const std::vector<LinkChoice> pool = {
        {1, {1}},           // point
        {2, {1, 1}},        // circle
        {3, {1, 0, 1}},     // 2-sphere
        {3, {1, 2, 1}},     // 2-torus
    };
    return pool;
}

std::vector<Rational> good_u_candidates(long k) {
    std::vector<Rational> out;
    for (long den = 1; den <= 12; ++den)
        for (long num = 1; num <= den; ++num) {
            const Rational u(num, den);
            if (strat::good_exponent(k, u)) {
                if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
            }
        }
    return out;
}

CriterionResult criterion_nu_crosscheck(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> factor_count(0, 3);
    std::uniform_int_distribution<int> link_pick(0, static_cast<int>(link_pool().size()) - 1);
    std::uniform_int_distribution<int> euclid(0, 2);
    std::uniform_int_distribution<int> coin(0, 1);

    std::vector<std::vector<Rational>> candidates;
    for (long k = 1; k <= 3; ++k) candidates.push_back(good_u_candidates(k));

    std::size_t failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        morse::RelCriticalPoint point;
        point.m_plus = euclid(rng);
        point.m_minus = euclid(rng);
        const int a = factor_count(rng);
        for (int i = 0; i < a; ++i) {
            const LinkChoice& link = link_pool()[static_cast<std::size_t>(link_pick(rng))];
            const auto& pool = candidates[static_cast<std::size_t>(link.k - 1)];
            std::uniform_int_distribution<std::size_t> upick(0, pool.size() - 1);
            morse::ConeFactor f;
            f.k = link.k;
            f.u = pool[upick(rng)];
            f.minus_side = coin(rng) == 1;
            f.betti_max = link.betti;
            f.betti_min = link.betti;
            point.factors.push_back(std::move(f));
        }
        for (Choice choice : {Choice::Max, Choice::Min}) {
            if (morse::nu_local(point, choice) != morse::nu_kunneth(point, choice)) ++failures;
        }
    }
    const bool pass = failures == 0;
    return {9, "nu by constrained enumeration == Kuenneth assembly (200 random points)", pass,
            std::to_string(failures) + " mismatches"};
}

// ---- criterion 10: perversity consistency --------------------------------------

CriterionResult criterion_perversity(std::uint64_t /*seed*/) {
    std::size_t failures = 0;
    std::string first;
    auto note = [&](const std::string& msg) {
        ++failures;
        if (first.empty()) first = " first: " + msg;
    };
    for (long k = 2; k <= 9; ++k) {
        for (long pk = 0; 2 * pk <= k - 2; ++pk) {
            // A perversity reaching p_k at k with unit steps.
            std::vector<long> values(static_cast<std::size_t>(k - 1));
            for (long j = 2; j <= k; ++j)
                values[static_cast<std::size_t>(j - 2)] = std::max(0l, pk - (k - j));
            const auto p = strat::Perversity::from_values(values);
            const auto q = strat::complement(p);

            // Interval identity: displayed combined condition == associated
            // range intersected with the goodness set.
            const auto combined = strat::good_associated_range(p, k);
            const strat::IntervalSet displayed = {strat::good_associated_range_displayed(p, k)};
            if (!strat::interval_sets_equal(combined, displayed))
                note("interval mismatch at k=" + std::to_string(k) + ", p_k=" + std::to_string(pk));

            // Generic symmetric manifold link of dimension k-1.
            std::vector<long> betti(static_cast<std::size_t>(k));
            for (long r = 0; r < k; ++r)
                betti[static_cast<std::size_t>(r)] = 1 + std::min(r, k - 1 - r);

            auto samples = strat::sample_interval_set(combined, 3);
            if (samples.size() > 5) samples.resize(5);
            if (samples.empty()) note("empty sample set at k=" + std::to_string(k));

            for (bool minus_side : {false, true}) {
                for (long m_minus : {0l, 1l}) {
                    morse::RelCriticalPoint point;
                    point.m_plus = 1;
                    point.m_minus = m_minus;
                    morse::ConeFactor f;
                    f.k = k;
                    f.minus_side = minus_side;
                    f.betti_max = betti;
                    f.betti_min = betti;
                    f.u = Rational(1);
                    point.factors.push_back(f);

                    const auto nu_p = morse::nu_perversity(point, p, morse::PerversityFlavor::PbarMax);
                    const auto nu_q = morse::nu_perversity(point, q, morse::PerversityFlavor::QbarMin);
                    for (const Rational& u : samples) {
                        point.factors[0].u = u;
                        if (nu_p != morse::nu_local(point, Choice::Max))
                            note("max flavor mismatch at k=" + std::to_string(k) +
                                 ", p_k=" + std::to_string(pk) + ", u=" + u.str());
                        if (nu_q != morse::nu_local(point, Choice::Min))
                            note("min flavor mismatch at k=" + std::to_string(k) +
                                 ", q_k=" + std::to_string(q.at(k)) + ", u=" + u.str());
                    }
                }
            }
        }
    }
    const bool pass = failures == 0;
    return {10, "perversity nu == threshold nu on associated good exponents", pass,
            std::to_string(failures) + " failures" + first};
}

// ---- criterion 11: Morse/Euler on suspensions ------------------------------------

CriterionResult criterion_suspensions() {
    struct Case {
        std::string name;
        long dim;                  // of the link
        std::vector<long> betti;   // link Betti numbers
    };
    const Case cases[] = {
        {"susp(S2)", 2, {1, 0, 1}},
        {"susp(T2)", 2, {1, 2, 1}},
        {"susp(T3)", 3, {1, 3, 3, 1}},
    };
    std::size_t failures = 0;
    std::string first;
    auto note = [&](const std::string& msg) {
        ++failures;
        if (first.empty()) first = " first: " + msg;
    };

    for (const Case& c : cases) {
        const long n = c.dim + 1;
        const auto space = ih::suspension(ih::closed_manifold(c.dim, c.betti));

        // All perversities of length n-1 below the lower middle.
        std::vector<strat::Perversity> all;
        std::vector<long> stack(static_cast<std::size_t>(n - 1), 0);
        const auto middle = strat::Perversity::lower_middle(n);
        std::function<void(std::size_t)> enumerate = [&](std::size_t idx) {
            if (idx == stack.size()) {
                auto p = strat::Perversity::from_values(stack);
                if (p.leq(middle)) all.push_back(p);
                return;
            }
            if (idx == 0) {
                stack[0] = 0;
                enumerate(1);
                return;
            }
            for (long v = stack[idx - 1]; v <= stack[idx - 1] + 1; ++v) {
                stack[idx] = v;
                enumerate(idx + 1);
            }
        };
        enumerate(0);

        // Two-vertex suspension data: one plus-side and one minus-side point.
        morse::RelCriticalPoint bottom, top;
        morse::ConeFactor f;
        f.k = n;
        f.u = Rational(1);
        f.betti_max = c.betti;
        f.betti_min = c.betti;
        bottom.factors.push_back(f);
        f.minus_side = true;
        top.factors.push_back(f);

        for (const auto& p : all) {
            const auto q = strat::complement(p);
            const auto beta_p = ih::ih_betti(*space, p);
            const auto beta_q = ih::ih_betti(*space, q);

            auto add = [](std::vector<long> a, const std::vector<long>& b) {
                for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
                return a;
            };
            const auto nu_p = add(morse::nu_perversity(bottom, p, morse::PerversityFlavor::PbarMax),
                                  morse::nu_perversity(top, p, morse::PerversityFlavor::PbarMax));
            const auto nu_q = add(morse::nu_perversity(bottom, q, morse::PerversityFlavor::QbarMin),
                                  morse::nu_perversity(top, q, morse::PerversityFlavor::QbarMin));

            if (!morse::morse_inequalities(beta_p, nu_p).all_ok())
                note(c.name + " inequalities fail for p = " + p.str());
            if (!morse::morse_inequalities(beta_q, nu_q).all_ok())
                note(c.name + " inequalities fail for q = " + q.str());
            for (long r = 0; r <= n; ++r)
                if (beta_q[static_cast<std::size_t>(r)] !=
                    beta_p[static_cast<std::size_t>(n - r)])
                    note(c.name + " duality fails for p = " + p.str());
        }
    }
    const bool pass = failures == 0;
    return {11, "Morse inequalities, Euler counts and duality on suspensions", pass,
            std::to_string(failures) + " failures" + first};
}

// ---- criterion 12: finite Hilbert-complex oracle -----------------------------------

CriterionResult criterion_hilbert(std::uint64_t seed) {
    const auto rep = cx::finite_complex_oracle(seed, 50, 6);
    return {12, "even/odd positive spectra of 50 random finite complexes", rep.match,
            "worst multiset deviation " + fmt(rep.max_deviation) + " (tol 1e-9)"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& only, std::uint64_t seed) {
    const std::set<int> filter(only.begin(), only.end());
    auto wanted = [&](int id) { return filter.empty() || filter.count(id) > 0; };

    std::vector<CriterionResult> results;
    auto run = [&](int id, auto&& fn) {
        if (!wanted(id)) return;
        try {
            results.push_back(fn());
        } catch (const std::exception& e) {
            results.push_back(CriterionResult{id, "criterion " + std::to_string(id), false,
                                              std::string("exception: ") + e.what()});
        }
    };

    run(1, [] { return criterion_exact_spectra(); });
    run(2, [] { return criterion_orthonormality(); });
    run(3, [] { return criterion_positivity(); });
    run(4, [] { return criterion_ev_odd(); });
    run(5, [] { return criterion_growth(); });
    run(6, [] { return criterion_overlap(); });
    run(7, [] { return criterion_regions(); });
    run(8, [] { return criterion_exclusion(); });
    run(9, [&] { return criterion_nu_crosscheck(seed); });
    run(10, [&] { return criterion_perversity(seed); });
    run(11, [] { return criterion_suspensions(); });
    run(12, [&] { return criterion_hilbert(seed); });
    return results;
}

}  // namespace conelab::cli
