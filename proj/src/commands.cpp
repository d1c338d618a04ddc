#include "conelab/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "conelab/acceptance.hpp"
#include "conelab/complex1.hpp"
#include "conelab/complex2.hpp"
#include "conelab/ih.hpp"
#include "conelab/morse.hpp"
#include "conelab/operators.hpp"
#include "conelab/perversity.hpp"
#include "conelab/regions.hpp"
#include "conelab/spaces.hpp"

namespace conelab::cli {

namespace {

using cx::Choice;
using cx::Sign;

Sign parse_sign(const std::string& text) {
    if (text == "+") return Sign::Plus;
    if (text == "-" || text == "−") return Sign::Minus;
    throw std::invalid_argument("sign must be '+' or '-'");
}

std::string join_doubles(const std::vector<double>& v, std::size_t limit = 6) {
    std::string out;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) {
        if (i) out += " ";
        out += format_double(v[i]);
    }
    return out;
}

struct RationalRange {
    std::vector<Rational> values;
};

// "name=lo:hi:step" with rational components.
std::map<std::string, RationalRange> parse_grid(const std::string& text) {
    std::map<std::string, RationalRange> grid;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("grid: expected name=lo:hi:step");
        const std::string name = part.substr(0, eq);
        std::stringstream range(part.substr(eq + 1));
        std::string lo_s, hi_s, step_s;
        if (!std::getline(range, lo_s, ':') || !std::getline(range, hi_s, ':') ||
            !std::getline(range, step_s, ':'))
            throw std::invalid_argument("grid: expected name=lo:hi:step");
        const Rational lo = Rational::parse(lo_s);
        const Rational hi = Rational::parse(hi_s);
        const Rational step = Rational::parse(step_s);
        if (!(step > Rational(0))) throw std::invalid_argument("grid: step must be positive");
        RationalRange r;
        for (Rational x = lo; x <= hi; x += step) r.values.push_back(x);
        grid[name] = std::move(r);
    }
    return grid;
}

// ---- complex-1 sign table ---------------------------------------------------

// Exact eigenvalue numerator v with lambda = 2 v s, as a rational in kappa.
Rational c1_eigenvalue_factor(cx::C1Variant variant, Sign sign, const Rational& kappa, long k) {
    const bool plus = sign == Sign::Plus;
    switch (variant) {
        case cx::C1Variant::A1:
            return plus ? Rational(k) : Rational(k + 1) + kappa * 2;
        case cx::C1Variant::A2:
            return plus ? Rational(k + 1) - kappa * 2 : Rational(k + 2);
        case cx::C1Variant::B1:
            return plus ? Rational(k + 1) : Rational(k) + kappa * 2;
        case cx::C1Variant::B2:
        default:
            return plus ? Rational(k) - kappa * 2 : Rational(k - 1);
    }
}

const char* variant_name(cx::C1Variant v) {
    switch (v) {
        case cx::C1Variant::A1: return "A1";
        case cx::C1Variant::A2: return "A2";
        case cx::C1Variant::B1: return "B1";
        case cx::C1Variant::B2: return "B2";
    }
    return "?";
}

// ---- morse documents ---------------------------------------------------------

strat::SpacePtr parse_space_node(const nlohmann::json& node,
                                 const std::map<std::string, strat::SpacePtr>& named);

strat::SpacePtr resolve_space(const nlohmann::json& ref,
                              const std::map<std::string, strat::SpacePtr>& named) {
    if (ref.is_string()) {
        const auto it = named.find(ref.get<std::string>());
        if (it == named.end())
            throw std::invalid_argument("unknown space reference '" + ref.get<std::string>() +
                                        "'");
        return it->second;
    }
    return parse_space_node(ref, named);
}

strat::SpacePtr parse_space_node(const nlohmann::json& node,
                                 const std::map<std::string, strat::SpacePtr>& named) {
    const std::string kind = node.at("kind").get<std::string>();
    if (kind == "manifold") {
        return strat::make_manifold(node.at("dim").get<long>(),
                                    node.at("betti").get<std::vector<long>>());
    }
    if (kind == "cone") {
        return strat::make_cone(resolve_space(node.at("link"), named),
                                Rational::parse(node.at("u").get<std::string>()));
    }
    if (kind == "product") {
        std::vector<strat::SpacePtr> factors;
        for (const auto& f : node.at("factors")) factors.push_back(resolve_space(f, named));
        return strat::make_product(std::move(factors));
    }
    throw std::invalid_argument("unknown space kind '" + kind + "'");
}

ih::CompactPtr parse_compact_node(const nlohmann::json& node,
                                  const std::map<std::string, strat::SpacePtr>& named);

// Ordinary Betti numbers of a compact manifold-like tree (manifolds and their
// products); cones are rejected here.
std::vector<long> plain_betti(const strat::SpaceNode& space) {
    if (std::holds_alternative<strat::SpaceNode::Cone>(space.data))
        throw std::invalid_argument("expected a closed manifold (or product), found a cone");
    if (const auto* prod = std::get_if<strat::SpaceNode::Product>(&space.data)) {
        std::vector<long> acc{1};
        for (const auto& f : prod->factors) {
            // reuse the convolution in betti_witten through recursion
            const std::vector<long> fb = plain_betti(*f);
            std::vector<long> next(acc.size() + fb.size() - 1, 0);
            for (std::size_t i = 0; i < acc.size(); ++i)
                for (std::size_t j = 0; j < fb.size(); ++j) next[i + j] += acc[i] * fb[j];
            acc = std::move(next);
        }
        return acc;
    }
    return std::get<strat::SpaceNode::Manifold>(space.data).betti;
}

ih::CompactPtr compact_from_space(const strat::SpacePtr& space) {
    const std::vector<long> betti = plain_betti(*space);
    return ih::closed_manifold(strat::dim(*space), betti);
}

ih::CompactPtr parse_compact_node(const nlohmann::json& node,
                                  const std::map<std::string, strat::SpacePtr>& named) {
    if (node.is_string()) return compact_from_space(resolve_space(node, named));
    const std::string kind = node.at("kind").get<std::string>();
    if (kind == "manifold") {
        return ih::closed_manifold(node.at("dim").get<long>(),
                                   node.at("betti").get<std::vector<long>>());
    }
    if (kind == "suspension") return ih::suspension(parse_compact_node(node.at("base"), named));
    if (kind == "product") {
        std::vector<ih::CompactPtr> factors;
        for (const auto& f : node.at("factors")) factors.push_back(parse_compact_node(f, named));
        return ih::product(std::move(factors));
    }
    throw std::invalid_argument("unknown compact-space kind '" + kind + "'");
}

morse::RelCriticalPoint parse_point(const nlohmann::json& node,
                                    const std::map<std::string, strat::SpacePtr>& named) {
    morse::RelCriticalPoint point;
    point.m_plus = node.value("m_plus", 0l);
    point.m_minus = node.value("m_minus", 0l);
    if (node.contains("factors")) {
        for (const auto& f : node.at("factors")) {
            const strat::SpacePtr link = resolve_space(f.at("link"), named);
            morse::ConeFactor factor;
            factor.k = strat::dim(*link) + 1;
            factor.u = Rational::parse(f.at("u").get<std::string>());
            const std::string side = f.at("side").get<std::string>();
            if (side == "+")
                factor.minus_side = false;
            else if (side == "-" || side == "−")
                factor.minus_side = true;
            else
                throw std::invalid_argument("factor side must be '+' or '-'");
            factor.betti_max = plain_betti(*link);
            factor.betti_min = factor.betti_max;
            point.factors.push_back(std::move(factor));
        }
    }
    return point;
}

std::vector<strat::Perversity> perversities_leq_middle(long n) {
    std::vector<strat::Perversity> all;
    const auto middle = strat::Perversity::lower_middle(n);
    std::vector<long> values(static_cast<std::size_t>(n - 1), 0);
    std::function<void(std::size_t)> walk = [&](std::size_t idx) {
        if (idx == values.size()) {
            auto p = strat::Perversity::from_values(values);
            if (p.leq(middle)) all.push_back(p);
            return;
        }
        if (idx == 0) {
            values[0] = 0;
            walk(1);
            return;
        }
        for (long v = values[idx - 1]; v <= values[idx - 1] + 1; ++v) {
            values[idx] = v;
            walk(idx + 1);
        }
    };
    walk(0);
    return all;
}

std::string vec_str(const std::vector<long>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

}  // namespace

void RunConfig::validate() const {
    if (basis_size < 8) throw std::invalid_argument("basis size K must be at least 8");
    for (std::size_t i = 0; i < s_list.size(); ++i) {
        if (!(s_list[i] > 0.0)) throw std::invalid_argument("s values must be positive");
        if (i > 0 && !(s_list[i] > s_list[i - 1]))
            throw std::invalid_argument("s values must be ascending");
    }
}

Report cmd_spectra(const RunConfig& config) {
    config.validate();
    Report report;
    report.suite = "spectra";
    const std::size_t K = config.basis_size;

    if (config.complex1_mode) {
        const Rational kappa = Rational::parse(config.kappa);
        const Sign sign = parse_sign(config.sign);
        const double s = config.s_list.front();
        const auto table = cx::complex1_operator_table(kappa);
        const auto rows = {std::pair{cx::C1Variant::A1, table.a1},
                           std::pair{cx::C1Variant::A2, table.a2},
                           std::pair{cx::C1Variant::B1, table.b1},
                           std::pair{cx::C1Variant::B2, table.b2}};
        for (const auto& [variant, row] : rows) {
            if (!row.defined) {
                report.add(std::string("defined-") + variant_name(variant),
                           "kappa=" + kappa.str(), "undefined", "undefined", true,
                           "realization-table");
                continue;
            }
            const auto spectrum = cx::complex1_spectrum(kappa, sign, variant, s, 8);
            bool ok = true;
            for (long k = 0; k < 8; ++k) {
                const Rational factor = c1_eigenvalue_factor(
                    variant, sign, kappa, variant == cx::C1Variant::A1 ||
                                                  variant == cx::C1Variant::A2
                                              ? 2 * k
                                              : 2 * k + 1);
                const double expected = 2.0 * factor.to_double() * s;
                ok = ok && std::abs(spectrum[static_cast<std::size_t>(k)] - expected) <=
                               1e-12 * (1.0 + std::abs(expected));
                // zero modes must be exact zeros of the rational factor
                if (factor == Rational(0))
                    ok = ok && std::abs(spectrum[static_cast<std::size_t>(k)]) <= 1e-12 * s;
            }
            report.add(std::string("spectrum-") + variant_name(variant),
                       "kappa=" + kappa.str() + ", sign" + config.sign,
                       "closed form matches sign pattern", ok ? "ok" : "mismatch", ok,
                       "sign-table");
            // report the lowest values for the human table
            report.add(std::string("values-") + variant_name(variant), "first values",
                       join_doubles(spectrum, 4), join_doubles(spectrum, 4), true, "info");
        }
        const auto amax = cx::complex1_assignment(kappa, Choice::Max);
        const auto amin = cx::complex1_assignment(kappa, Choice::Min);
        report.add("assignment", "kappa=" + kappa.str(),
                   std::string("max=(") + variant_name(amax.degree0) + "," +
                       variant_name(amax.degree1) + "), min=(" + variant_name(amin.degree0) +
                       "," + variant_name(amin.degree1) + ")",
                   "recorded", true, "assignment-table");
        return report;
    }

    if (config.evodd_mode) {
        const Rational kappa = Rational::parse(config.kappa);
        const Rational u = Rational::parse(config.u);
        const Sign sign = parse_sign(config.sign);
        const double s = config.s_list.front();
        for (Choice choice : {Choice::Max, Choice::Min}) {
            const char* label = choice == Choice::Max ? "max" : "min";
            try {
                cx::Complex2Spec spec{s, kappa, u, config.mu, sign};
                const auto rep = cx::ev_odd_match(spec, choice, K, 5);
                const bool ok = rep.max_rel_deviation < 1e-2;
                report.add(std::string("evodd-") + label,
                           "kappa=" + kappa.str() + ", u=" + u.str() +
                               ", mu=" + format_double(config.mu) + ", s=" + format_double(s),
                           "relative deviation < 1e-2",
                           format_double(rep.max_rel_deviation) + "; even " +
                               join_doubles(rep.even, 5) + " | odd " + join_doubles(rep.odd, 5),
                           ok, "even-odd-matching");
            } catch (const std::domain_error& e) {
                report.add(std::string("evodd-") + label, "kappa=" + kappa.str(),
                           "assembly defined", std::string("skipped: ") + e.what(), true,
                           "grey-range");
            }
        }
        return report;
    }

    if (config.overlap_mode) {
        const double sigma = Rational::parse(config.sigma).to_double();
        const double u = Rational::parse(config.u).to_double();
        double previous = -1.0;
        bool increasing = true;
        std::string values;
        for (double s : config.s_list) {
            const double overlap =
                ops::overlap_norm(ops::p_spec_flat(s, u, config.xi, sigma), 0, K);
            if (!values.empty()) values += " ";
            values += format_double(overlap);
            increasing = increasing && overlap > previous;
            previous = overlap;
        }
        report.add("overlap-monotone", "sigma=" + config.sigma + ", u=" + config.u,
                   "overlap increases with s", values, increasing, "overlap-limit");
        return report;
    }

    // default: exact-vs-Ritz tables and the growth exponent
    const double u = Rational::parse(config.u).to_double();
    const bool is_p = config.kind == "P";
    if (!is_p && config.kind != "Q")
        throw std::invalid_argument("kind must be P or Q for growth studies");
    const double exponent =
        Rational::parse(is_p ? config.sigma : config.tau).to_double();
    auto spec = is_p ? ops::p_spec_flat(1.0, u, config.xi, exponent)
                     : ops::q_spec_flat(1.0, u, config.xi, exponent);
    for (double s : config.s_list) {
        auto at_s = spec;
        at_s.s = s;
        const auto values = ops::ritz_values(at_s, K);
        std::string row;
        for (std::size_t i = 0; i < 4 && i < values.size(); ++i) {
            const std::size_t k = is_p ? 2 * i : 2 * i + 1;
            const double base =
                (2.0 * static_cast<double>(k) + 1.0 + 2.0 * exponent) * s;
            if (i) row += "  ";
            row += "k=" + std::to_string(k) + ": " + format_double(values[i]) + " (base " +
                   format_double(base) + ")";
        }
        report.add("ritz-vs-base@s=" + format_double(s), "K=" + std::to_string(K), row, row,
                   true, "info");
    }
    if (config.s_list.size() >= 2 && config.xi > 0.0) {
        for (std::size_t k : {0ul, 2ul}) {
            const std::size_t graded_k = is_p ? k : k + 1;
            const double slope = ops::growth_exponent(spec, graded_k, config.s_list, K);
            const bool ok = slope >= u - 0.15 && slope <= u + 0.15;
            report.add("growth-k" + std::to_string(graded_k),
                       config.kind + ", exponent=" + (is_p ? config.sigma : config.tau) +
                           ", u=" + config.u + ", xi=" + format_double(config.xi),
                       "slope in [" + format_double(u - 0.15) + ", " + format_double(u + 0.15) +
                           "]",
                       format_double(slope), ok, "gap-growth");
        }
    }
    return report;
}

Report cmd_regions(const RunConfig& config) {
    config.validate();
    Report report;
    report.suite = "regions";

    if (config.w21_mode || (!config.exclusion_mode && !config.association_mode)) {
        const auto grid = parse_grid(config.grid);
        const auto kappa_it = grid.find("kappa");
        const auto u_it = grid.find("u");
        if (kappa_it == grid.end() || u_it == grid.end())
            throw std::invalid_argument("regions --w21 needs kappa and u ranges in --grid");
        for (const Rational& u : u_it->second.values) {
            if (!(u > Rational(0) && u < Rational(1)))
                throw std::invalid_argument("u grid values must lie in (0,1)");
            std::size_t mismatches = 0;
            std::string first;
            for (const Rational& kp : kappa_it->second.values) {
                const Rational sg = Rational(1) - kp;
                const Rational ta = kp + u;
                const Rational th(1, 2);
                const bool region = (ops::in_K1(sg, ta, th) || ops::in_K2(sg, ta, th)) &&
                                    (ops::in_K1p(sg, ta, th) || ops::in_K2p(sg, ta, th));
                const bool interval =
                    -(Rational(1) + u) / 2 < kp && kp < (Rational(1) - u) / 2;
                if (region != interval) {
                    ++mismatches;
                    if (first.empty()) first = "kappa=" + kp.str();
                }
                try {
                    (void)cx::complex2_parameters(kp, u);
                } catch (const std::logic_error& e) {
                    ++mismatches;
                    if (first.empty()) first = e.what();
                }
            }
            report.add("w21-equivalence@u=" + u.str(),
                       std::to_string(kappa_it->second.values.size()) + " kappa values",
                       "0 mismatches", std::to_string(mismatches) + (first.empty() ? "" : " (" + first + ")"),
                       mismatches == 0, "combined-region");
        }
        return report;
    }

    if (config.exclusion_mode) {
        for (long n = 0; n <= config.nmax; ++n) {
            std::size_t checked = 0, failures = 0;
            std::string first;
            for (long den = 2; den <= 24; ++den)
                for (long num = 1; num < den; ++num) {
                    const Rational u(num, den);
                    if (u.den_long() != den) continue;  // skip duplicates
                    const auto rep = cx::exclusion_lemma_check(n, u);
                    ++checked;
                    if (!rep.equivalent) {
                        ++failures;
                        if (first.empty()) first = "u=" + u.str();
                    }
                }
            report.add("exclusion@n=" + std::to_string(n), std::to_string(checked) + " exponents",
                       "equivalence everywhere",
                       std::to_string(failures) + (first.empty() ? "" : " (" + first + ")"),
                       failures == 0, "exclusion-window");
        }
        return report;
    }

    // association intervals
    for (long k = 2; k <= config.kmax; ++k) {
        std::size_t failures = 0;
        for (long pk = 0; 2 * pk <= k - 2; ++pk) {
            std::vector<long> values(static_cast<std::size_t>(k - 1));
            for (long j = 2; j <= k; ++j)
                values[static_cast<std::size_t>(j - 2)] = std::max(0l, pk - (k - j));
            const auto p = strat::Perversity::from_values(values);
            const auto combined = strat::good_associated_range(p, k);
            const strat::IntervalSet displayed = {strat::good_associated_range_displayed(p, k)};
            if (!strat::interval_sets_equal(combined, displayed)) ++failures;
        }
        report.add("association@k=" + std::to_string(k), "all admissible p_k",
                   "combined condition equals association + goodness",
                   failures == 0 ? "ok" : std::to_string(failures) + " failures", failures == 0,
                   "association-interval");
    }
    return report;
}

Report cmd_morse(const RunConfig& config) {
    config.validate();
    Report report;
    report.suite = "morse";
    if (config.input_path.empty())
        throw std::invalid_argument("morse needs an input document (positional argument)");
    std::ifstream file(config.input_path);
    if (!file) throw std::invalid_argument("cannot open " + config.input_path);
    nlohmann::json doc;
    try {
        file >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("parse error in " + config.input_path + ": " + e.what());
    }

    std::map<std::string, strat::SpacePtr> named;
    if (doc.contains("spaces"))
        for (const auto& [name, node] : doc.at("spaces").items())
            named[name] = parse_space_node(node, named);

    std::vector<morse::RelCriticalPoint> points;
    for (const auto& node : doc.at("critical_points")) points.push_back(parse_point(node, named));
    if (points.empty()) throw std::invalid_argument("no critical points in document");

    const long n = points.front().ambient_dim();
    for (const auto& point : points)
        if (point.ambient_dim() != n)
            throw std::invalid_argument("critical points live on different dimensions");

    // goodness of the exponents carried by the points
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t f = 0; f < points[i].factors.size(); ++f) {
            const auto& factor = points[i].factors[f];
            const bool ok = strat::good_exponent(factor.k, factor.u);
            report.add("goodness-p" + std::to_string(i) + "f" + std::to_string(f),
                       "k=" + std::to_string(factor.k) + ", u=" + factor.u.str(),
                       "exponent is good", ok ? "good" : "NOT good", ok, "goodness");
        }

    ih::CompactPtr ih_space;
    if (doc.contains("ih_space")) ih_space = parse_compact_node(doc.at("ih_space"), named);

    std::vector<strat::Perversity> perversities;
    if (!doc.contains("perversities") || doc.at("perversities") == "all_leq_middle") {
        perversities = perversities_leq_middle(n);
    } else {
        for (const auto& values : doc.at("perversities"))
            perversities.push_back(strat::Perversity::from_values(values.get<std::vector<long>>()));
    }

    for (const auto& p : perversities) {
        std::vector<long> nu(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& point : points) {
            const auto local = morse::nu_perversity(point, p, morse::PerversityFlavor::PbarMax);
            for (std::size_t i = 0; i < nu.size(); ++i) nu[i] += local[i];
        }
        report.add("nu@p=" + p.str(), "perversity " + p.str(), "nu table", vec_str(nu), true,
                   "info");

        // the threshold route agrees whenever the document's exponents are
        // associated with this perversity; otherwise the comparison is not
        // meaningful and is skipped
        bool applicable = true;
        for (const auto& point : points)
            for (const auto& f : point.factors) {
                const auto range = strat::good_associated_range(p, f.k);
                bool inside = false;
                for (const auto& iv : range) inside = inside || iv.contains(f.u);
                applicable = applicable && inside;
            }
        if (applicable) {
            bool consistent = true;
            for (const auto& point : points)
                if (morse::nu_perversity(point, p, morse::PerversityFlavor::PbarMax) !=
                    morse::nu_local(point, Choice::Max))
                    consistent = false;
            report.add("nu-consistency@p=" + p.str(), "perversity vs threshold route",
                       "equal", consistent ? "equal" : "MISMATCH", consistent, "nu-crosscheck");
        } else {
            report.add("nu-consistency@p=" + p.str(), "perversity vs threshold route",
                       "document exponents not associated with this perversity", "skipped",
                       true, "nu-crosscheck");
        }

        if (ih_space) {
            const auto beta = ih::ih_betti(*ih_space, p);
            const auto morse_report = morse::morse_inequalities(beta, nu);
            report.add("inequalities@p=" + p.str(), "beta " + vec_str(beta),
                       "partial alternating sums bounded, Euler equal",
                       morse_report.all_ok()
                           ? "ok (chi = " + std::to_string(morse_report.chi_nu) + ")"
                           : "VIOLATED",
                       morse_report.all_ok(), "morse-inequalities");
        }
    }
    return report;
}

Report cmd_verify(const RunConfig& config) {
    config.validate();
    Report report;
    report.suite = "verify";
    for (const auto& result : run_acceptance(config.only, config.seed)) {
        report.add("criterion-" + std::to_string(result.id), result.name, "pass",
                   result.detail, result.pass, "acceptance");
    }
    return report;
}

}  // namespace conelab::cli
