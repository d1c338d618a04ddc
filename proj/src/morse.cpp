#include "conelab/morse.hpp"

#include <stdexcept>

#include "conelab/cone.hpp"

namespace conelab::morse {

namespace {

std::vector<long> convolve(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

const std::vector<long>& factor_betti(const ConeFactor& f, Choice choice) {
    return choice == Choice::Max ? f.betti_max : f.betti_min;
}

// The one place the strict/non-strict threshold pattern lives:
//   max: I_+ keeps r <  (k-1)/2 + 1/(2u), I_- keeps r >= (k-1)/2 + 1/(2u)
//   min: I_+ keeps r <= (k-1)/2 - 1/(2u), I_- keeps r >  (k-1)/2 - 1/(2u).
bool factor_keeps(const ConeFactor& f, long r, Choice choice) {
    const Rational threshold = Rational(f.k - 1) / 2 +
                               (choice == Choice::Max ? Rational(1) : Rational(-1)) / (f.u * 2);
    if (choice == Choice::Max)
        return f.minus_side ? Rational(r) >= threshold : Rational(r) < threshold;
    return f.minus_side ? Rational(r) > threshold : Rational(r) <= threshold;
}

void check_point(const RelCriticalPoint& point) {
    if (point.m_plus < 0 || point.m_minus < 0)
        throw std::invalid_argument("critical point: negative Euclidean rank");
    for (const ConeFactor& f : point.factors) {
        if (f.k < 1) throw std::invalid_argument("cone factor: k must be >= 1");
        if (!(f.u > Rational(0) && f.u <= Rational(1)))
            throw std::invalid_argument("cone factor: u must lie in (0,1]");
    }
}

}  // namespace

long RelCriticalPoint::ambient_dim() const {
    long n = m_plus + m_minus;
    for (const ConeFactor& f : factors) n += f.k;
    return n;
}

std::vector<long> nu_local(const RelCriticalPoint& point, Choice choice) {
    check_point(point);
    const long n = point.ambient_dim();
    std::vector<long> nu(static_cast<std::size_t>(n) + 1, 0);

    // Direct enumeration of the admissible tuples (r_1..r_a).
    struct State {
        std::size_t index;
        long degree;
        long count;
    };
    std::vector<State> stack{{0, point.m_minus, 1}};
    while (!stack.empty()) {
        State st = stack.back();
        stack.pop_back();
        if (st.index == point.factors.size()) {
            nu[static_cast<std::size_t>(st.degree)] += st.count;
            continue;
        }
        const ConeFactor& f = point.factors[st.index];
        const std::vector<long>& beta = factor_betti(f, choice);
        if (static_cast<long>(beta.size()) != f.k)
            throw std::invalid_argument("cone factor: betti length must be k");
        for (long r = 0; r < f.k; ++r) {
            if (!factor_keeps(f, r, choice) || beta[static_cast<std::size_t>(r)] == 0) continue;
            stack.push_back({st.index + 1, st.degree + r + (f.minus_side ? 1 : 0),
                             st.count * beta[static_cast<std::size_t>(r)]});
        }
    }
    return nu;
}

std::vector<long> nu_kunneth(const RelCriticalPoint& point, Choice choice) {
    check_point(point);
    // Euclidean part: degree 0 for the plus block, degree m_- for the minus.
    std::vector<long> acc(static_cast<std::size_t>(point.m_minus) + 1, 0);
    acc[static_cast<std::size_t>(point.m_minus)] = 1;
    for (const ConeFactor& f : point.factors) {
        // The threshold filter agrees with the cone harmonic-dimension table;
        // cross-checked here by using that table as the factor vector.
        const Sign sign = f.minus_side ? Sign::Minus : Sign::Plus;
        std::vector<long> cone_dims =
            cx::cone_harmonic_dims(factor_betti(f, choice), f.k, f.u, sign, choice);
        acc = convolve(acc, cone_dims);
    }
    acc.resize(static_cast<std::size_t>(point.ambient_dim()) + 1, 0);
    return acc;
}

std::vector<long> nu_perversity(const RelCriticalPoint& point, const strat::Perversity& p,
                                PerversityFlavor flavor) {
    check_point(point);
    const long n = point.ambient_dim();
    std::vector<long> nu(static_cast<std::size_t>(n) + 1, 0);

    const ConeFactor* plus = nullptr;
    const ConeFactor* minus = nullptr;
    long k_total = 0;
    for (const ConeFactor& f : point.factors) {
        k_total += f.k;
        const ConeFactor*& slot = f.minus_side ? minus : plus;
        if (slot)
            throw std::invalid_argument(
                "nu_perversity: at most one cone factor per side is meaningful here");
        slot = &f;
    }
    auto link_betti = [](const ConeFactor& f) -> const std::vector<long>& {
        if (f.betti_max != f.betti_min)
            throw std::invalid_argument("nu_perversity: link must be a closed manifold");
        return f.betti_max;
    };

    if (!plus && !minus) {
        nu[static_cast<std::size_t>(point.m_minus)] = 1;
        return nu;
    }

    if (plus && minus) {
        const long k = k_total;
        if (2 * p.at(k) != k - 2)
            throw std::invalid_argument(
                "nu_perversity: a two-sided cone model exists only when 2 p_k = k - 2");
        const auto& bp = link_betti(*plus);
        const auto& bm = link_betti(*minus);
        const Rational half_kp = Rational(plus->k) / 2;
        const Rational half_km = Rational(minus->k) / 2;
        for (long rp = 0; rp < plus->k; ++rp) {
            for (long rm = 0; rm < minus->k; ++rm) {
                bool keep;
                if (flavor == PerversityFlavor::PbarMax)
                    keep = Rational(rp) < half_kp && Rational(rm) >= half_km;
                else
                    keep = Rational(rp) <= half_kp - 1 && Rational(rm) > half_km - 1;
                if (!keep) continue;
                const long r = point.m_minus + rp + rm + 1;
                nu[static_cast<std::size_t>(r)] +=
                    bp[static_cast<std::size_t>(rp)] * bm[static_cast<std::size_t>(rm)];
            }
        }
        return nu;
    }

    const long k = k_total;
    const long pk = p.at(k);
    if (plus) {
        const auto& beta = link_betti(*plus);
        for (long rp = 0; rp < plus->k; ++rp) {
            if (rp > k - 2 - pk) continue;
            nu[static_cast<std::size_t>(point.m_minus + rp)] += beta[static_cast<std::size_t>(rp)];
        }
    } else {
        const auto& beta = link_betti(*minus);
        for (long rm = 0; rm < minus->k; ++rm) {
            if (rm < k - 1 - pk) continue;
            nu[static_cast<std::size_t>(point.m_minus + rm + 1)] +=
                beta[static_cast<std::size_t>(rm)];
        }
    }
    return nu;
}

std::vector<long> nu_total(const std::vector<RelCriticalPoint>& points, Choice choice) {
    std::vector<long> total;
    for (const RelCriticalPoint& point : points) {
        std::vector<long> nu = nu_local(point, choice);
        if (total.empty()) total.assign(nu.size(), 0);
        if (nu.size() != total.size())
            throw std::invalid_argument("nu_total: points live on different dimensions");
        for (std::size_t i = 0; i < nu.size(); ++i) total[i] += nu[i];
    }
    return total;
}

std::vector<long> betti_witten(const strat::SpaceNode& space, Sign sign, Choice choice) {
    return std::visit(
        [&](const auto& node) -> std::vector<long> {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, strat::SpaceNode::Manifold>) {
                return node.betti;
            } else if constexpr (std::is_same_v<T, strat::SpaceNode::Cone>) {
                std::vector<long> link = betti_witten(*node.link, sign, choice);
                return cx::cone_harmonic_dims(link, strat::dim(*node.link) + 1, node.u, sign,
                                              choice);
            } else {
                std::vector<long> acc{1};
                for (const auto& f : node.factors)
                    acc = convolve(acc, betti_witten(*f, sign, choice));
                return acc;
            }
        },
        space.data);
}

bool MorseReport::all_ok() const {
    if (!euler_ok) return false;
    for (bool ok : inequality_ok)
        if (!ok) return false;
    return true;
}

MorseReport morse_inequalities(const std::vector<long>& beta, const std::vector<long>& nu) {
    if (beta.size() != nu.size())
        throw std::invalid_argument("morse_inequalities: length mismatch");
    if (beta.empty()) throw std::invalid_argument("morse_inequalities: empty input");
    MorseReport report;
    report.beta = beta;
    report.nu = nu;
    const std::size_t n = beta.size() - 1;
    for (std::size_t k = 0; k < n; ++k) {
        long lhs = 0, rhs = 0;
        for (std::size_t r = 0; r <= k; ++r) {
            const long sign = ((k - r) % 2 == 0) ? 1 : -1;
            lhs += sign * beta[r];
            rhs += sign * nu[r];
        }
        report.inequality_ok.push_back(lhs <= rhs);
    }
    long chi_b = 0, chi_n = 0;
    for (std::size_t r = 0; r < beta.size(); ++r) {
        const long sign = (r % 2 == 0) ? 1 : -1;
        chi_b += sign * beta[r];
        chi_n += sign * nu[r];
    }
    report.chi_beta = chi_b;
    report.chi_nu = chi_n;
    report.euler_ok = (chi_b == chi_n);
    return report;
}

bool euler_invariance(const std::vector<RelCriticalPoint>& f1,
                      const std::vector<RelCriticalPoint>& f2, Choice choice) {
    auto signed_sum = [&](const std::vector<RelCriticalPoint>& points) {
        long acc = 0;
        for (const RelCriticalPoint& point : points) {
            const std::vector<long> nu = nu_local(point, choice);
            for (std::size_t r = 0; r < nu.size(); ++r) acc += (r % 2 == 0 ? 1 : -1) * nu[r];
        }
        return acc;
    };
    return signed_sum(f1) == signed_sum(f2);
}

}  // namespace conelab::morse
