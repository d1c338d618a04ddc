#include "conelab/spaces.hpp"

#include <stdexcept>

namespace conelab::strat {

SpacePtr make_manifold(long d, std::vector<long> betti) {
    if (d < 0) throw std::invalid_argument("manifold: negative dimension");
    if (static_cast<long>(betti.size()) != d + 1)
        throw std::invalid_argument("manifold: betti length must be dim + 1");
    for (long b : betti)
        if (b < 0) throw std::invalid_argument("manifold: negative Betti number");
    auto node = std::make_shared<SpaceNode>();
    node->data = SpaceNode::Manifold{d, std::move(betti)};
    return node;
}

SpacePtr make_cone(SpacePtr link, Rational u) {
    if (!link) throw std::invalid_argument("cone: missing link");
    if (!is_compact(*link)) throw std::invalid_argument("cone: link must be compact");
    if (!(u > Rational(0) && u <= Rational(1)))
        throw std::invalid_argument("cone: exponent must lie in (0,1]");
    auto node = std::make_shared<SpaceNode>();
    node->data = SpaceNode::Cone{std::move(link), std::move(u)};
    return node;
}

SpacePtr make_product(std::vector<SpacePtr> factors) {
    if (factors.empty()) throw std::invalid_argument("product: needs at least one factor");
    for (const auto& f : factors)
        if (!f) throw std::invalid_argument("product: missing factor");
    auto node = std::make_shared<SpaceNode>();
    node->data = SpaceNode::Product{std::move(factors)};
    return node;
}

long dim(const SpaceNode& node) {
    return std::visit(
        [](const auto& n) -> long {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SpaceNode::Manifold>) {
                return n.dim;
            } else if constexpr (std::is_same_v<T, SpaceNode::Cone>) {
                return dim(*n.link) + 1;
            } else {
                long total = 0;
                for (const auto& f : n.factors) total += dim(*f);
                return total;
            }
        },
        node.data);
}

bool is_compact(const SpaceNode& node) {
    return std::visit(
        [](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SpaceNode::Manifold>) {
                return true;  // closed manifolds only in this model
            } else if constexpr (std::is_same_v<T, SpaceNode::Cone>) {
                return false;  // the radial direction is unbounded
            } else {
                for (const auto& f : n.factors)
                    if (!is_compact(*f)) return false;
                return true;
            }
        },
        node.data);
}

bool good_exponent(long k, const Rational& u) {
    if (u > Rational(1)) return false;
    if (u == Rational(1)) return true;
    const Rational inv = Rational(1) / u;
    if (inv > Rational(k)) return true;  // u < 1/k: no congruence required
    const long c = (inv - Rational(k)).ceil();
    return (c % 2 + 2) % 2 == 1;  // 1/u in 2Z + k + (0,1]
}

namespace {

void check_node(const SpaceNode& node, const std::string& path, GoodnessReport& report) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SpaceNode::Cone>) {
                const long k = dim(*n.link) + 1;
                const bool ok = good_exponent(k, n.u);
                report.good = report.good && ok;
                report.notes.push_back(path + ": k = " + std::to_string(k) + ", u = " +
                                       n.u.str() + (ok ? " good" : " NOT good"));
                check_node(*n.link, path + ".link", report);
            } else if constexpr (std::is_same_v<T, SpaceNode::Product>) {
                for (std::size_t i = 0; i < n.factors.size(); ++i)
                    check_node(*n.factors[i], path + "[" + std::to_string(i) + "]", report);
            }
        },
        node.data);
}

}  // namespace

GoodnessReport is_good(const SpaceNode& node) {
    GoodnessReport report;
    check_node(node, "space", report);
    return report;
}

}  // namespace conelab::strat
