#include "conelab/ih.hpp"

#include <stdexcept>

namespace conelab::ih {

CompactPtr closed_manifold(long dim, std::vector<long> betti) {
    if (dim < 0) throw std::invalid_argument("closed_manifold: negative dimension");
    if (static_cast<long>(betti.size()) != dim + 1)
        throw std::invalid_argument("closed_manifold: betti length must be dim + 1");
    auto space = std::make_shared<CompactSpace>();
    space->data = CompactSpace::ClosedManifold{dim, std::move(betti)};
    return space;
}

CompactPtr suspension(CompactPtr base) {
    if (!base) throw std::invalid_argument("suspension: missing base");
    if (dim(*base) < 1)
        throw std::invalid_argument(
            "suspension: dim-0 base creates codimension-1 strata (not a pseudomanifold)");
    auto space = std::make_shared<CompactSpace>();
    space->data = CompactSpace::Suspension{std::move(base)};
    return space;
}

CompactPtr product(std::vector<CompactPtr> factors) {
    if (factors.empty()) throw std::invalid_argument("product: needs at least one factor");
    int singular = 0;
    for (const auto& f : factors) {
        if (!f) throw std::invalid_argument("product: missing factor");
        if (is_singular(*f)) ++singular;
    }
    if (singular > 1)
        throw std::invalid_argument(
            "product: more than one singular factor needs a Kuenneth theorem this oracle "
            "does not implement");
    auto space = std::make_shared<CompactSpace>();
    space->data = CompactSpace::Product{std::move(factors)};
    return space;
}

long dim(const CompactSpace& space) {
    return std::visit(
        [](const auto& node) -> long {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, CompactSpace::ClosedManifold>) {
                return node.dim;
            } else if constexpr (std::is_same_v<T, CompactSpace::Suspension>) {
                return dim(*node.base) + 1;
            } else {
                long total = 0;
                for (const auto& f : node.factors) total += dim(*f);
                return total;
            }
        },
        space.data);
}

bool is_singular(const CompactSpace& space) {
    return std::visit(
        [](const auto& node) -> bool {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, CompactSpace::ClosedManifold>) {
                return false;
            } else if constexpr (std::is_same_v<T, CompactSpace::Suspension>) {
                return true;
            } else {
                for (const auto& f : node.factors)
                    if (is_singular(*f)) return true;
                return false;
            }
        },
        space.data);
}

std::vector<long> ih_betti(const CompactSpace& space, const strat::Perversity& p) {
    return std::visit(
        [&](const auto& node) -> std::vector<long> {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, CompactSpace::ClosedManifold>) {
                return node.betti;
            } else if constexpr (std::is_same_v<T, CompactSpace::Suspension>) {
                const long n = dim(*node.base) + 1;  // suspension points have codim n
                if (p.top_index() < n)
                    throw std::invalid_argument("ih_betti: perversity too short for codim " +
                                                std::to_string(n));
                const long cutoff = n - 1 - p.at(n);
                const std::vector<long> base = ih_betti(*node.base, p);
                std::vector<long> out(static_cast<std::size_t>(n) + 1, 0);
                for (long r = 0; r <= n; ++r) {
                    if (r < cutoff)
                        out[static_cast<std::size_t>(r)] = base[static_cast<std::size_t>(r)];
                    else if (r > cutoff)
                        out[static_cast<std::size_t>(r)] = base[static_cast<std::size_t>(r - 1)];
                }
                return out;
            } else {
                std::vector<long> acc{1};
                for (const auto& f : node.factors) {
                    const std::vector<long> fb = ih_betti(*f, p);
                    std::vector<long> next(acc.size() + fb.size() - 1, 0);
                    for (std::size_t i = 0; i < acc.size(); ++i)
                        for (std::size_t j = 0; j < fb.size(); ++j) next[i + j] += acc[i] * fb[j];
                    acc = std::move(next);
                }
                return acc;
            }
        },
        space.data);
}

}  // namespace conelab::ih
