#ifndef CONELAB_SPACES_HPP
#define CONELAB_SPACES_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "conelab/rational.hpp"

namespace conelab::strat {

/// Inductive stratified-space description: a closed manifold with Betti data,
/// a cone over a compact link with a metric exponent, or a finite product.
/// Exponents live on cone nodes only.
struct SpaceNode;
using SpacePtr = std::shared_ptr<const SpaceNode>;

struct SpaceNode {
    struct Manifold {
        long dim;
        std::vector<long> betti;  // length dim + 1
    };
    struct Cone {
        SpacePtr link;  // compact
        Rational u;     // in (0, 1]
    };
    struct Product {
        std::vector<SpacePtr> factors;
    };
    std::variant<Manifold, Cone, Product> data;
};

SpacePtr make_manifold(long dim, std::vector<long> betti);
SpacePtr make_cone(SpacePtr link, Rational u);
SpacePtr make_product(std::vector<SpacePtr> factors);

long dim(const SpaceNode& node);
bool is_compact(const SpaceNode& node);

struct GoodnessReport {
    bool good = true;
    std::vector<std::string> notes;  // one line per cone node
};

/// Exact exponent test at one cone of codimension k:
///   u <= 1, and 1/u in 2Z + k + (0,1] whenever 1/k <= u < 1.
bool good_exponent(long k, const Rational& u);

/// Recursive goodness check with per-node diagnostics.
GoodnessReport is_good(const SpaceNode& node);

}  // namespace conelab::strat

#endif
