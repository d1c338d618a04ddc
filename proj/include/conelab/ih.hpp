#ifndef CONELAB_IH_HPP
#define CONELAB_IH_HPP

#include <memory>
#include <variant>
#include <vector>

#include "conelab/perversity.hpp"

namespace conelab::ih {

/// External-mathematics oracle: intersection-homology Betti numbers of
/// compact pseudomanifolds built from closed manifolds by suspensions and
/// products, via the standard cone-truncation formula. It is implemented
/// independently of every other module and is used only on the acceptance
/// side of cross-checks, never inside the nu computations, so a defect here
/// cannot contaminate the internal ones.
struct CompactSpace;
using CompactPtr = std::shared_ptr<const CompactSpace>;

struct CompactSpace {
    struct ClosedManifold {
        long dim;
        std::vector<long> betti;
    };
    struct Suspension {
        CompactPtr base;  // dim >= 1 (a dim-0 base would create codim-1 strata)
    };
    struct Product {
        std::vector<CompactPtr> factors;  // at most one singular factor
    };
    std::variant<ClosedManifold, Suspension, Product> data;
};

CompactPtr closed_manifold(long dim, std::vector<long> betti);
CompactPtr suspension(CompactPtr base);
CompactPtr product(std::vector<CompactPtr> factors);

long dim(const CompactSpace& space);
bool is_singular(const CompactSpace& space);

/// Betti numbers of I^p H_*(space). For a suspension of dimension n the cone
/// formula gives I^p H_r = I^p H_r(base) below the cutoff n-1-p_n, zero at
/// it, and I^p H_{r-1}(base) above it. Products use the Kuenneth convolution,
/// valid because at most one factor is singular. Throws on codimension-1
/// strata (suspension over a 0-dimensional base).
std::vector<long> ih_betti(const CompactSpace& space, const strat::Perversity& p);

}  // namespace conelab::ih

#endif
