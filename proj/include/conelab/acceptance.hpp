#ifndef CONELAB_ACCEPTANCE_HPP
#define CONELAB_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace conelab::cli {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the acceptance criteria (all twelve when `only` is empty, otherwise
/// the listed ids). Every tolerance is pinned here. The seed feeds the two
/// randomized oracles (criteria 9 and 12).
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only, std::uint64_t seed);

}  // namespace conelab::cli

#endif
