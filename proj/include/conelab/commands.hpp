#ifndef CONELAB_COMMANDS_HPP
#define CONELAB_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "conelab/report.hpp"

namespace conelab::cli {

/// Batch-run configuration shared by the subcommands. Rational-valued
/// parameters travel as "num/den" strings so nothing silently rounds into a
/// different table row.
struct RunConfig {
    std::size_t basis_size = 40;             // K, >= 8
    std::vector<double> s_list = {1.0};      // positive ascending
    std::string format = "table";            // table | json | csv
    std::string report_path;
    std::vector<int> only;                   // verify: subset of criteria
    std::uint64_t seed = 20250810;

    // spectra
    std::string kind = "P";                  // P | Q
    std::string sigma = "1";
    std::string tau = "0";
    std::string u = "1/2";
    double xi = 1.0;
    double mu = 1.0;
    std::string kappa = "0";
    std::string sign = "+";
    bool complex1_mode = false;
    bool evodd_mode = false;
    bool overlap_mode = false;

    // regions
    bool w21_mode = false;
    bool exclusion_mode = false;
    bool association_mode = false;
    std::string grid = "kappa=-2:2:1/40,u=1/10:9/10:1/10";
    long nmax = 8;
    long kmax = 9;

    // morse
    std::string input_path;

    void validate() const;
};

/// Exact and Ritz spectra: growth exponents for the perturbed half-line
/// operators, the closed-form length-one spectra against the sign table, the
/// even/odd assembly match, overlap studies.
Report cmd_spectra(const RunConfig& config);

/// Exact rational region work: the coupled-operator region equivalence on a
/// grid, the kappa exclusion equivalence, the perversity association
/// intervals.
Report cmd_regions(const RunConfig& config);

/// Stratified Morse verification driven by a JSON document: space tree,
/// critical points, perversities.
Report cmd_morse(const RunConfig& config);

/// The full acceptance suite (or a subset via `only`).
Report cmd_verify(const RunConfig& config);

}  // namespace conelab::cli

#endif
