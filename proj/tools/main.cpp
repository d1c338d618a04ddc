#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "conelab/commands.hpp"

namespace {

std::vector<double> parse_s_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(std::stod(part));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conelab: half-line model spectra, exact region predicates and "
                 "stratified Morse inequalities"};
    app.require_subcommand(1);

    conelab::cli::RunConfig config;
    std::string s_text;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-K,--basis-size", config.basis_size, "Galerkin truncation (>= 8)");
        cmd->add_option("-s,--s", s_text, "comma-separated oscillator scales");
        cmd->add_option("--format", config.format, "table | json | csv");
        cmd->add_option("--report", config.report_path, "write a JSON/CSV report here");
        cmd->add_option("--seed", config.seed, "seed for the randomized oracles");
    };

    CLI::App* spectra = app.add_subcommand("spectra", "exact and Ritz spectra studies");
    add_common(spectra);
    spectra->add_option("--kind", config.kind, "P or Q (growth studies)");
    spectra->add_option("--sigma", config.sigma, "even-family exponent, as num/den");
    spectra->add_option("--tau", config.tau, "odd-family exponent, as num/den");
    spectra->add_option("--u", config.u, "perturbation exponent in (0,1), as num/den");
    spectra->add_option("--xi", config.xi, "strength of the rho^{-2u} perturbation");
    spectra->add_option("--mu", config.mu, "coupling of the length-two complex");
    spectra->add_option("--kappa", config.kappa, "cone exponent kappa, as num/den");
    spectra->add_option("--sign", config.sign, "deformation sign + or -");
    spectra->add_flag("--complex1", config.complex1_mode,
                      "closed-form length-one spectra and sign patterns");
    spectra->add_flag("--evodd", config.evodd_mode, "even/odd assembly matching");
    spectra->add_flag("--overlap", config.overlap_mode, "ground-state overlap across scales");

    CLI::App* regions = app.add_subcommand("regions", "exact rational region equivalences");
    add_common(regions);
    regions->add_flag("--w21", config.w21_mode, "combined-region <=> kappa interval");
    regions->add_flag("--exclusion", config.exclusion_mode,
                      "goodness congruence <=> excluded-window avoidance");
    regions->add_flag("--association", config.association_mode,
                      "perversity association interval identities");
    regions->add_option("--grid", config.grid, "ranges, e.g. kappa=-2:2:1/40,u=1/10:9/10:1/10");
    regions->add_option("--nmax", config.nmax, "largest dimension for --exclusion");
    regions->add_option("--kmax", config.kmax, "largest codimension for --association");

    CLI::App* morse = app.add_subcommand("morse", "stratified Morse verification on a document");
    add_common(morse);
    morse->add_option("input", config.input_path, "JSON document (space, points, perversities)")
        ->required();

    CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
    add_common(verify);
    std::vector<std::string> only_tokens;
    verify->add_option("--only", only_tokens,
                       "criteria to run: ids or suite names "
                       "(spectra, regions, morse, oracle); default all");

    CLI11_PARSE(app, argc, argv);
    if (!s_text.empty()) config.s_list = parse_s_list(s_text);
    // growth and overlap studies default to the larger truncation
    if (spectra->parsed() && spectra->count("-K") == 0 &&
        (config.overlap_mode || config.s_list.size() >= 2))
        config.basis_size = 60;
    for (const std::string& token : only_tokens) {
        if (token == "spectra") {
            for (int id : {1, 2, 3, 4, 5, 6}) config.only.push_back(id);
        } else if (token == "regions") {
            for (int id : {7, 8}) config.only.push_back(id);
        } else if (token == "morse") {
            for (int id : {9, 10, 11}) config.only.push_back(id);
        } else if (token == "oracle") {
            config.only.push_back(12);
        } else {
            try {
                config.only.push_back(std::stoi(token));
            } catch (const std::exception&) {
                std::cerr << "error: unknown criterion '" << token << "'\n";
                return 2;
            }
        }
    }

    try {
        conelab::cli::Report report;
        if (spectra->parsed())
            report = conelab::cli::cmd_spectra(config);
        else if (regions->parsed())
            report = conelab::cli::cmd_regions(config);
        else if (morse->parsed())
            report = conelab::cli::cmd_morse(config);
        else
            report = conelab::cli::cmd_verify(config);
        report.emit(config.format, config.report_path, std::cout);
        return report.all_pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
