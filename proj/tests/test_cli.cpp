#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "conelab/commands.hpp"
#include "conelab/report.hpp"

using namespace conelab::cli;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/conelab-test-" + name;
    std::ofstream file(path);
    file << content;
    return path;
}

const char* kSuspensionDoc = R"({
  "name": "suspension of the 2-sphere",
  "spaces": {
    "S2": {"kind": "manifold", "dim": 2, "betti": [1, 0, 1]}
  },
  "ih_space": {"kind": "suspension", "base": "S2"},
  "critical_points": [
    {"m_plus": 0, "m_minus": 0, "factors": [{"link": "S2", "u": "1/2", "side": "+"}]},
    {"m_plus": 0, "m_minus": 0, "factors": [{"link": "S2", "u": "1/2", "side": "-"}]}
  ],
  "perversities": "all_leq_middle"
})";

}  // namespace

TEST_CASE("config validation") {
    RunConfig config;
    config.basis_size = 4;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.basis_size = 16;
    config.s_list = {2.0, 1.0};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.s_list = {1.0, 2.0};
    CHECK_NOTHROW(config.validate());
}

TEST_CASE("report rendering is deterministic") {
    Report report;
    report.suite = "demo";
    report.add("one", "x=1", "0", "0", true, "tag");
    report.add("two", "y=2", "1", "2", false, "tag");
    CHECK(report.passed() == 1);
    CHECK(report.failed() == 1);
    CHECK_FALSE(report.all_pass());
    const std::string a = report.to_json();
    const std::string b = report.to_json();
    CHECK(a == b);
    CHECK(a.find("\"schema\": 1") != std::string::npos);
    CHECK(a.find("\"total\": 2") != std::string::npos);
    const std::string csv = report.to_csv();
    CHECK(csv.find("one,x=1,0,0,true,tag") != std::string::npos);
    CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("spectra subcommand: growth study") {
    RunConfig config;
    config.basis_size = 40;
    config.kind = "P";
    config.sigma = "1";
    config.u = "1/2";
    config.xi = 1.0;
    config.s_list = {1.0, 10.0, 100.0, 1000.0};
    Report report = cmd_spectra(config);
    CHECK(report.all_pass());
    bool found_slope = false;
    for (const auto& check : report.checks)
        if (check.id.rfind("growth-", 0) == 0) found_slope = true;
    CHECK(found_slope);
}

TEST_CASE("spectra subcommand: length-one zero modes") {
    RunConfig config;
    config.complex1_mode = true;
    config.kappa = "0";
    config.sign = "+";
    config.s_list = {1.0};
    Report report = cmd_spectra(config);
    CHECK(report.all_pass());
}

TEST_CASE("spectra subcommand: even/odd matching") {
    RunConfig config;
    config.evodd_mode = true;
    config.kappa = "1";
    config.u = "1/2";
    config.mu = 1.0;
    config.basis_size = 40;
    config.s_list = {1.0};
    Report report = cmd_spectra(config);
    CHECK(report.all_pass());
}

TEST_CASE("regions subcommand") {
    RunConfig config;
    config.w21_mode = true;
    config.grid = "kappa=-1:1:1/8,u=1/4:3/4:1/4";
    CHECK(cmd_regions(config).all_pass());

    RunConfig excl;
    excl.exclusion_mode = true;
    excl.nmax = 4;
    CHECK(cmd_regions(excl).all_pass());

    RunConfig assoc;
    assoc.association_mode = true;
    assoc.kmax = 6;
    CHECK(cmd_regions(assoc).all_pass());
}

TEST_CASE("morse subcommand on a suspension document") {
    RunConfig config;
    config.input_path = write_temp("susp.json", kSuspensionDoc);
    Report report = cmd_morse(config);
    CHECK(report.all_pass());
    std::remove(config.input_path.c_str());
}

TEST_CASE("morse subcommand: manifold-only document reduces to classical counts") {
    RunConfig config;
    config.input_path = write_temp("torus.json", R"({
      "ih_space": {"kind": "manifold", "dim": 2, "betti": [1, 2, 1]},
      "critical_points": [
        {"m_plus": 2, "m_minus": 0},
        {"m_plus": 1, "m_minus": 1},
        {"m_plus": 1, "m_minus": 1},
        {"m_plus": 0, "m_minus": 2}
      ],
      "perversities": "all_leq_middle"
    })");
    Report report = cmd_morse(config);
    CHECK(report.all_pass());
    bool found_nu = false;
    for (const auto& check : report.checks)
        if (check.id.rfind("nu@", 0) == 0) {
            found_nu = true;
            CHECK(check.got == "(1,2,1)");
        }
    CHECK(found_nu);
    std::remove(config.input_path.c_str());
}

TEST_CASE("spectra subcommand: overlap study") {
    RunConfig config;
    config.overlap_mode = true;
    config.sigma = "1";
    config.u = "1/2";
    config.xi = 1.0;
    config.basis_size = 40;
    config.s_list = {1.0, 100.0, 10000.0};
    CHECK(cmd_spectra(config).all_pass());
}

TEST_CASE("morse subcommand rejects malformed documents") {
    RunConfig config;
    config.input_path = write_temp("bad.json", R"({
      "critical_points": [{"m_plus": 0, "m_minus": 0}],
      "perversities": [[1, 1]]
    })");
    CHECK_THROWS_AS(cmd_morse(config), std::invalid_argument);  // p_2 = 1 is not a perversity
    std::remove(config.input_path.c_str());

    RunConfig missing;
    missing.input_path = "/tmp/conelab-no-such-file.json";
    CHECK_THROWS_AS(cmd_morse(missing), std::invalid_argument);
}

TEST_CASE("verify subcommand subset") {
    RunConfig config;
    config.only = {1, 2};
    Report report = cmd_verify(config);
    CHECK(report.checks.size() == 2);
    CHECK(report.all_pass());
}
