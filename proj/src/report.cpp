#include "conelab/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

namespace conelab::cli {

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void Report::add(std::string id, std::string inputs, std::string expected, std::string got,
                 bool pass, std::string tag) {
    checks.push_back(CheckRecord{std::move(id), std::move(inputs), std::move(expected),
                                 std::move(got), pass, std::move(tag)});
}

std::size_t Report::passed() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass ? 1 : 0;
    return n;
}

std::size_t Report::failed() const { return checks.size() - passed(); }

std::string Report::to_json() const {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["suite"] = suite;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json rec;
        rec["id"] = c.id;
        rec["inputs"] = c.inputs;
        rec["expected"] = c.expected;
        rec["got"] = c.got;
        rec["pass"] = c.pass;
        rec["tag"] = c.tag;
        doc["checks"].push_back(std::move(rec));
    }
    doc["summary"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
    return doc.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string Report::to_csv() const {
    std::string out = "id,inputs,expected,got,pass,tag\n";
    for (const auto& c : checks) {
        out += csv_escape(c.id) + "," + csv_escape(c.inputs) + "," + csv_escape(c.expected) +
               "," + csv_escape(c.got) + "," + (c.pass ? "true" : "false") + "," +
               csv_escape(c.tag) + "\n";
    }
    return out;
}

void Report::print_table(std::ostream& os) const {
    os << "suite: " << suite << "\n";
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id;
        if (!c.inputs.empty()) os << "  (" << c.inputs << ")";
        if (!c.pass) os << "  expected " << c.expected << ", got " << c.got;
        os << "\n";
    }
    os << "  " << passed() << "/" << checks.size() << " checks passed\n";
}

void Report::emit(const std::string& format, const std::string& report_path,
                  std::ostream& os) const {
    std::string rendered;
    if (format == "json")
        rendered = to_json();
    else if (format == "csv")
        rendered = to_csv();
    else if (format != "table")
        throw std::invalid_argument("unknown format: " + format);

    if (format == "table")
        print_table(os);
    else
        os << rendered;

    if (!report_path.empty()) {
        std::ofstream file(report_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write report to " + report_path);
        file << (format == "table" ? to_json() : rendered);
    }
}

}  // namespace conelab::cli
