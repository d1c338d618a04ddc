#ifndef CONELAB_REPORT_HPP
#define CONELAB_REPORT_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace conelab::cli {

/// Fixed 17-significant-digit formatting, so identical runs produce
/// byte-identical reports.
std::string format_double(double value);

struct CheckRecord {
    std::string id;
    std::string inputs;
    std::string expected;
    std::string got;
    bool pass = false;
    std::string tag;  // which rule/table the check exercises
};

struct Report {
    std::string suite;
    std::vector<CheckRecord> checks;

    void add(std::string id, std::string inputs, std::string expected, std::string got,
             bool pass, std::string tag);
    std::size_t passed() const;
    std::size_t failed() const;
    bool all_pass() const { return failed() == 0; }

    /// {"schema": 1, "suite": ..., "checks": [...], "summary": {...}}
    std::string to_json() const;
    std::string to_csv() const;
    void print_table(std::ostream& os) const;

    /// Renders per `format` ("table" to os, "json"/"csv" returned); writes to
    /// report_path when non-empty.
    void emit(const std::string& format, const std::string& report_path, std::ostream& os) const;
};

}  // namespace conelab::cli

#endif
