#pragma once

#include <string>
#include <vector>

namespace qqs {

/// Outcome of one named family of checks.
struct CheckResult {
    std::string name;
    bool pass = true;
    long checked = 0;
    /// First failure locus when pass is false; free-form notes otherwise.
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void merge(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }

    std::string to_text() const {
        std::string s;
        for (const auto& c : checks) {
            s += (c.pass ? "PASS " : "FAIL ") + c.name + " (" + std::to_string(c.checked) + " checked)";
            if (!c.detail.empty()) s += ": " + c.detail;
            s += "\n";
        }
        return s;
    }
};

/// Records one comparison into r; keeps only the first failure locus.
inline void record(CheckResult& r, bool ok, const std::string& locus) {
    ++r.checked;
    if (!ok && r.pass) {
        r.pass = false;
        r.detail = locus;
    }
}

}  // namespace qqs
