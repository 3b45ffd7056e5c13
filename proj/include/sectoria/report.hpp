#pragma once

#include <string>
#include <vector>

namespace sectoria {

/// One named result row of a verification run. `worst` is the check's most
/// pessimistic slack or distance (sign convention documented per producer);
/// `vacuous` marks rows whose bound was too weak to certify anything, which
/// are excluded from pass/fail aggregation but still reported.
struct CheckItem {
    std::string name;
    std::string params;
    bool pass = false;
    double worst = 0.0;
    std::string witness;
    bool vacuous = false;
};

struct VerifyReport {
    std::vector<CheckItem> checks;

    bool all_pass() const {
        for (const CheckItem& c : checks)
            if (!c.vacuous && !c.pass) return false;
        return true;
    }
    void append(const VerifyReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

} // namespace sectoria
