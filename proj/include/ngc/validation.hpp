// Validation results are data: each violated invariant becomes one message.

#pragma once

#include <string>
#include <vector>

namespace ngc {

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string message) { violations.push_back(std::move(message)); }

    void merge(const ValidationReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

} // namespace ngc
