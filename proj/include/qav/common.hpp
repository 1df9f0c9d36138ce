#pragma once

#include <stdexcept>
#include <string>

namespace qav {

// Precondition or configuration violation: the computation cannot proceed.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A product or comparison was requested outside the region where the
// operands are exact. Suites report this as "inconclusive", not "fail".
struct Inconclusive : std::runtime_error {
    explicit Inconclusive(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qav
