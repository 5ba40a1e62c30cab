#pragma once

#include <stdexcept>
#include <string>

namespace proglab {

// Element does not belong to the group it is used with (wrong dimension or
// residue out of range).
struct InvalidElement : std::invalid_argument {
    explicit InvalidElement(const std::string& msg) : std::invalid_argument(msg) {}
};

// A numeric solve could not be completed (no bracket, no sign change).
struct SolverFailure : std::runtime_error {
    explicit SolverFailure(const std::string& msg) : std::runtime_error(msg) {}
};

// Target value is not attained on the requested branch.
struct NoSolution : std::runtime_error {
    explicit NoSolution(const std::string& msg) : std::runtime_error(msg) {}
};

// A search ran out of its node/time budget before finishing.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Explicit enumeration was requested for an instance too large to enumerate.
struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace proglab
