#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Raised when an instance exceeds a configured work or size bound.
// Callers can distinguish "too large" from a genuine usage error.
struct FeasibilityError : std::runtime_error {
    explicit FeasibilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hurwitz
