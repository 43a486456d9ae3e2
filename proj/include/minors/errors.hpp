#pragma once

#include <stdexcept>
#include <string>

namespace minors {

// Raised when an exhaustive operation would exceed its work budget; carries
// the estimate that tripped the guard.
struct budget_error : std::runtime_error {
    budget_error(const std::string& what, double estimate_)
        : std::runtime_error(what), estimate(estimate_) {}
    double estimate;
};

} // namespace minors
