#pragma once

#include <stdexcept>
#include <string>

namespace tame {

// Raised when a query leaves the domain an operation is defined on:
// counting measure outside [0,1], a negative family weight, an oracle
// footprint outside the search window, and the like.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tame
