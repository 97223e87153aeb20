#pragma once

#include <stdexcept>
#include <string>

namespace idv {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnknownName : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Integrand or term produced NaN/inf.
struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotFound : std::out_of_range {
    using std::out_of_range::out_of_range;
};

}  // namespace idv
