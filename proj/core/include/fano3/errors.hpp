#pragma once

#include <stdexcept>
#include <string>

namespace fano3 {

// Shape/rank violations on matrix inputs.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RankError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Preconditions on values (zero vector, k out of range, apex in a forbidden
// region, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Operation not defined for this input (e.g. Picard rank of a non-simplicial
// polytope).
struct UnsupportedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace fano3
