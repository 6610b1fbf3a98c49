#pragma once

#include <stdexcept>
#include <string>

namespace digifix {

/// Malformed or out-of-range input: bad schema, dimension mismatch,
/// parameter outside its admissible range.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A well-formed input that violates an operation's precondition
/// (shortest-path metric on a disconnected image, preimage chain of a
/// non-surjective map, ...).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Work that would exceed a configured budget (exhaustive enumeration
/// bounds, sweep budgets).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace digifix
