#pragma once

#include <stdexcept>

namespace glts {

/// Raised when an operation's preconditions (matching dimensions, nonzero
/// divisors, in-range indices) are not met.
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Unknown builtin algebra or identity name.
class UnknownName : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace glts
