#pragma once

#include <stdexcept>
#include <string>

namespace poincare {

// Precondition violated by the caller (n out of range, malformed argument).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed: two routes that must agree did not,
// or a value that must be a non-negative integer was not.
class IntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace poincare
