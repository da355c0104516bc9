#pragma once

#include <stdexcept>
#include <string>

namespace pinplus {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unknown generator name.
struct LookupError : Error {
    using Error::Error;
};

// An operation was applied outside its domain (orientable circle-sum
// operand, non-Pin+ bar/twist operand, pattern mismatch, ...).
struct PreconditionError : Error {
    using Error::Error;
};

struct NoPinStructureError : Error {
    using Error::Error;
};

// No orientation-cover rule matches.
struct UnknownCoverError : Error {
    using Error::Error;
};

// An involution report was requested for a pair that does not qualify.
struct NoVerdictError : Error {
    using Error::Error;
};

struct EnumerationBoundError : Error {
    using Error::Error;
};

} // namespace pinplus
