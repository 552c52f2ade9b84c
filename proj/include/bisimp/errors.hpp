#pragma once

#include <stdexcept>
#include <string>

namespace bisimp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation would leave the stored dimensions of a truncated object.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Input outside an operation's precondition (bad sizes, non-subgroups,
/// incompatible families, law violations in user tables).
class RejectedInput : public Error {
public:
    using Error::Error;
};

/// Two ordinal maps could not be composed.
class CompositionError : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed. Always a bug in this library.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace bisimp
