#pragma once

#include <stdexcept>
#include <string>

namespace schemoid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range indices, bad shapes, broken partitions.
class StructuralError : public Error {
public:
  using Error::Error;
};

/// An operation was called on an input that does not meet its precondition
/// (e.g. a quotient of a schemoid that is not tame).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A size guard refused to start an exhaustive computation.
class GuardExceeded : public Error {
public:
  using Error::Error;
};

/// Input parsing failure (JSON files, CLI arguments).
class ParseError : public Error {
public:
  using Error::Error;
};

/// A mathematical check on user data failed: a schemoid axiom, functoriality
/// of a map, block constancy of a representation. The message carries the
/// witness.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A mathematical law that the library relies on failed (a bug, not bad input).
class InvariantViolation : public Error {
public:
  using Error::Error;
};

}  // namespace schemoid
