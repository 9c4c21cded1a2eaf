#pragma once

#include <stdexcept>
#include <string>

namespace zlocal {

/// Base of every error the library raises. The CLI maps each kind to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments to an arithmetic or ring operation (modulus mismatch, non-monic divisor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A presentation or input file violates one of the family hypotheses.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A size bound or search budget was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Isomorphism search ran out of nodes before reaching a verdict.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// A constructed ring failed its own consistency checks. Always an internal inconsistency.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Raised by classify_ring when a ring cannot be matched to a canonical family.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace zlocal
