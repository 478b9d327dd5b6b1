#pragma once

#include <stdexcept>
#include <string>

namespace fuzzideal {

// Base class of every error raised by the library. The CLI maps each
// subclass onto a stable exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A ring specification or an operation argument violates a documented
// precondition (bad sizes, elements outside the ring, R passed where a
// proper ideal is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size limit would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// The operation is not available on the integer backend.
class BackendError : public Error {
 public:
  using Error::Error;
};

// A map or chain fails the fuzzy ideal axioms.
class InvalidFuzzyIdeal : public Error {
 public:
  using Error::Error;
};

// A primeness notion was queried on a constant fuzzy ideal.
class ConstantIdealError : public Error {
 public:
  using Error::Error;
};

// A machine-checked statement did not hold.
class CheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzideal
