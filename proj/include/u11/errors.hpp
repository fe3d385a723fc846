#pragma once

#include <stdexcept>
#include <string>

namespace u11 {

// Common base so the CLI can map library failures to one exit code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside an operation's documented domain (bad range, wrong parity, ...).
struct DomainError : Error {
  using Error::Error;
};

// Inversion requested for a non-unit.
struct UnitError : Error {
  using Error::Error;
};

// Requested exhaustive search exceeds the supported size bound.
struct CapacityError : Error {
  using Error::Error;
};

// Matrix does not match any gauge pattern.
struct NotGaugeError : Error {
  using Error::Error;
};

// Requested sample family has no solutions over the given ring.
struct SolvabilityError : Error {
  using Error::Error;
};

// Determinant fails the unit * (v + p) height condition.
struct HeightError : Error {
  using Error::Error;
};

// A stated precondition (e.g. genericity) does not hold for the input.
struct PreconditionError : Error {
  using Error::Error;
};

// Unknown command or malformed invocation; maps to the usage exit code.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace u11
