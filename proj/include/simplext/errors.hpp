#ifndef SIMPLEXT_ERRORS_HPP
#define SIMPLEXT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simplext {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad or inconsistent user input (files, parameters).  CLI exit code 2.
struct InputError : Error { using Error::Error; };

// A configured enumeration budget was exceeded.  CLI exit code 3.
struct TooLarge : Error { using Error::Error; };

// Requested shortcut mode does not apply to the instance.  CLI exit code 4.
struct ModeInapplicable : Error { using Error::Error; };

struct Infeasible : InputError { using InputError::InputError; };
struct Unbounded : InputError { using InputError::InputError; };
struct EmptyIntersection : InputError { using InputError::InputError; };
struct NotPointed : InputError { using InputError::InputError; };
struct DimensionMismatch : InputError { using InputError::InputError; };
struct OutOfRange : InputError { using InputError::InputError; };
struct BadW : InputError { using InputError::InputError; };
struct NotAdjacent : InputError { using InputError::InputError; };
struct NotAdjacentBase : InputError { using InputError::InputError; };
struct PairwiseAdjacent : InputError { using InputError::InputError; };
struct ToleranceFailure : Error { using Error::Error; };

// A checked internal invariant failed mid-algorithm; signals a bug,
// never an input condition.
struct InternalInvariantViolation : Error { using Error::Error; };

}  // namespace simplext

#endif
