#pragma once

#include <stdexcept>
#include <string>

namespace eulerbound {

/// Evaluation of a rational function at one of its poles.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Argument outside the domain an operation is defined on.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// exp() composition requires a series with vanishing constant term.
struct NonzeroConstantTerm : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The denominator of a rational function could not be certified sign-definite.
struct DenominatorSignUnknown : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A tail sum needs either a closed form or a caller-supplied remainder bound.
struct MissingTailBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace eulerbound
