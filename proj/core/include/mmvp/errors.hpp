#pragma once

#include <stdexcept>
#include <string>

namespace mmvp {

/// Operands built over different quadratic fields Q(sqrt(s)).
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Division by zero or by a coefficient with vanishing norm.
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computed series does not follow the law a routine expects.
class PatternMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation at a pole, outside a family's real-validity region, or on an
/// unsupported parameter branch.
class ValidityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed nonlinearity text or configuration.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mmvp
