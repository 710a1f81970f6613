#pragma once

#include <stdexcept>
#include <string>

namespace liecurv {

/// Operand dimensions do not fit the operation.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text: rational literals, JSON documents, unknown keys.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a mathematical requirement
/// (Jacobi identity, positive definiteness, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The two vectors spanning a plane are linearly dependent.
class DegeneratePlaneError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace liecurv
