#pragma once

#include <stdexcept>

namespace hosoya {

// A coordinate or configuration left the triangle. Materialization never
// clamps; it fails.
class OutOfTriangleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parameters violate a validity domain; the message names the constraint.
class ParamDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hosoya
