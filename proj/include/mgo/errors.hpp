#pragma once

#include <stdexcept>
#include <string>

namespace mgo {

// Raised when a computation would exceed the configured cell ceiling.
// Callers must treat this as a refusal, not a partial result.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(std::string what, unsigned long long requested,
                     unsigned long long ceiling)
      : std::runtime_error(std::move(what)),
        requested_cells(requested),
        ceiling_cells(ceiling) {}

  unsigned long long requested_cells;
  unsigned long long ceiling_cells;
};

// Raised when an asserted-zero evaluation comes out nonzero. Carries the
// offending input so the failure is reproducible.
class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(std::string what, std::string polynomial_text,
                      std::string point_text)
      : std::runtime_error(std::move(what)),
        polynomial(std::move(polynomial_text)),
        point(std::move(point_text)) {}

  std::string polynomial;
  std::string point;
};

}  // namespace mgo
