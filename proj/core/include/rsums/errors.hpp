#pragma once

#include <stdexcept>
#include <string>

namespace rsums {

/// The requested object cannot exist under the stated hypotheses
/// (e.g. a critical-pair construction with an even-order subgroup).
class ConstructionInfeasible : public std::runtime_error {
 public:
  explicit ConstructionInfeasible(const std::string& what)
      : std::runtime_error(what) {}
};

/// A configured size or work cap was exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

/// Input does not satisfy the hypothesis a classifier requires.
/// Distinct from InvariantViolation: the input is simply out of scope.
class HypothesisNotSatisfied : public std::runtime_error {
 public:
  explicit HypothesisNotSatisfied(const std::string& what)
      : std::runtime_error(what) {}
};

/// The triple handed to the critical classifier is not bound-tight.
class NotCritical : public std::runtime_error {
 public:
  explicit NotCritical(const std::string& what) : std::runtime_error(what) {}
};

/// A verified mathematical invariant failed. This is never expected on
/// correct code: it means either a bug or a falsified theorem, and is
/// reported loudly instead of being swallowed.
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace rsums
