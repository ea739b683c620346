#pragma once

#include <stdexcept>
#include <string>

namespace tqc {

// State-sum evaluation would exceed the crossing budget (2^crossings states).
class CrossingBudgetError : public std::runtime_error {
 public:
  explicit CrossingBudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Problem size exceeds the desk-scale guard (e.g. d^n too large in kcode).
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// No braid word within the searched depth satisfies the leakage constraint.
// Carries the best candidate found for diagnostics.
class CompileInfeasibleError : public std::runtime_error {
 public:
  CompileInfeasibleError(const std::string& what, double best_distance, double best_leakage)
      : std::runtime_error(what), best_distance(best_distance), best_leakage(best_leakage) {}
  double best_distance;
  double best_leakage;
};

}  // namespace tqc
