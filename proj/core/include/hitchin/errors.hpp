#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hitchin {

/// Precondition violated by the caller (bad degree, rank, grid, sizes).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal cross-check between two evaluation paths disagreed.
/// Signals a sign or convention bug rather than bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An analytic identity failed beyond its tolerance; carries both sides.
class IdentityViolation : public std::runtime_error {
 public:
  IdentityViolation(const std::string& name, double lhs, double rhs, double tolerance);

  double lhs() const noexcept { return lhs_; }
  double rhs() const noexcept { return rhs_; }
  double tolerance() const noexcept { return tolerance_; }

 private:
  double lhs_;
  double rhs_;
  double tolerance_;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every generator of an orbit basis was pruned as null.
class DegenerateBasisError : public std::runtime_error {
 public:
  DegenerateBasisError(const std::string& what, std::vector<int> pruned);
  const std::vector<int>& pruned() const noexcept { return pruned_; }

 private:
  std::vector<int> pruned_;
};

class ConditioningError : public std::runtime_error {
 public:
  ConditioningError(const std::string& what, double condition);
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

}  // namespace hitchin
