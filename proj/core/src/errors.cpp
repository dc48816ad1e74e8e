#include "hitchin/errors.hpp"

#include <sstream>

namespace hitchin {

namespace {

std::string describe_violation(const std::string& name, double lhs, double rhs, double tolerance) {
  std::ostringstream out;
  out.precision(17);
  out << name << ": lhs=" << lhs << " rhs=" << rhs << " |lhs-rhs|=" << std::abs(lhs - rhs)
      << " tolerance=" << tolerance;
  return out.str();
}

}  // namespace

IdentityViolation::IdentityViolation(const std::string& name, double lhs, double rhs,
                                     double tolerance)
    : std::runtime_error(describe_violation(name, lhs, rhs, tolerance)),
      lhs_(lhs),
      rhs_(rhs),
      tolerance_(tolerance) {}

DegenerateBasisError::DegenerateBasisError(const std::string& what, std::vector<int> pruned)
    : std::runtime_error(what), pruned_(std::move(pruned)) {}

ConditioningError::ConditioningError(const std::string& what, double condition)
    : std::runtime_error(what + " (condition " + std::to_string(condition) + ")"),
      condition_(condition) {}

}  // namespace hitchin
