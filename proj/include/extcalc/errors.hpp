#pragma once

#include <stdexcept>
#include <string>

namespace extcalc {

/// Raised when a caller breaks an operation's stated preconditions
/// (dimension mismatch, wrong grade, bad parameter ranges).
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when the input is well-formed but mathematically outside the
/// domain of the operation: a 3-form that is not a G2-structure, a
/// degenerate induced structure, a non-(1,1) curvature, a non-solution.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ContractViolation(what);
}

}  // namespace extcalc
