// report.hpp
//
// One checked inequality instance: both sides, the factors that went into the
// right-hand side, and a roundoff allowance. The verdict is decided as
// lhs <= rhs + error_budget and never inside the budget's noise floor.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lsl {

struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double error_budget = 0.0;
  std::vector<std::pair<std::string, double>> factors;
  std::vector<BoundReport> cross_checks;
  bool verdict = false;

  static BoundReport make(std::string name, double lhs, double rhs, double error_budget,
                          std::vector<std::pair<std::string, double>> factors = {}) {
    BoundReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.error_budget = error_budget;
    r.factors = std::move(factors);
    r.verdict = lhs <= rhs + error_budget;
    return r;
  }

  /// Own verdict and every cross-check.
  bool passed() const {
    if (!verdict) return false;
    for (const auto& c : cross_checks)
      if (!c.passed()) return false;
    return true;
  }

  double factor(const std::string& key) const {
    for (const auto& [k, v] : factors)
      if (k == key) return v;
    return 0.0;
  }
};

}  // namespace lsl
