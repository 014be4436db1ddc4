// farey.hpp
//
// Farey sequences of order Q (fractions strictly inside (0,1)), delta-spaced
// sets with a certified minimum gap, and the neighbour count
//
//     S(eps, x) = #{x' in X : |x - x'| <= eps}   with   S(eps, x) <= 1 + 2 eps / delta.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lsl/exact.hpp"

namespace lsl {

struct FareyFraction {
  std::int64_t num;
  std::int64_t den;

  Rational value() const { return Rational::reduce(num, den); }
  friend bool operator==(const FareyFraction&, const FareyFraction&) = default;
};

class FareySequence {
 public:
  FareySequence(std::int64_t order, std::vector<FareyFraction> fractions)
      : order_(order), fractions_(std::move(fractions)) {}

  std::int64_t order() const { return order_; }
  const std::vector<FareyFraction>& fractions() const { return fractions_; }
  std::size_t size() const { return fractions_.size(); }

 private:
  std::int64_t order_;
  std::vector<FareyFraction> fractions_;
};

/// All lowest-form a/b in (0,1) with b <= order, ascending, via the
/// next-term recurrence. Throws DomainError for order <= 1 (empty set).
FareySequence farey(std::int64_t order);

/// alpha * F(Q) as exact rationals, ascending for alpha > 0.
std::vector<Rational> scaled_points(const FareySequence& seq, const Rational& alpha);

class SpacedSet {
 public:
  /// Validates: at least two points, strictly increasing, every consecutive
  /// gap >= delta > 0, and all points inside [-enclosure, enclosure].
  /// Throws DomainError on any violation.
  SpacedSet(std::vector<Rational> points, Rational delta, Rational enclosure);

  const std::vector<Rational>& points() const { return points_; }
  const Rational& delta() const { return delta_; }
  const Rational& enclosure() const { return enclosure_; }
  std::size_t size() const { return points_.size(); }

  /// Exact minimum consecutive gap (>= delta by construction).
  Rational min_gap() const;

 private:
  std::vector<Rational> points_;
  Rational delta_;
  Rational enclosure_;
};

/// alpha * F(Q) with certified delta = alpha / Q^2 and enclosure alpha.
SpacedSet as_spaced_set(const FareySequence& seq, const Rational& alpha);

/// S(eps, x). Throws DomainError when x is not a point of the set or eps <= 0.
std::size_t neighbor_count(const SpacedSet& set, const Rational& eps, const Rational& x);

/// 1 + 2 eps / delta.
Rational neighbor_bound(const SpacedSet& set, const Rational& eps);

}  // namespace lsl
