#include "lsl/farey.hpp"

#include <algorithm>

namespace lsl {

FareySequence farey(std::int64_t order) {
  if (order <= 1) throw DomainError("farey: order must be >= 2 (F(1) has no points in (0,1))");
  // Successive terms a/b < c/d of F(Q) satisfy bc - ad = 1 and the next term
  // is (k c - a)/(k d - b) with k = floor((Q + b) / d).
  std::vector<FareyFraction> out;
  std::int64_t a = 0, b = 1, c = 1, d = order;
  while (c < d) {
    out.push_back({c, d});
    const std::int64_t k = (order + b) / d;
    const std::int64_t e = k * c - a;
    const std::int64_t f = k * d - b;
    a = c;
    b = d;
    c = e;
    d = f;
  }
  return FareySequence(order, std::move(out));
}

std::vector<Rational> scaled_points(const FareySequence& seq, const Rational& alpha) {
  std::vector<Rational> out;
  out.reserve(seq.size());
  for (const auto& f : seq.fractions()) out.push_back(alpha * Rational::reduce(f.num, f.den));
  return out;
}

SpacedSet::SpacedSet(std::vector<Rational> points, Rational delta, Rational enclosure)
    : points_(std::move(points)), delta_(std::move(delta)), enclosure_(std::move(enclosure)) {
  if (points_.size() < 2) throw DomainError("spaced set needs at least two points");
  if (delta_.sign() <= 0) throw DomainError("spaced set delta must be positive");
  if (points_.front() < -enclosure_ || points_.back() > enclosure_)
    throw DomainError("spaced set points leave [-P, P]");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i] - points_[i - 1] < delta_)
      throw DomainError("spaced set gap below certified delta (or points not increasing)");
  }
}

Rational SpacedSet::min_gap() const {
  Rational best = points_[1] - points_[0];
  for (std::size_t i = 2; i < points_.size(); ++i) best = std::min(best, points_[i] - points_[i - 1]);
  return best;
}

SpacedSet as_spaced_set(const FareySequence& seq, const Rational& alpha) {
  if (alpha.sign() <= 0) throw DomainError("as_spaced_set: alpha must be positive");
  // Adjacent a/b, c/d differ by 1/(bd) >= 1/Q^2.
  const Rational delta = alpha / Rational(BigInt(BigInt(seq.order()) * seq.order()));
  return SpacedSet(scaled_points(seq, alpha), delta, alpha);
}

std::size_t neighbor_count(const SpacedSet& set, const Rational& eps, const Rational& x) {
  if (eps.sign() <= 0) throw DomainError("neighbor_count: eps must be positive");
  const auto& pts = set.points();
  if (!std::binary_search(pts.begin(), pts.end(), x))
    throw DomainError("neighbor_count: x is not a point of the set");
  const auto lo = std::lower_bound(pts.begin(), pts.end(), x - eps);
  const auto hi = std::upper_bound(pts.begin(), pts.end(), x + eps);
  return static_cast<std::size_t>(hi - lo);
}

Rational neighbor_bound(const SpacedSet& set, const Rational& eps) {
  return Rational(1) + Rational(2) * eps / set.delta();
}

}  // namespace lsl
