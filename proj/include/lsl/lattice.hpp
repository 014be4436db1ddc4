// lattice.hpp
//
// Integer points on circles.
//
//   r(n)                 #{(x,y) in Z^2 : x^2 + y^2 = n}, via
//                        r(n) = 4 * prod_{p = 1 mod 4} (e_p + 1), or 0 if some
//                        prime p = 3 mod 4 divides n to an odd power.
//   sup_r(B)             max_{1 <= n <= B} r(n), by exhaustive lattice enumeration.
//   circle_points        (c1 x - c2)^2 + (c1 y - m c2)^2 = c3 with |x|,|y| <= H.
//   check_prop1_bounds   |c1| <= 4q(1+|m|)H, |c2| <= 2qH^2, c3 <= 36q^2(1+|m|)^2 H^4
//                        whenever the box holds at least three points.
//   additive_profile     A_Y(k) = #{(i,j) : y_i + y_j = k} for y_i = q i^2 + p i.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lsl/exact.hpp"
#include "lsl/report.hpp"

namespace lsl {

/// Largest B for which sup_r is computed by exhaustive scan by default.
inline constexpr std::uint64_t kSupRScanLimit = 3'000'000;

std::uint64_t r(std::uint64_t n);

/// counts[n] = r(n) for 0 <= n <= bound, by enumerating every lattice point
/// in the disc of radius sqrt(bound).
std::vector<std::uint32_t> r_table(std::uint64_t bound);

struct SupR {
  std::uint64_t value;
  std::uint64_t argmax;  // smallest n attaining the maximum
};

/// max_{1 <= n <= bound} r(n). Throws UncomputableError when bound > limit
/// and DomainError when bound < 1.
SupR sup_r(std::uint64_t bound, std::uint64_t limit = kSupRScanLimit);

/// ceil(144 H^4) for a rational H >= 1.
std::uint64_t corollary_scan_bound(const Rational& h);

struct CirclePointProblem {
  BigInt c1;
  BigInt c2;
  BigInt c3;
  Rational m;
  Rational h;

  /// Throws DomainError for c1 == 0 or H < 1.
  void validate() const;
};

using LatticePoint = std::pair<BigInt, BigInt>;

/// All integer (x, y) with |x|, |y| <= H on the circle, ordered by (x, y).
/// c3 < 0 yields the empty set.
std::vector<LatticePoint> circle_points(const CirclePointProblem& prob);

/// Corollary-1 normalization of (c1 X - c2)^2 + (c1 Y - c2)^2 = c3: divide by
/// d = gcd(c1, c2) (d = c1 when c2 = 0). Returns nullopt when d^2 does not
/// divide c3 or c3 < 0, in which case the circle carries no integer points.
struct NormalizedCircle {
  BigInt c1;
  BigInt c2;
  BigInt c3;
  BigInt d;
};
std::optional<NormalizedCircle> normalize_circle(const BigInt& c1, const BigInt& c2,
                                                 const BigInt& c3);

struct Prop1Report {
  std::vector<LatticePoint> points;
  bool coprime = false;  // (c1, c2) = 1, the hypothesis of the bounds
  std::array<BoundReport, 3> bounds;

  bool pass() const {
    return bounds[0].verdict && bounds[1].verdict && bounds[2].verdict;
  }
};

/// Throws PreconditionError when the box holds fewer than three points.
Prop1Report check_prop1_bounds(const CirclePointProblem& prob);

struct QuadraticPolynomial {
  BigInt a0;  // leading coefficient
  BigInt a1;
  BigInt a2;

  BigInt operator()(const BigInt& t) const { return BigInt(a0 * t * t + a1 * t + a2); }
};

struct ClosedInterval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
};

/// #{(x, y) in (I cap Z)^2 : P(x) + P(y) = k}. Throws DomainError when
/// a0 == 0 or the interval length is below 1.
std::uint64_t quadratic_level_count(const QuadraticPolynomial& poly, const ClosedInterval& interval,
                                    const BigInt& k);

struct AdditiveProfile {
  std::map<BigInt, std::uint64_t> counts;
  std::uint64_t sup_a = 0;
  BigInt diameter;  // max y - min y

  std::uint64_t at(const BigInt& k) const {
    const auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }
};

/// A_Y over ordered index pairs of an arbitrary integer sequence (nonempty).
AdditiveProfile additive_profile(std::span<const BigInt> y);

/// y_i = q i^2 + p i for M < i <= M + N.
std::vector<BigInt> quadratic_frequencies(const BigInt& q, const BigInt& p, const BigInt& m,
                                          std::int64_t n);

/// Profile of quadratic_frequencies(q, p, M, N). Throws DomainError when
/// N < 1, q < 1 or (p, q) != 1.
AdditiveProfile additive_profile(const BigInt& q, const BigInt& p, const BigInt& m,
                                 std::int64_t n);

/// q N (|M| + 2N + |p/q| + 1). Only a majorant of the diameter while
/// (N - 2)|M| stays small: M = 1000, N = 3, y_i = i^2 already exceeds it.
Rational diameter_bound(const BigInt& q, const BigInt& p, const BigInt& m, std::int64_t n);

/// (N - 1)(2q|M| + 2qN + |p|), a majorant of the diameter for every M.
BigInt diameter_envelope(const BigInt& q, const BigInt& p, const BigInt& m, std::int64_t n);

}  // namespace lsl
