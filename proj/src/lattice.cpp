#include "lsl/lattice.hpp"

#include <algorithm>
#include <mutex>

namespace lsl {

std::uint64_t r(std::uint64_t n) {
  if (n == 0) return 1;
  std::uint64_t prod = 4;
  for (const auto& [p, e] : factorize(n)) {
    if (p % 4 == 1) {
      prod *= e + 1;
    } else if (p % 4 == 3 && e % 2 == 1) {
      return 0;
    }
  }
  return prod;
}

std::vector<std::uint32_t> r_table(std::uint64_t bound) {
  std::vector<std::uint32_t> counts(bound + 1, 0);
  for (std::uint64_t x = 0; x * x <= bound; ++x) {
    const std::uint32_t wx = x == 0 ? 1 : 2;
    for (std::uint64_t y = 0; x * x + y * y <= bound; ++y) {
      counts[x * x + y * y] += wx * (y == 0 ? 1 : 2);
    }
  }
  return counts;
}

namespace {

// Running maximum of r(n) over 1..n with the first n attaining it.
struct SupRPrefix {
  std::vector<std::uint32_t> value;
  std::vector<std::uint32_t> argmax;

  explicit SupRPrefix(std::uint64_t bound) {
    const auto counts = r_table(bound);
    value.assign(bound + 1, 0);
    argmax.assign(bound + 1, 0);
    for (std::uint64_t n = 1; n <= bound; ++n) {
      if (counts[n] > value[n - 1]) {
        value[n] = counts[n];
        argmax[n] = static_cast<std::uint32_t>(n);
      } else {
        value[n] = value[n - 1];
        argmax[n] = argmax[n - 1];
      }
    }
  }
};

const SupRPrefix& shared_prefix() {
  static const SupRPrefix prefix(kSupRScanLimit);
  return prefix;
}

}  // namespace

SupR sup_r(std::uint64_t bound, std::uint64_t limit) {
  if (bound < 1) throw DomainError("sup_r: bound must be >= 1");
  if (bound > limit) {
    throw UncomputableError("sup_r: bound " + std::to_string(bound) +
                            " exceeds the exhaustive-scan limit " + std::to_string(limit) +
                            "; bound uncomputable at this scale");
  }
  if (bound <= kSupRScanLimit) {
    const auto& prefix = shared_prefix();
    return {prefix.value[bound], prefix.argmax[bound]};
  }
  const SupRPrefix prefix(bound);
  return {prefix.value[bound], prefix.argmax[bound]};
}

std::uint64_t corollary_scan_bound(const Rational& h) {
  const Rational h2 = h * h;
  const BigInt b = (Rational(144) * h2 * h2).ceil();
  if (b < 1 || !mpz_fits_ulong_p(b.get_mpz_t())) throw DomainError("144 H^4 out of range");
  return b.get_ui();
}

void CirclePointProblem::validate() const {
  if (c1 == 0) throw DomainError("circle problem: c1 must be nonzero");
  if (h < Rational(1)) throw DomainError("circle problem: H must be >= 1");
}

namespace {

bool exact_sqrt(const BigInt& value, BigInt& root) {
  if (value < 0) return false;
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  return root * root == value;
}

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace

std::vector<LatticePoint> circle_points(const CirclePointProblem& prob) {
  prob.validate();
  std::vector<LatticePoint> out;
  if (prob.c3 < 0) return out;
  const BigInt p = prob.m.num();
  const BigInt q = prob.m.den();
  const BigInt box = prob.h.floor();
  // q^2 (c1 x - c2)^2 + (q c1 y - p c2)^2 = q^2 c3
  const BigInt q2c3 = q * q * prob.c3;
  const BigInt den = q * prob.c1;
  BigInt s;
  for (BigInt x = -box; x <= box; ++x) {
    const BigInt u = q * (prob.c1 * x - prob.c2);
    const BigInt rest = q2c3 - u * u;
    if (!exact_sqrt(rest, s)) continue;
    for (int sign : {-1, 1}) {
      if (sign == 1 && s == 0) break;
      const BigInt num = p * prob.c2 + sign * s;
      if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
      const BigInt y = num / den;
      if (abs_big(y) <= box) out.emplace_back(x, y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<NormalizedCircle> normalize_circle(const BigInt& c1, const BigInt& c2,
                                                 const BigInt& c3) {
  if (c1 == 0) throw DomainError("normalize_circle: c1 must be nonzero");
  if (c3 < 0) return std::nullopt;
  const BigInt d = gcd(c1, c2);
  const BigInt d2 = d * d;
  if (!mpz_divisible_p(c3.get_mpz_t(), d2.get_mpz_t())) return std::nullopt;
  return NormalizedCircle{BigInt(c1 / d), BigInt(c2 / d), BigInt(c3 / d2), d};
}

Prop1Report check_prop1_bounds(const CirclePointProblem& prob) {
  Prop1Report rep;
  rep.points = circle_points(prob);
  if (rep.points.size() < 3) {
    throw PreconditionError("check_prop1_bounds: box holds " + std::to_string(rep.points.size()) +
                            " point(s); at least three are required");
  }
  rep.coprime = coprime(prob.c1, prob.c2);

  const Rational q(prob.m.den());
  const Rational one_m = Rational(1) + prob.m.abs();
  const Rational& h = prob.h;
  const Rational h2 = h * h;
  const Rational c1_abs = Rational(abs_big(prob.c1));
  const Rational c2_abs = Rational(abs_big(prob.c2));
  const Rational c3(prob.c3);
  const Rational lim1 = Rational(4) * q * one_m * h;
  const Rational lim2 = Rational(2) * q * h2;
  const Rational lim3 = Rational(36) * q * q * one_m * one_m * h2 * h2;

  const std::vector<std::pair<std::string, double>> factors = {
      {"q", q.to_double()}, {"abs_m", prob.m.abs().to_double()}, {"H", h.to_double()}};
  auto exact = [&](std::string name, const Rational& lhs, const Rational& rhs) {
    auto b = BoundReport::make(std::move(name), lhs.to_double(), rhs.to_double(), 0.0, factors);
    b.verdict = lhs <= rhs;
    return b;
  };
  rep.bounds[0] = exact("abs_c1 <= 4q(1+|m|)H", c1_abs, lim1);
  rep.bounds[1] = exact("abs_c2 <= 2qH^2", c2_abs, lim2);
  rep.bounds[2] = exact("c3 <= 36q^2(1+|m|)^2H^4", c3, lim3);
  return rep;
}

std::uint64_t quadratic_level_count(const QuadraticPolynomial& poly, const ClosedInterval& interval,
                                    const BigInt& k) {
  if (poly.a0 == 0) throw DomainError("quadratic_level_count: polynomial has degree < 2");
  if (interval.length() < Rational(1))
    throw DomainError("quadratic_level_count: interval length must be >= 1");
  const BigInt lo = interval.lo.ceil();
  const BigInt hi = interval.hi.floor();
  const BigInt two_a0 = 2 * poly.a0;
  std::uint64_t count = 0;
  BigInt s;
  for (BigInt x = lo; x <= hi; ++x) {
    // a0 y^2 + a1 y + (a2 - (k - P(x))) = 0
    const BigInt c = poly.a2 - (k - poly(x));
    const BigInt disc = poly.a1 * poly.a1 - 4 * poly.a0 * c;
    if (!exact_sqrt(disc, s)) continue;
    for (int sign : {-1, 1}) {
      if (sign == 1 && s == 0) break;
      const BigInt num = -poly.a1 + sign * s;
      if (!mpz_divisible_p(num.get_mpz_t(), two_a0.get_mpz_t())) continue;
      const BigInt y = num / two_a0;
      if (y >= lo && y <= hi) ++count;
    }
  }
  return count;
}

AdditiveProfile additive_profile(std::span<const BigInt> y) {
  if (y.empty()) throw DomainError("additive_profile: empty sequence");
  AdditiveProfile prof;
  for (std::size_t i = 0; i < y.size(); ++i) {
    prof.counts[BigInt(2 * y[i])] += 1;
    for (std::size_t j = i + 1; j < y.size(); ++j) prof.counts[BigInt(y[i] + y[j])] += 2;
  }
  for (const auto& [k, c] : prof.counts) prof.sup_a = std::max(prof.sup_a, c);
  const auto [mn, mx] = std::minmax_element(y.begin(), y.end());
  prof.diameter = *mx - *mn;
  return prof;
}

std::vector<BigInt> quadratic_frequencies(const BigInt& q, const BigInt& p, const BigInt& m,
                                          std::int64_t n) {
  if (n < 1) throw DomainError("quadratic frequencies: N must be >= 1");
  std::vector<BigInt> y;
  y.reserve(static_cast<std::size_t>(n));
  for (std::int64_t t = 1; t <= n; ++t) {
    const BigInt i = m + t;
    y.emplace_back(q * i * i + p * i);
  }
  return y;
}

AdditiveProfile additive_profile(const BigInt& q, const BigInt& p, const BigInt& m,
                                 std::int64_t n) {
  if (n < 1) throw DomainError("additive_profile: N must be >= 1");
  if (q < 1) throw DomainError("additive_profile: q must be >= 1");
  if (!coprime(p, q)) throw DomainError("additive_profile: (p, q) must be 1");
  const auto y = quadratic_frequencies(q, p, m, n);
  return additive_profile(std::span<const BigInt>(y));
}

Rational diameter_bound(const BigInt& q, const BigInt& p, const BigInt& m, std::int64_t n) {
  const Rational ratio = Rational::reduce(p, q).abs();
  return Rational(q) * Rational(n) *
         (Rational(abs_big(m)) + Rational(2 * n) + ratio + Rational(1));
}

BigInt diameter_envelope(const BigInt& q, const BigInt& p, const BigInt& m, std::int64_t n) {
  const BigInt width = BigInt(n - 1);
  return width * (2 * abs_big(q) * abs_big(m) + 2 * abs_big(q) * n + abs_big(p));
}

}  // namespace lsl
