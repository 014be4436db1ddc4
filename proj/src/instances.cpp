#include "lsl/instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace lsl {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

SpacedInstance random_spaced_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);

  // Points k/D inside [-P, P] with P = e/D.
  const std::int64_t den = uniform(rng, 1, 60);
  const std::int64_t extent = uniform(rng, std::max<std::int64_t>(1, den / 2), 6 * den);
  const std::int64_t slots = 2 * extent + 1;
  const std::int64_t card = uniform(rng, 2, std::min<std::int64_t>(50, slots));
  std::set<std::int64_t> picks;
  while (static_cast<std::int64_t>(picks.size()) < card) picks.insert(uniform(rng, -extent, extent));
  std::vector<Rational> pts;
  pts.reserve(picks.size());
  for (auto k : picks) pts.push_back(Rational::reduce(k, den));

  Rational gap = pts[1] - pts[0];
  for (std::size_t i = 2; i < pts.size(); ++i) gap = std::min(gap, pts[i] - pts[i - 1]);
  const Rational delta = gap / Rational(uniform(rng, 1, 3));
  SpacedSet xs(std::move(pts), delta, Rational::reduce(extent, den));

  const auto n = static_cast<std::size_t>(uniform(rng, 1, 30));
  std::vector<BigInt> y(n);
  const auto mode = uniform(rng, 0, 19);
  for (auto& v : y) {
    if (mode == 0) {
      v = 0;
    } else if (mode <= 5) {
      v = uniform(rng, -5, 5);
    } else {
      v = uniform(rng, -10'000, 10'000);
    }
  }

  auto a = random_amplitudes(n, rng());
  const auto amp_mode = uniform(rng, 0, 19);
  if (amp_mode == 0) {
    std::fill(a.begin(), a.end(), Complex(0.0, 0.0));
  } else if (amp_mode <= 3) {
    for (auto& v : a)
      if (uniform(rng, 0, 2) == 0) v = 0.0;
  }
  return SpacedInstance{std::move(xs), std::move(a), std::move(y)};
}

SieveInstance random_sieve_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::int64_t order = uniform(rng, 2, 20);
  const std::int64_t n = uniform(rng, 1, 12);
  const BigInt m = uniform(rng, -1'000'000, 1'000'000);
  const std::int64_t q = uniform(rng, 1, 5);
  std::int64_t p = 0;
  do {
    p = uniform(rng, -5, 5);
  } while (std::gcd(p, q) != 1);

  Rational c0 = Rational::reduce(uniform(rng, 1, 9), uniform(rng, 1, 9));
  if (uniform(rng, 0, 3) == 0) c0 = -c0;
  const Rational c1 = c0 * Rational::reduce(p, q);
  const Rational c2 = Rational::reduce(uniform(rng, -9, 9), uniform(rng, 1, 9));
  auto a = random_amplitudes(static_cast<std::size_t>(n), rng());
  return SieveInstance::make(QuadraticAmplitude::make(c0, c1, c2, m, n, std::move(a)), order);
}

}  // namespace lsl
