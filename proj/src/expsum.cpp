#include "lsl/expsum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <thread>

#include "lsl/lattice.hpp"

namespace lsl {

namespace {

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

struct CompensatedComplex {
  CompensatedSum re;
  CompensatedSum im;

  void add(Complex v) {
    re.add(v.real());
    im.add(v.imag());
  }
  Complex value() const { return {re.value(), im.value()}; }
};

double tree_sum(std::span<const double> v) {
  if (v.empty()) return 0.0;
  if (v.size() == 1) return v[0];
  const std::size_t half = v.size() / 2;
  return tree_sum(v.first(half)) + tree_sum(v.subspan(half));
}

constexpr std::size_t kBlock = 16;

void check_lengths(std::size_t a, std::size_t y) {
  if (a != y) throw DomainError("amplitude and frequency sequences differ in length");
}

}  // namespace

Complex unit_phase(const PhaseFraction& phase) {
  double t = phase.turns();
  if (t >= 0.5) t -= 1.0;  // exact for t in [1/2, 1)
  const double angle = 2.0 * std::numbers::pi * t;
  return {std::cos(angle), std::sin(angle)};
}

Complex eval_f(std::span<const Complex> a, std::span<const BigInt> y, const Rational& x) {
  check_lengths(a.size(), y.size());
  CompensatedComplex acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Complex(0.0, 0.0)) continue;
    acc.add(a[i] * unit_phase(phase_mod1(x, y[i])));
  }
  return acc.value();
}

double sieve_sum(std::span<const Rational> points, std::span<const Complex> a,
                 std::span<const BigInt> y, unsigned threads) {
  check_lengths(a.size(), y.size());
  const std::size_t blocks = (points.size() + kBlock - 1) / kBlock;
  std::vector<double> partial(blocks, 0.0);
  auto do_block = [&](std::size_t b) {
    CompensatedSum acc;
    const std::size_t end = std::min(points.size(), (b + 1) * kBlock);
    for (std::size_t i = b * kBlock; i < end; ++i) acc.add(std::norm(eval_f(a, y, points[i])));
    partial[b] = acc.value();
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(blocks)));
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) do_block(b);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t b = next++; b < blocks; b = next++) do_block(b);
      });
    }
  }
  return tree_sum(partial);
}

double sum_f_abs(std::span<const Rational> points, std::span<const Complex> a,
                 std::span<const BigInt> y) {
  CompensatedComplex acc;
  for (const auto& x : points) acc.add(eval_f(a, y, x));
  return std::abs(acc.value());
}

double l2_moment(std::span<const Complex> a, std::span<const BigInt> y) {
  check_lengths(a.size(), y.size());
  std::map<BigInt, CompensatedComplex> groups;
  for (std::size_t i = 0; i < a.size(); ++i) groups[y[i]].add(a[i]);
  CompensatedSum total;
  for (const auto& [k, g] : groups) total.add(std::norm(g.value()));
  return total.value();
}

Rational l2_moment_exact(std::span<const ComplexRational> a, std::span<const BigInt> y) {
  check_lengths(a.size(), y.size());
  std::map<BigInt, ComplexRational> groups;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto& g = groups[y[i]];
    g.re = g.re + a[i].re;
    g.im = g.im + a[i].im;
  }
  Rational total;
  for (const auto& [k, g] : groups) total = total + g.re * g.re + g.im * g.im;
  return total;
}

double l4_moment_abs(std::span<const Complex> a, std::span<const BigInt> y) {
  check_lengths(a.size(), y.size());
  std::map<BigInt, CompensatedSum> levels;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ai = std::abs(a[i]);
    levels[BigInt(2 * y[i])].add(ai * ai);
    for (std::size_t j = i + 1; j < a.size(); ++j)
      levels[BigInt(y[i] + y[j])].add(2.0 * ai * std::abs(a[j]));
  }
  CompensatedSum total;
  for (const auto& [k, s] : levels) {
    const double v = s.value();
    total.add(v * v);
  }
  return total.value();
}

Rational l4_moment_abs_exact(std::span<const Rational> magnitudes, std::span<const BigInt> y) {
  check_lengths(magnitudes.size(), y.size());
  for (const auto& m : magnitudes)
    if (m.sign() < 0) throw DomainError("l4_moment_abs_exact: magnitudes must be >= 0");
  std::map<BigInt, Rational> levels;
  for (std::size_t i = 0; i < magnitudes.size(); ++i) {
    auto& diag = levels[BigInt(2 * y[i])];
    diag = diag + magnitudes[i] * magnitudes[i];
    for (std::size_t j = i + 1; j < magnitudes.size(); ++j) {
      auto& cell = levels[BigInt(y[i] + y[j])];
      cell = cell + Rational(2) * magnitudes[i] * magnitudes[j];
    }
  }
  Rational total;
  for (const auto& [k, s] : levels) total = total + s * s;
  return total;
}

double norm_sq(std::span<const Complex> a) {
  CompensatedSum s;
  for (const auto& v : a) s.add(std::norm(v));
  return s.value();
}

double norm_l1(std::span<const Complex> a) {
  CompensatedSum s;
  for (const auto& v : a) s.add(std::abs(v));
  return s.value();
}

std::vector<Complex> magnitudes(std::span<const Complex> a) {
  std::vector<Complex> out;
  out.reserve(a.size());
  for (const auto& v : a) out.emplace_back(std::abs(v), 0.0);
  return out;
}

MomentReport moment_report(std::span<const Complex> a, std::span<const BigInt> y) {
  MomentReport rep;
  rep.l2 = l2_moment(a, y);
  rep.l4 = l4_moment_abs(a, y);
  const double n2 = norm_sq(a);
  rep.sup_a_bound = static_cast<double>(additive_profile(y).sup_a) * n2 * n2;
  return rep;
}

double phi_hat(double eps, double t) {
  if (!(eps > 0.0)) throw DomainError("phi_hat: eps must be positive");
  const double u = 2.0 * std::numbers::pi * eps * t;
  if (u == 0.0) return 2.0 * eps;
  return 2.0 * eps * std::sin(u) / u;
}

BoundReport majorisation_check(std::span<const Complex> a, std::span<const double> b,
                               std::span<const BigInt> y) {
  check_lengths(a.size(), y.size());
  check_lengths(b.size(), y.size());
  std::vector<Complex> bc;
  bc.reserve(b.size());
  double b1 = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!(b[i] > 0.0)) throw PreconditionError("majorisation_check: b_i must be positive");
    if (std::abs(a[i]) > b[i]) throw PreconditionError("majorisation_check: |a_i| > b_i");
    bc.emplace_back(b[i], 0.0);
    b1 += b[i];
  }
  const double lhs = l2_moment(a, y);
  const double rhs = l2_moment(bc, y);
  return BoundReport::make("majorisation", lhs, rhs,
                           roundoff_budget(static_cast<double>(a.size()), b1 * b1),
                           {{"N", static_cast<double>(a.size())}});
}

double roundoff_budget(double count, double magnitude) {
  return 16.0 * std::numeric_limits<double>::epsilon() * (count + 8.0) * magnitude;
}

QuadraticAmplitude QuadraticAmplitude::make(Rational c0, Rational c1, Rational c2, BigInt m,
                                            std::int64_t n, std::vector<Complex> a) {
  if (c0.sign() == 0) throw DomainError("quadratic amplitude: c0 must be nonzero");
  if (n < 1) throw DomainError("quadratic amplitude: N must be >= 1");
  if (a.size() != static_cast<std::size_t>(n))
    throw DomainError("quadratic amplitude: expected " + std::to_string(n) + " amplitudes, got " +
                      std::to_string(a.size()));
  if (c0.sign() < 0) {
    c0 = -c0;
    c1 = -c1;
    c2 = -c2;
    for (auto& v : a) v = std::conj(v);
  }
  QuadraticAmplitude out;
  const Rational ratio = c1 / c0;
  out.p = ratio.num();
  out.q = ratio.den();
  out.c0 = std::move(c0);
  out.c1 = std::move(c1);
  out.c2 = std::move(c2);
  out.m = std::move(m);
  out.n = n;
  out.a = std::move(a);
  return out;
}

Rational QuadraticAmplitude::alpha() const { return c0 / Rational(q); }

std::vector<BigInt> QuadraticAmplitude::frequencies() const {
  return quadratic_frequencies(q, p, m, n);
}

Rational QuadraticAmplitude::value_at(const BigInt& i) const {
  const Rational ri(i);
  return c0 * ri * ri + c1 * ri + c2;
}

std::vector<Complex> ones(std::size_t n) { return std::vector<Complex>(n, Complex(1.0, 0.0)); }

std::vector<Complex> random_amplitudes(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Complex> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = unit(rng);
    const double im = unit(rng);
    out.emplace_back(re, im);
  }
  return out;
}

}  // namespace lsl
