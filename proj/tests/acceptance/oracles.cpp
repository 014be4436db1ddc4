#include "oracles.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include <mpfr.h>

#include "lsl/farey.hpp"

namespace lsl::oracle {

std::vector<std::uint32_t> box_r_table(std::uint64_t bound) {
  std::vector<std::uint32_t> out(bound + 1, 0);
  const auto side = static_cast<std::int64_t>(std::sqrt(static_cast<double>(bound))) + 1;
  for (std::int64_t x = -side; x <= side; ++x) {
    for (std::int64_t y = -side; y <= side; ++y) {
      const auto n = static_cast<std::uint64_t>(x * x + y * y);
      if (n <= bound) ++out[n];
    }
  }
  return out;
}

std::uint64_t gcd_pair_count(std::uint64_t order) {
  std::uint64_t count = 0;
  for (std::uint64_t q = 1; q <= order; ++q)
    for (std::uint64_t a = 1; a <= q; ++a)
      if (std::gcd(a, q) == 1) ++count;
  return count;
}

std::vector<LatticePoint> box_circle_points(const CirclePointProblem& prob) {
  std::vector<LatticePoint> out;
  const BigInt box = prob.h.floor();
  const Rational c1(prob.c1), c2(prob.c2), c3(prob.c3);
  for (BigInt x = -box; x <= box; ++x) {
    for (BigInt y = -box; y <= box; ++y) {
      const Rational u = c1 * Rational(x) - c2;
      const Rational v = c1 * Rational(y) - prob.m * c2;
      if (u * u + v * v == c3) out.emplace_back(x, y);
    }
  }
  return out;
}

std::uint64_t box_level_count(const QuadraticPolynomial& poly, const ClosedInterval& interval,
                              const BigInt& k) {
  std::uint64_t count = 0;
  for (BigInt x = interval.lo.ceil(); Rational(x) <= interval.hi; ++x)
    for (BigInt y = interval.lo.ceil(); Rational(y) <= interval.hi; ++y)
      if (poly(x) + poly(y) == k) ++count;
  return count;
}

namespace {

Complex trig_sum(std::span<const Complex> a, std::span<const BigInt> y, double t, bool use_abs) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double angle = 2.0 * std::numbers::pi * t * y[i].get_d();
    const Complex coeff = use_abs ? Complex(std::abs(a[i]), 0.0) : a[i];
    s += coeff * Complex(std::cos(angle), std::sin(angle));
  }
  return s;
}

}  // namespace

double quadrature_l2(std::span<const Complex> a, std::span<const BigInt> y, std::size_t nodes) {
  long double total = 0.0L;
  for (std::size_t k = 0; k < nodes; ++k)
    total += std::norm(trig_sum(a, y, static_cast<double>(k) / static_cast<double>(nodes), false));
  return static_cast<double>(total / static_cast<long double>(nodes));
}

double quadrature_l4_abs(std::span<const Complex> a, std::span<const BigInt> y, std::size_t nodes) {
  long double total = 0.0L;
  for (std::size_t k = 0; k < nodes; ++k) {
    const double v = std::norm(trig_sum(a, y, static_cast<double>(k) / static_cast<double>(nodes), true));
    total += static_cast<long double>(v) * v;
  }
  return static_cast<double>(total / static_cast<long double>(nodes));
}

Rational quadruple_l4(std::span<const Rational> mags, std::span<const BigInt> y) {
  const std::size_t n = mags.size();
  Rational total;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (y[i] + y[j] == y[k] + y[l]) total = total + mags[i] * mags[j] * mags[k] * mags[l];
  return total;
}

Complex naive_eval_f(std::span<const Complex> a, std::span<const BigInt> y, const Rational& x) {
  Complex s = 0.0;
  const double xd = x.to_double();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double angle = 2.0 * std::numbers::pi * xd * y[i].get_d();
    s += a[i] * Complex(std::cos(angle), std::sin(angle));
  }
  return s;
}

double naive_corollary_lhs(const SieveInstance& inst) {
  const auto& amp = inst.amplitude;
  double total = 0.0;
  const auto seq = farey(inst.order);
  for (const auto& f : seq.fractions()) {
    const double x = static_cast<double>(f.num) / static_cast<double>(f.den);
    Complex s = 0.0;
    for (std::size_t t = 0; t < amp.a.size(); ++t) {
      const double angle = 2.0 * std::numbers::pi * x * amp.value_at(amp.index(t)).to_double();
      s += amp.a[t] * Complex(std::cos(angle), std::sin(angle));
    }
    total += std::norm(s);
  }
  return total;
}

double mpfr_corollary_lhs(const SieveInstance& inst, long bits) {
  const auto& amp = inst.amplitude;
  mpfr_t x, v, phase, tmp;
  mpfr_inits2(bits, x, v, phase, tmp, static_cast<mpfr_ptr>(nullptr));
  auto load = [&](mpfr_t out, const Rational& r) {
    mpfr_set_z(out, r.num().get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(out, out, r.den().get_mpz_t(), MPFR_RNDN);
  };
  double total = 0.0;
  const auto seq = farey(inst.order);
  for (const auto& f : seq.fractions()) {
    mpfr_set_si(x, f.num, MPFR_RNDN);
    mpfr_div_si(x, x, f.den, MPFR_RNDN);
    Complex s = 0.0;
    for (std::size_t t = 0; t < amp.a.size(); ++t) {
      load(v, amp.value_at(amp.index(t)));
      mpfr_mul(phase, x, v, MPFR_RNDN);
      mpfr_floor(tmp, phase);
      mpfr_sub(phase, phase, tmp, MPFR_RNDN);
      const double turns = mpfr_get_d(phase, MPFR_RNDN);
      const double angle = 2.0 * std::numbers::pi * turns;
      s += amp.a[t] * Complex(std::cos(angle), std::sin(angle));
    }
    total += std::norm(s);
  }
  mpfr_clears(x, v, phase, tmp, static_cast<mpfr_ptr>(nullptr));
  return total;
}

}  // namespace lsl::oracle
