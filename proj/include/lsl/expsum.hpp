// expsum.hpp
//
// Trigonometric sums f(t) = sum_i a_i e(t y_i), with e(t) = exp(2 pi i t),
// evaluated at rational t. Every phase t*y_i is reduced mod 1 in exact
// arithmetic before any floating-point trigonometry, so the result does not
// degrade when t*y_i is astronomically large.
//
// Moments on [0,1] are evaluated combinatorially, never by quadrature:
//
//   int_0^1 |f|^2  = sum_{(i,j): y_i = y_j} a_i conj(a_j)
//   int_0^1 |f*|^4 = sum_k ( sum_{y_i + y_j = k} |a_i| |a_j| )^2,   f* = sum |a_i| e(t y_i)

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "lsl/exact.hpp"
#include "lsl/report.hpp"

namespace lsl {

using Complex = std::complex<double>;

struct ComplexRational {
  Rational re;
  Rational im;
};

/// e(phase) for a phase already reduced to [0, 1).
Complex unit_phase(const PhaseFraction& phase);

/// sum_i a_i e(x y_i). Throws DomainError on a length mismatch.
Complex eval_f(std::span<const Complex> a, std::span<const BigInt> y, const Rational& x);

/// sum_{x in points} |f(x)|^2. Points are processed in fixed blocks whose
/// partial sums are combined in a fixed pairwise tree, so the result is
/// bit-identical for any thread count.
double sieve_sum(std::span<const Rational> points, std::span<const Complex> a,
                 std::span<const BigInt> y, unsigned threads = 1);

/// |sum_{x in points} f(x)|.
double sum_f_abs(std::span<const Rational> points, std::span<const Complex> a,
                 std::span<const BigInt> y);

double l2_moment(std::span<const Complex> a, std::span<const BigInt> y);
Rational l2_moment_exact(std::span<const ComplexRational> a, std::span<const BigInt> y);

/// Uses |a_i|.
double l4_moment_abs(std::span<const Complex> a, std::span<const BigInt> y);
/// Magnitudes are given directly (must be >= 0).
Rational l4_moment_abs_exact(std::span<const Rational> magnitudes, std::span<const BigInt> y);

/// ||a||^2 = sum |a_i|^2.
double norm_sq(std::span<const Complex> a);
/// sum |a_i|.
double norm_l1(std::span<const Complex> a);
std::vector<Complex> magnitudes(std::span<const Complex> a);

struct MomentReport {
  double l2 = 0.0;
  double l4 = 0.0;
  double sup_a_bound = 0.0;  // sup_k A_Y(k) * ||a||^4
};
MomentReport moment_report(std::span<const Complex> a, std::span<const BigInt> y);

/// Fourier transform of the indicator of [-eps, eps]: 2 eps sin(2 pi eps t)/(2 pi eps t),
/// equal to 2 eps at t = 0.
double phi_hat(double eps, double t);

/// int |sum a_i e(t y_i)|^2 <= int |sum b_i e(t y_i)|^2 for |a_i| <= b_i.
/// Throws PreconditionError if some |a_i| > b_i or b_i <= 0.
BoundReport majorisation_check(std::span<const Complex> a, std::span<const double> b,
                               std::span<const BigInt> y);

/// Roundoff allowance of the form count * eps * magnitude (with headroom).
double roundoff_budget(double count, double magnitude);

struct QuadraticAmplitude {
  Rational c0;
  Rational c1;
  Rational c2;
  BigInt p;
  BigInt q;
  BigInt m;
  std::int64_t n = 0;
  std::vector<Complex> a;  // a[t] belongs to index M + 1 + t

  /// Builds P(T) = c0 T^2 + c1 T + c2 with amplitudes on (M, M+N]. When
  /// c0 < 0 the polynomial is negated and the amplitudes conjugated, which
  /// leaves every |sum a_i e(x P(i))| unchanged. Throws DomainError for
  /// c0 == 0, N < 1, or a.size() != N.
  static QuadraticAmplitude make(Rational c0, Rational c1, Rational c2, BigInt m, std::int64_t n,
                                 std::vector<Complex> a);

  /// c0 / q.
  Rational alpha() const;
  BigInt index(std::size_t t) const { return BigInt(m + 1 + static_cast<long>(t)); }
  /// y_i = q i^2 + p i.
  std::vector<BigInt> frequencies() const;
  /// P(i) as an exact rational.
  Rational value_at(const BigInt& i) const;
};

std::vector<Complex> ones(std::size_t n);
/// Deterministic complex amplitudes with |re|, |im| <= 1.
std::vector<Complex> random_amplitudes(std::size_t n, std::uint64_t seed);

}  // namespace lsl
