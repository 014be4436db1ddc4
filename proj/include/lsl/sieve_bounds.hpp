// sieve_bounds.hpp
//
// Explicit right-hand sides of three large sieve inequalities and their
// verification against exactly-phased left-hand sides.
//
// Lemma, for X delta-spaced in [-P, P] and |y_i| <= T:
//
//   |sum_{x in X} f(x)| <= pi (|X| T + |X|/delta)^{1/2} (P + 2)^{1/2} (int_0^1 |f*|^2)^{1/2}
//
// Theorem (diameter form):
//
//   sum_{x in X} |f(x)|^2 <= pi (|X| Delta(Y) + |X|/delta)^{1/2} (P + 2)^{1/2}
//                            sup_k A_Y(k)^{1/2} ||a||^2
//
// Farey corollary, P(T) = c0 T^2 + c1 T + c2 with c1/c0 = p/q, i in (M, M+N]:
//
//   sum_{x in F(Q)} |sum_i a_i e(x P(i))|^2
//       <= (Q^2 + Q sqrt(c0 N (|M| + 2N + |p/q| + 1))) Pi' ||a||^2,
//   Pi' = pi (2q/c0 + 1)^{1/2} sup_{1 <= n <= 144 N^4} r(n).
//
// The corollary LHS is evaluated on the reduced data X = alpha F(Q),
// alpha = c0/q, y_i = q i^2 + p i: the constant term c2 only contributes a
// unimodular factor e(x c2) inside each |.|.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lsl/expsum.hpp"
#include "lsl/farey.hpp"
#include "lsl/lattice.hpp"
#include "lsl/report.hpp"

namespace lsl {

double lemma_rhs(const SpacedSet& x, double t, double l2_abs);

/// T = max |y_i|, l2_abs = int |f*|^2.
BoundReport verify_lemma(const SpacedSet& x, std::span<const Complex> a, std::span<const BigInt> y);

double theorem1_rhs(const SpacedSet& x, const AdditiveProfile& profile, double norm_sq);

/// Same formula with every factor supplied directly; used for the majorant chain.
double theorem1_rhs_from_factors(double card, double diameter, double delta, double enclosure,
                                 double sup_a, double norm_sq);

BoundReport verify_theorem1(const SpacedSet& x, std::span<const Complex> a,
                            std::span<const BigInt> y, unsigned threads = 1);

struct SieveInstance {
  QuadraticAmplitude amplitude;
  std::int64_t order = 0;  // Q

  /// Throws DomainError for Q < 2.
  static SieveInstance make(QuadraticAmplitude amplitude, std::int64_t order);

  std::vector<Rational> points() const;  // alpha F(Q)
  std::vector<BigInt> frequencies() const { return amplitude.frequencies(); }
};

/// Throws UncomputableError when 144 N^4 > scan_limit.
double corollary_rhs(const SieveInstance& inst, std::uint64_t scan_limit = kSupRScanLimit);

/// Reduced route: sieve_sum over alpha F(Q) with y_i = q i^2 + p i.
double corollary_lhs(const SieveInstance& inst, unsigned threads = 1);

/// Direct route: every phase x P(i) reduced mod 1 from the full polynomial.
double corollary_lhs_direct(const SieveInstance& inst);

/// Corollary report; cross-checks are the Theorem on the reduced data (when
/// alpha F(Q) has at least two points) and the majorant chain
/// Theorem(|X| -> Q^2, delta -> alpha/Q^2, Delta -> diameter_envelope, sup_A -> sup r) <= corollary RHS.
BoundReport verify_corollary(const SieveInstance& inst, std::uint64_t scan_limit = kSupRScanLimit,
                             unsigned threads = 1);

struct SharpnessCell {
  std::int64_t order;
  std::int64_t n;
  double lhs;
  double ratio;     // lhs / ((NQ + Q^2) ||a||^2)
  double envelope;  // corollary rhs / ((NQ + Q^2) ||a||^2)
  double error_budget;  // roundoff allowance on lhs; lhs at or below it is not certified nonzero
};

/// P(T) = T^2, a_i = 1, M = 0 over 2 <= Q <= q_max, 1 <= N <= n_max.
std::vector<SharpnessCell> sharpness_probe(std::int64_t q_max, std::int64_t n_max,
                                           unsigned threads = 1);

}  // namespace lsl
