#include "lsl/sieve_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lsl/parallel.hpp"

namespace lsl {

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(std::span<const BigInt> y) {
  BigInt best = 0;
  for (const auto& v : y) {
    const BigInt a = abs(v);
    if (a > best) best = a;
  }
  return best.get_d();
}

}  // namespace

double lemma_rhs(const SpacedSet& x, double t, double l2_abs) {
  const double card = static_cast<double>(x.size());
  const double delta = x.delta().to_double();
  const double p = x.enclosure().to_double();
  return kPi * std::sqrt(card * t + card / delta) * std::sqrt(p + 2.0) * std::sqrt(l2_abs);
}

BoundReport verify_lemma(const SpacedSet& x, std::span<const Complex> a, std::span<const BigInt> y) {
  const double lhs = sum_f_abs(x.points(), a, y);
  const double t = max_abs(y);
  const auto mags = magnitudes(a);
  const double l2_abs = l2_moment(mags, y);
  const double rhs = lemma_rhs(x, t, l2_abs);
  const double card = static_cast<double>(x.size());
  const double n = static_cast<double>(a.size());
  const double budget =
      roundoff_budget(card * (n + 2.0), card * norm_l1(a)) + roundoff_budget(8.0, rhs);
  return BoundReport::make("lemma", lhs, rhs, budget,
                           {{"card_X", card},
                            {"T", t},
                            {"delta", x.delta().to_double()},
                            {"P", x.enclosure().to_double()},
                            {"l2_abs", l2_abs}});
}

double theorem1_rhs_from_factors(double card, double diameter, double delta, double enclosure,
                                 double sup_a, double norm_sq) {
  return kPi * std::sqrt(card * diameter + card / delta) * std::sqrt(enclosure + 2.0) *
         std::sqrt(sup_a) * norm_sq;
}

double theorem1_rhs(const SpacedSet& x, const AdditiveProfile& profile, double norm_sq) {
  return theorem1_rhs_from_factors(static_cast<double>(x.size()), profile.diameter.get_d(),
                                   x.delta().to_double(), x.enclosure().to_double(),
                                   static_cast<double>(profile.sup_a), norm_sq);
}

BoundReport verify_theorem1(const SpacedSet& x, std::span<const Complex> a,
                            std::span<const BigInt> y, unsigned threads) {
  const double lhs = sieve_sum(x.points(), a, y, threads);
  const auto profile = additive_profile(y);
  const double n2 = norm_sq(a);
  const double rhs = theorem1_rhs(x, profile, n2);
  const double card = static_cast<double>(x.size());
  const double l1 = norm_l1(a);
  const double budget = roundoff_budget(card * (static_cast<double>(a.size()) + 4.0), card * l1 * l1) +
                        roundoff_budget(8.0, rhs);
  return BoundReport::make("theorem1", lhs, rhs, budget,
                           {{"card_X", card},
                            {"Delta", profile.diameter.get_d()},
                            {"delta", x.delta().to_double()},
                            {"P", x.enclosure().to_double()},
                            {"sup_A", static_cast<double>(profile.sup_a)},
                            {"norm_sq", n2}});
}

SieveInstance SieveInstance::make(QuadraticAmplitude amplitude, std::int64_t order) {
  if (order < 2) throw DomainError("sieve instance: Q must be >= 2");
  return SieveInstance{std::move(amplitude), order};
}

std::vector<Rational> SieveInstance::points() const {
  return scaled_points(farey(order), amplitude.alpha());
}

namespace {

struct CorollaryFactors {
  double q_sq;
  double cross;  // Q sqrt(c0 N L)
  double pi_prime;
  double sup_r;
  double length;  // L = |M| + 2N + |p/q| + 1
  double norm_sq;
};

CorollaryFactors corollary_factors(const SieveInstance& inst, std::uint64_t scan_limit) {
  const auto& amp = inst.amplitude;
  const std::uint64_t bound = corollary_scan_bound(Rational(amp.n));
  const double sr = static_cast<double>(sup_r(bound, scan_limit).value);
  const Rational length = Rational(BigInt(abs(amp.m))) + Rational(2 * amp.n) +
                          Rational::reduce(amp.p, amp.q).abs() + Rational(1);
  const double c0 = amp.c0.to_double();
  const double q = static_cast<double>(inst.order);
  CorollaryFactors f;
  f.q_sq = q * q;
  f.length = length.to_double();
  f.cross = q * std::sqrt((amp.c0 * Rational(amp.n) * length).to_double());
  f.pi_prime = kPi * std::sqrt(2.0 * amp.q.get_d() / c0 + 1.0) * sr;
  f.sup_r = sr;
  f.norm_sq = norm_sq(amp.a);
  return f;
}

}  // namespace

double corollary_rhs(const SieveInstance& inst, std::uint64_t scan_limit) {
  const auto f = corollary_factors(inst, scan_limit);
  return (f.q_sq + f.cross) * f.pi_prime * f.norm_sq;
}

double corollary_lhs(const SieveInstance& inst, unsigned threads) {
  const auto pts = inst.points();
  const auto y = inst.frequencies();
  return sieve_sum(pts, inst.amplitude.a, y, threads);
}

double corollary_lhs_direct(const SieveInstance& inst) {
  const auto& amp = inst.amplitude;
  std::vector<Rational> values;
  values.reserve(amp.a.size());
  for (std::size_t t = 0; t < amp.a.size(); ++t) values.push_back(amp.value_at(amp.index(t)));
  const BigInt one = 1;
  double total = 0.0;
  double carry = 0.0;
  const auto seq = farey(inst.order);
  for (const auto& f : seq.fractions()) {
    const Rational x = f.value();
    Complex acc = 0.0;
    for (std::size_t t = 0; t < amp.a.size(); ++t)
      acc += amp.a[t] * unit_phase(phase_mod1(x * values[t], one));
    const double term = std::norm(acc) - carry;
    const double next = total + term;
    carry = (next - total) - term;
    total = next;
  }
  return total;
}

BoundReport verify_corollary(const SieveInstance& inst, std::uint64_t scan_limit, unsigned threads) {
  const auto& amp = inst.amplitude;
  const auto f = corollary_factors(inst, scan_limit);
  const auto seq = farey(inst.order);
  const Rational alpha = amp.alpha();
  const auto pts = scaled_points(seq, alpha);
  const auto y = amp.frequencies();
  const double lhs = sieve_sum(pts, amp.a, y, threads);
  const double rhs = (f.q_sq + f.cross) * f.pi_prime * f.norm_sq;
  const double card = static_cast<double>(pts.size());
  const double l1 = norm_l1(amp.a);
  const double budget = roundoff_budget(card * (static_cast<double>(amp.n) + 4.0), card * l1 * l1) +
                        roundoff_budget(8.0, rhs);
  auto rep = BoundReport::make("corollary", lhs, rhs, budget,
                               {{"Q", static_cast<double>(inst.order)},
                                {"N", static_cast<double>(amp.n)},
                                {"M", amp.m.get_d()},
                                {"c0", amp.c0.to_double()},
                                {"p", amp.p.get_d()},
                                {"q", amp.q.get_d()},
                                {"alpha", alpha.to_double()},
                                {"card_X", card},
                                {"L", f.length},
                                {"sup_r", f.sup_r},
                                {"Pi_prime", f.pi_prime},
                                {"norm_sq", f.norm_sq}});

  if (pts.size() >= 2) {
    const SpacedSet xs = as_spaced_set(seq, alpha);
    auto th = verify_theorem1(xs, amp.a, y, threads);
    th.name = "theorem1_reduced";
    rep.cross_checks.push_back(std::move(th));
  }

  const double q = static_cast<double>(inst.order);
  const double majorant = theorem1_rhs_from_factors(
      q * q, diameter_envelope(amp.q, amp.p, amp.m, amp.n).get_d(), alpha.to_double() / (q * q),
      alpha.to_double(), f.sup_r, f.norm_sq);
  rep.cross_checks.push_back(BoundReport::make("theorem1_majorant_le_corollary", majorant, rhs,
                                               roundoff_budget(16.0, rhs)));
  return rep;
}

std::vector<SharpnessCell> sharpness_probe(std::int64_t q_max, std::int64_t n_max, unsigned threads) {
  if (q_max < 2 || n_max < 1) throw DomainError("sharpness_probe: need Qmax >= 2 and Nmax >= 1");
  const std::size_t rows = static_cast<std::size_t>(q_max - 1);
  const std::size_t cols = static_cast<std::size_t>(n_max);
  return parallel_map(
      rows * cols,
      [&](std::size_t idx) {
        const std::int64_t order = 2 + static_cast<std::int64_t>(idx / cols);
        const std::int64_t n = 1 + static_cast<std::int64_t>(idx % cols);
        auto amp = QuadraticAmplitude::make(Rational(1), Rational(0), Rational(0), BigInt(0), n,
                                            ones(static_cast<std::size_t>(n)));
        const auto inst = SieveInstance::make(std::move(amp), order);
        const double lhs = corollary_lhs(inst);
        const double scale = static_cast<double>(n * order + order * order) * static_cast<double>(n);
        const double card = static_cast<double>(totient_sum(static_cast<std::uint64_t>(order)) - 1);
        const double nd = static_cast<double>(n);
        const double budget = roundoff_budget(card * (nd + 4.0), card * nd * nd);
        return SharpnessCell{order, n, lhs, lhs / scale, corollary_rhs(inst) / scale, budget};
      },
      threads);
}

}  // namespace lsl
