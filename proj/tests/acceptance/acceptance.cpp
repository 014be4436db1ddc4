#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "lsl/expsum.hpp"
#include "lsl/farey.hpp"
#include "lsl/instances.hpp"
#include "lsl/io.hpp"
#include "lsl/lattice.hpp"
#include "lsl/parallel.hpp"
#include "lsl/sieve_bounds.hpp"
#include "oracles.hpp"

namespace lsl::acceptance {

namespace {

// Outcome of one criterion body: pass flag plus a one-line summary.
struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "FIRST FAILURE: " << why << "; ";
    pass = false;
  }
};

double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

// 1. Farey cardinality, adjacency and spacing for every Q <= 1000.
void farey_correctness(Outcome& o) {
  constexpr std::int64_t kMaxOrder = 1000;
  const auto phi = totient_table(kMaxOrder);
  std::uint64_t running = 0;
  std::uint64_t pairs_checked = 0;
  for (std::int64_t order = 1; order <= kMaxOrder; ++order) {
    running += phi[static_cast<std::size_t>(order)];
    if (totient_sum(static_cast<std::uint64_t>(order)) != running) o.fail("totient_sum mismatch");
    if (order <= 200 && oracle::gcd_pair_count(static_cast<std::uint64_t>(order)) != running)
      o.fail("totient_sum disagrees with gcd enumeration at Q=" + std::to_string(order));
    if (order == 1) {
      bool threw = false;
      try {
        (void)farey(1);
      } catch (const DomainError&) {
        threw = true;
      }
      if (!threw) o.fail("F(1) did not raise the empty-sequence error");
      continue;
    }
    const auto seq = farey(order);
    const auto& f = seq.fractions();
    if (f.size() != running - 1) o.fail("Card F(" + std::to_string(order) + ") != sum phi - 1");
    if (f.size() > static_cast<std::uint64_t>(order * order)) o.fail("Card F(Q) > Q^2");
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      const auto& [a, b] = f[i];
      const auto& [c, d] = f[i + 1];
      if (b * c - a * d != 1) o.fail("adjacency bc - ad != 1 at Q=" + std::to_string(order));
      // gap = 1/(bd) >= 1/Q^2
      if (b * d > order * order) o.fail("gap below 1/Q^2 at Q=" + std::to_string(order));
      ++pairs_checked;
    }
  }
  o.detail << "Q<=1000, " << pairs_checked << " adjacent pairs checked, |F(1000)|="
           << farey(kMaxOrder).size();
}

// 2. r(n) by the multiplicative formula against a box enumeration.
void r_equivalence(Outcome& o) {
  constexpr std::uint64_t kMax = 1'000'000;
  const auto brute = oracle::box_r_table(kMax);
  std::uint64_t mismatches = 0;
  for (std::uint64_t n = 0; n <= kMax; ++n)
    if (r(n) != brute[n]) ++mismatches;
  if (mismatches) o.fail(std::to_string(mismatches) + " r(n) mismatches");
  const auto s144 = sup_r(144);
  const auto s2304 = sup_r(2304);
  if (s144.value != 16 || s144.argmax != 65) o.fail("sup_r(144) != 16 at 65");
  if (s2304.value != 32 || s2304.argmax != 1105) o.fail("sup_r(2304) != 32 at 1105");
  o.detail << "n<=10^6 exact, sup_r(144)=" << s144.value << "@" << s144.argmax
           << ", sup_r(2304)=" << s2304.value << "@" << s2304.argmax;
}

// 3. Circle coefficient bounds over the exhaustive parameter grid.
void prop1_sweep(Outcome& o) {
  const std::vector<Rational> ms = {Rational(0), Rational(1), Rational(2), Rational::reduce(1, 2),
                                    Rational::reduce(3, 2)};
  std::uint64_t problems = 0, applicable = 0, violations = 0;
  for (long c1 = 1; c1 <= 6; ++c1) {
    for (long c2 = -6; c2 <= 6; ++c2) {
      if (!coprime(c1, c2)) continue;
      for (long c3 = 0; c3 <= 200; ++c3) {
        for (const auto& m : ms) {
          for (long h = 1; h <= 3; ++h) {
            ++problems;
            const CirclePointProblem prob{c1, c2, c3, m, Rational(h)};
            if (circle_points(prob).size() < 3) continue;
            ++applicable;
            if (!check_prop1_bounds(prob).pass()) ++violations;
          }
        }
      }
    }
  }
  if (violations) o.fail(std::to_string(violations) + " bound violations");
  if (applicable == 0) o.fail("no problem had three box points");
  o.detail << problems << " problems, " << applicable << " with >=3 points, " << violations
           << " violations";
}

// 4. sup_k A_Y(k) <= sup_r(144 N^4) for random quadratic frequency sets.
void additive_bound(Outcome& o, unsigned threads) {
  constexpr std::uint64_t kSeed = 0xA4;
  struct Row {
    bool ok;
    std::uint64_t sup_a, bound;
    std::int64_t n;
  };
  const auto rows = parallel_map(
      500,
      [&](std::size_t idx) {
        std::mt19937_64 rng(mix_seed(kSeed, idx));
        auto pick = [&](std::int64_t lo, std::int64_t hi) {
          return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
        };
        const std::int64_t q = pick(1, 20);
        std::int64_t p = 0;
        do {
          p = pick(-20, 20);
        } while (std::gcd(p, q) != 1);
        const BigInt m = pick(-1'000'000, 1'000'000);
        std::int64_t n = pick(1, 40);
        // exhaustive sup_r only up to 3*10^6: larger N are capped
        if (144 * n * n * n * n > static_cast<std::int64_t>(kSupRScanLimit)) n = 12;
        const auto prof = additive_profile(BigInt(q), BigInt(p), m, n);
        const std::uint64_t bound = sup_r(corollary_scan_bound(Rational(n))).value;
        std::uint64_t total = 0;
        for (const auto& [k, c] : prof.counts) total += c;
        const bool ok = prof.sup_a <= bound && total == static_cast<std::uint64_t>(n * n);
        return Row{ok, prof.sup_a, bound, n};
      },
      threads);
  std::uint64_t violations = 0, max_sup = 0;
  for (const auto& r : rows) {
    if (!r.ok) ++violations;
    max_sup = std::max(max_sup, r.sup_a);
  }
  if (violations) o.fail(std::to_string(violations) + " violations");
  o.detail << "500 instances, max sup_A=" << max_sup << ", " << violations << " violations";
}

// 5. Combinatorial moments against quadrature and the quadruple loop.
void moment_oracles(Outcome& o) {
  constexpr std::size_t kNodes = 1u << 16;
  constexpr double kTol = 1e-6;
  std::mt19937_64 rng(0x5EED5);
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  double worst2 = 0.0, worst4 = 0.0;
  std::uint64_t exact_mismatch = 0;
  for (int inst = 0; inst < 50; ++inst) {
    const auto n = static_cast<std::size_t>(pick(1, 12));
    const std::int64_t base = pick(-50, 0);
    std::vector<BigInt> y(n);
    for (auto& v : y) v = base + pick(0, 100);  // Delta(Y) <= 100
    auto a = random_amplitudes(n, rng());
    for (auto& v : a)
      if (std::abs(v) < 1e-3) v = 1.0;
    const double l2 = l2_moment(a, y);
    const double l4 = l4_moment_abs(a, y);
    worst2 = std::max(worst2, rel_diff(l2, oracle::quadrature_l2(a, y, kNodes)));
    worst4 = std::max(worst4, rel_diff(l4, oracle::quadrature_l4_abs(a, y, kNodes)));

    std::vector<Rational> mags(n);
    for (auto& m : mags) m = Rational::reduce(pick(0, 20), pick(1, 7));
    if (l4_moment_abs_exact(mags, y) != oracle::quadruple_l4(mags, y)) ++exact_mismatch;
  }
  if (worst2 > kTol) o.fail("l2 vs quadrature rel diff " + format_double(worst2));
  if (worst4 > kTol) o.fail("l4 vs quadrature rel diff " + format_double(worst4));
  if (exact_mismatch) o.fail(std::to_string(exact_mismatch) + " exact l4 mismatches");
  o.detail << "50 instances, worst rel diff l2=" << worst2 << " l4=" << worst4
           << ", exact l4 mismatches=" << exact_mismatch;
}

SieveInstance hand_instance() {
  auto amp = QuadraticAmplitude::make(Rational(1), Rational(0), Rational(0), BigInt(0), 2, ones(2));
  return SieveInstance::make(std::move(amp), 3);
}

// 6. Randomized Lemma / Theorem / Corollary sweeps plus the hand instance.
void verification_sweeps(Outcome& o, unsigned threads) {
  auto count_fails = [&](std::size_t count, std::uint64_t seed, auto&& check) {
    const auto ok = parallel_map(count, [&](std::size_t i) { return check(mix_seed(seed, i)); }, threads);
    return static_cast<std::size_t>(std::count(ok.begin(), ok.end(), false));
  };
  const auto lemma_fails = count_fails(1000, 0x1E, [](std::uint64_t s) {
    const auto inst = random_spaced_instance(s);
    return verify_lemma(inst.x, inst.a, inst.y).passed();
  });
  const auto theorem_fails = count_fails(1000, 0x7E, [](std::uint64_t s) {
    const auto inst = random_spaced_instance(s);
    return verify_theorem1(inst.x, inst.a, inst.y).passed();
  });
  const auto corollary_fails = count_fails(200, 0xC0, [](std::uint64_t s) {
    return verify_corollary(random_sieve_instance(s)).passed();
  });
  if (lemma_fails) o.fail(std::to_string(lemma_fails) + " lemma failures");
  if (theorem_fails) o.fail(std::to_string(theorem_fails) + " theorem failures");
  if (corollary_fails) o.fail(std::to_string(corollary_fails) + " corollary failures");

  const auto rep = verify_corollary(hand_instance());
  const double expected_rhs =
      (9.0 + 3.0 * std::sqrt(10.0)) * std::numbers::pi * std::sqrt(3.0) * 32.0 * 2.0;
  if (std::abs(rep.lhs - 8.0) > 1e-9) o.fail("hand instance lhs " + format_double(rep.lhs));
  if (rel_diff(rep.rhs, expected_rhs) > 1e-6) o.fail("hand instance rhs " + format_double(rep.rhs));
  if (!rep.passed()) o.fail("hand instance did not pass");
  o.detail << "lemma 1000/" << lemma_fails << " fail, theorem 1000/" << theorem_fails
           << " fail, corollary 200/" << corollary_fails << " fail; hand lhs=" << rep.lhs
           << " rhs=" << format_double(rep.rhs);
}

// 7. M = 10^12: exact phases stay correct where double phases do not.
void large_m(Outcome& o) {
  const Rational c0 = Rational::reduce(3, 2);
  const Rational c1 = c0 * Rational::reduce(1, 3);  // p/q = 1/3
  const Rational c2 = Rational::reduce(1, 3);
  constexpr std::int64_t kN = 8, kQ = 8;
  const auto a = random_amplitudes(kN, 7);
  const BigInt big("1000000000000", 10);

  auto instance = [&](const BigInt& m) {
    return SieveInstance::make(QuadraticAmplitude::make(c0, c1, c2, m, kN, a), kQ);
  };
  // Shifting i by L = den(c0) * q * lcm(1..Q) moves every x P(i) by an integer.
  BigInt period = 1;
  for (long b = 1; b <= kQ; ++b) mpz_lcm_ui(period.get_mpz_t(), period.get_mpz_t(), b);
  period *= c0.den() * 3;
  BigInt reduced_m;
  mpz_fdiv_r(reduced_m.get_mpz_t(), big.get_mpz_t(), period.get_mpz_t());

  const auto at_big = instance(big);
  const auto at_small = instance(reduced_m);
  const auto rep = verify_corollary(at_big);
  if (!rep.passed()) o.fail("corollary verification failed at M=10^12");

  const double reduced_big = corollary_lhs(at_big);
  const double reduced_small = corollary_lhs(at_small);
  const double direct_big = corollary_lhs_direct(at_big);
  const double naive_small = oracle::naive_corollary_lhs(at_small);
  const double naive_big = oracle::naive_corollary_lhs(at_big);

  if (rel_diff(reduced_big, reduced_small) > 1e-12) o.fail("reduced route not invariant under M -> M mod L");
  if (rel_diff(direct_big, reduced_small) > 1e-9) o.fail("direct exact route disagrees with reduced route");
  if (rel_diff(naive_small, reduced_small) > 1e-8) o.fail("naive double route inaccurate at small M");
  const double naive_err = rel_diff(naive_big, reduced_big);
  if (naive_err < 1e-3) o.fail("naive double route unexpectedly accurate at M=10^12");
  o.detail << "M=10^12 lhs=" << reduced_big << " (M mod " << period.get_str() << " = "
           << reduced_m.get_str() << ": " << reduced_small << ", direct " << direct_big
           << "), naive double rel err " << naive_err;
}

std::string sharpness_csv(const std::vector<SharpnessCell>& cells) {
  std::ostringstream s;
  s << "Q,N,lhs,ratio,envelope\n";
  for (const auto& c : cells)
    s << c.order << ',' << c.n << ',' << format_double(c.lhs) << ',' << format_double(c.ratio) << ','
      << format_double(c.envelope) << '\n';
  return s.str();
}

// 8. Sharpness probe grid: positive ratios under the envelope, deterministic.
// A ratio counts as positive only when the lhs clears its roundoff budget.
void sharpness(Outcome& o, unsigned threads) {
  const auto first = sharpness_probe(20, 12, threads);
  const auto second = sharpness_probe(20, 12, 1);
  double lo = 1e300, hi = 0.0;
  std::vector<std::string> vanishing;
  std::size_t above = 0;
  for (const auto& c : first) {
    if (!(c.lhs > c.error_budget))
      vanishing.push_back("(" + std::to_string(c.order) + "," + std::to_string(c.n) + ")");
    if (!(c.ratio <= c.envelope)) ++above;
    lo = std::min(lo, c.ratio);
    hi = std::max(hi, c.ratio);
  }
  if (!vanishing.empty()) {
    std::string cells;
    for (const auto& v : vanishing) cells += (cells.empty() ? "" : " ") + v;
    o.fail(std::to_string(vanishing.size()) + " cells with lhs not certified positive (Q,N): " + cells);
  }
  if (above) o.fail(std::to_string(above) + " ratios above envelope");
  if (first.size() != 19 * 12) o.fail("grid has wrong size");
  if (sharpness_csv(first) != sharpness_csv(second)) o.fail("table not deterministic");
  const auto cell = std::find_if(first.begin(), first.end(),
                                 [](const SharpnessCell& c) { return c.order == 3 && c.n == 2; });
  if (cell == first.end() || std::abs(cell->ratio - 8.0 / 30.0) > 1e-12) o.fail("Q=3,N=2 ratio != 8/30");
  o.detail << first.size() << " cells, ratio in [" << lo << ", " << hi << "]";
}

}  // namespace

std::vector<CriterionResult> run_all(std::ostream& out, unsigned threads) {
  struct Entry {
    int id;
    const char* title;
    double limit;
    std::function<void(Outcome&)> body;
  };
  const std::vector<Entry> entries = {
      {1, "Farey correctness", 10.0, farey_correctness},
      {2, "r(n) oracle equivalence", 60.0, r_equivalence},
      {3, "Circle coefficient bounds sweep", 30.0, prop1_sweep},
      {4, "Additive count bound", 300.0, [&](Outcome& o) { additive_bound(o, threads); }},
      {5, "Moment oracles", 300.0, moment_oracles},
      {6, "Lemma / diameter theorem / Farey bound verification", 300.0,
       [&](Outcome& o) { verification_sweeps(o, threads); }},
      {7, "Large-|M| robustness", 300.0, large_m},
      {8, "Sharpness probe", 300.0, [&](Outcome& o) { sharpness(o, threads); }},
  };
  std::vector<CriterionResult> results;
  for (const auto& e : entries) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.body(o);
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > e.limit) o.fail("runtime " + format_double(secs) + " s over limit");
    CriterionResult r{e.id, e.title, o.pass, o.detail.str(), secs, e.limit};
    out << (r.pass ? "[PASS] " : "[FAIL] ") << "AC" << r.id << " " << r.title << ": " << r.detail
        << " (" << std::fixed << std::setprecision(2) << secs << " s / limit " << e.limit << " s)"
        << std::defaultfloat << std::setprecision(6) << '\n';
    out.flush();
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

}  // namespace lsl::acceptance
