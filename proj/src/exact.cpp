#include "lsl/exact.hpp"

#include <cctype>

namespace lsl {

Rational Rational::reduce(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  mpq_class q;
  q.get_num() = num;
  q.get_den() = den;
  return Rational(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  return reduce(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return out;
}

BigInt Rational::ceil() const {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return out;
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw DomainError("division by zero rational");
  return Rational(mpq_class(a.v_ / b.v_));
}
Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

PhaseFraction phase_mod1(const Rational& x, const BigInt& y) {
  BigInt prod = x.num() * y;
  BigInt rem;
  // den > 0, so the floor remainder lies in [0, den).
  mpz_fdiv_r(rem.get_mpz_t(), prod.get_mpz_t(), x.den().get_mpz_t());
  return PhaseFraction{Rational::reduce(rem, x.den())};
}

std::vector<std::uint32_t> totient_table(std::uint32_t limit) {
  std::vector<std::uint32_t> phi(static_cast<std::size_t>(limit) + 1);
  for (std::uint32_t i = 0; i <= limit; ++i) phi[i] = i;
  for (std::uint32_t p = 2; p <= limit; ++p) {
    if (phi[p] != p) continue;  // composite, already touched
    for (std::uint32_t k = p; k <= limit; k += p) phi[k] -= phi[k] / p;
  }
  return phi;
}

std::uint64_t totient_sum(std::uint64_t order) {
  if (order < 1) throw DomainError("totient_sum: order must be >= 1");
  if (order > 100'000'000) throw DomainError("totient_sum: order too large for table sieve");
  const auto phi = totient_table(static_cast<std::uint32_t>(order));
  std::uint64_t total = 0;
  for (std::size_t q = 1; q < phi.size(); ++q) total += phi[q];
  return total;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be >= 1");
  std::vector<PrimePower> out;
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  take(2);
  take(3);
  // 6k +- 1 wheel
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool coprime(const BigInt& a, const BigInt& b) { return gcd(a, b) == 1; }

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty() || s == "-") throw DomainError("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = (s.front() == '-') ? 1 : 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw DomainError("not an integer: '" + std::string(text) + "'");
  }
  return BigInt(s, 10);
}

}  // namespace lsl
