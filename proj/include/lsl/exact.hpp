// exact.hpp
//
// Exact integer and rational arithmetic shared by every other module.
//
// Big integers are GMP's mpz_class. Rational wraps mpq_class and keeps it
// canonical (lowest terms, positive denominator) after every operation, so
// two Rationals compare equal iff their num/den pairs are identical.

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lsl {

using BigInt = mpz_class;

/// Input outside an operation's mathematical domain.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

/// The requested quantity exceeds the configured exhaustive-scan limit.
struct UncomputableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT: integers embed implicitly
  Rational(int value) : v_(static_cast<long>(value)) {}  // NOLINT
  Rational(const BigInt& value) : v_(value) {}  // NOLINT

  /// Lowest-form num/den; throws DomainError when den == 0.
  static Rational reduce(const BigInt& num, const BigInt& den);

  /// Parses "a/b" or "a" (optional sign on a). Throws DomainError.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return v_.get_num(); }
  const BigInt& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_integer() const { return den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }
  std::string to_string() const;

  Rational abs() const;
  /// Largest integer <= value.
  BigInt floor() const;
  /// Smallest integer >= value.
  BigInt ceil() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  mpq_class v_;
};

/// A rational in [0, 1): the argument of e(.) after exact reduction mod 1.
struct PhaseFraction {
  Rational value;

  /// The phase as a double in [0, 1).
  double turns() const { return value.to_double(); }
};

inline Rational reduce(const BigInt& num, const BigInt& den) {
  return Rational::reduce(num, den);
}

/// (x.num * y mod x.den) / x.den, i.e. x*y reduced mod 1, computed exactly.
PhaseFraction phase_mod1(const Rational& x, const BigInt& y);

/// Sum of Euler's phi(q) over 1 <= q <= order.
std::uint64_t totient_sum(std::uint64_t order);

/// Euler phi for all 0..limit (phi[0] = 0).
std::vector<std::uint32_t> totient_table(std::uint32_t limit);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial-division factorization; primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

BigInt gcd(const BigInt& a, const BigInt& b);

/// The "(a,b) = 1" convention: gcd(|a|,|b|) = 1, which admits (+-1, 0).
bool coprime(const BigInt& a, const BigInt& b);

/// Decimal string; accepts an optional leading sign. Throws DomainError.
BigInt parse_bigint(std::string_view text);

}  // namespace lsl
