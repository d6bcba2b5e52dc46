#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace qcalc {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Construction from a zero denominator throws.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  /// Parses "123", "-4/6" (reduced on input) or "2.75" (exact decimal).
  /// Returns nullopt on any other shape; never throws.
  static std::optional<Rational> parse(const std::string& text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational operator+(const Rational& o) const {
    return Rational(mpq_class(q_ + o.q_));
  }
  Rational operator-(const Rational& o) const {
    return Rational(mpq_class(q_ - o.q_));
  }
  Rational operator*(const Rational& o) const {
    return Rational(mpq_class(q_ * o.q_));
  }
  /// Division by zero throws ZeroInverseError.
  Rational operator/(const Rational& o) const;
  /// Multiplicative inverse; throws ZeroInverseError on zero.
  Rational inverse() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  std::strong_ordering operator<=>(const Rational& o) const {
    int c = cmp(q_, o.q_);
    return c < 0    ? std::strong_ordering::less
           : c == 0 ? std::strong_ordering::equal
                    : std::strong_ordering::greater;
  }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;
  double to_double() const { return q_.get_d(); }

 private:
  mpq_class q_;  // invariant: canonicalized
};

/// Exact integer nth root: returns r with r^n == z when one exists.
/// Requires n >= 1; for even n requires z >= 0 (else nullopt). For odd n the
/// root carries the sign of z.
std::optional<mpz_class> exact_int_root(const mpz_class& z, unsigned n);

/// Exact rational nth root with the canonical tie-break: for odd n the root
/// has the sign of x; for even n it is the non-negative root. Requires
/// n >= 1. Returns nullopt when no rational root exists.
std::optional<Rational> rational_nth_root(const Rational& x, unsigned n);

}  // namespace qcalc
