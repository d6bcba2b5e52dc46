#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "qcalc/check_report.hpp"
#include "qcalc/complex_rational.hpp"
#include "qcalc/rational.hpp"

namespace qcalc {

enum class ScalarKind { ExactRational, ComplexRational, PrimeField, Float64 };

/// Element of GF(p), stored as its least non-negative representative.
struct PrimeElem {
  std::uint32_t v = 0;
  bool operator==(const PrimeElem&) const = default;
};

/// A scalar value. Which alternative is active must agree with the owning
/// ScalarField's kind; values from different fields must not be mixed.
using Scalar = std::variant<Rational, ComplexRational, PrimeElem, double>;

/// One of the supported scalar carriers together with its arithmetic.
/// ExactRational, ComplexRational and PrimeField are exact; Float64 is the
/// lone inexact carrier and is excluded from exact-identity checking.
class ScalarField {
 public:
  static ScalarField exact_rational() {
    return ScalarField(ScalarKind::ExactRational, 0);
  }
  static ScalarField complex_rational() {
    return ScalarField(ScalarKind::ComplexRational, 0);
  }
  /// p must be a prime below 2^16 (the carrier targets small table-checkable
  /// fields); throws Error otherwise.
  static ScalarField prime_field(std::uint32_t p);
  static ScalarField float64() { return ScalarField(ScalarKind::Float64, 0); }

  ScalarKind kind() const { return kind_; }
  bool exact() const { return kind_ != ScalarKind::Float64; }
  /// Prime modulus; 0 for non-modular carriers.
  std::uint32_t modulus() const { return p_; }
  /// Short carrier name for diagnostics ("rational", "complex", "gf(7)",
  /// "float64").
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long n) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws ZeroInverseError on the zero scalar.
  Scalar invert(const Scalar& a) const;
  /// Throws ZeroInverseError when b is zero.
  Scalar div(const Scalar& a, const Scalar& b) const;
  /// a^k for integer k; k < 0 inverts (throws ZeroInverseError on zero base
  /// unless k >= 0; 0^0 is 1 by the empty-product convention).
  Scalar pow_int(const Scalar& a, long k) const;

  bool equal(const Scalar& a, const Scalar& b) const;
  /// Equality up to relative tolerance; identical to equal() for the exact
  /// carriers, |a-b| <= tol*max(1,|a|,|b|) for Float64.
  bool approx_equal(const Scalar& a, const Scalar& b, double tol) const;
  bool is_zero(const Scalar& a) const { return equal(a, zero()); }
  bool is_one(const Scalar& a) const { return equal(a, one()); }

  /// Canonical nth root when one exists in the carrier, nullopt otherwise.
  /// Tie-breaks: ExactRational picks the sign of x for odd n and the
  /// non-negative root for even n; ComplexRational picks the lexicographic
  /// maximum by (re, im); PrimeField picks the smallest representative;
  /// Float64 mirrors the real rules. Requires n >= 1.
  std::optional<Scalar> nth_root(const Scalar& a, unsigned n) const;

  std::string to_string(const Scalar& a) const;
  /// Parses one scalar literal of this carrier ("-3/4", "2.5", "1+2i", "5");
  /// PrimeField reduces integers mod p. Returns nullopt on syntax errors.
  std::optional<Scalar> parse(const std::string& text) const;

  /// Property check of the field axioms on randomly sampled elements
  /// (deterministic in the seed). Float64 is checked with a relative
  /// tolerance since its arithmetic only approximates the identities.
  CheckReport self_check(int samples, std::uint64_t seed) const;

  bool operator==(const ScalarField& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }

 private:
  ScalarField(ScalarKind k, std::uint32_t p) : kind_(k), p_(p) {}
  ScalarKind kind_;
  std::uint32_t p_;
};

}  // namespace qcalc
