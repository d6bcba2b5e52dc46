#pragma once

#include <optional>
#include <string>

#include "qcalc/rational.hpp"

namespace qcalc {

/// Element of Q(i): a + b*i with exact rational components.
struct ComplexRational {
  Rational re;
  Rational im;

  bool operator==(const ComplexRational&) const = default;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  ComplexRational operator-() const { return {-re, -im}; }
  ComplexRational operator+(const ComplexRational& o) const {
    return {re + o.re, im + o.im};
  }
  ComplexRational operator-(const ComplexRational& o) const {
    return {re - o.re, im - o.im};
  }
  ComplexRational operator*(const ComplexRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ComplexRational conj() const { return {re, -im}; }
  /// re^2 + im^2, the field norm down to Q.
  Rational norm() const { return re * re + im * im; }
  /// Throws ZeroInverseError on zero.
  ComplexRational inverse() const;
  ComplexRational operator/(const ComplexRational& o) const {
    return *this * o.inverse();
  }

  /// "0", "3", "-1/2i", "2+i", "1-3/4i".
  std::string to_string() const;
};

/// Exact nth root in Q(i). Returns the canonical root: among all z in Q(i)
/// with z^n == w, the lexicographically greatest by (re, im). This extends
/// the real conventions (positive root for even n, sign-preserving for odd
/// n) to the complex carrier. Returns nullopt when w has no root in Q(i).
/// Requires n >= 1.
///
/// Existence is decided exactly. Roots off the real and imaginary axes are
/// found by clearing denominators: any root of w scaled by a common
/// denominator C of w is integral over Z[i] and hence lies in Z[i], so
/// candidates are Gaussian integers whose norm is the exact integer nth root
/// of norm(w * C^n), which leaves finitely many lattice points to test.
std::optional<ComplexRational> complex_nth_root(const ComplexRational& w,
                                                unsigned n);

}  // namespace qcalc
