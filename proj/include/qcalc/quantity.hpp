#pragma once

#include <string>

#include "qcalc/dimension.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/scalar.hpp"

namespace qcalc {

/// A quantity: scalar value plus dimension. The zero of dimension d is
/// (scalar 0, d), so distinct dimensions have distinct zeros.
struct Quantity {
  Scalar value;
  Dimension dim;
};

/// Diagnostic payload attached to the undefined element: which operation on
/// which dimensions produced it. Excluded from equality (the axioms have a
/// single undefined element).
struct UndefInfo {
  std::string op;
  Dimension left;
  Dimension right;

  std::string message() const {
    return "incompatible dimensions: " + left.to_string() + " vs " +
           right.to_string();
  }
};

/// Result of a partial operation: a quantity or the undefined element.
class PartialResult {
 public:
  PartialResult(Quantity q) : defined_(true), q_(std::move(q)) {}  // NOLINT
  static PartialResult undefined(UndefInfo info) {
    PartialResult r;
    r.info_ = std::move(info);
    return r;
  }

  bool defined() const { return defined_; }
  const Quantity& get() const {
    if (!defined_) throw Error("undefined result has no quantity");
    return q_;
  }
  const UndefInfo& why() const {
    if (defined_) throw Error("defined result has no diagnostic");
    return info_;
  }

 private:
  PartialResult() : defined_(false) {}
  bool defined_ = false;
  Quantity q_;
  UndefInfo info_;
};

/// The canonical partially additive field over a scalar carrier: elements
/// are quantities (value, dimension), addition is defined exactly on equal
/// dimensions, multiplication is total, and each dimension d has its own
/// zero (0, d). The undefined element is represented by PartialResult.
///
/// Operations taking PartialResult absorb undefined inputs (keeping the
/// left-most diagnostic); operations taking Quantity are the total cores.
class Paf {
 public:
  explicit Paf(ScalarField field) : field_(std::move(field)) {}
  const ScalarField& field() const { return field_; }

  Quantity make(Scalar value, Dimension dim) const {
    return Quantity{std::move(value), std::move(dim)};
  }
  Quantity from_int(long n, Dimension dim = {}) const {
    return Quantity{field_.from_int(n), std::move(dim)};
  }
  /// The multiplicative identity (1, {}).
  Quantity one() const { return Quantity{field_.one(), {}}; }
  /// The zero of dimension d: (0, d).
  Quantity zero_of(Dimension dim) const {
    return Quantity{field_.zero(), std::move(dim)};
  }
  /// The zero of a's dimension.
  Quantity zero_of(const Quantity& a) const {
    return Quantity{field_.zero(), a.dim};
  }

  bool is_zero(const Quantity& a) const { return field_.is_zero(a.value); }
  bool is_dimensionless(const Quantity& a) const {
    return a.dim.is_dimensionless();
  }
  /// Addition is defined exactly on equal dimensions.
  bool summable(const Quantity& a, const Quantity& b) const {
    return a.dim == b.dim;
  }

  /// (value, dim) equality of quantities.
  bool eq(const Quantity& a, const Quantity& b) const {
    return a.dim == b.dim && field_.equal(a.value, b.value);
  }
  /// Strong equality of partial results: both undefined, or both defined and
  /// equal as quantities. Diagnostics are ignored.
  bool strong_eq(const PartialResult& a, const PartialResult& b) const {
    if (a.defined() != b.defined()) return false;
    return !a.defined() || eq(a.get(), b.get());
  }

  PartialResult add(const PartialResult& a, const PartialResult& b) const;
  PartialResult sub(const PartialResult& a, const PartialResult& b) const;
  PartialResult mul(const PartialResult& a, const PartialResult& b) const;
  /// Division by a zero quantity throws ZeroInverseError.
  PartialResult div(const PartialResult& a, const PartialResult& b) const;

  Quantity neg(const Quantity& a) const {
    return Quantity{field_.neg(a.value), a.dim};
  }
  PartialResult neg(const PartialResult& a) const {
    return a.defined() ? PartialResult(neg(a.get())) : a;
  }
  /// Multiplicative inverse; throws ZeroInverseError on zero quantities (the
  /// axioms define inverses only away from the zero set).
  Quantity invert(const Quantity& a) const {
    return Quantity{field_.invert(a.value), a.dim.inverse()};
  }
  PartialResult invert(const PartialResult& a) const {
    return a.defined() ? PartialResult(invert(a.get())) : a;
  }

  /// a^e for exact rational e = p/q (reduced, q >= 1): the value goes
  /// through the canonical qth root then the pth power, the dimension is
  /// scaled by e. Zero base needs e > 0 (ZeroInverseError otherwise);
  /// a missing scalar root throws NoRootError.
  Quantity pow(const Quantity& a, const Rational& e) const;
  PartialResult pow(const PartialResult& a, const Rational& e) const {
    return a.defined() ? PartialResult(pow(a.get(), e)) : a;
  }

  /// "3", "7 m", "-1/2 m*s^(-2)": value, then the dimension in canonical
  /// form when not dimensionless. This equals the rendering in an all-ones
  /// base unit system.
  std::string to_string(const Quantity& a) const;

 private:
  ScalarField field_;
};

}  // namespace qcalc
