#pragma once

#include <map>
#include <optional>
#include <string>

#include "qcalc/rational.hpp"

namespace qcalc {

/// Exponent vector over base-dimension symbols: a canonical finite map from
/// symbol to nonzero rational exponent. The empty map is dimensionless. The
/// canonical-form invariant (no zero exponents, keys sorted by the map) makes
/// structural equality coincide with dimension equality.
class Dimension {
 public:
  Dimension() = default;
  /// The dimension of a single base symbol, exponent 1.
  static Dimension base(const std::string& symbol);
  /// Builds from arbitrary exponents; zero entries are dropped.
  static Dimension from_exponents(std::map<std::string, Rational> exps);

  bool is_dimensionless() const { return exps_.empty(); }
  const std::map<std::string, Rational>& exponents() const { return exps_; }
  /// Zero when the symbol is absent.
  Rational exponent_of(const std::string& symbol) const;

  Dimension operator*(const Dimension& o) const;
  Dimension inverse() const;
  Dimension pow(const Rational& e) const;

  bool operator==(const Dimension&) const = default;
  bool operator<(const Dimension& o) const { return exps_ < o.exps_; }

  /// Canonical text form: factors `symbol` or `symbol^(p/q)` joined by `*`,
  /// symbols ascending, exponent omitted when 1: "m", "m*s^(-2)",
  /// "Hz^(-1/2)". Dimensionless renders as "1".
  std::string to_string() const;
  /// Inverse of to_string; nullopt on malformed text.
  static std::optional<Dimension> parse(const std::string& text);

 private:
  std::map<std::string, Rational> exps_;
};

}  // namespace qcalc
