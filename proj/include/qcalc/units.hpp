#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcalc/quantity.hpp"

namespace qcalc {

/// Result of splitting a quantity against a unit system: q = value * unit,
/// value dimensionless, unit the system's representative for q's dimension.
struct Decomposition {
  Quantity value;
  Quantity unit;
};

/// Outcome of a coherence probe. When a law fails, `witness` carries the
/// offending dimension pair and `detail` the mismatched units.
struct CoherenceResult {
  bool coherent = true;
  std::optional<std::pair<Dimension, Dimension>> witness;
  std::string detail;
};

/// One nonzero quantity per dimension. Two flavours:
///   - explicit: a finite map, exactly the entries given;
///   - generated: built from base units, one per base symbol, extended to
///     any dimension by unit(d) = prod base(s)^d(s). Generated systems are
///     coherent by construction on every dimension they can reach.
class UnitSystem {
 public:
  /// Explicit system. Each entry is keyed by its own dimension; entries must
  /// be nonzero and dimensions distinct.
  static UnitSystem from_entries(const Paf& paf,
                                 const std::vector<Quantity>& units);

  /// Generated coherent system. Each base unit must be nonzero and live
  /// exactly on its own symbol with exponent 1.
  static UnitSystem coherent_from_base_units(
      const Paf& paf, const std::map<std::string, Quantity>& base);

  const Paf& paf() const { return paf_; }
  bool generated() const { return generated_; }

  /// The unit for dimension d. Throws MissingUnitError when the system has
  /// no entry (explicit) or d uses an unknown base symbol (generated), and
  /// NoRootError when a fractional exponent needs a root the base unit's
  /// value does not have.
  Quantity unit_for(const Dimension& d) const;

  /// Theorem-2 split: q = value * unit with value dimensionless.
  Decomposition decompose(const Quantity& q) const;

  /// Inverse of decompose. Throws NotDimensionlessError when value carries
  /// a dimension.
  Quantity recompose(const Quantity& value, const Quantity& unit) const;

  /// Group-law probe: over all ordered pairs (d1, d2) from `probe` checks
  /// unit(d1)*unit(d2) = unit(d1*d2), for each d checks unit(d)^-1 =
  /// unit(d^-1), and checks unit({}) = 1. Probed dimensions must resolve;
  /// a law is skipped when a *derived* dimension (product, inverse, {}) has
  /// no unit in an explicit system, since the system is silent there.
  CoherenceResult is_coherent(const std::vector<Dimension>& probe) const;

 private:
  explicit UnitSystem(Paf paf) : paf_(std::move(paf)) {}

  Paf paf_;
  bool generated_ = false;
  std::map<Dimension, Quantity> entries_;
  std::map<std::string, Quantity> base_;

  std::optional<Quantity> try_unit(const Dimension& d) const;
};

}  // namespace qcalc
