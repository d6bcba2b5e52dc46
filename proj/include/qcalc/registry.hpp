#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcalc/quantity.hpp"
#include "qcalc/units.hpp"

namespace qcalc {

/// Named units plus base-dimension declarations, loaded from .qdef files:
///
///   base m          # base dimension with unit "m" = (1, {m:1})
///   unit cm = 1/100 m
///
/// Definitions are evaluated eagerly with the expression evaluator, so a
/// unit body may only mention literals and previously defined units.
/// Redefining a name is an error. Immutable once loaded.
class UnitRegistry {
 public:
  explicit UnitRegistry(Paf paf) : paf_(std::move(paf)) {}

  const Paf& paf() const { return paf_; }

  /// Declares a base dimension symbol and names its canonical unit after it.
  void declare_base(const std::string& symbol);

  /// Names a quantity. The quantity must be nonzero.
  void define_unit(const std::string& name, const Quantity& q);

  bool has_unit(const std::string& name) const;
  Quantity unit(const std::string& name) const;  // UnknownUnitError

  const std::vector<std::string>& base_symbols() const { return base_; }
  const std::map<std::string, Quantity>& units() const { return units_; }

  /// The coherent system generated by the declared base units (all value 1).
  /// Results are rendered against this system.
  UnitSystem base_system() const;

  /// Parses .qdef text. Errors carry 1-based line positions; `where` names
  /// the source in messages.
  void load_text(const std::string& text, const std::string& where);

  static UnitRegistry load_file(const std::string& path, const Paf& paf);

 private:
  Paf paf_;
  std::vector<std::string> base_;
  std::map<std::string, Quantity> units_;
};

}  // namespace qcalc
