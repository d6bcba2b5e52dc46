#pragma once

#include <string>
#include <vector>

namespace qcalc {

/// One law violation found by a checker. `law` is a stable identifier (e.g.
/// "add-associativity"), `witness` holds the element labels instantiating the
/// violated law in quantifier order, and `detail` is a human-readable account
/// of what went wrong at that witness.
struct Violation {
  std::string law;
  std::vector<std::string> witness;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

/// Result of running a checker. Checkers are deterministic: violations are
/// emitted in a fixed law order and, within a law, in lexicographic order of
/// the witness index tuple, and every violating witness is listed (not just
/// the first).
struct CheckReport {
  std::vector<Violation> violations;
  long long cases_checked = 0;

  bool ok() const { return violations.empty(); }
  void add(std::string law, std::vector<std::string> witness,
           std::string detail) {
    violations.push_back(
        {std::move(law), std::move(witness), std::move(detail)});
  }
  void merge(const CheckReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
    cases_checked += other.cases_checked;
  }
  /// Violations for one law, in emission order.
  std::vector<Violation> for_law(const std::string& law) const {
    std::vector<Violation> out;
    for (const auto& v : violations)
      if (v.law == law) out.push_back(v);
    return out;
  }
  /// Multi-line rendering, one violation per line.
  std::string to_string() const;
};

}  // namespace qcalc
