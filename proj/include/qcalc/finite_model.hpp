#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcalc {

/// A finite partial algebra given by explicit operation tables. Elements are
/// indices into `labels`; table entries are element indices or kUndef.
/// Identities, zeros, and classes are never stored — checkers discover them.
struct FiniteModel {
  enum class Mode { Paf, Fieldoid, Unconstrained };

  static constexpr int kUndef = -1;
  /// Exhaustive triple checks stay desk-scale under this cap.
  static constexpr int kMaxElements = 64;

  std::vector<std::string> labels;
  std::vector<std::int16_t> add_t;  // row-major n*n
  std::vector<std::int16_t> mul_t;  // row-major n*n
  Mode claimed = Mode::Unconstrained;

  int n() const { return static_cast<int>(labels.size()); }

  /// Table lookups; kUndef arguments propagate (the undefined element is
  /// absorbing).
  int sum(int i, int j) const {
    return (i == kUndef || j == kUndef) ? kUndef : add_t[i * n() + j];
  }
  int prod(int i, int j) const {
    return (i == kUndef || j == kUndef) ? kUndef : mul_t[i * n() + j];
  }

  const std::string& label(int i) const { return labels[i]; }
  std::string label_or_u(int i) const {
    return i == kUndef ? "u" : labels[i];
  }
  std::optional<int> index_of(const std::string& label) const;

  /// Structural invariants: 1..64 elements, unique valid labels, square
  /// tables with in-range entries. Throws MalformedModelError.
  void validate() const;

  /// Parses the text form (see serialize); throws MalformedModelError.
  static FiniteModel parse(const std::string& text);
  /// Reads and parses a file; throws IoError / MalformedModelError.
  static FiniteModel parse_file(const std::string& path);

  /// Canonical text form:
  ///   mode: paf
  ///   elements: [a, b]
  ///   add: [
  ///     [a, b],
  ///     [b, u],
  ///   ]
  ///   mul: [ ... ]
  /// "u" is the undefined entry; "#" starts a comment.
  std::string serialize() const;
};

/// Multiplication table of the direct product of cyclic groups of the given
/// orders (all >= 1), indexed by odometer order (last coordinate fastest).
/// An empty list gives the trivial group.
std::vector<std::int16_t> abelian_group_table(const std::vector<int>& orders);

/// The split model GF(p) x G with G the direct product of cyclic groups:
/// elements are (value, dimension) pairs in dimension-major order, addition
/// is componentwise on equal dimensions and undefined otherwise,
/// multiplication is componentwise. Labels are "v" when G is trivial and
/// "v;c1.c2..." otherwise. The result satisfies the PAF axioms.
FiniteModel canonical_model(std::uint32_t p, const std::vector<int>& orders);

/// Input for building a PAF whose nonzero multiplicative group is a given
/// abelian extension of F* = GF(p)*. When the extension does not split, the
/// resulting model has no coherent unit system.
struct ExtensionSpec {
  std::uint32_t p;                       // scalar field GF(p)
  std::vector<std::string> e_labels;     // labels of E's elements
  std::vector<std::int16_t> e_mul;       // |E| x |E| total abelian group
  std::map<std::uint32_t, int> embed;    // F* value (1..p-1) -> E index
  std::vector<int> proj;                 // E index -> class id (0..g-1)
  std::vector<std::string> zero_labels;  // one zero label per class id
};

/// Builds the PAF with elements E plus one zero per class: multiplication
/// comes from E (zeros absorb, classes multiply through the quotient), and
/// addition inside the fiber over class c transports through F along a fiber
/// representative u: a + b = (v_a + v_b) * u where a = v_a * u. The sum is
/// independent of the representative because fibers are F*-torsors; the
/// default picks the least-index member of each fiber. Throws
/// BadExtensionError when the inputs are not a valid extension.
FiniteModel model_from_extension(const ExtensionSpec& spec);

/// Same, but fiber addition is computed through the given representatives
/// (reps[c] must lie in the fiber over class c). Exists so the
/// representative-independence claim can be tested against distinct choices.
FiniteModel model_from_extension_with_reps(const ExtensionSpec& spec,
                                           const std::vector<int>& reps);

/// Disjoint union: block-diagonal tables, all cross entries undefined,
/// labels prefixed "1_", "2_", ... per part. The result is a fieldoid
/// whenever every part is a PAF.
FiniteModel disjoint_union(const std::vector<FiniteModel>& parts);

}  // namespace qcalc
