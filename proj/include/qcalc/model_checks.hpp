#pragma once

#include <optional>
#include <vector>

#include "qcalc/check_report.hpp"
#include "qcalc/finite_model.hpp"

namespace qcalc {

/// Exhaustive check of the partially additive field axioms on a finite
/// model. The undefined-element absorption laws hold by table semantics;
/// the remaining laws are checked with strong equality (both sides defined
/// and equal, or both undefined), every violating witness is reported, and
/// the report order is fixed: law order below, then lexicographic index
/// tuples.
///
/// Laws, in order: mul-totality, add-commutativity, mul-commutativity,
/// add-associativity, mul-associativity, distributivity,
/// zero-existence-uniqueness, one-existence, additive-inverse,
/// multiplicative-inverse, non-triviality.
CheckReport check_paf_axioms(const FiniteModel& m);

/// Meta-checks of the derived results on the same model, best effort: laws
/// whose prerequisites are missing (no unique zero, no identity) are skipped
/// for the affected elements so broken models still get a meaningful report.
///
/// Laws, in order: lemma-1-iff (summable iff zeros coincide),
/// lemma-1-transitivity, lemma-2-unique-negation, lemma-2-unique-inverse,
/// lemma-3-unique-zero-in-class, lemma-4-dimensionless-closure,
/// lemma-5-one-not-zero, theorem-1-dimensionless-field,
/// lemma-B1-zero-products, lemma-B2-mixed-products, lemma-B3-nonzero-group.
CheckReport check_paf_lemmas(const FiniteModel& m);

/// Exhaustive check of the fieldoid axioms (multiplication may be partial;
/// per-element multiplicative identities for non-zeros).
///
/// Laws, in order: add-commutativity, mul-commutativity, add-associativity,
/// mul-associativity, distributivity, zero-existence-uniqueness,
/// unity-existence-uniqueness, additive-inverse, multiplicative-inverse,
/// non-triviality.
CheckReport check_fieldoid_axioms(const FiniteModel& m);

/// Fieldoid meta-checks, best effort.
///
/// Laws, in order: lemma-A1-squareability, theorem-A1-summable-multipliable,
/// no-zero-divisors, zero-unity-product, unity-well-defined-on-zeros,
/// identical-unities-iff, multipliability-transitivity,
/// multipliability-closure.
CheckReport check_fieldoid_lemmas(const FiniteModel& m);

/// Splits a fieldoid into its multipliability classes, each a PAF. Classes
/// are ordered by least element index; element order and labels within a
/// class are preserved. Throws NotAFieldoidError when the model fails
/// check_fieldoid_axioms.
std::vector<FiniteModel> decompose_fieldoid(const FiniteModel& m);

struct CoherentSearchResult {
  /// Ascending element indices of the found unit system, or nullopt.
  std::optional<std::vector<int>> units;
  /// Candidates tested: the full count when exhausted, the position of the
  /// first hit otherwise.
  unsigned long long candidates_tested = 0;
};

/// Brute-force search for a coherent unit system: enumerates every selection
/// of one nonzero element per summability class (odometer order over
/// ascending member indices, classes ordered by least element), accepting
/// the first selection that contains the multiplicative identity and is
/// closed under products and inverses. Throws NotAPafError when the model
/// fails check_paf_axioms, Error when the candidate space exceeds 10^7.
CoherentSearchResult find_coherent_system(const FiniteModel& m);

/// Condition 1 for the existence of a coherent system: no power of any
/// element outside the dimensionless class lands in the dimensionless class.
/// On models passing the PAF axioms, exponents are checked up to the
/// exponent of the nonzero multiplicative group, which covers all n since
/// powers repeat with period dividing it. Models claiming paf that fail the
/// axioms throw NotAPafError; other claims get a best-effort windowed check
/// (exponents up to the element count, power chains stopping at undefined)
/// so truncated slices of infinite models can be probed.
CheckReport check_no_dimensionful_roots(const FiniteModel& m);

/// Condition 2: within each summability class of dimensionful elements,
/// either every nonzero member has an nth root somewhere in the model or
/// none does, for each n up to the same bound as above. The dimensionless
/// class is exempt (the condition quantifies over dimensionful elements).
CheckReport check_root_indistinguishability(const FiniteModel& m);

}  // namespace qcalc
