#include "qcalc/model_checks.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "qcalc/errors.hpp"

namespace qcalc {

namespace {

constexpr int kU = FiniteModel::kUndef;

/// Derived structure of a model: zeros, the zero set, the global identity
/// candidates, summability classes. Everything is best-effort so checkers
/// can run on broken models.
struct Analysis {
  std::vector<std::vector<int>> zeros_for;  // z with a+z = a, ascending
  std::vector<int> unique_zero;             // -1 unless exactly one
  std::vector<bool> in_z;                   // acts as a zero for someone
  std::vector<int> zset;                    // ascending indices of the above
  std::vector<int> one_candidates;          // e with a*e = a for all a
  int one = -1;                             // the single candidate, else -1
  std::vector<int> comp;                    // summability class id
  std::vector<std::vector<int>> members;    // per class, ascending
  int dimless = -1;                         // class of `one`, else -1

  bool is_nonzero(int a) const { return !in_z[a]; }
};

Analysis analyze(const FiniteModel& m) {
  int n = m.n();
  Analysis an;
  an.zeros_for.resize(n);
  an.unique_zero.assign(n, -1);
  an.in_z.assign(n, false);
  for (int a = 0; a < n; ++a)
    for (int z = 0; z < n; ++z)
      if (m.sum(a, z) == a) {
        an.zeros_for[a].push_back(z);
        an.in_z[z] = true;
      }
  for (int a = 0; a < n; ++a)
    if (an.zeros_for[a].size() == 1) an.unique_zero[a] = an.zeros_for[a][0];
  for (int z = 0; z < n; ++z)
    if (an.in_z[z]) an.zset.push_back(z);

  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = m.prod(a, e) == a;
    if (ok) an.one_candidates.push_back(e);
  }
  if (an.one_candidates.size() == 1) an.one = an.one_candidates[0];

  // Summability classes: connected components of the defined-sum relation.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.sum(a, b) != kU) parent[find(a)] = find(b);
  an.comp.assign(n, -1);
  int next = 0;
  for (int a = 0; a < n; ++a) {
    int r = find(a);
    if (an.comp[r] == -1) an.comp[r] = next++;
    an.comp[a] = an.comp[r];
  }
  an.members.resize(next);
  for (int a = 0; a < n; ++a) an.members[an.comp[a]].push_back(a);
  if (an.one >= 0) an.dimless = an.comp[an.one];
  return an;
}

std::vector<std::string> wit(const FiniteModel& m, std::initializer_list<int> idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(m.label(i));
  return out;
}

std::string join_labels(const FiniteModel& m, const std::vector<int>& idx) {
  std::string out;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ", ";
    out += m.label(idx[i]);
  }
  return out;
}

std::string first_violation_summary(const CheckReport& r) {
  const Violation& v = r.violations.front();
  std::string out = v.law + " at (";
  for (size_t i = 0; i < v.witness.size(); ++i) {
    if (i) out += ", ";
    out += v.witness[i];
  }
  return out + ")";
}

// Shared strong-equality law blocks (commutativity, associativity,
// distributivity, zeros, additive inverses, non-triviality) used by both the
// PAF and the fieldoid checker.
void check_shared_laws(const FiniteModel& m, const Analysis& an,
                       CheckReport& r) {
  int n = m.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ++r.cases_checked;
      int l = m.sum(a, b), rr = m.sum(b, a);
      if (l != rr)
        r.add("add-commutativity", wit(m, {a, b}),
              "a+b = " + m.label_or_u(l) + ", b+a = " + m.label_or_u(rr));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ++r.cases_checked;
      int l = m.prod(a, b), rr = m.prod(b, a);
      if (l != rr)
        r.add("mul-commutativity", wit(m, {a, b}),
              "a*b = " + m.label_or_u(l) + ", b*a = " + m.label_or_u(rr));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ++r.cases_checked;
        int l = m.sum(m.sum(a, b), c), rr = m.sum(a, m.sum(b, c));
        if (l != rr)
          r.add("add-associativity", wit(m, {a, b, c}),
                "(a+b)+c = " + m.label_or_u(l) +
                    ", a+(b+c) = " + m.label_or_u(rr));
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ++r.cases_checked;
        int l = m.prod(m.prod(a, b), c), rr = m.prod(a, m.prod(b, c));
        if (l != rr)
          r.add("mul-associativity", wit(m, {a, b, c}),
                "(a*b)*c = " + m.label_or_u(l) +
                    ", a*(b*c) = " + m.label_or_u(rr));
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ++r.cases_checked;
        int l = m.prod(a, m.sum(b, c));
        int rr = m.sum(m.prod(a, b), m.prod(a, c));
        if (l != rr)
          r.add("distributivity", wit(m, {a, b, c}),
                "a*(b+c) = " + m.label_or_u(l) +
                    ", a*b+a*c = " + m.label_or_u(rr));
      }
  for (int a = 0; a < n; ++a) {
    ++r.cases_checked;
    if (an.zeros_for[a].empty())
      r.add("zero-existence-uniqueness", wit(m, {a}), "no zero element");
    else if (an.zeros_for[a].size() > 1)
      r.add("zero-existence-uniqueness", wit(m, {a}),
            "multiple zeros: " + join_labels(m, an.zeros_for[a]));
  }
}

void check_additive_inverse(const FiniteModel& m, const Analysis& an,
                            CheckReport& r) {
  int n = m.n();
  for (int a = 0; a < n; ++a) {
    int uz = an.unique_zero[a];
    if (uz < 0) continue;  // already reported by the zero axiom
    ++r.cases_checked;
    bool has = false;
    for (int b = 0; b < n && !has; ++b) has = m.sum(a, b) == uz;
    if (!has) r.add("additive-inverse", wit(m, {a}), "no additive inverse");
  }
}

void check_non_triviality(const FiniteModel& m, const Analysis& an,
                          CheckReport& r) {
  int n = m.n();
  for (int z : an.zset) {
    ++r.cases_checked;
    bool has = false;
    for (int b = 0; b < n && !has; ++b)
      has = an.is_nonzero(b) && m.sum(b, z) == b;
    if (!has)
      r.add("non-triviality", wit(m, {z}),
            "no nonzero element has this zero");
  }
}

}  // namespace

CheckReport check_paf_axioms(const FiniteModel& m) {
  m.validate();
  Analysis an = analyze(m);
  CheckReport r;
  int n = m.n();

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ++r.cases_checked;
      if (m.prod(a, b) == kU)
        r.add("mul-totality", wit(m, {a, b}), "product undefined");
    }

  check_shared_laws(m, an, r);

  ++r.cases_checked;
  if (an.one_candidates.empty())
    r.add("one-existence", {}, "no global multiplicative identity");
  else if (an.one_candidates.size() > 1)
    r.add("one-existence", {},
          "multiple multiplicative identities: " +
              join_labels(m, an.one_candidates));

  check_additive_inverse(m, an, r);

  if (an.one >= 0) {
    for (int a = 0; a < n; ++a) {
      if (!an.is_nonzero(a)) continue;
      ++r.cases_checked;
      bool has = false;
      for (int b = 0; b < n && !has; ++b) has = m.prod(a, b) == an.one;
      if (!has)
        r.add("multiplicative-inverse", wit(m, {a}),
              "no multiplicative inverse");
    }
  }

  check_non_triviality(m, an, r);
  return r;
}

CheckReport check_fieldoid_axioms(const FiniteModel& m) {
  m.validate();
  Analysis an = analyze(m);
  CheckReport r;
  int n = m.n();

  check_shared_laws(m, an, r);

  // Per-element multiplicative identities, unique for non-zeros.
  std::vector<int> unity(n, -1);
  for (int a = 0; a < n; ++a) {
    if (!an.is_nonzero(a)) continue;
    ++r.cases_checked;
    std::vector<int> es;
    for (int e = 0; e < n; ++e)
      if (m.prod(a, e) == a) es.push_back(e);
    if (es.empty())
      r.add("unity-existence-uniqueness", wit(m, {a}),
            "no multiplicative identity for this element");
    else if (es.size() > 1)
      r.add("unity-existence-uniqueness", wit(m, {a}),
            "multiple multiplicative identities: " + join_labels(m, es));
    else
      unity[a] = es[0];
  }

  check_additive_inverse(m, an, r);

  for (int a = 0; a < n; ++a) {
    if (!an.is_nonzero(a) || unity[a] < 0) continue;
    ++r.cases_checked;
    bool has = false;
    for (int b = 0; b < n && !has; ++b) has = m.prod(a, b) == unity[a];
    if (!has)
      r.add("multiplicative-inverse", wit(m, {a}),
            "no multiplicative inverse");
  }

  check_non_triviality(m, an, r);
  return r;
}

CheckReport check_paf_lemmas(const FiniteModel& m) {
  m.validate();
  Analysis an = analyze(m);
  CheckReport r;
  int n = m.n();

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int za = an.unique_zero[a], zb = an.unique_zero[b];
      if (za < 0 || zb < 0) continue;
      ++r.cases_checked;
      bool def = m.sum(a, b) != kU;
      if (def && za != zb)
        r.add("lemma-1-iff", wit(m, {a, b}),
              "a+b defined but the zeros differ: 0_a = " + m.label(za) +
                  ", 0_b = " + m.label(zb));
      if (!def && za == zb)
        r.add("lemma-1-iff", wit(m, {a, b}),
              "a+b undefined but the zeros coincide: 0_a = 0_b = " +
                  m.label(za));
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ++r.cases_checked;
        if (m.sum(a, b) != kU && m.sum(b, c) != kU && m.sum(a, c) == kU)
          r.add("lemma-1-transitivity", wit(m, {a, b, c}),
                "a+b and b+c defined but a+c undefined");
      }

  for (int a = 0; a < n; ++a) {
    int uz = an.unique_zero[a];
    if (uz < 0) continue;
    ++r.cases_checked;
    std::vector<int> negs;
    for (int b = 0; b < n; ++b)
      if (m.sum(a, b) == uz) negs.push_back(b);
    if (negs.size() > 1)
      r.add("lemma-2-unique-negation", wit(m, {a}),
            "multiple additive inverses: " + join_labels(m, negs));
  }

  if (an.one >= 0) {
    for (int a = 0; a < n; ++a) {
      if (!an.is_nonzero(a)) continue;
      ++r.cases_checked;
      std::vector<int> invs;
      for (int b = 0; b < n; ++b)
        if (m.prod(a, b) == an.one) invs.push_back(b);
      if (invs.size() > 1)
        r.add("lemma-2-unique-inverse", wit(m, {a}),
              "multiple multiplicative inverses: " + join_labels(m, invs));
    }
  }

  for (const auto& cls : an.members) {
    std::vector<int> zeros;
    for (int a : cls)
      if (an.in_z[a]) zeros.push_back(a);
    ++r.cases_checked;
    for (size_t i = 0; i < zeros.size(); ++i)
      for (size_t j = i + 1; j < zeros.size(); ++j)
        r.add("lemma-3-unique-zero-in-class", wit(m, {zeros[i], zeros[j]}),
              "two zero elements in one summability class");
  }

  if (an.dimless >= 0) {
    const auto& d = an.members[an.dimless];
    for (int a : d) {
      int uz = an.unique_zero[a];
      ++r.cases_checked;
      if (uz >= 0 && an.comp[uz] != an.dimless)
        r.add("lemma-4-dimensionless-closure", wit(m, {a}),
              "its zero leaves the dimensionless class");
      if (uz >= 0)
        for (int b = 0; b < n; ++b)
          if (m.sum(a, b) == uz && an.comp[b] != an.dimless)
            r.add("lemma-4-dimensionless-closure", wit(m, {a}),
                  "additive inverse " + m.label(b) +
                      " leaves the dimensionless class");
      if (an.is_nonzero(a) && an.one >= 0)
        for (int b = 0; b < n; ++b)
          if (m.prod(a, b) == an.one && an.comp[b] != an.dimless)
            r.add("lemma-4-dimensionless-closure", wit(m, {a}),
                  "multiplicative inverse " + m.label(b) +
                      " leaves the dimensionless class");
    }
    for (int a : d)
      for (int b : d) {
        ++r.cases_checked;
        int s = m.sum(a, b);
        if (s != kU && an.comp[s] != an.dimless)
          r.add("lemma-4-dimensionless-closure", wit(m, {a, b}),
                "a+b = " + m.label(s) + " leaves the dimensionless class");
        int p = m.prod(a, b);
        if (p != kU && an.comp[p] != an.dimless)
          r.add("lemma-4-dimensionless-closure", wit(m, {a, b}),
                "a*b = " + m.label(p) + " leaves the dimensionless class");
      }
  }

  if (an.one >= 0) {
    ++r.cases_checked;
    if (an.in_z[an.one])
      r.add("lemma-5-one-not-zero", wit(m, {an.one}),
            "the multiplicative identity is a zero element");
  }

  if (an.dimless >= 0) {
    const auto& d = an.members[an.dimless];
    for (int a : d)
      for (int b : d) {
        ++r.cases_checked;
        if (m.sum(a, b) == kU)
          r.add("theorem-1-dimensionless-field", wit(m, {a, b}),
                "addition undefined within the dimensionless subset");
      }
    std::vector<int> zeros;
    for (int a : d)
      if (an.in_z[a]) zeros.push_back(a);
    ++r.cases_checked;
    if (zeros.size() != 1)
      r.add("theorem-1-dimensionless-field", {},
            "dimensionless subset has " + std::to_string(zeros.size()) +
                " zero elements");
    if (zeros.size() == 1) {
      for (int a : d) {
        ++r.cases_checked;
        bool has = false;
        for (int b : d) has = has || m.sum(a, b) == zeros[0];
        if (!has)
          r.add("theorem-1-dimensionless-field", wit(m, {a}),
                "no additive inverse within the dimensionless subset");
      }
    }
    if (an.one >= 0) {
      for (int a : d) {
        if (!an.is_nonzero(a)) continue;
        ++r.cases_checked;
        bool has = false;
        for (int b : d) has = has || m.prod(a, b) == an.one;
        if (!has)
          r.add("theorem-1-dimensionless-field", wit(m, {a}),
                "no multiplicative inverse within the dimensionless subset");
      }
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = m.prod(a, b);
      if (p == kU) continue;
      ++r.cases_checked;
      bool pz = an.in_z[p];
      bool fz = an.in_z[a] || an.in_z[b];
      if (pz && !fz)
        r.add("lemma-B1-zero-products", wit(m, {a, b}),
              "product of nonzeros is the zero " + m.label(p));
      if (!pz && fz)
        r.add("lemma-B1-zero-products", wit(m, {a, b}),
              "product with a zero factor is the nonzero " + m.label(p));
    }

  if (an.dimless >= 0) {
    for (int a : an.members[an.dimless])
      for (int b = 0; b < n; ++b) {
        if (an.comp[b] == an.dimless) continue;
        int p = m.prod(a, b);
        if (p == kU) continue;
        ++r.cases_checked;
        if (an.comp[p] == an.dimless)
          r.add("lemma-B2-mixed-products", wit(m, {a, b}),
                "dimensionless times dimensionful is the dimensionless " +
                    m.label(p));
      }
  }

  for (int a = 0; a < n; ++a) {
    if (!an.is_nonzero(a)) continue;
    for (int b = 0; b < n; ++b) {
      if (!an.is_nonzero(b)) continue;
      ++r.cases_checked;
      int p = m.prod(a, b);
      if (p == kU || an.in_z[p])
        r.add("lemma-B3-nonzero-group", wit(m, {a, b}),
              "nonzeros are not closed under multiplication: a*b = " +
                  m.label_or_u(p));
    }
  }
  if (an.one >= 0) {
    for (int a = 0; a < n; ++a) {
      if (!an.is_nonzero(a)) continue;
      ++r.cases_checked;
      bool has = false;
      for (int b = 0; b < n && !has; ++b)
        has = an.is_nonzero(b) && m.prod(a, b) == an.one;
      if (!has)
        r.add("lemma-B3-nonzero-group", wit(m, {a}),
              "no inverse within the nonzeros");
    }
  }
  return r;
}

CheckReport check_fieldoid_lemmas(const FiniteModel& m) {
  m.validate();
  Analysis an = analyze(m);
  CheckReport r;
  int n = m.n();

  for (int a = 0; a < n; ++a) {
    ++r.cases_checked;
    if (m.prod(a, a) == kU)
      r.add("lemma-A1-squareability", wit(m, {a}), "a*a undefined");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ++r.cases_checked;
      if (m.sum(a, b) != kU && m.prod(a, b) == kU)
        r.add("theorem-A1-summable-multipliable", wit(m, {a, b}),
              "summable but not multipliable");
    }

  for (int a = 0; a < n; ++a) {
    if (!an.is_nonzero(a)) continue;
    for (int b = 0; b < n; ++b) {
      if (!an.is_nonzero(b)) continue;
      int p = m.prod(a, b);
      if (p == kU) continue;
      ++r.cases_checked;
      if (an.in_z[p])
        r.add("no-zero-divisors", wit(m, {a, b}),
              "product of nonzeros is the zero " + m.label(p));
    }
  }

  // Unique per-element unities for non-zeros, then the corollary extension
  // to zeros: a zero inherits the unity of the nonzero elements it zeros.
  std::vector<int> unity(n, -1);
  for (int a = 0; a < n; ++a) {
    if (!an.is_nonzero(a)) continue;
    std::vector<int> es;
    for (int e = 0; e < n; ++e)
      if (m.prod(a, e) == a) es.push_back(e);
    if (es.size() == 1) unity[a] = es[0];
  }

  for (int a = 0; a < n; ++a) {
    if (!an.is_nonzero(a)) continue;
    int uz = an.unique_zero[a];
    if (uz < 0 || unity[a] < 0) continue;
    ++r.cases_checked;
    int p = m.prod(uz, unity[a]);
    if (p != uz)
      r.add("zero-unity-product", wit(m, {a}),
            "0_a * 1_a = " + m.label_or_u(p) + ", expected " + m.label(uz));
  }

  for (int z : an.zset) {
    ++r.cases_checked;
    std::vector<int> inherited;
    for (int b = 0; b < n; ++b)
      if (an.is_nonzero(b) && an.unique_zero[b] == z && unity[b] >= 0 &&
          std::find(inherited.begin(), inherited.end(), unity[b]) ==
              inherited.end())
        inherited.push_back(unity[b]);
    std::sort(inherited.begin(), inherited.end());
    if (inherited.size() > 1)
      r.add("unity-well-defined-on-zeros", wit(m, {z}),
            "zero inherits conflicting identities: " +
                join_labels(m, inherited));
    else if (inherited.size() == 1)
      unity[z] = inherited[0];
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (unity[a] < 0 || unity[b] < 0) continue;
      ++r.cases_checked;
      bool def = m.prod(a, b) != kU;
      bool ueq = unity[a] == unity[b];
      if (def && !ueq)
        r.add("identical-unities-iff", wit(m, {a, b}),
              "a*b defined but the unities differ: 1_a = " +
                  m.label(unity[a]) + ", 1_b = " + m.label(unity[b]));
      if (!def && ueq)
        r.add("identical-unities-iff", wit(m, {a, b}),
              "a*b undefined but the unities coincide: 1_a = 1_b = " +
                  m.label(unity[a]));
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ++r.cases_checked;
        if (m.prod(a, b) != kU && m.prod(b, c) != kU && m.prod(a, c) == kU)
          r.add("multipliability-transitivity", wit(m, {a, b, c}),
                "a*b and b*c defined but a*c undefined");
      }

  // Closure of multipliability classes under the derived elements.
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (m.prod(a, c) == kU) continue;
      ++r.cases_checked;
      int uz = an.unique_zero[a];
      if (uz >= 0 && m.prod(uz, c) == kU)
        r.add("multipliability-closure", wit(m, {a, c}),
              "0_a is not multipliable with c");
      if (uz >= 0)
        for (int b = 0; b < n; ++b)
          if (m.sum(a, b) == uz && m.prod(b, c) == kU)
            r.add("multipliability-closure", wit(m, {a, c}),
                  "-a = " + m.label(b) + " is not multipliable with c");
      if (unity[a] >= 0 && m.prod(unity[a], c) == kU)
        r.add("multipliability-closure", wit(m, {a, c}),
              "1_a is not multipliable with c");
      if (an.is_nonzero(a) && unity[a] >= 0)
        for (int b = 0; b < n; ++b)
          if (m.prod(a, b) == unity[a] && m.prod(b, c) == kU)
            r.add("multipliability-closure", wit(m, {a, c}),
                  "a^-1 = " + m.label(b) + " is not multipliable with c");
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (m.prod(a, c) == kU || m.prod(b, c) == kU) continue;
        ++r.cases_checked;
        int p = m.prod(a, b);
        if (p != kU && m.prod(p, c) == kU)
          r.add("multipliability-closure", wit(m, {a, b, c}),
                "a*b is not multipliable with c");
        int s = m.sum(a, b);
        if (s != kU && m.prod(s, c) == kU)
          r.add("multipliability-closure", wit(m, {a, b, c}),
                "a+b is not multipliable with c");
      }
  return r;
}

std::vector<FiniteModel> decompose_fieldoid(const FiniteModel& m) {
  CheckReport rep = check_fieldoid_axioms(m);
  if (!rep.ok())
    throw NotAFieldoidError("not a fieldoid: " + first_violation_summary(rep));
  int n = m.n();

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.prod(a, b) != kU) parent[find(a)] = find(b);

  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int a = 0; a < n; ++a) {
    int root = find(a);
    if (comp[root] == -1) comp[root] = ncomp++;
    comp[a] = comp[root];
  }
  std::vector<std::vector<int>> members(ncomp);
  for (int a = 0; a < n; ++a) members[comp[a]].push_back(a);

  std::vector<FiniteModel> out;
  for (const auto& mem : members) {
    FiniteModel sub;
    sub.claimed = FiniteModel::Mode::Paf;
    std::vector<int> local(n, -1);
    for (size_t i = 0; i < mem.size(); ++i) {
      local[mem[i]] = static_cast<int>(i);
      sub.labels.push_back(m.label(mem[i]));
    }
    int k = static_cast<int>(mem.size());
    sub.add_t.assign(static_cast<size_t>(k) * k, FiniteModel::kUndef);
    sub.mul_t.assign(static_cast<size_t>(k) * k, FiniteModel::kUndef);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        int s = m.sum(mem[i], mem[j]);
        int p = m.prod(mem[i], mem[j]);
        if ((s != kU && local[s] == -1) || (p != kU && local[p] == -1))
          throw NotAFieldoidError(
              "not a fieldoid: multipliability class is not closed");
        sub.add_t[i * k + j] =
            static_cast<std::int16_t>(s == kU ? kU : local[s]);
        sub.mul_t[i * k + j] =
            static_cast<std::int16_t>(p == kU ? kU : local[p]);
      }
    out.push_back(std::move(sub));
  }
  return out;
}

CoherentSearchResult find_coherent_system(const FiniteModel& m) {
  CheckReport rep = check_paf_axioms(m);
  if (!rep.ok())
    throw NotAPafError("not a partially additive field: " +
                       first_violation_summary(rep));
  Analysis an = analyze(m);
  int n = m.n();

  std::vector<std::vector<int>> choices;
  for (const auto& cls : an.members) {
    std::vector<int> nz;
    for (int a : cls)
      if (an.is_nonzero(a)) nz.push_back(a);
    choices.push_back(std::move(nz));
  }

  unsigned long long total = 1;
  for (const auto& c : choices) {
    total *= c.size();
    if (total > 10'000'000ull)
      throw Error("coherent-system search space exceeds 10^7 candidates");
  }

  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a)
    if (an.is_nonzero(a))
      for (int b = 0; b < n; ++b)
        if (m.prod(a, b) == an.one) {
          inverse[a] = b;
          break;
        }

  size_t k = choices.size();
  std::vector<size_t> idx(k, 0);
  std::vector<bool> chosen(n, false);
  CoherentSearchResult result;
  while (true) {
    ++result.candidates_tested;
    std::vector<int> picks(k);
    for (size_t c = 0; c < k; ++c) picks[c] = choices[c][idx[c]];
    for (int p : picks) chosen[p] = true;

    bool ok = chosen[an.one];
    for (size_t i = 0; i < k && ok; ++i)
      for (size_t j = 0; j < k && ok; ++j)
        ok = chosen[m.prod(picks[i], picks[j])];
    for (size_t i = 0; i < k && ok; ++i) ok = chosen[inverse[picks[i]]];

    for (int p : picks) chosen[p] = false;
    if (ok) {
      std::sort(picks.begin(), picks.end());
      result.units = std::move(picks);
      return result;
    }
    // Odometer, last class fastest: lexicographic candidate order.
    size_t c = k;
    while (c > 0) {
      --c;
      if (++idx[c] < choices[c].size()) break;
      idx[c] = 0;
      if (c == 0) return result;
    }
  }
}

namespace {

struct ConditionSetup {
  Analysis an;
  int bound = 1;
  bool windowed = false;
};

ConditionSetup condition_setup(const FiniteModel& m) {
  ConditionSetup s;
  CheckReport rep = check_paf_axioms(m);
  if (rep.ok()) {
    s.an = analyze(m);
    // Exponent of the nonzero multiplicative group: root existence repeats
    // with period dividing it, so checking n up to it covers all n.
    long long expo = 1;
    for (int a = 0; a < m.n(); ++a) {
      if (!s.an.is_nonzero(a)) continue;
      int x = a, ord = 1;
      while (x != s.an.one) {
        x = m.prod(x, a);
        ++ord;
        if (x == kU || ord > m.n())
          throw Error("nonzero elements do not form a finite group");
      }
      expo = std::lcm(expo, static_cast<long long>(ord));
    }
    s.bound = static_cast<int>(expo);
  } else {
    if (m.claimed == FiniteModel::Mode::Paf)
      throw NotAPafError("not a partially additive field: " +
                         first_violation_summary(rep));
    // Best-effort window for slices of larger structures: power chains stop
    // at undefined entries, exponents up to the element count.
    s.windowed = true;
    s.an = analyze(m);
    s.bound = m.n();
  }
  if (s.an.one < 0)
    throw NotAPafError(
        "no global multiplicative identity; cannot locate the dimensionless "
        "class");
  return s;
}

}  // namespace

CheckReport check_no_dimensionful_roots(const FiniteModel& m) {
  m.validate();
  ConditionSetup s = condition_setup(m);
  CheckReport r;
  for (int a = 0; a < m.n(); ++a) {
    if (s.an.comp[a] == s.an.dimless) continue;
    int x = a;
    for (int k = 2; k <= s.bound; ++k) {
      x = m.prod(x, a);
      if (x == kU) break;
      ++r.cases_checked;
      if (s.an.comp[x] == s.an.dimless)
        r.add("no-dimensionful-roots", wit(m, {a}),
              "power " + std::to_string(k) + " equals " + m.label(x) +
                  ", a dimensionless element");
    }
  }
  return r;
}

CheckReport check_root_indistinguishability(const FiniteModel& m) {
  m.validate();
  ConditionSetup s = condition_setup(m);
  CheckReport r;
  int n = m.n();

  // is_power[k][y]: some x has x^k = y (power chains stop at undefined).
  std::vector<std::vector<bool>> is_power(
      static_cast<size_t>(s.bound) + 1, std::vector<bool>(n, false));
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  for (int x = 0; x < n; ++x) is_power[1][x] = true;
  for (int k = 2; k <= s.bound; ++k)
    for (int x = 0; x < n; ++x) {
      if (cur[x] == kU) continue;
      cur[x] = m.prod(cur[x], x);
      if (cur[x] != kU) is_power[k][cur[x]] = true;
    }

  for (int c = 0; c < static_cast<int>(s.an.members.size()); ++c) {
    if (c == s.an.dimless) continue;
    std::vector<int> nz;
    for (int a : s.an.members[c])
      if (s.an.is_nonzero(a)) nz.push_back(a);
    if (nz.size() < 2) continue;
    for (int k = 1; k <= s.bound; ++k) {
      ++r.cases_checked;
      int with = -1, without = -1;
      for (int b : nz) {
        if (is_power[k][b]) {
          if (with == -1) with = b;
        } else {
          if (without == -1) without = b;
        }
      }
      if (with != -1 && without != -1)
        r.add("root-indistinguishability", wit(m, {with, without}),
              "n=" + std::to_string(k) + ": " + m.label(with) +
                  " has an nth root, " + m.label(without) + " does not");
    }
  }
  return r;
}

}  // namespace qcalc
