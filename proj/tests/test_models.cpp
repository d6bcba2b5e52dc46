#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "qcalc/errors.hpp"
#include "qcalc/finite_model.hpp"
#include "qcalc/model_checks.hpp"

using namespace qcalc;

namespace {

FiniteModel corpus_model(const std::string& name) {
  return FiniteModel::parse_file(std::string(QCALC_CORPUS_DIR) + "/" + name);
}

// The cyclic-4 extension of GF(3)*: F* = {1,2} embeds as {1, j2} inside
// E = <j>, classes alternate dimensionless/dimensionful.
ExtensionSpec z4_spec() {
  ExtensionSpec spec;
  spec.p = 3;
  spec.e_labels = {"1", "j", "j2", "j3"};
  spec.e_mul = abelian_group_table({4});
  spec.embed = {{1, 0}, {2, 2}};
  spec.proj = {0, 1, 0, 1};
  spec.zero_labels = {"0r", "0i"};
  return spec;
}

bool same_tables(const FiniteModel& a, const FiniteModel& b) {
  return a.labels == b.labels && a.add_t == b.add_t && a.mul_t == b.mul_t;
}

std::string caught(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& ex) {
    return ex.what();
  }
  return "no error";
}

}  // namespace

TEST_CASE("model text round-trips through serialize") {
  FiniteModel z4 = corpus_model("z4_extension.model");
  CHECK(z4.claimed == FiniteModel::Mode::Paf);
  CHECK(z4.n() == 6);
  CHECK(z4.labels == std::vector<std::string>{"1", "j", "j2", "j3", "0r", "0i"});

  FiniteModel again = FiniteModel::parse(z4.serialize());
  CHECK(again.claimed == z4.claimed);
  CHECK(same_tables(again, z4));

  // comments, odd spacing, and trailing commas are all tolerated
  FiniteModel tiny = FiniteModel::parse(
      "mode: fieldoid   # two-element field\n"
      "elements: [zero, one,]\n"
      "add: [[zero, one], [one, zero]]\n"
      "mul: [\n"
      "  [zero, zero],\n"
      "  [zero, one],\n"
      "]\n");
  CHECK(tiny.claimed == FiniteModel::Mode::Fieldoid);
  CHECK(tiny.sum(1, 1) == 0);
  CHECK(tiny.prod(1, 1) == 1);
  CHECK(tiny.prod(FiniteModel::kUndef, 1) == FiniteModel::kUndef);
  CHECK(tiny.index_of("one") == 1);
  CHECK(!tiny.index_of("two").has_value());

  CHECK_THROWS_AS(FiniteModel::parse_file("/nonexistent/x.model"), IoError);
}

TEST_CASE("parse rejects malformed input") {
  auto bad = [](const std::string& text) {
    try {
      FiniteModel::parse(text);
    } catch (const MalformedModelError& ex) {
      return std::string(ex.what());
    }
    return std::string("no error");
  };
  const std::string head = "elements: [a, b]\n";
  const std::string add_ok = "add: [[a, b], [b, a]]\n";
  const std::string mul_ok = "mul: [[a, a], [a, b]]\n";

  CHECK(bad(head + "add: [[a, b]]\n" + mul_ok) ==
        "malformed model: 'add' has 1 rows for 2 elements");
  CHECK(bad(head + "add: [[a, b], [b]]\n" + mul_ok) ==
        "malformed model: 'add' row 2 has 1 entries for 2 elements");
  CHECK(bad(head + "add: [[a, c], [b, a]]\n" + mul_ok) ==
        "malformed model: unknown element 'c' in 'add' row 1");
  const std::string self = "add: [[a, a], [a, a]]\nmul: [[a, a], [a, a]]\n";
  CHECK(bad("elements: [a, a]\n" + self) ==
        "malformed model: duplicate element label 'a'");
  CHECK(bad("elements: [a, u]\nadd: [[a, u], [u, a]]\nmul: [[a, u], [u, a]]\n") ==
        "malformed model: invalid element label 'u'");
  CHECK(bad(head + add_ok) == "malformed model: missing field 'mul'");
  CHECK(bad(add_ok + mul_ok) == "malformed model: missing field 'elements'");
  CHECK(bad("mode: ring\n" + head + add_ok + mul_ok) ==
        "malformed model: unknown mode 'ring'");
  CHECK(bad("shape: [a]\n") == "malformed model: unknown field 'shape'");
  CHECK(bad(head + head + add_ok + mul_ok) ==
        "malformed model: duplicate field 'elements'");
  CHECK(bad(head + "add: [[a, b], [b, a]" + mul_ok).substr(0, 15) ==
        "malformed model");

  // the element cap is enforced
  std::string many = "elements: [";
  for (int i = 0; i < 65; ++i) many += (i ? ", e" : "e") + std::to_string(i);
  many += "]\n";
  std::string row = "[";
  for (int i = 0; i < 65; ++i) row += (i ? ", u" : "u");
  row += "]";
  std::string table;
  for (int i = 0; i < 65; ++i) table += (i ? ",\n" : "") + row;
  CHECK(bad(many + "add: [" + table + "]\nmul: [" + table + "]\n") ==
        "malformed model: more than 64 elements");
}

TEST_CASE("abelian group tables") {
  auto z4 = abelian_group_table({4});
  CHECK(z4[1 * 4 + 1] == 2);
  CHECK(z4[3 * 4 + 2] == 1);
  CHECK(z4[0 * 4 + 3] == 3);

  auto klein = abelian_group_table({2, 2});
  // odometer order: (0,0) (0,1) (1,0) (1,1); every element is its own inverse
  for (int i = 0; i < 4; ++i) CHECK(klein[i * 4 + i] == 0);
  CHECK(klein[1 * 4 + 2] == 3);

  CHECK(abelian_group_table({}) == std::vector<std::int16_t>{0});
  CHECK_THROWS_AS(abelian_group_table({0}), Error);
  CHECK_THROWS_AS(abelian_group_table({65}), Error);
}

TEST_CASE("canonical models satisfy every axiom and lemma") {
  FiniteModel gf2 = canonical_model(2, {});
  CHECK(gf2.labels == std::vector<std::string>{"0", "1"});
  CHECK(gf2.claimed == FiniteModel::Mode::Paf);

  FiniteModel gf3z2 = canonical_model(3, {2});
  CHECK(gf3z2.labels ==
        std::vector<std::string>{"0;0", "1;0", "2;0", "0;1", "1;1", "2;1"});
  CHECK(same_tables(gf3z2, corpus_model("canonical_gf3_z2.model")));

  for (const FiniteModel* m : {&gf2, &gf3z2}) {
    CheckReport ax = check_paf_axioms(*m);
    CHECK(ax.ok());
    CHECK(ax.cases_checked > 0);
    CHECK(check_paf_lemmas(*m).ok());
    CHECK(check_fieldoid_axioms(*m).ok());
    CHECK(check_fieldoid_lemmas(*m).ok());
  }

  CHECK_THROWS_AS(canonical_model(4, {}), Error);
  CHECK_THROWS_AS(canonical_model(7, {10}), Error);  // 70 > cap
}

TEST_CASE("extension models match the bundled fixture") {
  FiniteModel built = model_from_extension(z4_spec());
  FiniteModel fixture = corpus_model("z4_extension.model");
  CHECK(same_tables(built, fixture));
  CHECK(built.claimed == FiniteModel::Mode::Paf);
  CHECK(check_paf_axioms(built).ok());
  CHECK(check_paf_lemmas(built).ok());
}

TEST_CASE("fiber addition is independent of the representative choice") {
  ExtensionSpec spec = z4_spec();
  FiniteModel base = model_from_extension(spec);
  for (std::vector<int> reps :
       {std::vector<int>{0, 1}, {0, 3}, {2, 1}, {2, 3}}) {
    FiniteModel alt = model_from_extension_with_reps(spec, reps);
    CHECK(same_tables(alt, base));
  }
}

TEST_CASE("extension validation") {
  auto mutate = [](auto fn) {
    ExtensionSpec spec = z4_spec();
    fn(spec);
    return caught([&] { model_from_extension(spec); });
  };

  CHECK(mutate([](ExtensionSpec& s) { s.p = 4; }) ==
        "bad extension: p is not prime");
  CHECK(mutate([](ExtensionSpec& s) { s.embed.erase(2); }) ==
        "bad extension: embed must cover F* exactly");
  CHECK(mutate([](ExtensionSpec& s) { s.embed[1] = 1; s.embed[2] = 3; }) ==
        "bad extension: embed must send 1 to E's identity");
  CHECK(mutate([](ExtensionSpec& s) { s.embed[2] = 1; }) ==
        "bad extension: embed is not a homomorphism");
  CHECK(mutate([](ExtensionSpec& s) { s.proj = {0, 1, 1, 0}; }) ==
        "bad extension: proj does not induce a quotient product");
  CHECK(mutate([](ExtensionSpec& s) { s.proj = {0, 0, 0, 0}; }) ==
        "bad extension: |E| must equal |F*| * |G|");

  // a genuine quotient whose kernel is not the embedded F*: Klein group,
  // F* = {e0, e2}, proj collapsing the other coordinate
  ExtensionSpec klein;
  klein.p = 3;
  klein.e_labels = {"a", "b", "c", "d"};
  klein.e_mul = abelian_group_table({2, 2});
  klein.embed = {{1, 0}, {2, 2}};
  klein.proj = {0, 0, 1, 1};
  klein.zero_labels = {"z0", "z1"};
  CHECK(caught([&] { model_from_extension(klein); }) ==
        "bad extension: kernel of proj differs from embed(F*)");
  klein.proj = {0, 1, 0, 1};
  CHECK(check_paf_axioms(model_from_extension(klein)).ok());
  CHECK(mutate([](ExtensionSpec& s) { s.zero_labels = {"0r"}; }) ==
        "bad extension: need exactly one zero label per class");
  CHECK(mutate([](ExtensionSpec& s) { s.e_mul[1] = 0; }) ==
        "bad extension: E is not commutative");

  ExtensionSpec spec = z4_spec();
  CHECK(caught([&] { model_from_extension_with_reps(spec, {1, 1}); }) ==
        "bad extension: representative outside its fiber");
}

TEST_CASE("disjoint unions are fieldoids that decompose into their parts") {
  FiniteModel gf2 = canonical_model(2, {});
  FiniteModel gf3z2 = canonical_model(3, {2});
  FiniteModel u = disjoint_union({gf2, gf3z2});

  CHECK(u.n() == 8);
  CHECK(u.claimed == FiniteModel::Mode::Fieldoid);
  CHECK(u.labels[0] == "1_0");
  CHECK(u.labels[2] == "2_0;0");
  // nothing crosses the parts
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 8; ++j) {
      CHECK(u.sum(i, j) == FiniteModel::kUndef);
      CHECK(u.prod(i, j) == FiniteModel::kUndef);
    }
  CHECK(same_tables(u, corpus_model("fieldoid_union.model")));

  CHECK(check_fieldoid_axioms(u).ok());
  CHECK(check_fieldoid_lemmas(u).ok());

  std::vector<FiniteModel> parts = decompose_fieldoid(u);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].n() == 2);
  CHECK(parts[1].n() == 6);
  CHECK(parts[0].labels == std::vector<std::string>{"1_0", "1_1"});
  for (const FiniteModel& p : parts) {
    CHECK(p.claimed == FiniteModel::Mode::Paf);
    CHECK(check_paf_axioms(p).ok());
  }

  // a PAF is a single class of its own
  std::vector<FiniteModel> solo = decompose_fieldoid(gf3z2);
  REQUIRE(solo.size() == 1);
  CHECK(same_tables(solo[0], gf3z2));

  CHECK_THROWS_AS(decompose_fieldoid(corpus_model("partial_field.model")),
                  NotAFieldoidError);
  CHECK_THROWS_AS(disjoint_union({}), Error);
}

TEST_CASE("the axiom checker reports every witness in a fixed order") {
  FiniteModel m = corpus_model("partial_field.model");
  CheckReport ax = check_paf_axioms(m);

  std::vector<Violation> expected = {
      {"add-associativity", {"-1", "-1", "1"}, "(a+b)+c = u, a+(b+c) = -1"},
      {"add-associativity", {"-1", "1", "1"}, "(a+b)+c = 1, a+(b+c) = u"},
      {"add-associativity", {"1", "-1", "-1"}, "(a+b)+c = -1, a+(b+c) = u"},
      {"add-associativity", {"1", "1", "-1"}, "(a+b)+c = u, a+(b+c) = 1"},
      {"distributivity", {"0", "-1", "-1"}, "a*(b+c) = u, a*b+a*c = 0"},
      {"distributivity", {"0", "1", "1"}, "a*(b+c) = u, a*b+a*c = 0"},
  };
  CHECK(ax.violations == expected);
  CHECK(ax.cases_checked == 118);
  CHECK(!ax.ok());
  CHECK(ax.for_law("add-associativity").size() == 4);
  CHECK(ax.for_law("mul-commutativity").empty());

  CheckReport lem = check_paf_lemmas(m);
  std::vector<Violation> expected_lem = {
      {"lemma-1-iff", {"-1", "-1"},
       "a+b undefined but the zeros coincide: 0_a = 0_b = 0"},
      {"lemma-1-iff", {"1", "1"},
       "a+b undefined but the zeros coincide: 0_a = 0_b = 0"},
      {"lemma-1-transitivity", {"-1", "0", "-1"},
       "a+b and b+c defined but a+c undefined"},
      {"lemma-1-transitivity", {"-1", "1", "-1"},
       "a+b and b+c defined but a+c undefined"},
      {"lemma-1-transitivity", {"1", "-1", "1"},
       "a+b and b+c defined but a+c undefined"},
      {"lemma-1-transitivity", {"1", "0", "1"},
       "a+b and b+c defined but a+c undefined"},
      {"theorem-1-dimensionless-field", {"-1", "-1"},
       "addition undefined within the dimensionless subset"},
      {"theorem-1-dimensionless-field", {"1", "1"},
       "addition undefined within the dimensionless subset"},
  };
  CHECK(lem.violations == expected_lem);
  CHECK(lem.cases_checked == 85);
}

TEST_CASE("a broken inverse shows up in axioms and lemmas") {
  FiniteModel m = corpus_model("broken_inverse.model");
  CheckReport ax = check_paf_axioms(m);
  CHECK(ax.cases_checked == 118);
  REQUIRE(ax.violations.size() == 8);
  CHECK(ax.violations[0] ==
        Violation{"mul-totality", {"2", "2"}, "product undefined"});
  CHECK(ax.violations[7] ==
        Violation{"multiplicative-inverse", {"2"}, "no multiplicative inverse"});
  CHECK(ax.for_law("distributivity").size() == 4);

  CheckReport lem = check_paf_lemmas(m);
  CHECK(lem.violations.size() == 3);
  CHECK(lem.for_law("lemma-B3-nonzero-group").size() == 2);
}

TEST_CASE("coherent system search") {
  CoherentSearchResult trivial =
      find_coherent_system(canonical_model(2, {}));
  REQUIRE(trivial.units.has_value());
  CHECK(*trivial.units == std::vector<int>{1});
  CHECK(trivial.candidates_tested == 1);

  CoherentSearchResult two = find_coherent_system(corpus_model(
      "canonical_gf3_z2.model"));
  REQUIRE(two.units.has_value());
  CHECK(*two.units == std::vector<int>{1, 4});  // 1;0 and 1;1
  CHECK(two.candidates_tested == 1);

  // the non-split extension admits no system: all four selections fail
  CoherentSearchResult none =
      find_coherent_system(corpus_model("z4_extension.model"));
  CHECK(!none.units.has_value());
  CHECK(none.candidates_tested == 4);

  CHECK_THROWS_AS(find_coherent_system(corpus_model("partial_field.model")),
                  NotAPafError);
}

TEST_CASE("existence conditions for coherent systems") {
  FiniteModel z4 = corpus_model("z4_extension.model");
  CheckReport c1 = check_no_dimensionful_roots(z4);
  std::vector<Violation> expected = {
      {"no-dimensionful-roots", {"j"}, "power 2 equals j2, a dimensionless element"},
      {"no-dimensionful-roots", {"j"}, "power 4 equals 1, a dimensionless element"},
      {"no-dimensionful-roots", {"j3"}, "power 2 equals j2, a dimensionless element"},
      {"no-dimensionful-roots", {"j3"}, "power 4 equals 1, a dimensionless element"},
      {"no-dimensionful-roots", {"0i"}, "power 2 equals 0r, a dimensionless element"},
      {"no-dimensionful-roots", {"0i"}, "power 4 equals 0r, a dimensionless element"},
  };
  CHECK(c1.violations == expected);
  CHECK(c1.cases_checked == 9);
  CHECK(check_root_indistinguishability(z4).ok());

  FiniteModel gf3z2 = corpus_model("canonical_gf3_z2.model");
  CheckReport g1 = check_no_dimensionful_roots(gf3z2);
  REQUIRE(g1.violations.size() == 3);
  CHECK(g1.violations[0].witness == std::vector<std::string>{"0;1"});
  CHECK(g1.violations[1].detail == "power 2 equals 1;0, a dimensionless element");
  CHECK(check_root_indistinguishability(gf3z2).ok());

  // no dimensionful elements at all: both conditions hold vacuously
  FiniteModel gf7 = canonical_model(7, {});
  CHECK(check_no_dimensionful_roots(gf7).ok());
  CHECK(check_root_indistinguishability(gf7).ok());

  // windowed checking on a truncated infinite model: chains stop at u
  FiniteModel window = corpus_model("gf2_z_window.model");
  CHECK(window.claimed == FiniteModel::Mode::Unconstrained);
  CHECK(check_no_dimensionful_roots(window).ok());
  CHECK(check_root_indistinguishability(window).ok());

  // a model claiming paf must actually be one
  CHECK_THROWS_AS(check_no_dimensionful_roots(corpus_model(
                      "broken_inverse.model")),
                  NotAPafError);
  CHECK_THROWS_AS(check_root_indistinguishability(corpus_model(
                      "broken_inverse.model")),
                  NotAPafError);
}

TEST_CASE("root indistinguishability can fail") {
  // GF(7) x Z/2: cubing a dimensionful element (v;1) gives (v^3;1), and
  // cubes in GF(7)* are only {1, 6}. So 1;1 has a cube root in the model
  // while 2;1 does not, and both sit in the same summability class.
  FiniteModel m = canonical_model(7, {2});
  CheckReport rep = check_root_indistinguishability(m);
  CHECK(!rep.ok());
  CHECK(rep.violations[0].law == "root-indistinguishability");
  bool all_dimensionful = true;
  for (const Violation& v : rep.violations)
    for (const std::string& w : v.witness)
      if (w.size() >= 2 && w.substr(w.size() - 2) == ";0")
        all_dimensionful = false;
  CHECK(all_dimensionful);
}
