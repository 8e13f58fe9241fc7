#include <gtest/gtest.h>

#include <numeric>

#include "oracle.hpp"

using namespace zdiv;

namespace {

SemiringTables two_element(std::vector<std::vector<long long>> add, std::vector<std::vector<long long>> mul) {
  SemiringTables t;
  t.name = "custom";
  t.elements = {"0", "1"};
  t.add = std::move(add);
  t.mul = std::move(mul);
  t.zero = 0;
  t.one = 1;
  return t;
}

}  // namespace

TEST(Builtins, EveryPoolMemberPassesAxioms) {
  for (const auto& name : builtin_pool()) {
    const auto s = builtin_semiring(name);
    const auto r = check_semiring_axioms(s.tables());
    EXPECT_TRUE(r.passed) << name;
    EXPECT_NE(s.zero(), s.one()) << name;
  }
}

TEST(Builtins, Sizes) {
  EXPECT_EQ(builtin_semiring("boolean").size(), 2U);
  EXPECT_EQ(builtin_semiring("lagrassa").size(), 3U);
  EXPECT_EQ(builtin_semiring("primal2").size(), 3U);
  EXPECT_EQ(builtin_semiring("powerset_primal:2").size(), 5U);
  EXPECT_EQ(builtin_semiring("ideal:12").size(), 6U);
  EXPECT_EQ(builtin_semiring("product(boolean,lagrassa)").size(), 6U);
}

TEST(Builtins, LaGrassaTable) {
  const auto s = builtin_semiring("lagrassa");
  const Elem u = *s.find("u");
  const Elem one = s.one();
  EXPECT_EQ(s.mul(u, u), u);
  EXPECT_EQ(s.add(one, u), u);
  EXPECT_EQ(s.add(one, one), one);
  EXPECT_TRUE(is_entire(s));
  EXPECT_TRUE(is_nilpotent_free(s));
}

TEST(Builtins, Primal2HasNilpotent) {
  const auto s = builtin_semiring("primal2");
  const Elem u = *s.find("u");
  EXPECT_EQ(s.mul(u, u), s.zero());
  EXPECT_TRUE(is_nilpotent(s, u));
  EXPECT_FALSE(is_nilpotent_free(s));
  EXPECT_FALSE(is_entire(s));
}

TEST(Builtins, IdealSemiringMatchesGcdFormulas) {
  for (long long n : {4LL, 6LL, 8LL, 12LL, 30LL}) {
    const auto s = builtin_semiring("ideal:" + std::to_string(n));
    auto value = [&](Elem e) { return std::stoll(s.element_name(e).substr(1)); };
    auto find = [&](long long d) { return *s.find("(" + std::to_string(d) + ")"); };
    for (Elem a = 0; a < s.size(); ++a)
      for (Elem b = 0; b < s.size(); ++b) {
        EXPECT_EQ(s.add(a, b), find(std::gcd(value(a), value(b))));
        EXPECT_EQ(s.mul(a, b), find(std::gcd(value(a) * value(b), n)));
      }
    EXPECT_EQ(value(s.zero()), n);
    EXPECT_EQ(value(s.one()), 1);
  }
}

TEST(Builtins, ProductIsComponentwise) {
  const auto a = builtin_semiring("lagrassa");
  const auto b = builtin_semiring("boolean");
  const auto p = builtin_semiring("product(lagrassa,boolean)");
  for (Elem x1 = 0; x1 < a.size(); ++x1)
    for (Elem y1 = 0; y1 < b.size(); ++y1)
      for (Elem x2 = 0; x2 < a.size(); ++x2)
        for (Elem y2 = 0; y2 < b.size(); ++y2) {
          const Elem l = x1 * 2 + y1;
          const Elem r = x2 * 2 + y2;
          EXPECT_EQ(p.add(l, r), a.add(x1, x2) * 2 + b.add(y1, y2));
          EXPECT_EQ(p.mul(l, r), a.mul(x1, x2) * 2 + b.mul(y1, y2));
        }
}

TEST(Builtins, PowersetPrimalIsPrimalWithSubsetAddition) {
  const auto s = builtin_semiring("powerset_primal:2");
  const Elem a = *s.find("{1}");
  const Elem b = *s.find("{2}");
  const Elem ab = *s.find("{1,2}");
  EXPECT_EQ(s.add(a, b), ab);
  EXPECT_EQ(s.mul(a, b), s.zero());
  EXPECT_EQ(s.add(s.one(), a), s.one());
}

TEST(Builtins, NameForms) {
  EXPECT_EQ(builtin_semiring("ideal_semiring(12)"), builtin_semiring("ideal:12"));
  EXPECT_EQ(builtin_semiring(" boolean "), builtin_semiring("boolean"));
  EXPECT_THROW(builtin_semiring("nosuch"), unknown_builtin);
  EXPECT_THROW(builtin_semiring("ideal:x"), parse_error);
  EXPECT_THROW(builtin_semiring("ideal"), parse_error);
  EXPECT_THROW(builtin_semiring("product(boolean"), parse_error);
  EXPECT_THROW(builtin_semiring("ideal:1"), precondition_error);
}

TEST(Builtins, CapRefusal) {
  Limits tight;
  tight.element_cap = 4;
  EXPECT_THROW(builtin_semiring("ideal:12", tight), cap_exceeded);
  EXPECT_THROW(builtin_semiring("product(lagrassa,lagrassa)", tight), cap_exceeded);
}

TEST(Axioms, DetectsNonDistributiveTable) {
  // x + x = 0 is fine (Z/2 as a semiring) but a constant-one multiplication breaks the annihilating zero.
  auto t = two_element({{0, 1}, {1, 0}}, {{1, 1}, {1, 1}});
  const auto r = check_semiring_axioms(t);
  EXPECT_FALSE(r.passed);
  EXPECT_THROW(FiniteSemiring::from_tables(t), axiom_error);
}

TEST(Axioms, AcceptsZ2AsASemiring) {
  auto t = two_element({{0, 1}, {1, 0}}, {{0, 0}, {0, 1}});
  EXPECT_TRUE(check_semiring_axioms(t).passed);
  EXPECT_NO_THROW(FiniteSemiring::from_tables(t));
}

TEST(Axioms, NonCommutativeAdditionReported) {
  auto t = two_element({{0, 1}, {0, 1}}, {{0, 0}, {0, 1}});
  const auto r = check_semiring_axioms(t);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.violations.empty());
}

TEST(Axioms, StructuralErrors) {
  auto ragged = two_element({{0, 1}, {1}}, {{0, 0}, {0, 1}});
  EXPECT_THROW(FiniteSemiring::from_tables(ragged), structural_error);
  auto out_of_range = two_element({{0, 1}, {1, 2}}, {{0, 0}, {0, 1}});
  EXPECT_THROW(FiniteSemiring::from_tables(out_of_range), structural_error);
  auto bad_zero = two_element({{0, 1}, {1, 1}}, {{0, 0}, {0, 1}});
  bad_zero.zero = 5;
  EXPECT_THROW(FiniteSemiring::from_tables(bad_zero), structural_error);
}

TEST(Axioms, ErrorMessagesCarryPrefixes) {
  try {
    builtin_semiring("nosuch");
    FAIL();
  } catch (const unknown_builtin& e) {
    EXPECT_EQ(std::string(e.what()).rfind("unknown builtin", 0), 0U);
  }
  try {
    builtin_semiring("ideal:x");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(std::string(e.what()).rfind("parse error", 0), 0U);
  }
}

TEST(Json, SemiringRoundTrip) {
  for (const auto& name : builtin_pool()) {
    const auto s = builtin_semiring(name);
    const json doc = semiring_to_json(s);
    const auto back = semiring_from_json(json::parse(doc.dump()));
    EXPECT_EQ(back, s) << name;
    EXPECT_EQ(back.element_names(), s.element_names());
    EXPECT_EQ(semiring_to_json(back).dump(), doc.dump());
  }
}

TEST(Json, BuiltinReference) {
  EXPECT_EQ(semiring_from_json(json{{"builtin", "lagrassa"}}), builtin_semiring("lagrassa"));
}

TEST(Json, MissingFieldIsStructural) {
  EXPECT_THROW(semiring_from_json(json{{"elements", {"0", "1"}}}), structural_error);
  EXPECT_THROW(semiring_from_json(json{{"elements", {"0", "1"}}, {"add", "oops"}, {"mul", {{0, 0}, {0, 1}}}, {"zero", 0}, {"one", 1}}),
               structural_error);
}

TEST(ElementSetTest, BasicOperations) {
  ElementSet a(70, {0, 3, 65});
  ElementSet b(70, {3, 65, 69});
  EXPECT_EQ((a & b).elements(), (std::vector<Elem>{3, 65}));
  EXPECT_EQ((a | b).count(), 4U);
  EXPECT_EQ((a - b).elements(), (std::vector<Elem>{0}));
  EXPECT_EQ(b.first(), 3U);
  EXPECT_EQ(ElementSet(70).first(), 70U);
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_EQ(ElementSet::full(70).count(), 70U);
}
