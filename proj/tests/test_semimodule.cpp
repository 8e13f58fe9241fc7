#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace zdiv;

namespace {

std::vector<FiniteSemimodule> module_pool() {
  std::vector<FiniteSemimodule> out;
  for (const auto& name : builtin_pool()) out.push_back(regular_semimodule(builtin_semiring(name)));
  const auto p = builtin_semiring("product(boolean,boolean)");
  out.push_back(builtin_semimodule(p, "projection:1"));
  out.push_back(builtin_semimodule(p, "projection:2"));
  const auto q = builtin_semiring("product(lagrassa,primal2)");
  out.push_back(builtin_semimodule(q, "projection:1"));
  out.push_back(builtin_semimodule(q, "projection:2"));
  return out;
}

}  // namespace

TEST(Semimodule, ZeroDivisorsAndAnnihilatorsMatchOracle) {
  for (const auto& m : module_pool()) {
    EXPECT_EQ(zero_divisor_set(m).elements(), oracle::zero_divisors(m)) << m.name();
    for (Elem x = 0; x < m.size(); ++x) EXPECT_EQ(oracle::to_set(annihilator(m, x)), oracle::ann(m, x)) << m.name();
  }
}

TEST(Semimodule, MaximalAnnihilatorsArePrimeAndCoverZ) {
  for (const auto& m : module_pool()) {
    const auto& s = m.scalars();
    oracle::Set uni;
    for (const auto& p : maximal_annihilators(m)) {
      EXPECT_TRUE(oracle::is_prime(s, oracle::to_set(p))) << m.name();
      for (Elem x : p.elements()) uni.push_back(x);
    }
    std::sort(uni.begin(), uni.end());
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
    EXPECT_EQ(uni, oracle::zero_divisors(m)) << m.name();
  }
}

TEST(Semimodule, PropertyAMatchesDefinition) {
  for (const auto& m : module_pool()) {
    const auto& s = m.scalars();
    const auto z = oracle::zero_divisors(m);
    bool expected = true;
    for (const auto& i : oracle::ideals(s)) {
      if (!oracle::subset(i, z)) continue;
      bool killed = false;
      for (Elem x = 0; x < m.size() && !killed; ++x) {
        if (x == m.zero()) continue;
        killed = std::all_of(i.begin(), i.end(), [&](Elem r) { return m.act(r, x) == m.zero(); });
      }
      expected = expected && killed;
    }
    EXPECT_EQ(has_property_A(m), expected) << m.name();
  }
}

TEST(Semimodule, Primal2Classification) {
  const auto s = builtin_semiring("primal2");
  const auto c = classify(regular_semimodule(s));
  const Elem u = *s.find("u");
  EXPECT_EQ(c.zero_divisors, ElementSet(3, {s.zero(), u}));
  EXPECT_TRUE(c.primal);
  ASSERT_TRUE(c.degree.has_value());
  EXPECT_EQ(*c.degree, 1U);
  EXPECT_TRUE(c.very_few);
  EXPECT_TRUE(c.property_A);
  EXPECT_TRUE(c.auslander);
}

TEST(Semimodule, IdealSemiring12HasDegreeTwo) {
  const auto s = builtin_semiring("ideal:12");
  const auto c = classify(regular_semimodule(s));
  EXPECT_FALSE(c.primal);
  ASSERT_TRUE(c.degree.has_value());
  EXPECT_EQ(*c.degree, 2U);
  EXPECT_EQ(c.decomposition.size(), 2U);
}

TEST(Semimodule, ProjectionModuleIsNotAuslander) {
  const auto s = builtin_semiring("product(boolean,boolean)");
  const auto m = builtin_semimodule(s, "projection:1");
  const auto c = classify(m);
  EXPECT_EQ(c.zero_divisors, ElementSet(4, {*s.find("(0,0)"), *s.find("(0,1)")}));
  EXPECT_FALSE(c.auslander);
  EXPECT_TRUE(c.primal);
}

TEST(Semimodule, ZeroModuleIsRejected) {
  const auto s = builtin_semiring("boolean");
  const auto z = zero_semimodule(s);
  EXPECT_THROW(classify(z), zero_semimodule_error);
  EXPECT_THROW(classify(z), precondition_error);
}

TEST(Semimodule, AxiomViolationsAreDetected) {
  const auto s = builtin_semiring("boolean");
  SemimoduleTables t;
  t.name = "bad";
  t.elements = {"0", "x"};
  t.add = {{0, 1}, {1, 1}};
  t.action = {{0, 1}, {0, 1}};  // 0 * x != 0
  t.zero = 0;
  EXPECT_FALSE(check_semimodule_axioms(s, t).passed);
  EXPECT_THROW(FiniteSemimodule::from_tables(s, t), axiom_error);
  t.action = {{0, 0}};
  EXPECT_THROW(FiniteSemimodule::from_tables(s, t), structural_error);
}

TEST(Semimodule, BuiltinSpecs) {
  const auto s = builtin_semiring("boolean");
  EXPECT_THROW(builtin_semimodule(s, "projection:1"), precondition_error);
  EXPECT_THROW(builtin_semimodule(s, "nosuch"), unknown_builtin);
  EXPECT_EQ(builtin_semimodule(s, "zero").size(), 1U);
}

TEST(Semimodule, JsonRoundTrip) {
  for (const auto& m : module_pool()) {
    const json doc = semimodule_to_json(m);
    const auto back = semimodule_from_json(m.scalars(), json::parse(doc.dump()));
    EXPECT_EQ(semimodule_to_json(back).dump(), doc.dump());
  }
}

TEST(Semimodule, ClassificationJsonSchema) {
  const auto s = builtin_semiring("primal2");
  const auto m = regular_semimodule(s);
  const json j = json::parse(classification_to_json(m, classify(m)).dump());
  for (const char* key : {"zero_divisors", "ass_primes", "property_A", "very_few", "degree", "primal", "auslander"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["zero_divisors"], json::array({"0", "u"}));
  EXPECT_EQ(j["primal"], true);
}
