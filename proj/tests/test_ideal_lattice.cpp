#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace zdiv;

namespace {

std::vector<std::string> lattice_pool() {
  auto p = builtin_pool();
  p.push_back("ideal:30");
  p.push_back("product(lagrassa,boolean)");
  return p;
}

std::vector<oracle::Set> as_sets(const std::vector<Ideal>& is) {
  std::vector<oracle::Set> out;
  for (const auto& i : is) out.push_back(oracle::to_set(i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(IdealLattice, EnumerationMatchesSubsetScan) {
  for (const auto& name : lattice_pool()) {
    const auto s = builtin_semiring(name);
    EXPECT_EQ(as_sets(enumerate_ideals(s)), oracle::ideals(s)) << name;
  }
}

TEST(IdealLattice, PrimeAndSubtractiveFlagsMatchDefinitions) {
  for (const auto& name : lattice_pool()) {
    const auto s = builtin_semiring(name);
    for (const auto& i : enumerate_ideals(s)) {
      const auto set = oracle::to_set(i);
      EXPECT_EQ(is_prime(s, i), oracle::is_prime(s, set)) << name;
      EXPECT_EQ(is_subtractive(s, i), oracle::is_subtractive(s, set)) << name;
      if (auto v = subtractive_violation(s, i)) {
        EXPECT_TRUE(i.contains(v->first));
        EXPECT_TRUE(i.contains(s.add(v->first, v->second)));
        EXPECT_FALSE(i.contains(v->second));
      }
      if (auto v = prime_violation(s, i)) {
        EXPECT_FALSE(i.contains(v->first));
        EXPECT_FALSE(i.contains(v->second));
        EXPECT_TRUE(i.contains(s.mul(v->first, v->second)));
      }
    }
  }
}

TEST(IdealLattice, RadicalsAgree) {
  for (const auto& name : lattice_pool()) {
    const auto s = builtin_semiring(name);
    for (const auto& i : enumerate_ideals(s)) {
      const auto by_powers = radical_by_powers(s, i);
      EXPECT_EQ(by_powers, radical_by_primes(s, i)) << name;
      EXPECT_EQ(oracle::to_set(by_powers), oracle::radical_by_definition(s, oracle::to_set(i))) << name;
    }
  }
}

TEST(IdealLattice, ClosureIsLeastIdeal) {
  for (const auto& name : {"lagrassa", "ideal:12", "powerset_primal:2", "product(boolean,boolean)"}) {
    const auto s = builtin_semiring(name);
    for (Elem a = 0; a < s.size(); ++a)
      for (Elem b = 0; b < s.size(); ++b) {
        oracle::Set gens{s.zero(), a, b};
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        EXPECT_EQ(oracle::to_set(ideal_closure(s, std::vector<Elem>{a, b})), oracle::generated(s, gens)) << name;
      }
  }
}

TEST(IdealLattice, VerifiedRejectsNonIdeals) {
  const auto s = builtin_semiring("lagrassa");
  EXPECT_THROW(Ideal::verified(s, ElementSet(3, {*s.find("u")})), precondition_error);
  EXPECT_THROW(Ideal::verified(s, ElementSet(3, {s.zero(), s.one()})), precondition_error);
  EXPECT_NO_THROW(Ideal::verified(s, ElementSet(3, {s.zero(), *s.find("u")})));
}

TEST(IdealLattice, LaGrassaPrimeIsNotSubtractive) {
  const auto s = builtin_semiring("lagrassa");
  const auto p = Ideal::verified(s, ElementSet(3, {s.zero(), *s.find("u")}));
  EXPECT_TRUE(is_prime(s, p));
  EXPECT_FALSE(is_subtractive(s, p));
  EXPECT_FALSE(is_weak_gaussian(s));
}

TEST(IdealLattice, PowersetPrimalIsWeakGaussianButNotSubtractive) {
  const auto s = builtin_semiring("powerset_primal:2");
  EXPECT_TRUE(is_weak_gaussian(s));
  EXPECT_FALSE(is_subtractive_semiring(s));
  const auto bad = first_non_subtractive(s, enumerate_ideals(s));
  ASSERT_TRUE(bad.has_value());
  EXPECT_FALSE(oracle::is_subtractive(s, oracle::to_set(*bad)));
}

TEST(IdealLattice, ZeroDivisorsOfIdealSemiring12IncludeThree) {
  const auto s = builtin_semiring("ideal:12");
  const auto z = zero_divisor_set(regular_semimodule(s));
  EXPECT_EQ(z.elements(), oracle::zero_divisors(s));
  EXPECT_TRUE(z.contains(*s.find("(3)")));
  EXPECT_FALSE(z.contains(s.one()));
  EXPECT_EQ(z.count(), 5U);
}

TEST(IdealLattice, AnnihilatorsMatchDefinition) {
  for (const auto& name : lattice_pool()) {
    const auto s = builtin_semiring(name);
    const auto reg = regular_semimodule(s);
    for (Elem x = 0; x < s.size(); ++x) EXPECT_EQ(oracle::to_set(annihilator(s, x)), oracle::ann(reg, x)) << name;
  }
}

TEST(IdealLattice, StrongKrullMatchesDefinition) {
  for (const auto& name : lattice_pool()) {
    const auto s = builtin_semiring(name);
    for (const auto& p : enumerate_primes(s))
      EXPECT_EQ(is_strong_krull_prime(s, p), oracle::is_strong_krull(s, oracle::to_set(p))) << name;
  }
}

TEST(IdealLattice, PrimeAvoidanceExhaustive) {
  for (const auto& name : {"ideal:12", "powerset_primal:2", "ideal:30", "product(boolean,boolean)"}) {
    const auto s = builtin_semiring(name);
    std::vector<Ideal> sp;
    for (const auto& p : enumerate_primes(s))
      if (is_subtractive(s, p)) sp.push_back(p);
    const auto ideals = enumerate_ideals(s);
    for (std::size_t mask = 1; mask < (std::size_t{1} << sp.size()); ++mask) {
      std::vector<Ideal> family;
      oracle::Set uni;
      for (std::size_t k = 0; k < sp.size(); ++k)
        if (mask >> k & 1U) {
          family.push_back(sp[k]);
          for (Elem x : sp[k].elements()) uni.push_back(x);
        }
      std::sort(uni.begin(), uni.end());
      for (const auto& i : ideals) {
        if (!oracle::subset(oracle::to_set(i), uni)) continue;
        const auto r = prime_avoidance_witness(s, i, family);
        ASSERT_TRUE(std::holds_alternative<std::size_t>(r)) << name;
        EXPECT_TRUE(i.is_subset_of(family[std::get<std::size_t>(r)]));
      }
    }
  }
}

TEST(IdealLattice, PrimeAvoidanceRejectsInvalidFamilies) {
  const auto s = builtin_semiring("lagrassa");
  const auto p = Ideal::verified(s, ElementSet(3, {s.zero(), *s.find("u")}));
  EXPECT_THROW(prime_avoidance_witness(s, p, {p}), precondition_error);
  const auto t = builtin_semiring("ideal:12");
  EXPECT_THROW(prime_avoidance_witness(t, Ideal::whole(t), enumerate_primes(t)), precondition_error);
  EXPECT_THROW(prime_avoidance_witness(t, Ideal::zero(t), {Ideal::whole(t)}), precondition_error);
}

TEST(IdealLattice, IdealCapRefusal) {
  Limits tight;
  tight.ideal_cap = 3;
  EXPECT_THROW(enumerate_ideals(builtin_semiring("ideal:12"), tight), cap_exceeded);
}
