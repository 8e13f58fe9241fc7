#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace zdiv;

namespace {

CheckSpec spec_for(TheoremId id, const std::string& semiring, int degree = 2) {
  CheckSpec c;
  c.theorem = id;
  c.semiring = json{{"builtin", semiring}};
  c.degree = degree;
  return c;
}

}  // namespace

TEST(Registry, NamesRoundTrip) {
  EXPECT_EQ(all_theorems().size(), 23U);
  for (auto id : all_theorems()) EXPECT_EQ(parse_theorem(to_string(id)), id);
  EXPECT_THROW(parse_theorem("T9_9"), parse_error);
}

TEST(Registry, UnknownSuite) { EXPECT_THROW(suite_specs("nosuch"), parse_error); }

TEST(Registry, SpecJsonRoundTrip) {
  CheckSpec c = spec_for(TheoremId::T2_12_TRANSFER, "ideal:12", 3);
  c.module = json{{"builtin", "zero"}};
  c.constructions = {"monoid:z2"};
  c.vars = 2;
  c.laurent = true;
  c.exhaustive = false;
  c.samples = 17;
  c.seed = 99;
  const json j = spec_to_json(c);
  EXPECT_EQ(spec_to_json(spec_from_json(json::parse(j.dump()))), j);
  EXPECT_THROW(spec_from_json(json{{"theorem", "T2_1"}}), structural_error);
}

TEST(Harness, QuickSuiteVerifies) {
  const auto reports = run_suite("quick");
  EXPECT_EQ(reports.size(), all_theorems().size());
  for (const auto& r : reports) EXPECT_NE(r.outcome, Outcome::falsified) << to_string(r.theorem) << ": " << r.detail;
  const json j = suite_to_json("quick", reports, true);
  EXPECT_EQ(j["summary"]["falsified"], 0);
}

TEST(Harness, NoFalsificationOverSmallPoolAtDegreeTwo) {
  SemialgebraCache cache;
  for (const auto& name : {"lagrassa", "primal2", "ideal:6", "product(boolean,boolean)"})
    for (auto id : all_theorems()) {
      const auto r = run_check(spec_for(id, name), &cache);
      EXPECT_NE(r.outcome, Outcome::falsified) << to_string(id) << " " << name << ": " << r.detail;
      EXPECT_TRUE(r.witness.is_null());
    }
}

TEST(Harness, PrimeExtensionCertificateOnLaGrassa) {
  const auto r = run_check(spec_for(TheoremId::T2_4, "lagrassa", 3));
  ASSERT_EQ(r.outcome, Outcome::verified) << r.detail;
  const auto& certs = r.evidence["not_subtractive_certificates"];
  ASSERT_EQ(certs.size(), 1U);
  EXPECT_EQ(certs[0]["f"], "X + u");
  EXPECT_EQ(certs[0]["g"], "u*X + 1");
  EXPECT_EQ(certs[0]["fg"], "u*X^2 + u*X + u");
  // Independent check: neither factor lies in p[G], the product does.
  const auto s = builtin_semiring("lagrassa");
  const oracle::Set p = {s.zero(), *s.find("u")};
  auto inside = [&](const std::string& text) {
    const auto d = oracle::dense_of(parse_poly(text, s), s.zero());
    return std::all_of(d.begin(), d.end(), [&](Elem c) { return oracle::has(p, c); });
  };
  EXPECT_FALSE(inside("X + u"));
  EXPECT_FALSE(inside("u*X + 1"));
  EXPECT_TRUE(inside("u*X^2 + u*X + u"));
}

TEST(Harness, WeakContentEquivalenceOnBooleanAndLaGrassa) {
  const auto b = run_check(spec_for(TheoremId::T3_7, "boolean", 3));
  EXPECT_EQ(b.outcome, Outcome::verified);
  EXPECT_EQ(b.evidence["weak_content_in_S[G]"], true);
  const auto l = run_check(spec_for(TheoremId::T3_7, "lagrassa", 3));
  EXPECT_EQ(l.outcome, Outcome::verified);
  EXPECT_EQ(l.evidence["weak_content_in_S[G]"], false);
  EXPECT_EQ(l.evidence["primes_subtractive"], false);
  EXPECT_EQ(l.evidence["witness_pair"]["failed_inclusion"], 2);
}

TEST(Harness, SampledRunsAreSeedDeterministic) {
  CheckSpec c = spec_for(TheoremId::T2_1, "ideal:12", 3);
  c.exhaustive = false;
  c.samples = 150;
  c.seed = 5;
  const auto a = report_to_json(run_check(c), true);
  const auto b = report_to_json(run_check(c), true);
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["mode"], "sampled");
}

TEST(Harness, LaurentMultivariateSampled) {
  for (auto id : {TheoremId::T2_1, TheoremId::C2_2, TheoremId::T2_4, TheoremId::T2_6, TheoremId::T3_7}) {
    CheckSpec c = spec_for(id, "primal2", 2);
    c.vars = 2;
    c.laurent = true;
    c.samples = 100;
    const auto r = run_check(c);
    EXPECT_NE(r.outcome, Outcome::falsified) << to_string(id) << ": " << r.detail;
    EXPECT_EQ(r.mode, "sampled");
    EXPECT_FALSE(r.notes.empty());
  }
}

TEST(Harness, RejectsBadShapes) {
  CheckSpec c = spec_for(TheoremId::T2_1, "boolean");
  c.vars = 5;
  EXPECT_THROW(run_check(c), precondition_error);
  c.vars = 1;
  c.degree = -1;
  EXPECT_THROW(run_check(c), precondition_error);
}

// Breaking one hypothesis must turn a verified check into hypothesis_unmet, never falsified.
TEST(Metamorphic, NonWeakGaussianScalars) {
  for (auto id : {TheoremId::T2_14, TheoremId::C2_16, TheoremId::T4_5, TheoremId::T4_7}) {
    EXPECT_NE(run_check(spec_for(id, "boolean")).outcome, Outcome::hypothesis_unmet) << to_string(id);
    EXPECT_EQ(run_check(spec_for(id, "lagrassa")).outcome, Outcome::hypothesis_unmet) << to_string(id);
  }
}

TEST(Metamorphic, NonAuslanderModule) {
  auto c = spec_for(TheoremId::T2_20, "product(boolean,boolean)");
  EXPECT_EQ(run_check(c).outcome, Outcome::verified);
  c.module = json{{"builtin", "projection:1"}};
  const auto r = run_check(c);
  EXPECT_EQ(r.outcome, Outcome::hypothesis_unmet);
  EXPECT_NE(r.detail.find("Auslander"), std::string::npos);
}

TEST(Metamorphic, ZeroModule) {
  for (auto id : {TheoremId::C2_3, TheoremId::T2_6, TheoremId::C2_7, TheoremId::T2_11, TheoremId::T2_12_TRANSFER,
                  TheoremId::T2_14, TheoremId::C2_16, TheoremId::T2_20}) {
    auto c = spec_for(id, "boolean");
    c.module = json{{"builtin", "zero"}};
    EXPECT_EQ(run_check(c).outcome, Outcome::hypothesis_unmet) << to_string(id);
  }
}

TEST(Metamorphic, NilpotentScalars) {
  auto c = spec_for(TheoremId::P3_10, "boolean");
  c.constructions = {"truncated:1", "monoid:idem2"};
  EXPECT_EQ(run_check(c).outcome, Outcome::verified);
  c.semiring = json{{"builtin", "primal2"}};
  EXPECT_EQ(run_check(c).outcome, Outcome::hypothesis_unmet);
}

TEST(Metamorphic, NonInjectiveStructureMap) {
  auto c = spec_for(TheoremId::L4_4, "product(boolean,boolean)");
  c.constructions = {"truncated:1"};
  EXPECT_EQ(run_check(c).outcome, Outcome::verified);
  c.constructions = {"projection:1"};
  const auto r = run_check(c);
  EXPECT_EQ(r.outcome, Outcome::hypothesis_unmet);
  EXPECT_NE(r.detail.find("injective"), std::string::npos);
}

TEST(Metamorphic, NonEntireScalars) {
  auto c = spec_for(TheoremId::P3_8, "boolean");
  c.constructions = {"monoid:idem2"};
  EXPECT_EQ(run_check(c).outcome, Outcome::verified);
  c.semiring = json{{"builtin", "primal2"}};
  EXPECT_EQ(run_check(c).outcome, Outcome::hypothesis_unmet);
}

TEST(Replay, NonViolatingCasesAreNotReproduced) {
  const auto spec = spec_to_json(spec_for(TheoremId::C2_2, "boolean"));
  const auto r = replay_witness(json{{"spec", spec}, {"case", json{{"f", "X + 1"}, {"g", "X"}}}});
  EXPECT_FALSE(r.reproduced);
  const auto mc = spec_to_json(spec_for(TheoremId::T2_1, "primal2"));
  EXPECT_FALSE(replay_witness(json{{"spec", mc}, {"case", json{{"f", "u*X + u"}, {"g", "u"}}}}).reproduced);
  EXPECT_FALSE(replay_witness(json{{"spec", spec_to_json(spec_for(TheoremId::T3_7, "lagrassa"))},
                                   {"case", json{{"f", "u*X + 1"}, {"g", "X + u"}}}})
                   .reproduced);
  EXPECT_FALSE(replay_witness(json{{"spec", spec_to_json(spec_for(TheoremId::T2_6, "boolean"))}}).reproduced);
  EXPECT_THROW(replay_witness(json::object()), structural_error);
}

TEST(Harness, DedekindMertensCapNoteOnLargeScalars) {
  const auto r = run_check(spec_for(TheoremId::T3_8, "ideal:12"));
  EXPECT_NE(r.outcome, Outcome::falsified);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.front().find("truncated route skipped"), std::string::npos);
  const auto p = run_check(spec_for(TheoremId::T3_8, "powerset_primal:2"));
  EXPECT_EQ(p.outcome, Outcome::verified);
  EXPECT_TRUE(p.evidence.contains("truncated_route"));
}
