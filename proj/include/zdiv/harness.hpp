#pragma once

// Executable checks for the zero-divisor transfer results, run exhaustively at
// bounded degree or by seeded sampling, with replayable witnesses.
//
// Statements about S[G] or M[G] are checked as membership-oracle equalities
// over polynomials of bounded degree.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "zdiv/json_io.hpp"

namespace zdiv {

enum class TheoremId {
  T2_1,
  C2_2,
  C2_3,
  T2_4,
  T2_6,
  C2_7,
  T2_11,
  T2_12_PA,
  T2_12_TRANSFER,
  T2_14,
  C2_16,
  T2_20,
  T3_7,
  T3_8,
  P3_8,
  P3_10,
  L4_2,
  L4_4,
  T4_5,
  T4_6,
  T4_7,
  L4_9,
  T4_10,
};

inline const std::vector<std::pair<TheoremId, std::string>>& theorem_table() {
  static const std::vector<std::pair<TheoremId, std::string>> t = {
      {TheoremId::T2_1, "T2_1"},       {TheoremId::C2_2, "C2_2"},
      {TheoremId::C2_3, "C2_3"},       {TheoremId::T2_4, "T2_4"},
      {TheoremId::T2_6, "T2_6"},       {TheoremId::C2_7, "C2_7"},
      {TheoremId::T2_11, "T2_11"},     {TheoremId::T2_12_PA, "T2_12_PA"},
      {TheoremId::T2_12_TRANSFER, "T2_12_TRANSFER"},
      {TheoremId::T2_14, "T2_14"},     {TheoremId::C2_16, "C2_16"},
      {TheoremId::T2_20, "T2_20"},     {TheoremId::T3_7, "T3_7"},
      {TheoremId::T3_8, "T3_8"},       {TheoremId::P3_8, "P3_8"},
      {TheoremId::P3_10, "P3_10"},     {TheoremId::L4_2, "L4_2"},
      {TheoremId::L4_4, "L4_4"},       {TheoremId::T4_5, "T4_5"},
      {TheoremId::T4_6, "T4_6"},       {TheoremId::T4_7, "T4_7"},
      {TheoremId::L4_9, "L4_9"},       {TheoremId::T4_10, "T4_10"},
  };
  return t;
}

inline std::vector<TheoremId> all_theorems() {
  std::vector<TheoremId> out;
  for (const auto& [id, name] : theorem_table()) out.push_back(id);
  return out;
}

inline const std::string& to_string(TheoremId id) {
  for (const auto& [k, name] : theorem_table())
    if (k == id) return name;
  throw precondition_error("unregistered theorem id");
}

inline TheoremId parse_theorem(const std::string& name) {
  for (const auto& [k, n] : theorem_table())
    if (n == name) return k;
  throw parse_error("unknown theorem id '" + name + "'");
}

/// Whether a check quantifies over semialgebra constructions.
inline bool uses_semialgebras(TheoremId id) {
  switch (id) {
    case TheoremId::P3_8:
    case TheoremId::P3_10:
    case TheoremId::L4_2:
    case TheoremId::L4_4:
    case TheoremId::T4_5:
    case TheoremId::T4_6:
    case TheoremId::T4_7:
    case TheoremId::L4_9:
    case TheoremId::T4_10: return true;
    default: return false;
  }
}

/// Whether a check reads the semimodule binding.
inline bool uses_module(TheoremId id) {
  switch (id) {
    case TheoremId::T2_1:
    case TheoremId::C2_3:
    case TheoremId::T2_6:
    case TheoremId::C2_7:
    case TheoremId::T2_11:
    case TheoremId::T2_12_TRANSFER:
    case TheoremId::T2_14:
    case TheoremId::C2_16:
    case TheoremId::T2_20: return true;
    default: return false;
  }
}

struct CheckSpec {
  TheoremId theorem = TheoremId::T2_1;
  json semiring = json{{"builtin", "boolean"}};  ///< semiring document
  json module = json{{"builtin", "regular"}};    ///< semimodule document
  std::vector<std::string> constructions;        ///< empty: default_constructions()
  int degree = 3;
  int vars = 1;
  bool laurent = false;
  bool exhaustive = true;
  std::size_t samples = 2000;
  std::uint64_t seed = 0;
};

inline json spec_to_json(const CheckSpec& s) {
  return json{{"theorem", to_string(s.theorem)}, {"semiring", s.semiring},   {"module", s.module},
              {"constructions", s.constructions}, {"degree", s.degree},      {"k", s.vars},
              {"laurent", s.laurent},             {"exhaustive", s.exhaustive}, {"samples", s.samples},
              {"seed", s.seed}};
}

inline CheckSpec spec_from_json(const json& j) {
  CheckSpec s;
  s.theorem = parse_theorem(detail::read_field<std::string>(j, "theorem", "check"));
  s.semiring = detail::require_field(j, "semiring", "check");
  if (j.contains("module")) s.module = j.at("module");
  if (j.contains("constructions")) s.constructions = j.at("constructions").get<std::vector<std::string>>();
  if (j.contains("degree")) s.degree = j.at("degree").get<int>();
  if (j.contains("k")) s.vars = j.at("k").get<int>();
  if (j.contains("laurent")) s.laurent = j.at("laurent").get<bool>();
  if (j.contains("exhaustive")) s.exhaustive = j.at("exhaustive").get<bool>();
  if (j.contains("samples")) s.samples = j.at("samples").get<std::size_t>();
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  return s;
}

enum class Outcome { verified, falsified, hypothesis_unmet };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::verified: return "verified";
    case Outcome::falsified: return "falsified";
    case Outcome::hypothesis_unmet: break;
  }
  return "hypothesis_unmet";
}

struct VerificationReport {
  TheoremId theorem = TheoremId::T2_1;
  std::string instance;
  std::string mode;
  std::size_t cases = 0;
  Outcome outcome = Outcome::verified;
  std::string detail;
  std::vector<std::string> notes;
  json evidence = json::object();
  json witness = nullptr;  ///< for falsified outcomes: {"spec", "case"}
  double elapsed_ms = 0;
};

inline json report_to_json(const VerificationReport& r, bool deterministic) {
  json j{{"theorem", to_string(r.theorem)},
         {"instance", r.instance},
         {"mode", r.mode},
         {"cases", r.cases},
         {"outcome", to_string(r.outcome)},
         {"detail", r.detail},
         {"notes", r.notes},
         {"evidence", r.evidence},
         {"witness", r.witness}};
  if (!deterministic) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline std::vector<std::string> default_constructions(const FiniteSemiring& s) {
  std::vector<std::string> out = {"truncated:1", "truncated:2", "truncated:3", "monoid:idem2", "monoid:z2"};
  if (product_factors(s)) out.push_back("projection:1");
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic case generation

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Generator for case `index` of stream `stream`; independent of every other case.
inline std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64((stream << 40) ^ index)));
}

/// Analyses of (S, construction) pairs shared across the checks of one run.
class SemialgebraCache {
 public:
  struct Entry {
    std::unique_ptr<SemialgebraAnalysis> analysis;
    ContentReport report;
    std::string cap_note;
  };

  const Entry& get(const FiniteSemiring& s, const std::string& construction, const Limits& limits) {
    const std::string key = s.name() + "|" + construction;
    auto it = entries_.find(key);
    if (it != entries_.end()) return *it->second;
    auto e = std::make_unique<Entry>();
    try {
      e->analysis = std::make_unique<SemialgebraAnalysis>(parse_construction(construction).build(s, limits), limits);
      e->report = e->analysis->report();
    } catch (const cap_exceeded& ex) {
      e->analysis.reset();
      e->cap_note = ex.what();
    }
    return *entries_.emplace(key, std::move(e)).first->second;
  }

 private:
  std::map<std::string, std::unique_ptr<Entry>> entries_;
};

namespace harness_detail {

/// Signals a completed falsification; run_check converts it into a report.
struct falsified_signal {
  std::string detail;
  json case_data;
};

struct Ctx {
  const CheckSpec& spec;
  FiniteSemiring s;
  FiniteSemimodule m;
  PolyShape shape;
  bool exhaustive = true;
  VerificationReport& rep;
  SemialgebraCache& cache;
  Limits limits;
};

[[noreturn]] inline void falsify(const std::string& detail, json case_data) {
  throw falsified_signal{detail, std::move(case_data)};
}

inline void require_nonzero_module(const Ctx& c) {
  if (c.m.size() < 2) throw hypothesis_error("the semimodule is zero");
}

inline void require_weak_gaussian(const Ctx& c) {
  for (const auto& p : enumerate_primes(c.s, c.limits))
    if (!is_subtractive(c.s, p))
      throw hypothesis_error("S is not weak Gaussian: prime " + format_ideal(c.s, p) + " is not subtractive");
}

inline ExponentVec x_pow(const PolyShape& shape, int e) {
  ExponentVec v(shape.vars);
  v[0] = e;
  return v;
}

/// sum of coeffs[i] X^i in the first variable.
template <CoefficientCarrier C>
Polynomial from_coeffs(const C& carrier, const PolyShape& shape, const std::vector<Elem>& coeffs) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < coeffs.size(); ++i) t.push_back({x_pow(shape, static_cast<int>(i)), coeffs[i]});
  return Polynomial::from_terms(carrier, shape, std::move(t));
}

template <CoefficientCarrier C>
Polynomial reshape(const C& carrier, const Polynomial& f, const PolyShape& shape, int shift) {
  std::vector<Term> t;
  for (const auto& term : f.terms()) {
    ExponentVec e(shape.vars);
    e[0] = term.exp[0] + shift;
    t.push_back({e, term.coeff});
  }
  return Polynomial::from_terms(carrier, shape, std::move(t));
}

/// Exhaustive: every univariate polynomial of degree <= d (shifted to straddle
/// zero in Laurent mode). Sampled: `samples` seeded random polynomials, odd
/// cases drawing coefficients from `pool` when it is nonempty.
template <CoefficientCarrier C>
std::vector<Polynomial> case_polys(const Ctx& c, const C& carrier, std::uint64_t stream,
                                   const std::vector<Elem>& pool = {}, std::optional<int> degree = {},
                                   std::optional<std::size_t> count = {}) {
  const int d = degree.value_or(c.spec.degree);
  std::vector<Polynomial> out;
  if (c.exhaustive) {
    for (const auto& f : all_polynomials(carrier, d))
      out.push_back(reshape(carrier, f, c.shape, c.shape.laurent ? -(d / 2) : 0));
    return out;
  }
  const int lo = c.shape.laurent ? -2 : 0;
  const int hi = c.shape.laurent ? 2 : d;
  const std::size_t n = count.value_or(c.spec.samples);
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = case_rng(c.spec.seed, stream, i);
    const bool use_pool = (i % 2 == 1) && !pool.empty();
    out.push_back(random_polynomial(carrier, c.shape, lo, hi, static_cast<std::size_t>(d) + 1, rng,
                                    use_pool ? pool : std::vector<Elem>{}));
  }
  return out;
}

/// Exhaustive mode: all pairs. Sampled mode: the i-th element of each list.
template <class Fn>
void for_pairs(const Ctx& c, const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, Fn fn) {
  if (c.exhaustive) {
    for (const auto& f : a)
      for (const auto& g : b) fn(f, g);
    return;
  }
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) fn(a[i], b[i]);
}

template <CoefficientCarrier C>
json poly_case(const C& carrier, const Polynomial& f) {
  return json(format_poly(carrier, f));
}

inline std::vector<Elem> members_of(const ElementSet& s) { return s.elements(); }

/// Least generating set of I found greedily in index order.
inline std::vector<Elem> ideal_generators(const FiniteSemiring& s, const Ideal& i) {
  std::vector<Elem> gens;
  ElementSet reached(s.size(), {s.zero()});
  for (Elem x : i.elements()) {
    if (reached.contains(x)) continue;
    gens.push_back(x);
    reached = ideal_closure(s, gens).members();
  }
  if (gens.empty()) gens.push_back(s.zero());
  return gens;
}

/// f with c(f) = I.
inline Polynomial poly_with_content(const Ctx& c, const Ideal& i) {
  return from_coeffs(c.s, c.shape, ideal_generators(c.s, i));
}

/// Zero-divisor test for f on M[G]: the constant oracle, cross-checked against
/// a bounded search for polynomial annihilators.
struct ZeroDivisorOracle {
  const Ctx& c;
  const FiniteSemimodule& m;
  std::vector<Polynomial> annihilator_pool;

  ZeroDivisorOracle(const Ctx& ctx, const FiniteSemimodule& mod, std::uint64_t stream)
      : c(ctx), m(mod), annihilator_pool(case_polys(ctx, mod, stream, {}, std::min(ctx.spec.degree, 2), 64)) {}

  bool is_zero_divisor(const Polynomial& f) const {
    const bool constant = poly_zero_divisor_witness(m, f).has_value();
    const auto poly = find_polynomial_annihilator(m, f, annihilator_pool);
    if (poly && !constant)
      falsify("polynomial annihilator without a constant one",
              json{{"f", format_poly(c.s, f)}, {"g", format_poly(m, *poly)}});
    return constant;
  }
};

inline ElementSet zero_divisors_of(const FiniteSemiring& b) {
  ElementSet z(b.size());
  for (Elem x = 0; x < b.size(); ++x)
    for (Elem y = 0; y < b.size(); ++y)
      if (y != b.zero() && b.mul(x, y) == b.zero()) {
        z.insert(x);
        break;
      }
  return z;
}

/// Ann(x) for x in B, as a set.
inline ElementSet ann_in(const FiniteSemiring& b, Elem x) {
  ElementSet out(b.size());
  for (Elem y = 0; y < b.size(); ++y)
    if (b.mul(y, x) == b.zero()) out.insert(y);
  return out;
}

/// Subsets of `family` (as index lists) with at least one member, up to 2^12.
inline std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n) {
  if (n > 12) throw cap_exceeded("more than 12 primes in a prime-family enumeration");
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) pick.push_back(i);
    out.push_back(std::move(pick));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Single-case predicates, shared by the checks and witness replay

/// The reduction fails on (f, g); empty when it succeeds.
inline std::optional<std::string> mccoy_case_failure(const FiniteSemimodule& m, const Polynomial& f,
                                                     const Polynomial& g) {
  try {
    (void)mccoy_annihilator(m, f, g);
  } catch (const proof_violation& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

/// f, g outside p[G] with fg inside.
inline bool prime_extension_violated(const FiniteSemiring& s, const Ideal& p, const Polynomial& f,
                                     const Polynomial& g) {
  return !coefficients_in(f, p) && !coefficients_in(g, p) && coefficients_in(poly_mul(s, f, g), p);
}

/// f = a + bX, g = b + (a + b)X for a in p, a + b in p, b outside p.
inline std::pair<Polynomial, Polynomial> subtractive_witness_pair(const FiniteSemiring& s, const PolyShape& shape,
                                                                  Elem a, Elem b) {
  return {from_coeffs(s, shape, {a, b}), from_coeffs(s, shape, {b, s.add(a, b)})};
}

/// f = 1 + X, g = a + bX + aX^2.
inline std::pair<Polynomial, Polynomial> dm_witness_pair(const FiniteSemiring& s, const PolyShape& shape, Elem a,
                                                         Elem b) {
  return {from_coeffs(s, shape, {s.one(), s.one()}), from_coeffs(s, shape, {a, b, a})};
}

// ---------------------------------------------------------------------------
// Checks over S[G] and M[G]

inline void check_T2_1(Ctx& c) {
  const auto& m = c.m;
  std::vector<Elem> pool;
  if (m.size() > 1) pool = members_of(zero_divisor_set(m));
  const auto fs = case_polys(c, c.s, 1, pool);
  const auto gs = case_polys(c, m, 2);
  for_pairs(c, fs, gs, [&](const Polynomial& f, const Polynomial& g) {
    if (g.is_zero() || !scalar_action(m, f, g).is_zero()) return;
    ++c.rep.cases;
    if (auto bad = mccoy_case_failure(m, f, g))
      falsify(*bad, json{{"f", format_poly(c.s, f)}, {"g", format_poly(m, g)}});
  });
  if (!c.exhaustive) {
    // Pairs with f built inside Ann(c(g)), so fg = 0 by construction.
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const auto& g = gs[i];
      if (g.is_zero()) continue;
      const auto killers = annihilator(m, content(m, g)).elements();
      auto rng = case_rng(c.spec.seed, 3, i);
      const Polynomial f = random_polynomial(c.s, c.shape, c.shape.laurent ? -2 : 0, c.shape.laurent ? 2 : c.spec.degree,
                                             static_cast<std::size_t>(c.spec.degree) + 1, rng, killers);
      ++c.rep.cases;
      if (auto bad = mccoy_case_failure(m, f, g))
        falsify(*bad, json{{"f", format_poly(c.s, f)}, {"g", format_poly(m, g)}});
    }
  }
  c.rep.detail = "every annihilated f has a nonzero constant annihilator";
}

inline void check_C2_2(Ctx& c) {
  const bool entire = is_entire(c.s);
  const auto fs = case_polys(c, c.s, 1);
  const auto gs = case_polys(c, c.s, 2);
  std::optional<std::pair<Polynomial, Polynomial>> found;
  if (!entire) {
    const auto zd = *zero_divisor_pair(c.s);
    found = std::pair{Polynomial::constant(c.s, c.shape, zd.first), Polynomial::constant(c.s, c.shape, zd.second)};
    ++c.rep.cases;
    if (!poly_mul(c.s, found->first, found->second).is_zero()) falsify("constant zero-divisor pair does not lift", nullptr);
  } else {
    for_pairs(c, fs, gs, [&](const Polynomial& f, const Polynomial& g) {
      if (f.is_zero() || g.is_zero()) return;
      ++c.rep.cases;
      if (poly_mul(c.s, f, g).is_zero())
        falsify("entire S but S[G] has a zero-divisor pair",
                json{{"f", format_poly(c.s, f)}, {"g", format_poly(c.s, g)}});
    });
  }
  c.rep.evidence["entire"] = entire;
  if (found)
    c.rep.evidence["zero_divisor_pair"] = {format_poly(c.s, found->first), format_poly(c.s, found->second)};
  c.rep.detail = entire ? "S entire and no bounded-degree zero product in S[G]" : "S not entire; constants lift to S[G]";
}

inline void check_prime_extension(Ctx& c, const Ideal& p, const std::vector<Polynomial>& fs,
                                  const std::vector<Polynomial>& gs, const std::string& what) {
  for_pairs(c, fs, gs, [&](const Polynomial& f, const Polynomial& g) {
    ++c.rep.cases;
    if (prime_extension_violated(c.s, p, f, g))
      falsify(what + ": p[G] not prime for p = " + format_ideal(c.s, p),
              json{{"p", ideal_to_json(p)}, {"f", format_poly(c.s, f)}, {"g", format_poly(c.s, g)}});
  });
}

inline void check_C2_3(Ctx& c) {
  require_nonzero_module(c);
  const auto fs = case_polys(c, c.s, 1);
  const auto gs = case_polys(c, c.s, 2);
  std::vector<Ideal> seen;
  json primes = json::array();
  for (Elem x = 0; x < c.m.size(); ++x) {
    if (x == c.m.zero()) continue;
    const Ideal p = annihilator(c.m, x);
    if (!is_prime(c.s, p)) continue;
    if (!is_subtractive(c.s, p))
      falsify("prime annihilator is not subtractive", json{{"x", c.m.element_name(x)}, {"p", ideal_to_json(p)}});
    for (const auto& f : fs) {
      ++c.rep.cases;
      const bool kills = act_on_constant(c.m, f, x).is_zero();
      if (kills != coefficients_in(f, p))
        falsify("Ann(x) in S[G] differs from p[G]", json{{"x", c.m.element_name(x)}, {"f", format_poly(c.s, f)}});
    }
    if (std::find(seen.begin(), seen.end(), p) == seen.end()) {
      seen.push_back(p);
      check_prime_extension(c, p, fs, gs, "prime annihilator");
      primes.push_back(ideal_to_json(p));
    }
  }
  c.rep.evidence["prime_annihilators"] = primes;
  c.rep.detail = "p[G] = Ann(x) and p[G] has no bounded-degree primality violation";
}

inline void check_T2_4(Ctx& c) {
  const auto primes = enumerate_primes(c.s, c.limits);
  const auto fs = case_polys(c, c.s, 1);
  const auto gs = case_polys(c, c.s, 2);
  json forward = json::array();
  json backward = json::array();
  for (const auto& p : primes) {
    if (auto v = subtractive_violation(c.s, p)) {
      const auto [f, g] = subtractive_witness_pair(c.s, c.shape, v->first, v->second);
      ++c.rep.cases;
      if (!prime_extension_violated(c.s, p, f, g))
        falsify("constructed pair does not certify p[G] non-prime",
                json{{"p", ideal_to_json(p)}, {"f", format_poly(c.s, f)}, {"g", format_poly(c.s, g)}});
      forward.push_back(json{{"p", ideal_to_json(p)},
                             {"f", format_poly(c.s, f)},
                             {"g", format_poly(c.s, g)},
                             {"fg", format_poly(c.s, poly_mul(c.s, f, g))}});
    } else {
      check_prime_extension(c, p, fs, gs, "subtractive prime");
      backward.push_back(ideal_to_json(p));
    }
  }
  c.rep.evidence["not_subtractive_certificates"] = forward;
  c.rep.evidence["subtractive_primes_checked"] = backward;
  c.rep.detail = "p[G] prime exactly for subtractive primes p";
}

inline void check_T2_6(Ctx& c) {
  require_nonzero_module(c);
  const auto maxes = maximal_annihilators(c.m);
  for (const auto& p : maxes) {
    ++c.rep.cases;
    if (auto v = prime_violation(c.s, p))
      falsify("maximal annihilator is not prime",
              json{{"p", ideal_to_json(p)}, {"a", c.s.element_name(v->first)}, {"b", c.s.element_name(v->second)}});
  }
  c.rep.evidence["maximal_annihilators"] = ideals_to_json(maxes);
  c.rep.detail = "every maximal annihilator of a nonzero element is prime";
}

inline void check_C2_7(Ctx& c) {
  require_nonzero_module(c);
  const auto maxes = maximal_annihilators(c.m);
  ElementSet uni(c.s.size());
  for (const auto& p : maxes) {
    ++c.rep.cases;
    if (!is_prime(c.s, p) || !is_subtractive(c.s, p))
      falsify("maximal annihilator is not a subtractive prime", json{{"p", ideal_to_json(p)}});
    uni |= p.members();
  }
  if (uni != zero_divisor_set(c.m)) falsify("maximal annihilators do not cover Z(M)", nullptr);
  c.rep.evidence["primes"] = ideals_to_json(maxes);
  c.rep.detail = "Z(M) is the union of the subtractive primes above";
}

inline void check_T2_11(Ctx& c) {
  require_nonzero_module(c);
  const auto ideals = enumerate_ideals(c.s, c.limits);
  const auto bad = property_A_violation(c.m, ideals);
  const bool a = !bad;
  const ElementSet z = zero_divisor_set(c.m);
  ZeroDivisorOracle oracle(c, c.m, 4);
  auto fs = case_polys(c, c.s, 1);
  for (const auto& i : ideals)
    if (i.members().is_subset_of(z)) fs.push_back(poly_with_content(c, i));
  std::optional<Polynomial> mismatch;
  for (const auto& f : fs) {
    ++c.rep.cases;
    const bool regular = !oracle.is_zero_divisor(f);
    const bool content_regular = !content(c.s, f).members().is_subset_of(z);
    if (regular != content_regular && !mismatch) mismatch = f;
  }
  const bool cond2 = !mismatch;
  c.rep.evidence["property_A"] = a;
  c.rep.evidence["regularity_matches_content"] = cond2;
  if (mismatch) c.rep.evidence["mismatch"] = format_poly(c.s, *mismatch);
  if (a != cond2)
    falsify(a ? "Property (A) holds but regularity and content regularity differ"
              : "Property (A) fails but regularity matches content regularity",
            json{{"f", mismatch ? json(format_poly(c.s, *mismatch)) : json(nullptr)}});
  c.rep.detail = a ? "Property (A) and f regular iff c(f) regular" : "no Property (A), and an f with c(f) = I breaks the equivalence";
}

inline void check_T2_12_PA(Ctx& c) {
  std::vector<Ideal> sp;
  for (const auto& p : enumerate_primes(c.s, c.limits))
    if (is_subtractive(c.s, p)) sp.push_back(p);
  const auto ideals = enumerate_ideals(c.s, c.limits);
  for (const auto& pick : nonempty_subsets(sp.size())) {
    std::vector<Ideal> family;
    ElementSet uni(c.s.size());
    for (auto k : pick) {
      family.push_back(sp[k]);
      uni |= sp[k].members();
    }
    for (const auto& i : ideals) {
      if (!i.members().is_subset_of(uni)) continue;
      ++c.rep.cases;
      const auto r = prime_avoidance_witness(c.s, i, family);
      if (std::holds_alternative<AvoidanceCounterexample>(r))
        falsify("ideal inside a union of subtractive primes but inside none",
                json{{"ideal", ideal_to_json(i)}, {"primes", ideals_to_json(family)}});
    }
  }
  c.rep.evidence["subtractive_primes"] = ideals_to_json(sp);
  c.rep.detail = "every ideal inside a union of subtractive primes lies in one of them";
}

/// Z(M[G]) = union of p_i[G] at bounded degree, with p_i[G] = Ann(m_i).
inline void check_union_description(Ctx& c, const std::vector<Ideal>& primes, const std::vector<Polynomial>& fs,
                                    const ZeroDivisorOracle& oracle) {
  auto mg = zero_divisors_of_MG(c.m, primes);
  for (const auto& f : fs) {
    ++c.rep.cases;
    if (mg.contains(f) != oracle.is_zero_divisor(f))
      falsify("Z(M[G]) differs from the union of p[G]", json{{"f", format_poly(c.s, f)}});
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (act_on_constant(c.m, f, mg.generators()[i]).is_zero() != coefficients_in(f, primes[i]))
        falsify("p[G] differs from Ann(m) in S[G]",
                json{{"f", format_poly(c.s, f)}, {"m", c.m.element_name(mg.generators()[i])}});
  }
}

inline void check_T2_12_transfer(Ctx& c) {
  require_nonzero_module(c);
  const bool vf = has_very_few_zero_divisors(c.m);
  c.rep.evidence["very_few"] = vf;
  if (!vf) {
    c.rep.notes.push_back("M lacks very few zero-divisors; no union description to lift");
    c.rep.detail = "both sides fail";
    return;
  }
  const auto primes = maximal_annihilators(c.m);
  ZeroDivisorOracle oracle(c, c.m, 4);
  check_union_description(c, primes, case_polys(c, c.s, 1), oracle);
  c.rep.evidence["primes"] = ideals_to_json(primes);
  c.rep.detail = "Z(M[G]) equals the union of associated p[G] at bounded degree";
}

/// An f whose content lies in Z(M) yet is regular on M[G].
inline Polynomial regular_inside_Z(Ctx& c, const Ideal& bad, const ZeroDivisorOracle& oracle) {
  const Polynomial f = poly_with_content(c, bad);
  ++c.rep.cases;
  if (oracle.is_zero_divisor(f))
    falsify("ideal without annihilator yields a zero-divisor", json{{"f", format_poly(c.s, f)}});
  return f;
}

inline void check_T2_14(Ctx& c) {
  require_nonzero_module(c);
  require_weak_gaussian(c);
  const auto ideals = enumerate_ideals(c.s, c.limits);
  const auto primes = primes_of(c.s, ideals);
  const auto decomposition = few_zero_divisors_decomposition(c.m, primes);
  const auto bad = property_A_violation(c.m, ideals);
  ZeroDivisorOracle oracle(c, c.m, 4);
  c.rep.evidence["degree"] = decomposition ? json(decomposition->size()) : json(nullptr);
  c.rep.evidence["property_A"] = !bad;
  if (!decomposition) {
    c.rep.notes.push_back("Z(M) is not a union of primes; neither side has few zero-divisors");
    c.rep.detail = "both sides fail";
    return;
  }
  if (!bad) {
    for (const auto& p : *decomposition)
      if (!is_subtractive(c.s, p)) falsify("decomposition prime not subtractive in a weak Gaussian S", nullptr);
    check_union_description(c, *decomposition, case_polys(c, c.s, 1), oracle);
    c.rep.evidence["decomposition"] = ideals_to_json(*decomposition);
    c.rep.detail = "M[G] has few zero-divisors of the same degree via p_i[G]";
  } else {
    const Polynomial f = regular_inside_Z(c, *bad, oracle);
    c.rep.evidence["regular_inside_union"] = format_poly(c.s, f);
    c.rep.detail = "no Property (A): the lifted union contains a regular element";
  }
}

inline void check_C2_16(Ctx& c) {
  require_nonzero_module(c);
  require_weak_gaussian(c);
  const auto ideals = enumerate_ideals(c.s, c.limits);
  const ElementSet z = zero_divisor_set(c.m);
  const bool primal = is_ideal(c.s, z);
  const auto bad = property_A_violation(c.m, ideals);
  ZeroDivisorOracle oracle(c, c.m, 4);
  c.rep.evidence["primal"] = primal;
  c.rep.evidence["property_A"] = !bad;
  if (primal && !bad) {
    const Ideal p = unchecked_ideal(z);
    for (const auto& f : case_polys(c, c.s, 1)) {
      ++c.rep.cases;
      if (coefficients_in(f, p) != oracle.is_zero_divisor(f))
        falsify("Z(M[G]) differs from Z(M)[G]", json{{"f", format_poly(c.s, f)}});
    }
    c.rep.detail = "Z(M[G]) = Z(M)[G], an ideal";
  } else if (primal) {
    for (Elem g : ideal_generators(c.s, *bad)) {
      ++c.rep.cases;
      if (!oracle.is_zero_divisor(Polynomial::constant(c.s, c.shape, g)))
        falsify("generator inside Z(M) is regular on M[G]", nullptr);
    }
    const Polynomial f = regular_inside_Z(c, *bad, oracle);
    c.rep.evidence["regular_combination"] = format_poly(c.s, f);
    c.rep.detail = "no Property (A): zero-divisor generators combine to a regular element";
  } else {
    std::optional<std::pair<Elem, Elem>> sum;
    for (Elem x : z.elements())
      for (Elem y : z.elements())
        if (!sum && !z.contains(c.s.add(x, y))) sum = std::pair{x, y};
    std::optional<std::pair<Elem, Elem>> mult;
    for (Elem r = 0; r < c.s.size() && !sum && !mult; ++r)
      for (Elem x : z.elements())
        if (!mult && !z.contains(c.s.mul(r, x))) mult = std::pair{r, x};
    if (!sum && !mult) falsify("Z(M) reported non-ideal but is closed", nullptr);
    ++c.rep.cases;
    const auto cst = [&](Elem e) { return Polynomial::constant(c.s, c.shape, e); };
    if (sum) {
      if (!oracle.is_zero_divisor(cst(sum->first)) || !oracle.is_zero_divisor(cst(sum->second)) ||
          oracle.is_zero_divisor(cst(c.s.add(sum->first, sum->second))))
        falsify("constant zero-divisors do not transfer", nullptr);
      c.rep.evidence["not_closed_under_sum"] = {c.s.element_name(sum->first), c.s.element_name(sum->second)};
    } else {
      c.rep.evidence["not_closed_under_multiples"] = {c.s.element_name(mult->first), c.s.element_name(mult->second)};
    }
    c.rep.detail = "M not primal, and Z(M[G]) is not closed either";
  }
}

inline void check_T2_20(Ctx& c) {
  require_nonzero_module(c);
  if (!is_auslander(c.m)) throw hypothesis_error("M is not Auslander");
  if (!has_property_A(c.m, c.limits)) throw hypothesis_error("M lacks Property (A)");
  const auto reg = regular_semimodule(c.s);
  ZeroDivisorOracle on_s(c, reg, 5);
  ZeroDivisorOracle on_m(c, c.m, 4);
  for (const auto& f : case_polys(c, c.s, 1, members_of(zero_divisor_set(reg)))) {
    ++c.rep.cases;
    if (on_s.is_zero_divisor(f) && !on_m.is_zero_divisor(f))
      falsify("f in Z(S[G]) is regular on M[G]", json{{"f", format_poly(c.s, f)}});
  }
  c.rep.detail = "Z(S[G]) is inside Z(M[G]) at bounded degree";
}

/// Memoized contents for pair sweeps.
class ContentMemo {
 public:
  explicit ContentMemo(const FiniteSemiring& s) : s_(s) {}
  const Ideal& of(const Polynomial& f) {
    ElementSet cs = coefficient_set(s_.size(), f);
    auto it = memo_.find(cs);
    if (it == memo_.end()) it = memo_.emplace(cs, ideal_closure(s_, cs)).first;
    return it->second;
  }

 private:
  const FiniteSemiring& s_;
  std::unordered_map<ElementSet, Ideal, ElementSetHash> memo_;
};

using IdealTriple = std::tuple<ElementSet, ElementSet, ElementSet>;

inline bool weak_content_case_fails(const FiniteSemiring& s, const Polynomial& f, const Polynomial& g) {
  return !weak_content_pair_check(s, f, g).holds;
}

inline void check_T3_7(Ctx& c) {
  std::optional<Ideal> bad_prime;
  for (const auto& p : enumerate_primes(c.s, c.limits))
    if (!bad_prime && !is_subtractive(c.s, p)) bad_prime = p;
  const bool c3 = !bad_prime;
  std::optional<Ideal> bad_radical;
  for (const auto& i : enumerate_ideals(c.s, c.limits))
    if (!bad_radical && !is_subtractive(c.s, radical_by_powers(c.s, i))) bad_radical = i;
  const bool c2 = !bad_radical;

  ContentMemo memo(c.s);
  std::map<IdealTriple, bool> verdicts;
  std::optional<std::pair<Polynomial, Polynomial>> failing;
  auto test = [&](const Polynomial& f, const Polynomial& g) {
    ++c.rep.cases;
    const Polynomial fg = poly_mul(c.s, f, g);
    const Ideal& cf = memo.of(f);
    const Ideal& cg = memo.of(g);
    const Ideal& cfg = memo.of(fg);
    IdealTriple key{cf.members(), cg.members(), cfg.members()};
    auto it = verdicts.find(key);
    if (it == verdicts.end()) it = verdicts.emplace(key, weak_content_check(c.s, cf, cg, cfg).holds).first;
    if (!it->second && !failing) failing = std::pair{f, g};
  };
  if (bad_prime) {
    const auto v = *subtractive_violation(c.s, *bad_prime);
    const auto [f, g] = subtractive_witness_pair(c.s, c.shape, v.first, v.second);
    test(f, g);
  }
  for_pairs(c, case_polys(c, c.s, 1), case_polys(c, c.s, 2), test);
  const bool c1 = !failing;

  c.rep.evidence["weak_content_in_S[G]"] = c1;
  c.rep.evidence["radicals_subtractive"] = c2;
  c.rep.evidence["primes_subtractive"] = c3;
  if (failing) {
    const auto chk = weak_content_pair_check(c.s, failing->first, failing->second);
    c.rep.evidence["witness_pair"] = json{{"f", format_poly(c.s, failing->first)},
                                          {"g", format_poly(c.s, failing->second)},
                                          {"fg", format_poly(c.s, poly_mul(c.s, failing->first, failing->second))},
                                          {"failed_inclusion", chk.failed_inclusion},
                                          {"element", chk.witness ? json(c.s.element_name(*chk.witness)) : json(nullptr)}};
  }
  if (bad_prime) c.rep.evidence["non_subtractive_prime"] = ideal_to_json(*bad_prime);
  if (!(c1 == c2 && c2 == c3))
    falsify("the three conditions disagree", json{{"c1", c1}, {"c2", c2}, {"c3", c3}});
  c.rep.detail = c1 ? "all three conditions hold" : "condition (3) fails, so (1) fails with the witness pair";
}

inline void check_T3_8(Ctx& c) {
  std::optional<std::pair<Ideal, std::pair<Elem, Elem>>> bad;
  for (const auto& i : enumerate_ideals(c.s, c.limits))
    if (!bad)
      if (auto v = subtractive_violation(c.s, i)) bad = std::pair{i, *v};
  const bool subtractive = !bad;

  ContentMemo memo(c.s);
  std::map<IdealTriple, DedekindMertensResult> results;
  std::optional<std::pair<Polynomial, Polynomial>> failing;
  DedekindMertensResult failing_result;
  auto test = [&](const Polynomial& f, const Polynomial& g) {
    ++c.rep.cases;
    const Ideal& cf = memo.of(f);
    const Ideal& cg = memo.of(g);
    const Ideal& cfg = memo.of(poly_mul(c.s, f, g));
    IdealTriple key{cf.members(), cg.members(), cfg.members()};
    auto it = results.find(key);
    if (it == results.end()) it = results.emplace(key, dedekind_mertens_exponent(c.s, cf, cg, cfg, 64)).first;
    if (!it->second.exponent && !failing) {
      failing = std::pair{f, g};
      failing_result = it->second;
    }
  };
  if (bad) {
    const auto [f, g] = dm_witness_pair(c.s, c.shape, bad->second.first, bad->second.second);
    test(f, g);
  }
  for_pairs(c, case_polys(c, c.s, 1), case_polys(c, c.s, 2), test);
  const bool dm_holds = !failing;
  c.rep.evidence["subtractive_semiring"] = subtractive;
  c.rep.evidence["dedekind_mertens_holds"] = dm_holds;
  if (bad) c.rep.evidence["non_subtractive_ideal"] = ideal_to_json(bad->first);
  if (failing)
    c.rep.evidence["witness_pair"] = json{{"f", format_poly(c.s, failing->first)},
                                          {"g", format_poly(c.s, failing->second)},
                                          {"dm", dm_to_json(failing_result)}};
  if (dm_holds != subtractive)
    falsify("Dedekind-Mertens behaviour disagrees with subtractivity",
            failing ? json{{"f", format_poly(c.s, failing->first)}, {"g", format_poly(c.s, failing->second)}}
                    : json(nullptr));

  // Truncated route: content by ideal intersection in S[X]/(X^4).
  constexpr int d = 4;
  try {
    SemialgebraAnalysis an(truncated_poly_semialgebra(c.s, d, c.limits), c.limits);
    const auto& b = an.algebra().carrier();
    auto elem_of = [&](const Polynomial& f) {
      std::vector<Elem> coeffs(d, c.s.zero());
      for (const auto& t : f.terms()) coeffs[t.exp[0]] = t.coeff;
      return static_cast<Elem>(detail::encode(coeffs, c.s.size()));
    };
    auto deg = [&](Elem x) {
      const auto ds = detail::digits(x, c.s.size(), d);
      int top = -1;
      for (int i = 0; i < d; ++i)
        if (ds[i] != c.s.zero()) top = i;
      return top;
    };
    json route{{"degree", d}, {"size", b.size()}};
    if (bad) {
      const auto [f, g] = dm_witness_pair(c.s, PolyShape{}, bad->second.first, bad->second.second);
      const Elem fe = elem_of(f);
      const Elem ge = elem_of(g);
      const Elem fge = b.mul(fe, ge);
      ++c.rep.cases;
      if (an.content(fe) != content(c.s, f) || an.content(ge) != content(c.s, g) ||
          an.content(fge) != content(c.s, poly_mul(c.s, f, g)))
        falsify("intersection content differs from coefficient content", nullptr);
      const auto r = dedekind_mertens_exponent(c.s, an.content(fe), an.content(ge), an.content(fge), 64);
      if (r.exponent) falsify("truncated witness pair satisfies Dedekind-Mertens", nullptr);
      route["witness"] = json{{"f", b.element_name(fe)}, {"g", b.element_name(ge)}, {"dm", dm_to_json(r)}};
    } else {
      std::size_t pairs = 0;
      for (Elem f = 0; f < b.size(); ++f)
        for (Elem g = 0; g < b.size(); ++g) {
          if (deg(f) + deg(g) >= d) continue;
          ++pairs;
          const auto r = dedekind_mertens_exponent(c.s, an.content(f), an.content(g), an.content(b.mul(f, g)), 64);
          if (!r.exponent)
            falsify("truncated pair violates Dedekind-Mertens over a subtractive S",
                    json{{"f", b.element_name(f)}, {"g", b.element_name(g)}});
        }
      c.rep.cases += pairs;
      route["pairs_below_truncation"] = pairs;
    }
    c.rep.evidence["truncated_route"] = route;
  } catch (const cap_exceeded& e) {
    c.rep.notes.push_back(std::string("truncated route skipped: ") + e.what());
  }
  c.rep.detail = subtractive ? "S subtractive and Dedekind-Mertens holds" : "S not subtractive; witness pair has no exponent";
}

// ---------------------------------------------------------------------------
// Checks over finite semialgebras

struct Instance {
  std::string label;
  const SemialgebraAnalysis& an;
  const ContentReport& rep;
};

inline bool entire_B(const FiniteSemiring& b) { return is_entire(b); }

inline bool very_few_B(const FiniteSemiring& b) { return has_very_few_zero_divisors(regular_semimodule(b)); }

using InstanceCheck = std::function<void(Ctx&, const Instance&, json&)>;

/// Runs `fn` on every instance; hypothesis_error inside marks that instance unmet.
inline void over_instances(Ctx& c, const InstanceCheck& fn) {
  const auto labels = c.spec.constructions.empty() ? default_constructions(c.s) : c.spec.constructions;
  std::size_t met = 0;
  json per = json::array();
  std::vector<std::string> reasons;
  for (const auto& label : labels) {
    const auto& e = c.cache.get(c.s, label, c.limits);
    json row{{"construction", label}};
    if (!e.analysis) {
      row["status"] = "skipped";
      row["reason"] = e.cap_note;
      per.push_back(row);
      continue;
    }
    row["size"] = e.analysis->algebra().carrier().size();
    try {
      json info = json::object();
      fn(c, Instance{label, *e.analysis, e.report}, info);
      ++met;
      row["status"] = "verified";
      if (!info.empty()) row["evidence"] = info;
    } catch (const hypothesis_error& h) {
      row["status"] = "hypothesis_unmet";
      row["reason"] = h.what();
      reasons.push_back(label + ": " + h.what());
    } catch (falsified_signal& f) {
      f.case_data = json{{"construction", label}, {"data", f.case_data}};
      throw;
    }
    per.push_back(row);
  }
  c.rep.evidence["instances"] = per;
  if (met == 0) {
    std::string why = "no construction satisfies the hypotheses";
    if (!reasons.empty()) why += " (" + reasons.front() + ")";
    throw hypothesis_error(why);
  }
  c.rep.detail = std::to_string(met) + " of " + std::to_string(labels.size()) + " constructions checked";
}

inline void require_flag(bool ok, const std::string& what) {
  if (!ok) throw hypothesis_error(what);
}

inline void check_P3_8(Ctx& c) {
  over_instances(c, [](Ctx& cx, const Instance& in, json&) {
    require_flag(in.rep.mccoy, "B is not McCoy");
    require_flag(is_entire(cx.s), "S is not entire");
    ++cx.rep.cases;
    const auto& b = in.an.algebra().carrier();
    if (auto z = zero_divisor_pair(b))
      falsify("McCoy B over an entire S has zero-divisors",
              json{{"a", b.element_name(z->first)}, {"b", b.element_name(z->second)}});
  });
}

inline void check_P3_10(Ctx& c) {
  over_instances(c, [](Ctx& cx, const Instance& in, json&) {
    require_flag(is_nilpotent_free(cx.s), "S has nonzero nilpotents");
    require_flag(in.rep.weak_content, "B is not weak content");
    ++cx.rep.cases;
    if (!in.rep.mccoy) {
      const auto& b = in.an.algebra().carrier();
      json els = json::array();
      if (in.rep.mccoy_witness)
        for (Elem e : in.rep.mccoy_witness->elements) els.push_back(b.element_name(e));
      falsify("weak content over a nilpotent-free S but not McCoy", json{{"elements", els}});
    }
  });
}

inline void check_L4_2(Ctx& c) {
  std::vector<Ideal> sp;
  for (const auto& p : enumerate_primes(c.s, c.limits))
    if (is_subtractive(c.s, p)) sp.push_back(p);
  const ElementSet zs = zero_divisors_of(c.s);
  over_instances(c, [&](Ctx& cx, const Instance& in, json& info) {
    require_flag(in.rep.mccoy, "B is not McCoy");
    const auto& b = in.an.algebra().carrier();
    const ElementSet zb = zero_divisors_of(b);
    std::size_t families = 0;
    for (const auto& pick : nonempty_subsets(sp.size())) {
      ElementSet uni(cx.s.size());
      ElementSet uni_b(b.size());
      for (auto k : pick) {
        uni |= sp[k].members();
        uni_b |= in.an.extension(sp[k]);
      }
      if (!zs.is_subset_of(uni)) continue;
      ++families;
      ++cx.rep.cases;
      if (!zb.is_subset_of(uni_b)) falsify("Z(B) escapes the union of the extended primes", json{{"primes", pick}});
    }
    info["families"] = families;
  });
}

inline void check_L4_4(Ctx& c) {
  over_instances(c, [](Ctx& cx, const Instance& in, json&) {
    require_flag(in.rep.ohm_rush, "B is not Ohm-Rush");
    require_flag(in.rep.homogeneous, "content is not homogeneous");
    require_flag(in.rep.lambda_injective, "lambda is not injective");
    const auto& a = in.an.algebra();
    const auto& s = a.scalars();
    const auto& b = a.carrier();
    for (Elem x = 0; x < s.size(); ++x) {
      ++cx.rep.cases;
      const ElementSet lhs = extension_set(a, annihilator(s, x));
      if (lhs != ann_in(b, a.lambda(x)))
        falsify("Ann_S(s)B differs from Ann_B(lambda(s))", json{{"s", s.element_name(x)}});
    }
    // Part (2) with q_i the maximal annihilators of B.
    const auto reg = regular_semimodule(b);
    const auto qs = maximal_annihilators(reg);
    ElementSet pulled(s.size());
    for (Elem x = 0; x < s.size(); ++x)
      for (const auto& q : qs)
        if (q.contains(a.lambda(x))) pulled.insert(x);
    ++cx.rep.cases;
    if (pulled != zero_divisors_of(s)) falsify("Z(S) differs from the union of q_i meet S", nullptr);
  });
}

inline void check_T4_5(Ctx& c) {
  require_weak_gaussian(c);
  over_instances(c, [](Ctx& cx, const Instance& in, json& info) {
    require_flag(in.rep.mccoy, "B is not McCoy");
    require_flag(in.rep.weak_content, "B is not weak content");
    require_flag(in.rep.homogeneous, "content is not homogeneous");
    require_flag(in.rep.lambda_injective, "lambda is not injective");
    ++cx.rep.cases;
    const bool vs = has_very_few_zero_divisors(regular_semimodule(cx.s));
    const bool vb = very_few_B(in.an.algebra().carrier());
    info["S"] = vs;
    info["B"] = vb;
    if (vs != vb) falsify("very few zero-divisors does not transfer", json{{"S", vs}, {"B", vb}});
  });
}

inline void check_T4_6(Ctx& c) {
  const bool a_s = has_property_A(regular_semimodule(c.s), c.limits);
  const ElementSet zs = zero_divisors_of(c.s);
  over_instances(c, [&](Ctx& cx, const Instance& in, json& info) {
    require_flag(in.rep.mccoy, "B is not McCoy");
    require_flag(in.rep.lambda_injective, "lambda is not injective");
    require_flag(in.rep.homogeneous, "content is not homogeneous");
    require_flag(in.rep.content_onto, "content is not onto the ideals of S");
    const auto& b = in.an.algebra().carrier();
    const ElementSet zb = zero_divisors_of(b);
    std::optional<Elem> mismatch;
    for (Elem f = 0; f < b.size(); ++f) {
      ++cx.rep.cases;
      const bool regular = !zb.contains(f);
      const bool content_regular = !in.an.content(f).members().is_subset_of(zs);
      if (regular != content_regular && !mismatch) mismatch = f;
    }
    info["property_A"] = a_s;
    if (mismatch) info["mismatch"] = b.element_name(*mismatch);
    if (a_s != !mismatch) falsify("Property (A) disagrees with content regularity", info);
  });
}

inline void check_T4_7(Ctx& c) {
  require_weak_gaussian(c);
  const auto reg_s = regular_semimodule(c.s);
  const bool few_s = few_zero_divisors_degree(reg_s, c.limits).has_value();
  const bool a_s = has_property_A(reg_s, c.limits);
  over_instances(c, [&](Ctx& cx, const Instance& in, json& info) {
    require_flag(in.rep.mccoy, "B is not McCoy");
    require_flag(in.rep.weak_content, "B is not weak content");
    require_flag(in.rep.lambda_injective, "lambda is not injective");
    require_flag(in.rep.homogeneous, "content is not homogeneous");
    require_flag(in.rep.content_onto, "content is not onto the ideals of S");
    ++cx.rep.cases;
    const auto deg_b = few_zero_divisors_degree(regular_semimodule(in.an.algebra().carrier()), cx.limits);
    info["B_degree"] = deg_b ? json(*deg_b) : json(nullptr);
    info["S_few"] = few_s;
    info["S_property_A"] = a_s;
    if (deg_b.has_value() != (few_s && a_s)) falsify("few zero-divisors does not transfer", info);
  });
}

inline std::vector<Ideal> strong_krull_primes(const FiniteSemiring& s, const Limits& limits) {
  std::vector<Ideal> out;
  for (const auto& p : enumerate_primes(s, limits))
    if (is_strong_krull_prime(s, p, limits)) out.push_back(p);
  return out;
}

inline void check_L4_9(Ctx& c) {
  const auto sk = strong_krull_primes(c.s, c.limits);
  if (sk.empty()) throw hypothesis_error("S has no strong Krull prime");
  over_instances(c, [&](Ctx& cx, const Instance& in, json& info) {
    json outcomes = json::array();
    for (const auto& p : sk) {
      ++cx.rep.cases;
      const auto r = is_strong_krull_in_B(in.an, in.rep, p, cx.limits);
      if (r.outcome == ExtensionOutcome::counterexample)
        falsify("pB is proper but not a strong Krull prime: " + r.detail, json{{"p", ideal_to_json(p)}});
      outcomes.push_back(json{{"p", ideal_to_json(p)},
                              {"pB", r.outcome == ExtensionOutcome::equals_whole ? "B" : "strong Krull prime"}});
    }
    info["extensions"] = outcomes;
  });
}

inline void check_T4_10(Ctx& c) {
  const ElementSet zs = zero_divisors_of(c.s);
  std::vector<Ideal> cover;
  ElementSet uni(c.s.size());
  for (const auto& p : strong_krull_primes(c.s, c.limits))
    if (p.members().is_subset_of(zs)) {
      cover.push_back(p);
      uni |= p.members();
    }
  if (uni != zs) throw hypothesis_error("Z(S) is not a union of strong Krull primes");
  over_instances(c, [&](Ctx& cx, const Instance& in, json& info) {
    require_flag(in.rep.mccoy, "B is not McCoy");
    require_flag(in.rep.weak_content, "B is not weak content");
    require_flag(in.rep.lambda_injective, "lambda is not injective");
    require_flag(in.rep.homogeneous, "content is not homogeneous");
    const auto& a = in.an.algebra();
    const auto& b = a.carrier();
    ElementSet uni_b(b.size());
    json parts = json::array();
    bool any_proper = false;
    for (const auto& p : cover) {
      ++cx.rep.cases;
      const Ideal pb = extend_ideal(a, p);
      uni_b |= pb.members();
      if (pb.is_whole()) continue;
      any_proper = true;
      if (!is_prime(b, pb) || !is_strong_krull_prime(b, pb, cx.limits))
        falsify("proper pB is not a strong Krull prime of B", json{{"p", ideal_to_json(p)}});
      parts.push_back(ideal_to_json(p));
    }
    if (uni_b != zero_divisors_of(b)) falsify("Z(B) differs from the union of the extended primes", nullptr);
    if (!any_proper) falsify("every extended prime equals B", nullptr);
    info["primes"] = parts;
  });
}

using CheckFn = void (*)(Ctx&);

inline CheckFn check_for(TheoremId id) {
  switch (id) {
    case TheoremId::T2_1: return check_T2_1;
    case TheoremId::C2_2: return check_C2_2;
    case TheoremId::C2_3: return check_C2_3;
    case TheoremId::T2_4: return check_T2_4;
    case TheoremId::T2_6: return check_T2_6;
    case TheoremId::C2_7: return check_C2_7;
    case TheoremId::T2_11: return check_T2_11;
    case TheoremId::T2_12_PA: return check_T2_12_PA;
    case TheoremId::T2_12_TRANSFER: return check_T2_12_transfer;
    case TheoremId::T2_14: return check_T2_14;
    case TheoremId::C2_16: return check_C2_16;
    case TheoremId::T2_20: return check_T2_20;
    case TheoremId::T3_7: return check_T3_7;
    case TheoremId::T3_8: return check_T3_8;
    case TheoremId::P3_8: return check_P3_8;
    case TheoremId::P3_10: return check_P3_10;
    case TheoremId::L4_2: return check_L4_2;
    case TheoremId::L4_4: return check_L4_4;
    case TheoremId::T4_5: return check_T4_5;
    case TheoremId::T4_6: return check_T4_6;
    case TheoremId::T4_7: return check_T4_7;
    case TheoremId::L4_9: return check_L4_9;
    case TheoremId::T4_10: return check_T4_10;
  }
  throw precondition_error("unregistered theorem id");
}

}  // namespace harness_detail

/// Runs one check. Binding and cap errors propagate; hypothesis failures and
/// falsifications become report outcomes.
inline VerificationReport run_check(const CheckSpec& spec, SemialgebraCache* shared = nullptr) {
  using namespace harness_detail;
  if (spec.vars < 1 || spec.vars > kMaxVars) throw precondition_error("k must be between 1 and 4");
  if (spec.degree < 0) throw precondition_error("degree must be nonnegative");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.theorem = spec.theorem;
  Limits limits;
  FiniteSemiring s = semiring_from_json(spec.semiring, limits);
  FiniteSemimodule m = semimodule_from_json(s, spec.module, limits);
  rep.instance = s.name();
  if (uses_module(spec.theorem)) rep.instance += " / " + m.name();
  const bool exhaustive = spec.exhaustive && spec.vars == 1;
  rep.mode = exhaustive ? "exhaustive" : "sampled";
  if (spec.exhaustive && spec.vars > 1) rep.notes.push_back("exhaustive enumeration is univariate; k > 1 runs sampled");
  SemialgebraCache local;
  Ctx ctx{spec, std::move(s), std::move(m), PolyShape{spec.vars, spec.laurent}, exhaustive, rep,
          shared ? *shared : local, limits};
  try {
    check_for(spec.theorem)(ctx);
    rep.outcome = Outcome::verified;
  } catch (const hypothesis_error& e) {
    rep.outcome = Outcome::hypothesis_unmet;
    rep.detail = e.what();
  } catch (const falsified_signal& f) {
    rep.outcome = Outcome::falsified;
    rep.detail = f.detail;
    rep.witness = json{{"spec", spec_to_json(spec)}, {"case", f.case_data}};
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// ---------------------------------------------------------------------------
// Suites

inline std::vector<std::string> suite_names() { return {"paper-exhaustive", "paper-sampled", "quick"}; }

/// Specs of a named suite over `pool` (the builtin pool when empty).
inline std::vector<CheckSpec> suite_specs(const std::string& name, std::vector<std::string> pool = {},
                                          std::uint64_t seed = 0) {
  CheckSpec base;
  base.seed = seed;
  if (name == "paper-exhaustive") {
    if (pool.empty()) pool = builtin_pool();
  } else if (name == "paper-sampled") {
    if (pool.empty()) pool = builtin_pool();
    base.exhaustive = false;
    base.laurent = true;
    base.vars = 2;
    base.samples = 400;
  } else if (name == "quick") {
    if (pool.empty()) pool = {"boolean"};
    base.degree = 2;
  } else {
    throw parse_error("unknown suite '" + name + "'");
  }
  std::vector<CheckSpec> out;
  for (const auto& id : all_theorems())
    for (const auto& s : pool) {
      CheckSpec c = base;
      c.theorem = id;
      c.semiring = json{{"builtin", s}};
      out.push_back(std::move(c));
    }
  return out;
}

inline std::vector<VerificationReport> run_suite(const std::string& name, std::vector<std::string> pool = {},
                                                 std::uint64_t seed = 0) {
  SemialgebraCache cache;
  std::vector<VerificationReport> out;
  for (const auto& spec : suite_specs(name, std::move(pool), seed)) out.push_back(run_check(spec, &cache));
  return out;
}

inline json suite_to_json(const std::string& name, const std::vector<VerificationReport>& reports, bool deterministic) {
  json rs = json::array();
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : reports) {
    rs.push_back(report_to_json(r, deterministic));
    ++counts[static_cast<int>(r.outcome)];
  }
  return json{{"suite", name},
              {"reports", rs},
              {"summary", json{{"verified", counts[0]}, {"falsified", counts[1]}, {"hypothesis_unmet", counts[2]}}}};
}

// ---------------------------------------------------------------------------
// Witness replay

struct ReplayResult {
  bool reproduced = false;
  std::string detail;
};

/// Re-runs the single recorded case when the theorem has a pairwise case
/// predicate, otherwise the whole (deterministic) check.
inline ReplayResult replay_witness(const json& witness) {
  using namespace harness_detail;
  const CheckSpec spec = spec_from_json(detail::require_field(witness, "spec", "witness"));
  const json& cs = witness.contains("case") ? witness.at("case") : json(nullptr);
  Limits limits;
  const FiniteSemiring s = semiring_from_json(spec.semiring, limits);
  const PolyShape shape{spec.vars, spec.laurent};
  const bool has_pair = cs.is_object() && cs.contains("f") && cs.contains("g");
  if (has_pair) {
    const auto f = poly_from_json(cs.at("f"), s, shape);
    switch (spec.theorem) {
      case TheoremId::T2_1: {
        const auto m = semimodule_from_json(s, spec.module, limits);
        const auto g = poly_from_json(cs.at("g"), m, shape);
        if (g.is_zero() || !scalar_action(m, f, g).is_zero()) return {false, "case does not meet f g = 0, g != 0"};
        auto bad = mccoy_case_failure(m, f, g);
        return {bad.has_value(), bad.value_or("reduction succeeds")};
      }
      case TheoremId::C2_2: {
        const auto g = poly_from_json(cs.at("g"), s, shape);
        const bool fails = is_entire(s) && !f.is_zero() && !g.is_zero() && poly_mul(s, f, g).is_zero();
        return {fails, fails ? "zero product in S[G] over entire S" : "no violation"};
      }
      case TheoremId::T2_4: {
        const auto g = poly_from_json(cs.at("g"), s, shape);
        if (!cs.contains("p")) return {false, "case lacks p"};
        const Ideal p = Ideal::verified(s, ElementSet::of(s.size(), cs.at("p").get<std::vector<Elem>>()));
        if (!is_prime(s, p)) return {false, "p is not prime"};
        const bool violated = prime_extension_violated(s, p, f, g);
        const bool fails = is_subtractive(s, p) ? violated : !violated;
        return {fails, fails ? "case contradicts the primality criterion" : "no violation"};
      }
      case TheoremId::T3_7: {
        const auto g = poly_from_json(cs.at("g"), s, shape);
        const bool fails = is_weak_gaussian(s, limits) && weak_content_case_fails(s, f, g);
        return {fails, fails ? "weak content fails over a weak Gaussian S" : "no violation"};
      }
      case TheoremId::T3_8: {
        const auto g = poly_from_json(cs.at("g"), s, shape);
        const bool fails = is_subtractive_semiring(s, limits) && !dedekind_mertens_exponent(s, f, g, 64).exponent;
        return {fails, fails ? "no Dedekind-Mertens exponent over a subtractive S" : "no violation"};
      }
      default: break;
    }
  }
  const auto rep = run_check(spec);
  return {rep.outcome == Outcome::falsified, rep.detail};
}

}  // namespace zdiv
