#pragma once

// Finite S-semialgebras B with structure map lambda: S -> B, content defined
// as an intersection of ideals, and the Ohm-Rush / homogeneous / weak content
// / content / McCoy predicates.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zdiv/polynomial.hpp"

namespace zdiv {

/// A finite commutative monoid given by its multiplication table.
struct MonoidTable {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<long long>> mul;
  long long identity = 0;
};

inline void check_monoid(const MonoidTable& t) {
  const std::size_t n = t.elements.size();
  if (n == 0) throw structural_error("monoid has no elements");
  detail::check_square(t.mul, n, n, n, "monoid mul");
  if (t.identity < 0 || static_cast<std::size_t>(t.identity) >= n) throw structural_error("monoid identity out of range");
  for (std::size_t a = 0; a < n; ++a) {
    if (t.mul[t.identity][a] != static_cast<long long>(a)) throw axiom_error("monoid identity does not act trivially");
    for (std::size_t b = 0; b < n; ++b) {
      if (t.mul[a][b] != t.mul[b][a]) throw axiom_error("monoid is not commutative");
      for (std::size_t c = 0; c < n; ++c)
        if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]]) throw axiom_error("monoid is not associative");
    }
  }
}

/// trivial, idem2 ({e,a}, a*a = a), z2 ({e,a}, a*a = e), z3.
inline MonoidTable builtin_monoid(const std::string& name) {
  if (name == "trivial") return {"trivial", {"e"}, {{0}}, 0};
  if (name == "idem2") return {"idem2", {"e", "a"}, {{0, 1}, {1, 1}}, 0};
  if (name == "z2") return {"z2", {"e", "a"}, {{0, 1}, {1, 0}}, 0};
  if (name == "z3") return {"z3", {"e", "a", "a2"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0};
  throw unknown_builtin("monoid '" + name + "'");
}

/// A validated S-semialgebra. s.b is lambda(s) * b in B.
class FiniteSemialgebra {
 public:
  FiniteSemialgebra() = default;

  /// Verifies that lambda is a unital semiring homomorphism S -> B.
  static FiniteSemialgebra from_parts(FiniteSemiring s, FiniteSemiring b, std::vector<Elem> lambda,
                                      std::string construction) {
    if (lambda.size() != s.size()) throw structural_error("lambda must map every element of S");
    for (Elem x : lambda)
      if (x >= b.size()) throw structural_error("lambda image out of range");
    if (lambda[s.zero()] != b.zero()) throw axiom_error("lambda(0) != 0");
    if (lambda[s.one()] != b.one()) throw axiom_error("lambda(1) != 1");
    for (Elem x = 0; x < s.size(); ++x)
      for (Elem y = 0; y < s.size(); ++y) {
        if (lambda[s.add(x, y)] != b.add(lambda[x], lambda[y])) throw axiom_error("lambda does not preserve +");
        if (lambda[s.mul(x, y)] != b.mul(lambda[x], lambda[y])) throw axiom_error("lambda does not preserve *");
      }
    FiniteSemialgebra a;
    a.scalars_ = std::move(s);
    a.carrier_ = std::move(b);
    a.lambda_ = std::move(lambda);
    a.construction_ = std::move(construction);
    return a;
  }

  const FiniteSemiring& scalars() const { return scalars_; }
  const FiniteSemiring& carrier() const { return carrier_; }
  const std::string& construction() const { return construction_; }
  Elem lambda(Elem s) const { return lambda_[s]; }
  const std::vector<Elem>& lambda_map() const { return lambda_; }
  Elem act(Elem s, Elem b) const { return carrier_.mul(lambda_[s], b); }

  bool lambda_injective() const {
    ElementSet image(carrier_.size());
    for (Elem x : lambda_) {
      if (image.contains(x)) return false;
      image.insert(x);
    }
    return true;
  }

 private:
  FiniteSemiring scalars_;
  FiniteSemiring carrier_;
  std::vector<Elem> lambda_;
  std::string construction_;
};

namespace detail {

inline std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap, const std::string& what) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > cap) throw cap_exceeded(what + " would exceed " + std::to_string(cap) + " elements");
  }
  return r;
}

inline std::vector<Elem> digits(std::size_t code, std::size_t base, std::size_t count) {
  std::vector<Elem> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = static_cast<Elem>(code % base);
    code /= base;
  }
  return out;
}

inline std::size_t encode(const std::vector<Elem>& ds, std::size_t base) {
  std::size_t code = 0;
  for (std::size_t i = ds.size(); i-- > 0;) code = code * base + ds[i];
  return code;
}

}  // namespace detail

/// B = S[X]/(X^d). Element index = sum of c_i |S|^i over coefficient vectors.
inline FiniteSemialgebra truncated_poly_semialgebra(const FiniteSemiring& s, int d, const Limits& limits = {}) {
  if (d < 1) throw precondition_error("truncation degree must be at least 1");
  const std::size_t n = s.size();
  const auto slots = static_cast<std::size_t>(d);
  const std::string label = "truncated(" + std::to_string(d) + ")";
  const std::size_t size = detail::checked_power(n, slots, limits.construction_cap, label + " over " + s.name());
  SemiringTables t;
  t.name = s.name() + "[X]/(X^" + std::to_string(d) + ")";
  t.add.assign(size, std::vector<long long>(size));
  t.mul.assign(size, std::vector<long long>(size));
  std::vector<std::vector<Elem>> vec(size);
  for (std::size_t code = 0; code < size; ++code) {
    vec[code] = detail::digits(code, n, slots);
    t.elements.push_back(format_poly(s, Polynomial::dense(s, vec[code])));
  }
  std::vector<Elem> sum(slots), prod(slots);
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y) {
      for (std::size_t i = 0; i < slots; ++i) {
        sum[i] = s.add(vec[x][i], vec[y][i]);
        prod[i] = s.zero();
      }
      for (std::size_t i = 0; i < slots; ++i)
        for (std::size_t j = 0; i + j < slots; ++j) prod[i + j] = s.add(prod[i + j], s.mul(vec[x][i], vec[y][j]));
      t.add[x][y] = static_cast<long long>(detail::encode(sum, n));
      t.mul[x][y] = static_cast<long long>(detail::encode(prod, n));
    }
  std::vector<Elem> constant(slots, s.zero());
  std::vector<Elem> lambda(n);
  for (Elem c = 0; c < n; ++c) {
    constant[0] = c;
    lambda[c] = static_cast<Elem>(detail::encode(constant, n));
  }
  t.zero = lambda[s.zero()];
  t.one = lambda[s.one()];
  return FiniteSemialgebra::from_parts(s, FiniteSemiring::from_construction(t, limits), std::move(lambda), label);
}

/// B = S[M] for a finite commutative monoid M.
inline FiniteSemialgebra finite_monoid_semialgebra(const FiniteSemiring& s, const MonoidTable& monoid,
                                                   const Limits& limits = {}) {
  check_monoid(monoid);
  const std::size_t n = s.size();
  const std::size_t k = monoid.elements.size();
  const std::string label = "monoid(" + monoid.name + ")";
  const std::size_t size = detail::checked_power(n, k, limits.construction_cap, label + " over " + s.name());
  SemiringTables t;
  t.name = s.name() + "[" + monoid.name + "]";
  t.add.assign(size, std::vector<long long>(size));
  t.mul.assign(size, std::vector<long long>(size));
  std::vector<std::vector<Elem>> vec(size);
  for (std::size_t code = 0; code < size; ++code) {
    vec[code] = detail::digits(code, n, k);
    std::string label_b;
    for (std::size_t j = k; j-- > 0;) {
      const Elem c = vec[code][j];
      if (c == s.zero()) continue;
      if (!label_b.empty()) label_b += " + ";
      label_b += (c == s.one() ? "" : s.element_name(c) + "*") + monoid.elements[j];
    }
    t.elements.push_back(label_b.empty() ? "0" : label_b);
  }
  std::vector<Elem> sum(k), prod(k);
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y) {
      for (std::size_t i = 0; i < k; ++i) {
        sum[i] = s.add(vec[x][i], vec[y][i]);
        prod[i] = s.zero();
      }
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          const auto target = static_cast<std::size_t>(monoid.mul[i][j]);
          prod[target] = s.add(prod[target], s.mul(vec[x][i], vec[y][j]));
        }
      t.add[x][y] = static_cast<long long>(detail::encode(sum, n));
      t.mul[x][y] = static_cast<long long>(detail::encode(prod, n));
    }
  std::vector<Elem> constant(k, s.zero());
  std::vector<Elem> lambda(n);
  const auto e = static_cast<std::size_t>(monoid.identity);
  for (Elem c = 0; c < n; ++c) {
    constant[e] = c;
    lambda[c] = static_cast<Elem>(detail::encode(constant, n));
  }
  t.zero = lambda[s.zero()];
  t.one = lambda[s.one()];
  return FiniteSemialgebra::from_parts(s, FiniteSemiring::from_construction(t, limits), std::move(lambda), label);
}

/// A named construction applied to a scalar semiring.
struct ConstructionSpec {
  enum class Kind { truncated, monoid, projection } kind = Kind::truncated;
  int degree = 2;  ///< truncation degree, or projection index
  MonoidTable monoid;

  std::string label() const {
    switch (kind) {
      case Kind::truncated: return "truncated:" + std::to_string(degree);
      case Kind::monoid: return "monoid:" + monoid.name;
      case Kind::projection: break;
    }
    return "projection:" + std::to_string(degree);
  }
  FiniteSemialgebra build(const FiniteSemiring& s, const Limits& limits = {}) const {
    switch (kind) {
      case Kind::truncated: return truncated_poly_semialgebra(s, degree, limits);
      case Kind::monoid: return finite_monoid_semialgebra(s, monoid, limits);
      case Kind::projection: break;
    }
    auto [target, phi] = product_projection(s, degree);
    return FiniteSemialgebra::from_parts(s, std::move(target), std::move(phi), label());
  }
};

/// "truncated:D", "monoid:NAME" or "projection:I".
inline ConstructionSpec parse_construction(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw parse_error("construction must be truncated:D, monoid:NAME or projection:I, got '" + text + "'");
  const std::string kind = detail::trim(text.substr(0, colon));
  const std::string arg = detail::trim(text.substr(colon + 1));
  ConstructionSpec c;
  if (kind == "truncated") {
    c.kind = ConstructionSpec::Kind::truncated;
    c.degree = static_cast<int>(detail::parse_int_param("truncated", arg));
    if (c.degree < 1) throw parse_error("truncation degree must be positive");
  } else if (kind == "monoid") {
    c.kind = ConstructionSpec::Kind::monoid;
    c.monoid = builtin_monoid(arg);
  } else if (kind == "projection") {
    c.kind = ConstructionSpec::Kind::projection;
    c.degree = static_cast<int>(detail::parse_int_param("projection", arg));
    if (c.degree != 1 && c.degree != 2) throw parse_error("projection index must be 1 or 2");
  } else {
    throw parse_error("unknown construction '" + kind + "'");
  }
  return c;
}

/// IB: additive closure of {lambda(i) b : i in I, b in B}.
inline ElementSet extension_set(const FiniteSemialgebra& a, const Ideal& i) {
  const auto& b = a.carrier();
  ElementSet out(b.size());
  std::vector<Elem> members;
  i.members().for_each([&](Elem s) {
    for (Elem x = 0; x < b.size(); ++x) {
      const Elem p = a.act(s, x);
      if (!out.contains(p)) {
        out.insert(p);
        members.push_back(p);
      }
    }
  });
  for (std::size_t k = 0; k < members.size(); ++k)
    for (std::size_t j = 0; j <= k; ++j) {
      const Elem q = b.add(members[k], members[j]);
      if (!out.contains(q)) {
        out.insert(q);
        members.push_back(q);
      }
    }
  return out;
}

/// pB as an ideal of B.
inline Ideal extend_ideal(const FiniteSemialgebra& a, const Ideal& p) {
  return Ideal::verified(a.carrier(), extension_set(a, p));
}

/// c(f): intersection of the ideals I of S with f in IB.
inline Ideal content_via_intersection(const FiniteSemialgebra& a, Elem f, const std::vector<Ideal>& ideals) {
  ElementSet out = a.scalars().all();
  for (const auto& i : ideals)
    if (extension_set(a, i).contains(f)) out &= i.members();
  return Ideal::verified(a.scalars(), std::move(out));
}

inline Ideal content_via_intersection(const FiniteSemialgebra& a, Elem f, const Limits& limits = {}) {
  return content_via_intersection(a, f, enumerate_ideals(a.scalars(), limits));
}

/// Concrete evidence that a predicate fails.
struct PredicateWitness {
  std::vector<Elem> elements;  ///< elements of B
  std::optional<Elem> scalar;  ///< element of S, when relevant
  std::string note;
};

struct ContentReport {
  std::vector<Ideal> ideals;            ///< ideals of S, canonical order
  std::vector<std::size_t> content_of;  ///< per element of B, index into ideals
  bool lambda_injective = false;
  bool content_onto = false;  ///< every ideal of S is some c(f)
  bool ohm_rush = false;
  bool homogeneous = false;
  bool weak_content = false;
  bool content = false;
  std::optional<std::size_t> dm_max_exponent;
  bool mccoy = false;
  std::optional<PredicateWitness> ohm_rush_witness;
  std::optional<PredicateWitness> homogeneous_witness;
  std::optional<PredicateWitness> weak_content_witness;
  std::optional<PredicateWitness> content_witness;
  std::optional<PredicateWitness> mccoy_witness;

  const Ideal& content_ideal(Elem f) const { return ideals[content_of[f]]; }
};

/// Cached content machinery for one semialgebra.
class SemialgebraAnalysis {
 public:
  explicit SemialgebraAnalysis(FiniteSemialgebra a, const Limits& limits = {}) : a_(std::move(a)), limits_(limits) {
    const auto& s = a_.scalars();
    ideals_ = enumerate_ideals(s, limits_);
    for (const auto& i : ideals_) extensions_.push_back(extension_set(a_, i));
    const auto& b = a_.carrier();
    content_of_.resize(b.size());
    for (Elem f = 0; f < b.size(); ++f) {
      ElementSet c = s.all();
      for (std::size_t k = 0; k < ideals_.size(); ++k)
        if (extensions_[k].contains(f)) c &= ideals_[k].members();
      content_of_[f] = index_of(c);
    }
  }

  const FiniteSemialgebra& algebra() const { return a_; }
  const std::vector<Ideal>& ideals() const { return ideals_; }
  const Ideal& content(Elem f) const { return ideals_[content_of_[f]]; }
  std::size_t content_index(Elem f) const { return content_of_[f]; }
  const ElementSet& extension(std::size_t ideal_index) const { return extensions_[ideal_index]; }
  const ElementSet& extension(const Ideal& i) const { return extensions_[index_of(i.members())]; }
  std::size_t index_of(const Ideal& i) const { return index_of(i.members()); }

  /// Least nonzero s with s c = 0, if any.
  std::optional<Elem> nonzero_annihilator(std::size_t ideal_index) const {
    const auto& s = a_.scalars();
    for (Elem r = 0; r < s.size(); ++r) {
      if (r == s.zero()) continue;
      bool kills = true;
      ideals_[ideal_index].members().for_each([&](Elem x) { kills = kills && s.mul(r, x) == s.zero(); });
      if (kills) return r;
    }
    return std::nullopt;
  }

  ContentReport report(std::size_t dm_max = 64) const {
    const auto& s = a_.scalars();
    const auto& b = a_.carrier();
    const auto nb = static_cast<Elem>(b.size());
    ContentReport r;
    r.ideals = ideals_;
    r.content_of = content_of_;
    r.lambda_injective = a_.lambda_injective();
    {
      std::vector<bool> hit(ideals_.size(), false);
      for (auto k : content_of_) hit[k] = true;
      r.content_onto = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
    }

    r.ohm_rush = true;
    for (Elem f = 0; f < nb && r.ohm_rush; ++f)
      if (!extensions_[content_of_[f]].contains(f)) {
        r.ohm_rush = false;
        r.ohm_rush_witness = PredicateWitness{{f}, std::nullopt, "f not in c(f)B"};
      }

    r.homogeneous = true;
    for (Elem x = 0; x < s.size() && r.homogeneous; ++x)
      for (Elem f = 0; f < nb && r.homogeneous; ++f)
        if (content(a_.act(x, f)) != scalar_multiple(s, x, content(f))) {
          r.homogeneous = false;
          r.homogeneous_witness = PredicateWitness{{f}, x, "c(s f) != s c(f)"};
        }

    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, bool> weak_memo;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, DedekindMertensResult> dm_memo;
    r.weak_content = true;
    r.content = true;
    std::size_t dm_max_seen = 0;
    for (Elem f = 0; f < nb; ++f)
      for (Elem g = 0; g < nb; ++g) {
        const auto key = std::tuple{content_of_[f], content_of_[g], content_of_[b.mul(f, g)]};
        if (r.weak_content) {
          auto it = weak_memo.find(key);
          if (it == weak_memo.end()) {
            const auto chk = weak_content_check(s, ideals_[std::get<0>(key)], ideals_[std::get<1>(key)],
                                                ideals_[std::get<2>(key)]);
            it = weak_memo.emplace(key, chk.holds).first;
            if (!chk.holds)
              r.weak_content_witness =
                  PredicateWitness{{f, g}, chk.witness, chk.failed_inclusion == 1 ? "c(fg) not in c(f)c(g)"
                                                                                  : "c(f)c(g) not in rad c(fg)"};
          }
          if (!it->second) r.weak_content = false;
        }
        if (r.content) {
          auto it = dm_memo.find(key);
          if (it == dm_memo.end())
            it = dm_memo
                     .emplace(key, dedekind_mertens_exponent(s, ideals_[std::get<0>(key)], ideals_[std::get<1>(key)],
                                                             ideals_[std::get<2>(key)], dm_max))
                     .first;
          if (!it->second.exponent) {
            r.content = false;
            r.content_witness = PredicateWitness{
                {f, g}, std::nullopt,
                it->second.absent_for_all ? "no Dedekind-Mertens exponent exists" : "no exponent up to the bound"};
          } else {
            dm_max_seen = std::max(dm_max_seen, *it->second.exponent);
          }
        }
      }
    if (r.content) r.dm_max_exponent = dm_max_seen;

    r.mccoy = r.ohm_rush;
    if (r.mccoy) {
      std::vector<std::optional<std::optional<Elem>>> ann_memo(ideals_.size());
      for (Elem g = 0; g < nb && r.mccoy; ++g) {
        if (g == b.zero()) continue;
        for (Elem f = 0; f < nb && r.mccoy; ++f) {
          if (b.mul(g, f) != b.zero()) continue;
          auto& memo = ann_memo[content_of_[f]];
          if (!memo) memo = nonzero_annihilator(content_of_[f]);
          if (!*memo) {
            r.mccoy = false;
            r.mccoy_witness = PredicateWitness{{f, g}, std::nullopt, "g f = 0, g != 0, but c(f) has no nonzero annihilator"};
          }
        }
      }
    } else {
      r.mccoy_witness = PredicateWitness{r.ohm_rush_witness->elements, std::nullopt, "not Ohm-Rush"};
    }
    return r;
  }

 private:
  std::size_t index_of(const ElementSet& members) const {
    for (std::size_t k = 0; k < ideals_.size(); ++k)
      if (ideals_[k].members() == members) return k;
    throw precondition_error("set is not an ideal of " + a_.scalars().name());
  }

  FiniteSemialgebra a_;
  Limits limits_;
  std::vector<Ideal> ideals_;
  std::vector<ElementSet> extensions_;
  std::vector<std::size_t> content_of_;
};

// ---------------------------------------------------------------------------
// Strong Krull primes under extension

enum class ExtensionOutcome { equals_whole, strong_krull_verified, counterexample };

struct ExtensionResult {
  ExtensionOutcome outcome = ExtensionOutcome::counterexample;
  Ideal extended;
  std::string detail;
};

/// For a strong Krull prime p of S: pB is B or a strong Krull prime of B.
/// Requires a weak content semialgebra with injective lambda and homogeneous
/// content; violations raise hypothesis_error.
inline ExtensionResult is_strong_krull_in_B(const SemialgebraAnalysis& an, const ContentReport& rep, const Ideal& p,
                                            const Limits& limits = {}) {
  const auto& a = an.algebra();
  const auto& s = a.scalars();
  if (!is_prime(s, p)) throw precondition_error("p is not a prime ideal of " + s.name());
  if (!rep.weak_content) throw hypothesis_error("semialgebra is not weak content");
  if (!rep.lambda_injective) throw hypothesis_error("lambda is not injective");
  if (!rep.homogeneous) throw hypothesis_error("content is not homogeneous");
  if (!is_strong_krull_prime(s, p, limits)) throw hypothesis_error("p is not a strong Krull prime of S");
  ExtensionResult out;
  out.extended = extend_ideal(a, p);
  const auto& b = a.carrier();
  if (out.extended.is_whole()) {
    out.outcome = ExtensionOutcome::equals_whole;
    return out;
  }
  if (auto v = prime_violation(b, out.extended)) {
    out.outcome = ExtensionOutcome::counterexample;
    out.detail = "pB is not prime: " + b.element_name(v->first) + " * " + b.element_name(v->second);
    return out;
  }
  if (auto bad = strong_krull_violation(b, out.extended, limits)) {
    out.outcome = ExtensionOutcome::counterexample;
    out.detail = "ideal " + format_ideal(b, *bad) + " is in no Ann(z) inside pB";
    return out;
  }
  out.outcome = ExtensionOutcome::strong_krull_verified;
  return out;
}

// ---------------------------------------------------------------------------
// Search for weak content semialgebras that are not McCoy

struct SearchConfig {
  std::vector<FiniteSemiring> pool;
  std::vector<ConstructionSpec> constructions;
  Limits limits;
};

struct SearchInstance {
  std::string semiring;
  std::string construction;
  std::size_t carrier_size = 0;
  std::optional<ContentReport> report;  ///< absent when a cap was hit
  std::string cap_note;
  bool nilpotent_free = false;
  bool nilpotent_free_weak_content_not_mccoy = false;  ///< would contradict the nilpotent-free transfer
  bool weak_content_not_mccoy = false;
};

struct SearchReport {
  std::vector<SearchInstance> instances;
  std::size_t candidates = 0;
  std::size_t transfer_violations = 0;
  std::size_t cap_exhausted = 0;

  /// Only ever a bounded statement.
  std::string conclusion() const {
    return candidates == 0 ? "no counterexample within caps" : "candidate found";
  }
};

inline SearchReport counterexample_search(const SearchConfig& config) {
  SearchReport out;
  for (const auto& s : config.pool)
    for (const auto& c : config.constructions) {
      SearchInstance inst;
      inst.semiring = s.name();
      inst.construction = c.label();
      inst.nilpotent_free = is_nilpotent_free(s);
      try {
        SemialgebraAnalysis an(c.build(s, config.limits), config.limits);
        inst.carrier_size = an.algebra().carrier().size();
        inst.report = an.report();
        inst.weak_content_not_mccoy = inst.report->weak_content && !inst.report->mccoy;
        inst.nilpotent_free_weak_content_not_mccoy = inst.nilpotent_free && inst.weak_content_not_mccoy;
      } catch (const cap_exceeded& e) {
        inst.cap_note = e.what();
        ++out.cap_exhausted;
      }
      if (inst.weak_content_not_mccoy) ++out.candidates;
      if (inst.nilpotent_free_weak_content_not_mccoy) ++out.transfer_violations;
      out.instances.push_back(std::move(inst));
    }
  return out;
}

}  // namespace zdiv
