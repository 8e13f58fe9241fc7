#pragma once

// Finite S-semimodules and their zero-divisor classification: Z(M), Ass(M),
// Property (A), very few / few zero-divisors, primal and Auslander semimodules.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "zdiv/builtins.hpp"
#include "zdiv/ideal.hpp"

namespace zdiv {

struct SemimoduleTables {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<long long>> add;     ///< m x m
  std::vector<std::vector<long long>> action;  ///< n x m, row s, column x: s.x
  long long zero = 0;
};

inline void check_structure(const FiniteSemiring& s, const SemimoduleTables& t) {
  const std::size_t m = t.elements.size();
  if (m == 0) throw structural_error("semimodule has no elements");
  detail::check_square(t.add, m, m, m, "add");
  detail::check_square(t.action, s.size(), m, m, "action");
  if (t.zero < 0 || static_cast<std::size_t>(t.zero) >= m) throw structural_error("zero index out of range");
}

/// Exhaustive check of the unital semimodule axioms over `s`.
inline AxiomReport check_semimodule_axioms(const FiniteSemiring& s, const SemimoduleTables& t) {
  check_structure(s, t);
  const auto m = static_cast<Elem>(t.elements.size());
  const auto n = static_cast<Elem>(s.size());
  const auto zero = static_cast<Elem>(t.zero);
  auto A = [&](Elem x, Elem y) { return static_cast<Elem>(t.add[x][y]); };
  auto act = [&](Elem r, Elem x) { return static_cast<Elem>(t.action[r][x]); };

  AxiomReport report;
  auto first = [&](auto&& bad, auto... ranges) -> std::optional<std::vector<Elem>> {
    std::vector<Elem> w;
    std::optional<std::vector<Elem>> hit;
    auto rec = [&](auto&& self, std::size_t depth, const std::vector<Elem>& bounds) -> void {
      if (hit) return;
      if (depth == bounds.size()) {
        if (bad(w)) hit = w;
        return;
      }
      for (Elem i = 0; i < bounds[depth] && !hit; ++i) {
        w.push_back(i);
        self(self, depth + 1, bounds);
        w.pop_back();
      }
    };
    rec(rec, 0, std::vector<Elem>{static_cast<Elem>(ranges)...});
    return hit;
  };

  if (auto w = first([&](const auto& v) { return A(A(v[0], v[1]), v[2]) != A(v[0], A(v[1], v[2])); }, m, m, m))
    report.add("addition is associative", *w);
  if (auto w = first([&](const auto& v) { return A(v[0], v[1]) != A(v[1], v[0]); }, m, m))
    report.add("addition is commutative", *w);
  if (auto w = first([&](const auto& v) { return A(zero, v[0]) != v[0]; }, m))
    report.add("zero is additive identity", *w);
  if (auto w = first([&](const auto& v) { return act(s.one(), v[0]) != v[0]; }, m))
    report.add("one acts as identity", *w);
  if (auto w = first([&](const auto& v) { return act(s.add(v[0], v[1]), v[2]) != A(act(v[0], v[2]), act(v[1], v[2])); },
                     n, n, m))
    report.add("action distributes over scalar addition", *w);
  if (auto w = first([&](const auto& v) { return act(v[0], A(v[1], v[2])) != A(act(v[0], v[1]), act(v[0], v[2])); },
                     n, m, m))
    report.add("action distributes over addition", *w);
  if (auto w = first([&](const auto& v) { return act(s.mul(v[0], v[1]), v[2]) != act(v[0], act(v[1], v[2])); }, n, n, m))
    report.add("action is associative", *w);
  if (auto w = first([&](const auto& v) { return act(s.zero(), v[0]) != zero; }, m))
    report.add("zero scalar annihilates", *w);
  if (auto w = first([&](const auto& v) { return act(v[0], zero) != zero; }, n))
    report.add("scalars fix zero", *w);
  return report;
}

/// A validated finite unital semimodule. Holds its scalar semiring by value.
class FiniteSemimodule {
 public:
  FiniteSemimodule() = default;

  static FiniteSemimodule from_tables(const FiniteSemiring& s, const SemimoduleTables& t, const Limits& limits = {}) {
    if (t.elements.size() > limits.element_cap)
      throw cap_exceeded("semimodule '" + t.name + "' exceeds element cap");
    const AxiomReport r = check_semimodule_axioms(s, t);
    if (!r.passed) {
      std::string msg = "semimodule '" + t.name + "' violates:";
      for (const auto& v : r.violations) msg += " [" + v.axiom + "]";
      throw axiom_error(msg);
    }
    FiniteSemimodule mod;
    mod.scalars_ = s;
    mod.name_ = t.name;
    mod.names_ = t.elements;
    mod.m_ = t.elements.size();
    mod.add_ = detail::flatten(t.add);
    mod.action_ = detail::flatten(t.action);
    mod.zero_ = static_cast<Elem>(t.zero);
    return mod;
  }

  const FiniteSemiring& scalars() const { return scalars_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return m_; }
  Elem zero() const { return zero_; }
  Elem add(Elem x, Elem y) const { return add_[x * m_ + y]; }
  Elem act(Elem r, Elem x) const { return action_[r * m_ + x]; }

  const std::string& element_name(Elem x) const { return names_.at(x); }
  const std::vector<std::string>& element_names() const { return names_; }
  std::optional<Elem> find(const std::string& label) const {
    for (std::size_t i = 0; i < m_; ++i)
      if (names_[i] == label) return static_cast<Elem>(i);
    return std::nullopt;
  }
  std::optional<Elem> unit() const { return std::nullopt; }

  SemimoduleTables tables() const {
    SemimoduleTables t;
    t.name = name_;
    t.elements = names_;
    t.add.assign(m_, std::vector<long long>(m_));
    t.action.assign(scalars_.size(), std::vector<long long>(m_));
    for (std::size_t x = 0; x < m_; ++x)
      for (std::size_t y = 0; y < m_; ++y) t.add[x][y] = add_[x * m_ + y];
    for (std::size_t r = 0; r < scalars_.size(); ++r)
      for (std::size_t x = 0; x < m_; ++x) t.action[r][x] = action_[r * m_ + x];
    t.zero = zero_;
    return t;
  }

 private:
  FiniteSemiring scalars_;
  std::string name_;
  std::vector<std::string> names_;
  std::size_t m_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> action_;
  Elem zero_ = 0;
};

/// S as a module over itself.
inline FiniteSemimodule regular_semimodule(const FiniteSemiring& s) {
  SemiringTables st = s.tables();
  SemimoduleTables t;
  t.name = "regular(" + s.name() + ")";
  t.elements = st.elements;
  t.add = st.add;
  t.action = st.mul;
  t.zero = st.zero;
  Limits limits;
  limits.element_cap = std::max(limits.element_cap, s.size());
  return FiniteSemimodule::from_tables(s, t, limits);
}

/// Ann_S(targets) for targets in M.
inline Ideal annihilator(const FiniteSemimodule& m, const ElementSet& targets) {
  const auto& s = m.scalars();
  ElementSet out(s.size());
  for (Elem r = 0; r < s.size(); ++r) {
    bool kills = true;
    targets.for_each([&](Elem x) { kills = kills && m.act(r, x) == m.zero(); });
    if (kills) out.insert(r);
  }
  return Ideal::verified(s, std::move(out));
}

inline Ideal annihilator(const FiniteSemimodule& m, Elem x) { return annihilator(m, ElementSet(m.size(), {x})); }

/// Elements of M killed by every member of I.
inline ElementSet killed_by(const FiniteSemimodule& m, const ElementSet& ideal) {
  ElementSet out(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    bool killed = true;
    ideal.for_each([&](Elem r) { killed = killed && m.act(r, x) == m.zero(); });
    if (killed) out.insert(x);
  }
  return out;
}

namespace detail {
inline void require_nonzero(const FiniteSemimodule& m) {
  if (m.size() < 2) throw zero_semimodule_error(m.name() + " has no nonzero element");
}
}  // namespace detail

/// Z_S(M) = {r : r x = 0 for some nonzero x}.
inline ElementSet zero_divisor_set(const FiniteSemimodule& m) {
  detail::require_nonzero(m);
  const auto& s = m.scalars();
  ElementSet out(s.size());
  for (Elem r = 0; r < s.size(); ++r)
    for (Elem x = 0; x < m.size(); ++x)
      if (x != m.zero() && m.act(r, x) == m.zero()) {
        out.insert(r);
        break;
      }
  return out;
}

/// Distinct annihilators Ann(x), x != 0, in canonical order.
inline std::vector<Ideal> element_annihilators(const FiniteSemimodule& m) {
  detail::require_nonzero(m);
  std::vector<Ideal> out;
  for (Elem x = 0; x < m.size(); ++x)
    if (x != m.zero()) out.push_back(annihilator(m, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Members of `family` not strictly contained in another member.
inline std::vector<Ideal> maximal_members(const std::vector<Ideal>& family) {
  std::vector<Ideal> out;
  for (const auto& a : family) {
    const bool dominated = std::any_of(family.begin(), family.end(),
                                       [&](const Ideal& b) { return a != b && a.is_subset_of(b); });
    if (!dominated) out.push_back(a);
  }
  return out;
}

inline std::vector<Ideal> maximal_annihilators(const FiniteSemimodule& m) {
  return maximal_members(element_annihilators(m));
}

/// Ass_S(M): prime ideals of the form Ann(x).
inline std::vector<Ideal> associated_primes(const FiniteSemimodule& m) {
  std::vector<Ideal> out;
  for (auto& a : element_annihilators(m))
    if (is_prime(m.scalars(), a)) out.push_back(std::move(a));
  return out;
}

/// An ideal I inside Z(M) with no nonzero annihilator in M, if one exists.
inline std::optional<Ideal> property_A_violation(const FiniteSemimodule& m, const std::vector<Ideal>& ideals) {
  const ElementSet z = zero_divisor_set(m);
  for (const auto& i : ideals) {
    if (!i.members().is_subset_of(z)) continue;
    if (killed_by(m, i.members()).count() < 2) return i;
  }
  return std::nullopt;
}

inline bool has_property_A(const FiniteSemimodule& m, const Limits& limits = {}) {
  return !property_A_violation(m, enumerate_ideals(m.scalars(), limits));
}

/// Z(M) is the union of the associated primes.
inline bool has_very_few_zero_divisors(const FiniteSemimodule& m) {
  ElementSet uni(m.scalars().size());
  for (const auto& p : associated_primes(m)) uni |= p.members();
  return uni == zero_divisor_set(m);
}

/// Least family of pairwise incomparable primes of S whose union is Z(M).
/// Empty optional when Z(M) is not a union of primes.
inline std::optional<std::vector<Ideal>> few_zero_divisors_decomposition(const FiniteSemimodule& m,
                                                                          const std::vector<Ideal>& primes,
                                                                          std::size_t max_degree = 16) {
  const ElementSet z = zero_divisor_set(m);
  std::vector<Ideal> inside;
  for (const auto& p : primes)
    if (p.members().is_subset_of(z)) inside.push_back(p);
  ElementSet uni(z.universe());
  for (const auto& p : inside) uni |= p.members();
  if (uni != z) return std::nullopt;
  // A minimal cover drops any prime contained in another, so it is an antichain.
  const std::vector<Ideal> cands = maximal_members(inside);
  const std::size_t limit = std::min(max_degree, cands.size());
  std::vector<std::size_t> pick;
  std::optional<std::vector<Ideal>> found;
  auto search = [&](auto&& self, std::size_t start, std::size_t want, ElementSet acc) -> void {
    if (found) return;
    if (pick.size() == want) {
      if (acc == z) {
        std::vector<Ideal> out;
        for (auto k : pick) out.push_back(cands[k]);
        found = std::move(out);
      }
      return;
    }
    for (std::size_t k = start; k < cands.size() && !found; ++k) {
      pick.push_back(k);
      self(self, k + 1, want, acc | cands[k].members());
      pick.pop_back();
    }
  };
  for (std::size_t n = 1; n <= limit && !found; ++n) search(search, 0, n, ElementSet(z.universe()));
  if (!found && cands.size() > limit)
    throw cap_exceeded("few zero-divisor degree search exceeded " + std::to_string(max_degree));
  return found;
}

inline std::optional<std::size_t> few_zero_divisors_degree(const FiniteSemimodule& m, const Limits& limits = {}) {
  auto d = few_zero_divisors_decomposition(m, enumerate_primes(m.scalars(), limits));
  if (!d) return std::nullopt;
  return d->size();
}

/// Z(M) is an ideal of S.
inline bool is_primal(const FiniteSemimodule& m) { return is_ideal(m.scalars(), zero_divisor_set(m)); }

/// Z(S) is contained in Z_S(M).
inline bool is_auslander(const FiniteSemimodule& m) {
  return zero_divisor_set(regular_semimodule(m.scalars())).is_subset_of(zero_divisor_set(m));
}

/// Everything the classification commands report about one semimodule.
struct Classification {
  ElementSet zero_divisors;
  std::vector<Ideal> ass_primes;
  std::vector<Ideal> maximal_annihilators;
  bool property_A = false;
  std::optional<Ideal> property_A_witness;
  bool very_few = false;
  std::optional<std::size_t> degree;
  std::vector<Ideal> decomposition;
  bool primal = false;
  bool auslander = false;
};

inline Classification classify(const FiniteSemimodule& m, const Limits& limits = {}) {
  detail::require_nonzero(m);
  const auto ideals = enumerate_ideals(m.scalars(), limits);
  const auto primes = primes_of(m.scalars(), ideals);
  Classification c;
  c.zero_divisors = zero_divisor_set(m);
  c.ass_primes = associated_primes(m);
  c.maximal_annihilators = maximal_annihilators(m);
  c.property_A_witness = property_A_violation(m, ideals);
  c.property_A = !c.property_A_witness;
  c.very_few = has_very_few_zero_divisors(m);
  if (auto d = few_zero_divisors_decomposition(m, primes)) {
    c.degree = d->size();
    c.decomposition = std::move(*d);
  }
  c.primal = is_ideal(m.scalars(), c.zero_divisors);
  c.auslander = is_auslander(m);
  return c;
}

/// T viewed as an S-semimodule through a homomorphism phi: S -> T.
inline FiniteSemimodule pullback_semimodule(const FiniteSemiring& s, const FiniteSemiring& t, const std::vector<Elem>& phi,
                                            const std::string& name) {
  if (phi.size() != s.size()) throw structural_error("homomorphism must map every element of S");
  SemiringTables tt = t.tables();
  SemimoduleTables m;
  m.name = name;
  m.elements = tt.elements;
  m.add = tt.add;
  m.zero = tt.zero;
  m.action.assign(s.size(), std::vector<long long>(t.size()));
  for (Elem r = 0; r < s.size(); ++r) {
    if (phi[r] >= t.size()) throw structural_error("homomorphism image out of range");
    for (Elem x = 0; x < t.size(); ++x) m.action[r][x] = t.mul(phi[r], x);
  }
  return FiniteSemimodule::from_tables(s, m);
}

/// The one-element semimodule.
inline FiniteSemimodule zero_semimodule(const FiniteSemiring& s) {
  SemimoduleTables m;
  m.name = "zero";
  m.elements = {"0"};
  m.add = {{0}};
  m.action.assign(s.size(), std::vector<long long>{0});
  m.zero = 0;
  return FiniteSemimodule::from_tables(s, m);
}

/// Factors of a semiring built by the product builtin, recovered from its name.
inline std::optional<std::pair<FiniteSemiring, FiniteSemiring>> product_factors(const FiniteSemiring& s) {
  const std::string& n = s.name();
  if (n.rfind("product(", 0) != 0 || n.back() != ')') return std::nullopt;
  const auto parts = detail::split_top_level(n.substr(8, n.size() - 9));
  if (parts.size() != 2) return std::nullopt;
  try {
    auto a = builtin_semiring(parts[0]);
    auto b = builtin_semiring(parts[1]);
    if (a.size() * b.size() != s.size()) return std::nullopt;
    return std::pair{std::move(a), std::move(b)};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

/// Projection S = A x T -> A (index 1) or -> T (index 2), as element maps.
inline std::pair<FiniteSemiring, std::vector<Elem>> product_projection(const FiniteSemiring& s, int index) {
  auto f = product_factors(s);
  if (!f) throw precondition_error("projection needs a product semiring, got " + s.name());
  if (index != 1 && index != 2) throw parse_error("projection index must be 1 or 2");
  const std::size_t w = f->second.size();
  std::vector<Elem> phi(s.size());
  for (Elem x = 0; x < s.size(); ++x) phi[x] = static_cast<Elem>(index == 1 ? x / w : x % w);
  return {index == 1 ? f->first : f->second, std::move(phi)};
}

/// "regular", "zero" or "projection:I" (product semirings only).
inline FiniteSemimodule builtin_semimodule(const FiniteSemiring& s, const std::string& spec) {
  const std::string t = detail::trim(spec);
  if (t == "regular") return regular_semimodule(s);
  if (t == "zero") return zero_semimodule(s);
  if (t.rfind("projection:", 0) == 0) {
    const int index = static_cast<int>(detail::parse_int_param("projection", t.substr(11)));
    auto [target, phi] = product_projection(s, index);
    return pullback_semimodule(s, target, phi, "projection" + std::to_string(index) + "(" + s.name() + ")");
  }
  throw unknown_builtin("semimodule '" + spec + "'");
}

}  // namespace zdiv
