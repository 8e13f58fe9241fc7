#pragma once

// Ideals of a finite semiring: closure, enumeration and the ideal-theoretic
// predicates (subtractive, prime, radical, annihilator, prime avoidance,
// strong Krull primes, weak Gaussian).

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "zdiv/semiring.hpp"

namespace zdiv {

/// Subset of a semiring containing zero, closed under + and under scalar
/// multiplication. Instances are only produced by operations that establish
/// the invariant; the parent semiring is passed alongside.
class Ideal {
 public:
  Ideal() = default;

  /// Throws precondition_error unless `members` is an ideal of `s`.
  static Ideal verified(const FiniteSemiring& s, ElementSet members);
  static Ideal zero(const FiniteSemiring& s) { return Ideal(ElementSet(s.size(), {s.zero()})); }
  static Ideal whole(const FiniteSemiring& s) { return Ideal(s.all()); }

  const ElementSet& members() const { return members_; }
  bool contains(Elem a) const { return members_.contains(a); }
  std::size_t size() const { return members_.count(); }
  std::vector<Elem> elements() const { return members_.elements(); }
  bool is_subset_of(const Ideal& o) const { return members_.is_subset_of(o.members_); }
  bool is_whole() const { return members_.count() == members_.universe(); }

  friend bool operator==(const Ideal&, const Ideal&) = default;
  friend auto operator<=>(const Ideal& a, const Ideal& b) { return a.members_ <=> b.members_; }

 private:
  explicit Ideal(ElementSet m) : members_(std::move(m)) {}
  friend Ideal ideal_closure(const FiniteSemiring&, const ElementSet&);
  friend Ideal extend_closure(const FiniteSemiring&, const Ideal&, Elem);
  friend Ideal unchecked_ideal(ElementSet);

  ElementSet members_;
};

struct IdealHash {
  std::size_t operator()(const Ideal& i) const { return i.members().hash(); }
};

/// For internal callers that established closure by other means.
inline Ideal unchecked_ideal(ElementSet m) { return Ideal(std::move(m)); }

namespace detail {

/// Grows `set` (already containing zero) to the least ideal containing it.
inline void close_in_place(const FiniteSemiring& s, ElementSet& set, std::deque<Elem> pending) {
  const auto n = static_cast<Elem>(s.size());
  while (!pending.empty()) {
    const Elem x = pending.front();
    pending.pop_front();
    for (Elem r = 0; r < n; ++r) {
      const Elem p = s.mul(r, x);
      if (!set.contains(p)) {
        set.insert(p);
        pending.push_back(p);
      }
    }
    // Sums with every current member, including later arrivals via the queue.
    for (Elem y : set.elements()) {
      const Elem q = s.add(x, y);
      if (!set.contains(q)) {
        set.insert(q);
        pending.push_back(q);
      }
    }
  }
}

}  // namespace detail

/// Least ideal containing `gens`.
inline Ideal ideal_closure(const FiniteSemiring& s, const ElementSet& gens) {
  ElementSet set = gens;
  set.insert(s.zero());
  std::deque<Elem> pending;
  set.for_each([&](Elem e) { pending.push_back(e); });
  detail::close_in_place(s, set, std::move(pending));
  return Ideal(std::move(set));
}

inline Ideal ideal_closure(const FiniteSemiring& s, const std::vector<Elem>& gens) {
  return ideal_closure(s, ElementSet::of(s.size(), gens));
}

/// Least ideal containing `base` and `a`.
inline Ideal extend_closure(const FiniteSemiring& s, const Ideal& base, Elem a) {
  if (base.contains(a)) return base;
  ElementSet set = base.members();
  set.insert(a);
  detail::close_in_place(s, set, std::deque<Elem>{a});
  return Ideal(std::move(set));
}

inline bool is_ideal(const FiniteSemiring& s, const ElementSet& set) {
  if (!set.contains(s.zero())) return false;
  bool ok = true;
  set.for_each([&](Elem a) {
    if (!ok) return;
    set.for_each([&](Elem b) { ok = ok && set.contains(s.add(a, b)); });
    for (Elem r = 0; r < s.size() && ok; ++r) ok = set.contains(s.mul(r, a));
  });
  return ok;
}

inline Ideal Ideal::verified(const FiniteSemiring& s, ElementSet members) {
  if (members.universe() != s.size()) throw precondition_error("element set over a different carrier");
  if (!is_ideal(s, members)) throw precondition_error("set is not an ideal of " + s.name());
  return Ideal(std::move(members));
}

inline Ideal ideal_sum(const FiniteSemiring& s, const Ideal& a, const Ideal& b) {
  return ideal_closure(s, a.members() | b.members());
}

/// The ideal generated by all products ab.
inline Ideal ideal_product(const FiniteSemiring& s, const Ideal& a, const Ideal& b) {
  ElementSet gens(s.size());
  a.members().for_each([&](Elem x) { b.members().for_each([&](Elem y) { gens.insert(s.mul(x, y)); }); });
  return ideal_closure(s, gens);
}

inline Ideal ideal_intersection(const Ideal& a, const Ideal& b) { return unchecked_ideal(a.members() & b.members()); }

/// s * I = {s a : a in I}; already an ideal.
inline Ideal scalar_multiple(const FiniteSemiring& s, Elem r, const Ideal& i) {
  ElementSet out(s.size());
  i.members().for_each([&](Elem a) { out.insert(s.mul(r, a)); });
  return unchecked_ideal(std::move(out));
}

/// Every ideal contained in `bound`, in canonical order. Breadth-first over
/// single-generator extensions starting from the zero ideal.
inline std::vector<Ideal> enumerate_ideals_within(const FiniteSemiring& s, const ElementSet& bound,
                                                  const Limits& limits = {}) {
  std::unordered_set<Ideal, IdealHash> seen;
  std::deque<Ideal> queue;
  const Ideal start = Ideal::zero(s);
  seen.insert(start);
  queue.push_back(start);
  const auto candidates = bound.elements();
  while (!queue.empty()) {
    const Ideal cur = queue.front();
    queue.pop_front();
    for (Elem a : candidates) {
      if (cur.contains(a)) continue;
      Ideal next = extend_closure(s, cur, a);
      if (!next.members().is_subset_of(bound)) continue;
      if (seen.insert(next).second) {
        if (seen.size() > limits.ideal_cap)
          throw cap_exceeded(s.name() + " has more than " + std::to_string(limits.ideal_cap) + " ideals");
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<Ideal> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Ideal> enumerate_ideals(const FiniteSemiring& s, const Limits& limits = {}) {
  if (s.size() > limits.construction_cap) throw cap_exceeded(s.name() + " is too large to enumerate ideals");
  return enumerate_ideals_within(s, s.all(), limits);
}

/// A pair (a, b) with a + b in I and a in I but b outside I.
inline std::optional<std::pair<Elem, Elem>> subtractive_violation(const FiniteSemiring& s, const Ideal& i) {
  for (Elem a : i.elements())
    for (Elem b = 0; b < s.size(); ++b)
      if (!i.contains(b) && i.contains(s.add(a, b))) return std::pair{a, b};
  return std::nullopt;
}

inline bool is_subtractive(const FiniteSemiring& s, const Ideal& i) { return !subtractive_violation(s, i); }

/// A pair (a, b) outside I whose product lies in I.
inline std::optional<std::pair<Elem, Elem>> prime_violation(const FiniteSemiring& s, const Ideal& i) {
  for (Elem a = 0; a < s.size(); ++a) {
    if (i.contains(a)) continue;
    for (Elem b = a; b < s.size(); ++b)
      if (!i.contains(b) && i.contains(s.mul(a, b))) return std::pair{a, b};
  }
  return std::nullopt;
}

inline bool is_prime(const FiniteSemiring& s, const Ideal& i) { return !i.is_whole() && !prime_violation(s, i); }

inline std::vector<Ideal> enumerate_primes(const FiniteSemiring& s, const Limits& limits = {}) {
  std::vector<Ideal> out;
  for (auto& i : enumerate_ideals(s, limits))
    if (is_prime(s, i)) out.push_back(std::move(i));
  return out;
}

inline std::vector<Ideal> primes_of(const FiniteSemiring& s, const std::vector<Ideal>& ideals) {
  std::vector<Ideal> out;
  for (const auto& i : ideals)
    if (is_prime(s, i)) out.push_back(i);
  return out;
}

/// {a : a^k in I for some k >= 1}, scanning each power orbit once.
inline Ideal radical_by_powers(const FiniteSemiring& s, const Ideal& i) {
  ElementSet out(s.size());
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem p : power_orbit(s, a))
      if (i.contains(p)) {
        out.insert(a);
        break;
      }
  return Ideal::verified(s, std::move(out));
}

/// Intersection of the given primes that contain I; the whole semiring when none do.
inline Ideal radical_by_primes(const FiniteSemiring& s, const Ideal& i, const std::vector<Ideal>& primes) {
  ElementSet out = s.all();
  for (const auto& p : primes)
    if (i.is_subset_of(p)) out &= p.members();
  return unchecked_ideal(std::move(out));
}

inline Ideal radical_by_primes(const FiniteSemiring& s, const Ideal& i, const Limits& limits = {}) {
  return radical_by_primes(s, i, enumerate_primes(s, limits));
}

/// {r in S : r t = 0 for all t in targets}.
inline Ideal annihilator(const FiniteSemiring& s, const ElementSet& targets) {
  ElementSet out(s.size());
  for (Elem r = 0; r < s.size(); ++r) {
    bool kills = true;
    targets.for_each([&](Elem t) { kills = kills && s.mul(r, t) == s.zero(); });
    if (kills) out.insert(r);
  }
  return Ideal::verified(s, std::move(out));
}

inline Ideal annihilator(const FiniteSemiring& s, Elem target) {
  return annihilator(s, ElementSet(s.size(), {target}));
}

/// I is not contained in any listed prime even though it sits inside their union.
struct AvoidanceCounterexample {
  Ideal ideal;
  std::vector<Ideal> primes;
};

/// Index of a listed prime containing I. Listed ideals must be subtractive
/// primes and I must lie in their union; otherwise precondition_error. A
/// returned counterexample would contradict prime avoidance.
inline std::variant<std::size_t, AvoidanceCounterexample> prime_avoidance_witness(const FiniteSemiring& s,
                                                                                 const Ideal& i,
                                                                                 const std::vector<Ideal>& primes) {
  ElementSet uni(s.size());
  for (std::size_t k = 0; k < primes.size(); ++k) {
    if (!is_prime(s, primes[k])) throw precondition_error("listed ideal " + std::to_string(k) + " is not prime");
    if (!is_subtractive(s, primes[k]))
      throw precondition_error("listed ideal " + std::to_string(k) + " is not subtractive");
    uni |= primes[k].members();
  }
  if (!i.members().is_subset_of(uni)) throw precondition_error("ideal is not contained in the union of the primes");
  for (std::size_t k = 0; k < primes.size(); ++k)
    if (i.is_subset_of(primes[k])) return k;
  return AvoidanceCounterexample{i, primes};
}

/// Every ideal I inside p has some z with I in Ann(z) in p. Returns the first
/// ideal without such a z, if any. Requires p prime.
inline std::optional<Ideal> strong_krull_violation(const FiniteSemiring& s, const Ideal& p, const Limits& limits = {}) {
  if (!is_prime(s, p)) throw precondition_error("strong Krull test requires a prime ideal");
  std::vector<Ideal> anns;
  for (Elem z = 0; z < s.size(); ++z) {
    Ideal a = annihilator(s, z);
    if (a.is_subset_of(p)) anns.push_back(std::move(a));
  }
  for (const auto& i : enumerate_ideals_within(s, p.members(), limits)) {
    const bool covered = std::any_of(anns.begin(), anns.end(), [&](const Ideal& a) { return i.is_subset_of(a); });
    if (!covered) return i;
  }
  return std::nullopt;
}

inline bool is_strong_krull_prime(const FiniteSemiring& s, const Ideal& p, const Limits& limits = {}) {
  return !strong_krull_violation(s, p, limits).has_value();
}

inline std::optional<Ideal> first_non_subtractive(const FiniteSemiring& s, const std::vector<Ideal>& ideals) {
  for (const auto& i : ideals)
    if (!is_subtractive(s, i)) return i;
  return std::nullopt;
}

inline bool is_subtractive_semiring(const FiniteSemiring& s, const Limits& limits = {}) {
  return !first_non_subtractive(s, enumerate_ideals(s, limits));
}

/// Every prime ideal is subtractive.
inline bool is_weak_gaussian(const FiniteSemiring& s, const Limits& limits = {}) {
  return !first_non_subtractive(s, enumerate_primes(s, limits));
}

/// Display form "{a, b, c}" using element names.
inline std::string format_set(const std::vector<std::string>& names, const ElementSet& set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](Elem e) {
    if (!first) out += ", ";
    out += names.at(e);
    first = false;
  });
  return out + "}";
}

inline std::string format_ideal(const FiniteSemiring& s, const Ideal& i) {
  return format_set(s.element_names(), i.members());
}

}  // namespace zdiv
