#pragma once

// Brute-force reference implementations. They read only the raw operation
// tables and share no algorithm with the library: ideals come from scanning
// every subset, closures from fixpoint iteration over whole tables,
// polynomials from dense coefficient vectors.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "zdiv/zdiv.hpp"

namespace oracle {

using zdiv::Elem;
using Set = std::vector<Elem>;  // sorted member list

inline std::vector<Elem> range(std::size_t n) {
  std::vector<Elem> v(n);
  std::iota(v.begin(), v.end(), Elem{0});
  return v;
}

inline bool has(const Set& s, Elem x) { return std::binary_search(s.begin(), s.end(), x); }

inline bool subset(const Set& a, const Set& b) {
  return std::all_of(a.begin(), a.end(), [&](Elem x) { return has(b, x); });
}

inline Set to_set(const zdiv::Ideal& i) { return i.elements(); }
inline Set to_set(const zdiv::ElementSet& i) { return i.elements(); }

template <class Add, class Mul>
bool closed(std::size_t n, std::size_t scalars, Elem zero, const Set& s, Add add, Mul act) {
  if (!has(s, zero)) return false;
  for (Elem a : s)
    for (Elem b : s)
      if (!has(s, add(a, b))) return false;
  for (Elem r = 0; r < scalars; ++r)
    for (Elem a : s)
      if (!has(s, act(r, a))) return false;
  (void)n;
  return true;
}

inline bool is_ideal(const zdiv::FiniteSemiring& s, const Set& i) {
  return closed(
      s.size(), s.size(), s.zero(), i, [&](Elem a, Elem b) { return s.add(a, b); },
      [&](Elem r, Elem a) { return s.mul(r, a); });
}

/// Every ideal, by scanning all 2^n subsets.
inline std::vector<Set> ideals(const zdiv::FiniteSemiring& s) {
  const std::size_t n = s.size();
  std::vector<Set> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Set cand;
    for (Elem x = 0; x < n; ++x)
      if (mask >> x & 1U) cand.push_back(x);
    if (is_ideal(s, cand)) out.push_back(cand);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_prime(const zdiv::FiniteSemiring& s, const Set& p) {
  if (p.size() == s.size()) return false;
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = 0; b < s.size(); ++b)
      if (has(p, s.mul(a, b)) && !has(p, a) && !has(p, b)) return false;
  return true;
}

inline bool is_subtractive(const zdiv::FiniteSemiring& s, const Set& i) {
  for (Elem a : i)
    for (Elem b = 0; b < s.size(); ++b)
      if (has(i, s.add(a, b)) && !has(i, b)) return false;
  return true;
}

inline Set radical_by_definition(const zdiv::FiniteSemiring& s, const Set& i) {
  Set out;
  for (Elem x = 0; x < s.size(); ++x) {
    Elem p = x;
    bool in = false;
    for (std::size_t k = 1; k <= s.size() + 1 && !in; ++k) {
      in = has(i, p);
      p = s.mul(p, x);
    }
    if (in) out.push_back(x);
  }
  return out;
}

inline Set ann(const zdiv::FiniteSemimodule& m, Elem x) {
  Set out;
  for (Elem r = 0; r < m.scalars().size(); ++r)
    if (m.act(r, x) == m.zero()) out.push_back(r);
  return out;
}

inline Set zero_divisors(const zdiv::FiniteSemimodule& m) {
  Set out;
  for (Elem r = 0; r < m.scalars().size(); ++r)
    for (Elem x = 0; x < m.size(); ++x)
      if (x != m.zero() && m.act(r, x) == m.zero()) {
        out.push_back(r);
        break;
      }
  return out;
}

/// Smallest ideal containing `gens`, as the least member of the subset scan.
inline Set generated(const zdiv::FiniteSemiring& s, const Set& gens) {
  for (const auto& i : ideals(s))
    if (subset(gens, i)) {
      bool least = true;
      for (const auto& j : ideals(s))
        if (subset(gens, j) && !subset(i, j)) least = false;
      if (least) return i;
    }
  return range(s.size());
}

/// Strong Krull by definition: every ideal inside p lies in some Ann(z) inside p.
inline bool is_strong_krull(const zdiv::FiniteSemiring& s, const Set& p) {
  const auto reg = zdiv::regular_semimodule(s);
  for (const auto& i : ideals(s)) {
    if (!subset(i, p)) continue;
    bool found = false;
    for (Elem z = 0; z < s.size() && !found; ++z) {
      const Set a = ann(reg, z);
      found = subset(i, a) && subset(a, p);
    }
    if (!found) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials

using Dense = std::vector<Elem>;  // index i holds the coefficient of X^i

inline Dense dense_of(const zdiv::Polynomial& f, Elem zero) {
  Dense d;
  for (const auto& t : f.terms()) {
    const auto e = static_cast<std::size_t>(t.exp[0]);
    if (d.size() <= e) d.resize(e + 1, zero);
    d[e] = t.coeff;
  }
  return d;
}

inline Dense trim(Dense d, Elem zero) {
  while (!d.empty() && d.back() == zero) d.pop_back();
  return d;
}

template <class Add, class Mul>
Dense convolve(const Dense& f, const Dense& g, Elem zero, Add add, Mul mul) {
  if (f.empty() || g.empty()) return {};
  Dense out(f.size() + g.size() - 1, zero);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = add(out[i + j], mul(f[i], g[j]));
  return trim(out, zero);
}

inline Dense mul(const zdiv::FiniteSemiring& s, const Dense& f, const Dense& g) {
  return convolve(
      f, g, s.zero(), [&](Elem a, Elem b) { return s.add(a, b); }, [&](Elem a, Elem b) { return s.mul(a, b); });
}

inline Dense act(const zdiv::FiniteSemimodule& m, const Dense& f, const Dense& g) {
  return convolve(
      f, g, m.zero(), [&](Elem a, Elem b) { return m.add(a, b); }, [&](Elem r, Elem x) { return m.act(r, x); });
}

inline Set content(const zdiv::FiniteSemiring& s, const Dense& f) {
  Set gens = f;
  gens.push_back(s.zero());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return generated(s, gens);
}

// ---------------------------------------------------------------------------
// Semialgebras

/// IB: additive closure of lambda(I) * B, by fixpoint iteration.
inline Set extension(const zdiv::FiniteSemialgebra& a, const Set& i) {
  const auto& b = a.carrier();
  std::set<Elem> cur;
  cur.insert(b.zero());
  for (Elem x : i)
    for (Elem y = 0; y < b.size(); ++y) cur.insert(b.mul(a.lambda(x), y));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Elem> snap(cur.begin(), cur.end());
    for (Elem x : snap)
      for (Elem y : snap)
        if (cur.insert(b.add(x, y)).second) grew = true;
  }
  return Set(cur.begin(), cur.end());
}

/// Intersection of all I with f in IB.
inline Set content_by_definition(const zdiv::FiniteSemialgebra& a, Elem f) {
  Set out = range(a.scalars().size());
  for (const auto& i : ideals(a.scalars()))
    if (has(extension(a, i), f)) {
      Set meet;
      std::set_intersection(out.begin(), out.end(), i.begin(), i.end(), std::back_inserter(meet));
      out = meet;
    }
  return out;
}

inline Set ann_in(const zdiv::FiniteSemiring& b, Elem x) {
  Set out;
  for (Elem y = 0; y < b.size(); ++y)
    if (b.mul(y, x) == b.zero()) out.push_back(y);
  return out;
}

inline Set zero_divisors(const zdiv::FiniteSemiring& s) { return zero_divisors(zdiv::regular_semimodule(s)); }

}  // namespace oracle
