#pragma once

// Named constructions of finite semirings.

#include <numeric>
#include <string>
#include <vector>

#include "zdiv/semiring.hpp"
#include "zdiv/text.hpp"

namespace zdiv {

/// An idempotent commutative monoid (P, +, 0) given by its addition table.
struct AdditiveMonoidTable {
  std::vector<std::string> elements;
  std::vector<std::vector<long long>> add;
  long long zero = 0;
};

namespace builtin {

inline FiniteSemiring boolean() {
  SemiringTables t;
  t.name = "boolean";
  t.elements = {"0", "1"};
  t.add = {{0, 1}, {1, 1}};
  t.mul = {{0, 0}, {0, 1}};
  t.zero = 0;
  t.one = 1;
  return FiniteSemiring::from_tables(t);
}

/// {0, u, 1} with idempotent addition, 1 + u = u and u * u = u.
inline FiniteSemiring lagrassa() {
  SemiringTables t;
  t.name = "lagrassa";
  t.elements = {"0", "u", "1"};
  t.add = {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}};
  t.mul = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
  t.zero = 0;
  t.one = 2;
  return FiniteSemiring::from_tables(t);
}

/// S = P + {1}: products inside P vanish and 1 absorbs under addition.
inline FiniteSemiring primal(const AdditiveMonoidTable& p, const std::string& name = "primal") {
  const std::size_t m = p.elements.size();
  if (m == 0) throw structural_error("primal: empty monoid");
  detail::check_square(p.add, m, m, m, "primal monoid add");
  if (p.zero < 0 || static_cast<std::size_t>(p.zero) >= m) throw structural_error("primal: zero out of range");
  for (std::size_t a = 0; a < m; ++a) {
    if (p.add[a][a] != static_cast<long long>(a)) throw axiom_error("primal: monoid is not idempotent at " + p.elements[a]);
    if (p.add[p.zero][a] != static_cast<long long>(a)) throw axiom_error("primal: zero is not an identity");
    for (std::size_t b = 0; b < m; ++b) {
      if (p.add[a][b] != p.add[b][a]) throw axiom_error("primal: monoid is not commutative");
      for (std::size_t c = 0; c < m; ++c)
        if (p.add[p.add[a][b]][c] != p.add[a][p.add[b][c]]) throw axiom_error("primal: monoid is not associative");
    }
  }
  const auto one = static_cast<long long>(m);
  SemiringTables t;
  t.name = name;
  t.elements = p.elements;
  t.elements.push_back("1");
  t.add.assign(m + 1, std::vector<long long>(m + 1, one));
  t.mul.assign(m + 1, std::vector<long long>(m + 1, p.zero));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t.add[a][b] = p.add[a][b];
  for (std::size_t a = 0; a <= m; ++a) {
    t.mul[a][m] = static_cast<long long>(a);
    t.mul[m][a] = static_cast<long long>(a);
  }
  t.zero = p.zero;
  t.one = one;
  return FiniteSemiring::from_tables(t);
}

/// primal({0, u}) with u + u = u; the three-element instance with u * u = 0.
inline FiniteSemiring primal2() {
  AdditiveMonoidTable p{{"0", "u"}, {{0, 1}, {1, 1}}, 0};
  return primal(p, "primal2");
}

/// primal construction on the subsets of {1..k} under union. The empty set
/// is named "0"; element index equals the subset's bitmask, 1 is last.
inline FiniteSemiring powerset_primal(int k, const Limits& limits = {}) {
  if (k < 1 || k > 16) throw precondition_error("powerset_primal: k must be in [1, 16]");
  const std::size_t m = std::size_t{1} << k;
  if (m + 1 > limits.element_cap) throw cap_exceeded("powerset_primal(" + std::to_string(k) + ") exceeds element cap");
  AdditiveMonoidTable p;
  for (std::size_t mask = 0; mask < m; ++mask) {
    if (mask == 0) {
      p.elements.push_back("0");
      continue;
    }
    std::string label = "{";
    bool first = true;
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1U) {
        if (!first) label += ",";
        label += std::to_string(i + 1);
        first = false;
      }
    p.elements.push_back(label + "}");
  }
  p.add.assign(m, std::vector<long long>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) p.add[a][b] = static_cast<long long>(a | b);
  p.zero = 0;
  return primal(p, "powerset_primal(" + std::to_string(k) + ")");
}

/// Ideals (d) of Z_n, d | n, listed by decreasing d so that the zero ideal (n)
/// has index 0. (a)+(b) = (gcd(a,b)), (a)(b) = (gcd(ab,n)).
inline FiniteSemiring ideal_semiring(long long n, const Limits& limits = {}) {
  if (n < 2) throw precondition_error("ideal_semiring: n must be at least 2");
  std::vector<long long> divisors;
  for (long long d = n; d >= 1; --d)
    if (n % d == 0) divisors.push_back(d);
  if (divisors.size() > limits.element_cap) throw cap_exceeded("ideal_semiring(" + std::to_string(n) + ") exceeds element cap");
  auto index_of = [&](long long d) {
    for (std::size_t i = 0; i < divisors.size(); ++i)
      if (divisors[i] == d) return static_cast<long long>(i);
    return -1LL;
  };
  const std::size_t m = divisors.size();
  SemiringTables t;
  t.name = "ideal_semiring(" + std::to_string(n) + ")";
  for (auto d : divisors) t.elements.push_back("(" + std::to_string(d) + ")");
  t.add.assign(m, std::vector<long long>(m));
  t.mul.assign(m, std::vector<long long>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      t.add[i][j] = index_of(std::gcd(divisors[i], divisors[j]));
      t.mul[i][j] = index_of(std::gcd(divisors[i] * divisors[j], n));
    }
  t.zero = index_of(n);
  t.one = index_of(1);
  return FiniteSemiring::from_tables(t, limits);
}

/// Componentwise product; (s, t) has index s * |T| + t.
inline FiniteSemiring product(const FiniteSemiring& s, const FiniteSemiring& t, const Limits& limits = {}) {
  const std::size_t m = s.size() * t.size();
  if (m > limits.element_cap) throw cap_exceeded("product(" + s.name() + "," + t.name() + ") exceeds element cap");
  SemiringTables r;
  r.name = "product(" + s.name() + "," + t.name() + ")";
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = 0; b < t.size(); ++b) r.elements.push_back("(" + s.element_name(a) + "," + t.element_name(b) + ")");
  auto idx = [&](Elem a, Elem b) { return static_cast<long long>(a * t.size() + b); };
  r.add.assign(m, std::vector<long long>(m));
  r.mul.assign(m, std::vector<long long>(m));
  for (Elem a1 = 0; a1 < s.size(); ++a1)
    for (Elem b1 = 0; b1 < t.size(); ++b1)
      for (Elem a2 = 0; a2 < s.size(); ++a2)
        for (Elem b2 = 0; b2 < t.size(); ++b2) {
          r.add[idx(a1, b1)][idx(a2, b2)] = idx(s.add(a1, a2), t.add(b1, b2));
          r.mul[idx(a1, b1)][idx(a2, b2)] = idx(s.mul(a1, a2), t.mul(b1, b2));
        }
  r.zero = idx(s.zero(), t.zero());
  r.one = idx(s.one(), t.one());
  return FiniteSemiring::from_tables(r, limits);
}

}  // namespace builtin

namespace detail {

inline long long parse_int_param(const std::string& what, const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw parse_error(what + ": expected an integer, got '" + text + "'");
  }
}

}  // namespace detail

/// Resolves a builtin specification string.
///
/// Accepted forms: boolean, lagrassa, primal2, powerset_primal:K,
/// ideal:N (alias ideal_semiring:N), product(A,B). Parameters may also be
/// written in call syntax, e.g. ideal_semiring(12).
inline FiniteSemiring builtin_semiring(const std::string& spec_text, const Limits& limits = {}) {
  const std::string spec = detail::trim(spec_text);
  std::string name = spec;
  std::vector<std::string> args;
  const auto paren = spec.find('(');
  const auto colon = spec.find(':');
  if (paren != std::string::npos && (colon == std::string::npos || paren < colon)) {
    if (spec.back() != ')') throw parse_error("unbalanced parentheses in builtin '" + spec + "'");
    name = spec.substr(0, paren);
    args = detail::split_top_level(spec.substr(paren + 1, spec.size() - paren - 2));
  } else if (colon != std::string::npos) {
    name = spec.substr(0, colon);
    args = detail::split_top_level(spec.substr(colon + 1));
  }
  auto expect_args = [&](std::size_t k) {
    if (args.size() != k)
      throw parse_error("builtin '" + name + "' takes " + std::to_string(k) + " parameter(s), got " +
                        std::to_string(args.size()));
  };
  if (name == "boolean") {
    expect_args(0);
    return builtin::boolean();
  }
  if (name == "lagrassa") {
    expect_args(0);
    return builtin::lagrassa();
  }
  if (name == "primal2") {
    expect_args(0);
    return builtin::primal2();
  }
  if (name == "powerset_primal") {
    expect_args(1);
    return builtin::powerset_primal(static_cast<int>(detail::parse_int_param(name, args[0])), limits);
  }
  if (name == "ideal" || name == "ideal_semiring") {
    expect_args(1);
    return builtin::ideal_semiring(detail::parse_int_param(name, args[0]), limits);
  }
  if (name == "product") {
    expect_args(2);
    return builtin::product(builtin_semiring(args[0], limits), builtin_semiring(args[1], limits), limits);
  }
  throw unknown_builtin("'" + spec + "'");
}

/// The instances every exhaustive suite runs over.
inline std::vector<std::string> builtin_pool() {
  return {"boolean", "lagrassa", "primal2", "ideal:4", "ideal:6", "ideal:8", "powerset_primal:2",
          "product(boolean,boolean)", "ideal:12"};
}

}  // namespace zdiv
