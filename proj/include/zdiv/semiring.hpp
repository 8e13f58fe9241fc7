#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdiv/element_set.hpp"
#include "zdiv/errors.hpp"

namespace zdiv {

/// Size bounds shared by every exhaustive procedure in the library.
struct Limits {
  std::size_t element_cap = 64;          ///< largest user-supplied carrier
  std::size_t ideal_cap = 1U << 16;      ///< most ideals an enumeration may produce
  std::size_t construction_cap = 1024;   ///< largest carrier a construction may build
  std::size_t validate_limit = 256;      ///< constructions above this size skip the O(n^3) axiom scan
};

/// Raw, unvalidated operation tables as read from a document or produced by a
/// construction. Rows may be ragged and indices out of range; see
/// check_structure().
struct SemiringTables {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<long long>> add;
  std::vector<std::vector<long long>> mul;
  long long zero = 0;
  long long one = 1;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<Elem> witness;
  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct AxiomReport {
  bool passed = true;
  std::vector<AxiomViolation> violations;

  void add(std::string axiom, std::vector<Elem> witness) {
    passed = false;
    violations.push_back({std::move(axiom), std::move(witness)});
  }
  bool violates(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }
};

namespace detail {

inline void check_square(const std::vector<std::vector<long long>>& t, std::size_t rows, std::size_t cols,
                         std::size_t range, const char* label) {
  if (t.size() != rows)
    throw structural_error(std::string(label) + " table has " + std::to_string(t.size()) + " rows, expected " +
                           std::to_string(rows));
  for (std::size_t i = 0; i < rows; ++i) {
    if (t[i].size() != cols)
      throw structural_error(std::string(label) + " table row " + std::to_string(i) + " has " +
                             std::to_string(t[i].size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j)
      if (t[i][j] < 0 || static_cast<std::size_t>(t[i][j]) >= range)
        throw structural_error(std::string(label) + " table entry [" + std::to_string(i) + "][" +
                               std::to_string(j) + "] = " + std::to_string(t[i][j]) + " out of range");
  }
}

inline std::vector<Elem> flatten(const std::vector<std::vector<long long>>& t) {
  std::vector<Elem> out;
  for (const auto& row : t)
    for (auto v : row) out.push_back(static_cast<Elem>(v));
  return out;
}

}  // namespace detail

/// Throws structural_error unless the tables are n-by-n with every index in range.
inline void check_structure(const SemiringTables& t) {
  const std::size_t n = t.elements.size();
  if (n == 0) throw structural_error("semiring has no elements");
  detail::check_square(t.add, n, n, n, "add");
  detail::check_square(t.mul, n, n, n, "mul");
  if (t.zero < 0 || static_cast<std::size_t>(t.zero) >= n) throw structural_error("zero index out of range");
  if (t.one < 0 || static_cast<std::size_t>(t.one) >= n) throw structural_error("one index out of range");
}

/// Exhaustive check of the commutative-semiring axioms with 0 != 1.
///
/// Every violated axiom is reported once, with the lexicographically least
/// witness tuple. Throws structural_error on malformed tables.
inline AxiomReport check_semiring_axioms(const SemiringTables& t) {
  check_structure(t);
  const std::size_t n = t.elements.size();
  const auto add = detail::flatten(t.add);
  const auto mul = detail::flatten(t.mul);
  const auto zero = static_cast<Elem>(t.zero);
  const auto one = static_cast<Elem>(t.one);
  auto A = [&](Elem a, Elem b) { return add[a * n + b]; };
  auto M = [&](Elem a, Elem b) { return mul[a * n + b]; };

  AxiomReport report;
  auto first_pair = [&](auto&& bad) -> std::optional<std::vector<Elem>> {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (bad(a, b)) return std::vector<Elem>{a, b};
    return std::nullopt;
  };
  auto first_single = [&](auto&& bad) -> std::optional<std::vector<Elem>> {
    for (Elem a = 0; a < n; ++a)
      if (bad(a)) return std::vector<Elem>{a};
    return std::nullopt;
  };
  auto first_triple = [&](auto&& bad) -> std::optional<std::vector<Elem>> {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (bad(a, b, c)) return std::vector<Elem>{a, b, c};
    return std::nullopt;
  };

  if (zero == one) report.add("zero differs from one", {zero});
  if (auto w = first_triple([&](Elem a, Elem b, Elem c) { return A(A(a, b), c) != A(a, A(b, c)); }))
    report.add("addition is associative", *w);
  if (auto w = first_pair([&](Elem a, Elem b) { return A(a, b) != A(b, a); }))
    report.add("addition is commutative", *w);
  if (auto w = first_single([&](Elem a) { return A(zero, a) != a || A(a, zero) != a; }))
    report.add("zero is additive identity", *w);
  if (auto w = first_triple([&](Elem a, Elem b, Elem c) { return M(M(a, b), c) != M(a, M(b, c)); }))
    report.add("multiplication is associative", *w);
  if (auto w = first_pair([&](Elem a, Elem b) { return M(a, b) != M(b, a); }))
    report.add("multiplication is commutative", *w);
  if (auto w = first_single([&](Elem a) { return M(one, a) != a || M(a, one) != a; }))
    report.add("one is identity", *w);
  if (auto w = first_triple([&](Elem a, Elem b, Elem c) { return M(a, A(b, c)) != A(M(a, b), M(a, c)); }))
    report.add("multiplication distributes over addition", *w);
  if (auto w = first_single([&](Elem a) { return M(zero, a) != zero || M(a, zero) != zero; }))
    report.add("zero is absorbing", *w);
  return report;
}

/// A validated finite commutative semiring with identity, elements 0..n-1.
///
/// Immutable after construction; copies are cheap for desk-scale sizes.
class FiniteSemiring {
 public:
  FiniteSemiring() = default;

  /// Validates structure and axioms; throws structural_error, axiom_error or
  /// cap_exceeded.
  static FiniteSemiring from_tables(const SemiringTables& t, const Limits& limits = {}) {
    return build(t, limits.element_cap, true);
  }

  /// For constructions whose axioms follow from validated inputs. Structure is
  /// always checked; the cubic axiom scan runs only up to validate_limit.
  static FiniteSemiring from_construction(const SemiringTables& t, const Limits& limits = {}) {
    return build(t, limits.construction_cap, t.elements.size() <= limits.validate_limit);
  }

  const std::string& name() const { return name_; }
  std::size_t size() const { return n_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  Elem add(Elem a, Elem b) const { return add_[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }

  const std::string& element_name(Elem a) const { return names_.at(a); }
  const std::vector<std::string>& element_names() const { return names_; }
  std::optional<Elem> find(const std::string& label) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (names_[i] == label) return static_cast<Elem>(i);
    return std::nullopt;
  }
  std::optional<Elem> unit() const { return one_; }

  ElementSet all() const { return ElementSet::full(n_); }
  ElementSet empty_set() const { return ElementSet(n_); }

  /// a^k for k >= 1.
  Elem power(Elem a, std::size_t k) const {
    Elem r = one_;
    for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  SemiringTables tables() const {
    SemiringTables t;
    t.name = name_;
    t.elements = names_;
    t.add.assign(n_, std::vector<long long>(n_));
    t.mul.assign(n_, std::vector<long long>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        t.add[i][j] = add_[i * n_ + j];
        t.mul[i][j] = mul_[i * n_ + j];
      }
    t.zero = zero_;
    t.one = one_;
    return t;
  }

  friend bool operator==(const FiniteSemiring& a, const FiniteSemiring& b) {
    return a.n_ == b.n_ && a.zero_ == b.zero_ && a.one_ == b.one_ && a.add_ == b.add_ && a.mul_ == b.mul_;
  }

 private:
  static FiniteSemiring build(const SemiringTables& t, std::size_t cap, bool validate) {
    if (t.elements.size() > cap)
      throw cap_exceeded("semiring '" + t.name + "' has " + std::to_string(t.elements.size()) +
                         " elements, bound is " + std::to_string(cap));
    check_structure(t);
    if (validate) {
      const AxiomReport r = check_semiring_axioms(t);
      if (!r.passed) {
        std::string msg = "semiring '" + t.name + "' violates:";
        for (const auto& v : r.violations) msg += " [" + v.axiom + "]";
        throw axiom_error(msg);
      }
    }
    FiniteSemiring s;
    s.name_ = t.name;
    s.names_ = t.elements;
    s.n_ = t.elements.size();
    s.add_ = detail::flatten(t.add);
    s.mul_ = detail::flatten(t.mul);
    s.zero_ = static_cast<Elem>(t.zero);
    s.one_ = static_cast<Elem>(t.one);
    return s;
  }

  std::string name_;
  std::vector<std::string> names_;
  std::size_t n_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  Elem zero_ = 0;
  Elem one_ = 0;
};

/// A pair of nonzero elements with zero product, if any.
inline std::optional<std::pair<Elem, Elem>> zero_divisor_pair(const FiniteSemiring& s) {
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = a; b < s.size(); ++b)
      if (a != s.zero() && b != s.zero() && s.mul(a, b) == s.zero()) return std::pair{a, b};
  return std::nullopt;
}

inline bool is_entire(const FiniteSemiring& s) { return !zero_divisor_pair(s).has_value(); }

/// Distinct powers a, a^2, ... up to the first repetition.
inline std::vector<Elem> power_orbit(const FiniteSemiring& s, Elem a) {
  std::vector<Elem> orbit;
  ElementSet seen(s.size());
  for (Elem p = a; !seen.contains(p); p = s.mul(p, a)) {
    seen.insert(p);
    orbit.push_back(p);
  }
  return orbit;
}

inline bool is_nilpotent(const FiniteSemiring& s, Elem a) {
  for (Elem p : power_orbit(s, a))
    if (p == s.zero()) return true;
  return false;
}

inline bool is_nilpotent_free(const FiniteSemiring& s) {
  for (Elem a = 0; a < s.size(); ++a)
    if (a != s.zero() && is_nilpotent(s, a)) return false;
  return true;
}

}  // namespace zdiv
