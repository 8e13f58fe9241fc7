#pragma once

// Sparse monoid-semiring arithmetic over G = Z^k (Laurent) or N^k with the
// lexicographic order: S[G] and M[G], contents, Dedekind-Mertens exponents
// and the weak-content inclusion chain.

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zdiv/ideal.hpp"
#include "zdiv/semimodule.hpp"
#include "zdiv/text.hpp"

namespace zdiv {

inline constexpr int kMaxVars = 4;

/// Coefficient carriers: a finite semiring or a finite semimodule.
template <class C>
concept CoefficientCarrier = requires(const C& c, Elem a, const std::string& label) {
  { c.size() } -> std::convertible_to<std::size_t>;
  { c.zero() } -> std::convertible_to<Elem>;
  { c.add(a, a) } -> std::convertible_to<Elem>;
  { c.element_name(a) } -> std::convertible_to<std::string>;
  { c.find(label) } -> std::same_as<std::optional<Elem>>;
  { c.unit() } -> std::same_as<std::optional<Elem>>;
};

/// Exponent vector in Z^k, ordered lexicographically.
class ExponentVec {
 public:
  explicit ExponentVec(int dim = 1) : dim_(static_cast<std::uint8_t>(dim)) {
    if (dim < 1 || dim > kMaxVars) throw precondition_error("exponent dimension must be in [1, " + std::to_string(kMaxVars) + "]");
  }
  ExponentVec(std::initializer_list<int> coords) : ExponentVec(static_cast<int>(coords.size())) {
    int i = 0;
    for (int c : coords) c_[static_cast<std::size_t>(i++)] = c;
  }
  static ExponentVec univariate(int e) { return ExponentVec{e}; }

  int dim() const { return dim_; }
  int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const {
    for (int i = 0; i < dim_; ++i)
      if (c_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
  }
  bool nonnegative() const {
    for (int i = 0; i < dim_; ++i)
      if (c_[static_cast<std::size_t>(i)] < 0) return false;
    return true;
  }

  friend ExponentVec operator+(ExponentVec a, const ExponentVec& b) {
    for (int i = 0; i < a.dim_; ++i) a[i] += b[i];
    return a;
  }
  friend bool operator==(const ExponentVec&, const ExponentVec&) = default;
  friend std::strong_ordering operator<=>(const ExponentVec& a, const ExponentVec& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    for (int i = 0; i < a.dim_; ++i)
      if (auto c = a[i] <=> b[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  std::array<std::int32_t, kMaxVars> c_{};
  std::uint8_t dim_;
};

/// Number of variables and whether negative exponents are admitted.
struct PolyShape {
  int vars = 1;
  bool laurent = false;
  friend bool operator==(const PolyShape&, const PolyShape&) = default;
};

struct Term {
  ExponentVec exp;
  Elem coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Finitely supported map G -> carrier. Terms are kept in strictly descending
/// exponent order and never hold the carrier's zero.
class Polynomial {
 public:
  explicit Polynomial(PolyShape shape = {}) : shape_(shape) {}

  /// Sorts, merges equal exponents with the carrier's addition and drops zeros.
  template <CoefficientCarrier C>
  static Polynomial from_terms(const C& carrier, PolyShape shape, std::vector<Term> terms) {
    for (const auto& t : terms) {
      if (t.exp.dim() != shape.vars) throw precondition_error("exponent dimension does not match polynomial shape");
      if (!shape.laurent && !t.exp.nonnegative()) throw precondition_error("negative exponent in a non-Laurent polynomial");
      if (t.coeff >= carrier.size()) throw precondition_error("coefficient index outside the carrier");
    }
    Polynomial p(shape);
    p.terms_ = normalize(carrier, std::move(terms));
    return p;
  }

  template <CoefficientCarrier C>
  static Polynomial constant(const C& carrier, PolyShape shape, Elem c) {
    return from_terms(carrier, shape, {Term{ExponentVec(shape.vars), c}});
  }

  /// Univariate convenience: coefficients[i] is the coefficient of X^i.
  template <CoefficientCarrier C>
  static Polynomial dense(const C& carrier, const std::vector<Elem>& coefficients) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
      terms.push_back({ExponentVec::univariate(static_cast<int>(i)), coefficients[i]});
    return from_terms(carrier, PolyShape{}, std::move(terms));
  }

  const PolyShape& shape() const { return shape_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  bool is_monomial() const { return terms_.size() == 1; }

  std::vector<Elem> coefficients() const {
    std::vector<Elem> out;
    for (const auto& t : terms_) out.push_back(t.coeff);
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  template <CoefficientCarrier C>
  static std::vector<Term> normalize(const C& carrier, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp > b.exp; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
      if (!out.empty() && out.back().exp == t.exp)
        out.back().coeff = carrier.add(out.back().coeff, t.coeff);
      else
        out.push_back(t);
    }
    std::erase_if(out, [&](const Term& t) { return t.coeff == carrier.zero(); });
    return out;
  }

 private:
  PolyShape shape_;
  std::vector<Term> terms_;
};

namespace detail {
inline void require_same_shape(const Polynomial& f, const Polynomial& g) {
  if (!(f.shape() == g.shape())) throw precondition_error("polynomials have different shapes");
}
}  // namespace detail

template <CoefficientCarrier C>
Polynomial poly_add(const C& carrier, const Polynomial& f, const Polynomial& g) {
  detail::require_same_shape(f, g);
  std::vector<Term> all = f.terms();
  all.insert(all.end(), g.terms().begin(), g.terms().end());
  return Polynomial::from_terms(carrier, f.shape(), std::move(all));
}

inline Polynomial poly_mul(const FiniteSemiring& s, const Polynomial& f, const Polynomial& g) {
  detail::require_same_shape(f, g);
  std::vector<Term> prod;
  prod.reserve(f.term_count() * g.term_count());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) prod.push_back({a.exp + b.exp, s.mul(a.coeff, b.coeff)});
  return Polynomial::from_terms(s, f.shape(), std::move(prod));
}

/// The S[G]-action on M[G]: f over S, g over M.
inline Polynomial scalar_action(const FiniteSemimodule& m, const Polynomial& f, const Polynomial& g) {
  detail::require_same_shape(f, g);
  std::vector<Term> prod;
  prod.reserve(f.term_count() * g.term_count());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) prod.push_back({a.exp + b.exp, m.act(a.coeff, b.coeff)});
  return Polynomial::from_terms(m, f.shape(), std::move(prod));
}

/// r * f over S.
inline Polynomial scale(const FiniteSemiring& s, Elem r, const Polynomial& f) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) out.push_back({t.exp, s.mul(r, t.coeff)});
  return Polynomial::from_terms(s, f.shape(), std::move(out));
}

/// r * g over M.
inline Polynomial scale(const FiniteSemimodule& m, Elem r, const Polynomial& g) {
  std::vector<Term> out;
  for (const auto& t : g.terms()) out.push_back({t.exp, m.act(r, t.coeff)});
  return Polynomial::from_terms(m, g.shape(), std::move(out));
}

/// f * b for a constant b in M.
inline Polynomial act_on_constant(const FiniteSemimodule& m, const Polynomial& f, Elem b) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) out.push_back({t.exp, m.act(t.coeff, b)});
  return Polynomial::from_terms(m, f.shape(), std::move(out));
}

inline ElementSet coefficient_set(std::size_t carrier_size, const Polynomial& f) {
  ElementSet out(carrier_size);
  for (const auto& t : f.terms()) out.insert(t.coeff);
  return out;
}

/// c(f): the ideal generated by the coefficients.
inline Ideal content(const FiniteSemiring& s, const Polynomial& f) {
  return ideal_closure(s, coefficient_set(s.size(), f));
}

/// Over a semimodule the content is reported as its generating set.
inline ElementSet content(const FiniteSemimodule& m, const Polynomial& g) { return coefficient_set(m.size(), g); }

/// Every coefficient lies in I, i.e. f is in I[G].
inline bool coefficients_in(const Polynomial& f, const Ideal& i) {
  return std::all_of(f.terms().begin(), f.terms().end(), [&](const Term& t) { return i.contains(t.coeff); });
}

/// I^k with I^0 = S.
inline Ideal ideal_power(const FiniteSemiring& s, const Ideal& i, std::size_t k) {
  Ideal out = Ideal::whole(s);
  for (std::size_t j = 0; j < k; ++j) out = ideal_product(s, out, i);
  return out;
}

struct DedekindMertensResult {
  std::optional<std::size_t> exponent;  ///< least m with equality
  bool absent_for_all = false;          ///< powers of c(f) cycled without equality
  std::size_t examined = 0;             ///< exponents tested
};

/// Least m <= m_max with cf^(m+1) cg = cf^m cfg. Powers of cf live in a
/// finite lattice; once a power repeats, no later m can succeed.
inline DedekindMertensResult dedekind_mertens_exponent(const FiniteSemiring& s, const Ideal& cf, const Ideal& cg,
                                                       const Ideal& cfg, std::size_t m_max) {
  DedekindMertensResult r;
  std::vector<Ideal> seen;
  Ideal power = Ideal::whole(s);
  for (std::size_t m = 0; m <= m_max; ++m) {
    if (std::find(seen.begin(), seen.end(), power) != seen.end()) {
      r.absent_for_all = true;
      return r;
    }
    seen.push_back(power);
    ++r.examined;
    const Ideal next = ideal_product(s, power, cf);
    if (ideal_product(s, next, cg) == ideal_product(s, power, cfg)) {
      r.exponent = m;
      return r;
    }
    power = next;
  }
  if (std::find(seen.begin(), seen.end(), power) != seen.end()) r.absent_for_all = true;
  return r;
}

inline DedekindMertensResult dedekind_mertens_exponent(const FiniteSemiring& s, const Polynomial& f,
                                                       const Polynomial& g, std::size_t m_max) {
  return dedekind_mertens_exponent(s, content(s, f), content(s, g), content(s, poly_mul(s, f, g)), m_max);
}

/// Outcome of testing c(fg) in c(f)c(g) in sqrt(c(fg)).
struct WeakContentCheck {
  bool holds = true;
  int failed_inclusion = 0;  ///< 0 none, 1 first, 2 second
  std::optional<Elem> witness;
  Ideal cfg;
  Ideal cfcg;
  Ideal radical;
};

inline WeakContentCheck weak_content_check(const FiniteSemiring& s, const Ideal& cf, const Ideal& cg, const Ideal& cfg) {
  WeakContentCheck r;
  r.cfg = cfg;
  r.cfcg = ideal_product(s, cf, cg);
  r.radical = radical_by_powers(s, cfg);
  if (!r.cfg.is_subset_of(r.cfcg)) {
    r.holds = false;
    r.failed_inclusion = 1;
    r.witness = (r.cfg.members() - r.cfcg.members()).first();
  } else if (!r.cfcg.is_subset_of(r.radical)) {
    r.holds = false;
    r.failed_inclusion = 2;
    r.witness = (r.cfcg.members() - r.radical.members()).first();
  }
  return r;
}

inline WeakContentCheck weak_content_pair_check(const FiniteSemiring& s, const Polynomial& f, const Polynomial& g) {
  return weak_content_check(s, content(s, f), content(s, g), content(s, poly_mul(s, f, g)));
}

// ---------------------------------------------------------------------------
// Text form

namespace detail {

inline std::string format_monomial(const ExponentVec& e) {
  std::string out;
  if (e.dim() == 1) {
    if (e[0] == 0) return out;
    return e[0] == 1 ? "X" : "X^" + std::to_string(e[0]);
  }
  for (int i = 0; i < e.dim(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "X" + std::to_string(i + 1);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

inline std::vector<std::string> split_terms(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == '+' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline std::vector<std::string> split_factors(const std::string& term) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : term) {
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == '*' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

/// Parses "X", "X^e", "Xi", "Xi^e" into (variable index, exponent).
inline std::optional<std::pair<int, int>> parse_variable(const std::string& factor, int vars) {
  if (factor.empty() || factor[0] != 'X') return std::nullopt;
  std::size_t pos = 1;
  int var = 0;
  if (pos < factor.size() && std::isdigit(static_cast<unsigned char>(factor[pos]))) {
    std::size_t end = pos;
    while (end < factor.size() && std::isdigit(static_cast<unsigned char>(factor[end]))) ++end;
    var = std::stoi(factor.substr(pos, end - pos)) - 1;
    pos = end;
  } else if (vars != 1) {
    throw parse_error("variable '" + factor + "' needs an index when k = " + std::to_string(vars));
  }
  if (var < 0 || var >= vars) throw parse_error("variable index out of range in '" + factor + "'");
  int exp = 1;
  if (pos < factor.size()) {
    if (factor[pos] != '^') return std::nullopt;
    const std::string digits = factor.substr(pos + 1);
    std::size_t used = 0;
    try {
      exp = std::stoi(digits, &used);
    } catch (const std::exception&) {
      throw parse_error("malformed exponent in '" + factor + "'");
    }
    if (used != digits.size() || digits.empty()) throw parse_error("malformed exponent in '" + factor + "'");
  }
  return std::pair{var, exp};
}

}  // namespace detail

/// Parses "coeff*X^e + ..." over `carrier`. A term without a coefficient
/// uses the carrier's unit; "0" is the zero polynomial.
template <CoefficientCarrier C>
Polynomial parse_poly(const std::string& text, const C& carrier, PolyShape shape = {}) {
  if (shape.vars < 1 || shape.vars > kMaxVars) throw parse_error("unsupported variable count");
  const std::string body = detail::trim(text);
  if (body.empty()) throw parse_error("empty polynomial");
  std::vector<Term> terms;
  for (const auto& term : detail::split_terms(body)) {
    if (term.empty()) throw parse_error("empty term in '" + text + "'");
    const auto factors = detail::split_factors(term);
    std::optional<Elem> coeff;
    ExponentVec exp(shape.vars);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& fac = factors[i];
      if (fac.empty()) throw parse_error("empty factor in '" + term + "'");
      if (i == 0) {
        if (auto c = carrier.find(fac)) {
          coeff = *c;
          continue;
        }
        if (fac == "0") {
          coeff = carrier.zero();
          continue;
        }
      }
      auto var = detail::parse_variable(fac, shape.vars);
      if (!var) throw parse_error("unknown coefficient name '" + fac + "'");
      exp[var->first] += var->second;
    }
    if (!coeff) {
      coeff = carrier.unit();
      if (!coeff) throw parse_error("term '" + term + "' needs an explicit coefficient over a semimodule");
    }
    if (!shape.laurent && !exp.nonnegative()) throw parse_error("negative exponent in '" + term + "' without --laurent");
    terms.push_back({exp, *coeff});
  }
  return Polynomial::from_terms(carrier, shape, std::move(terms));
}

/// Canonical text: terms in descending lex order, unit coefficients elided.
template <CoefficientCarrier C>
std::string format_poly(const C& carrier, const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    const std::string mono = detail::format_monomial(t.exp);
    if (mono.empty())
      out += carrier.element_name(t.coeff);
    else if (carrier.unit() == t.coeff)
      out += mono;
    else
      out += carrier.element_name(t.coeff) + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bounded enumeration and sampling

/// Every univariate polynomial over N with degree <= max_degree (including 0),
/// ordered by the base-|C| numeral of its coefficient vector.
template <CoefficientCarrier C>
std::vector<Polynomial> all_polynomials(const C& carrier, int max_degree) {
  const std::size_t n = carrier.size();
  const auto slots = static_cast<std::size_t>(max_degree + 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < slots; ++i) total *= n;
  std::vector<Polynomial> out;
  out.reserve(total);
  std::vector<Elem> coeffs(slots, 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < slots; ++i) {
      coeffs[i] = static_cast<Elem>(c % n);
      c /= n;
    }
    out.push_back(Polynomial::dense(carrier, coeffs));
  }
  return out;
}

/// Exponents drawn from [lo, hi] in each coordinate, up to max_terms terms,
/// coefficients drawn from `pool` (all elements when empty).
template <CoefficientCarrier C, class Rng>
Polynomial random_polynomial(const C& carrier, PolyShape shape, int lo, int hi, std::size_t max_terms, Rng& rng,
                             const std::vector<Elem>& pool = {}) {
  std::uniform_int_distribution<int> exp_dist(shape.laurent ? lo : std::max(lo, 0), hi);
  std::uniform_int_distribution<std::size_t> count_dist(1, max_terms);
  std::vector<Elem> choices = pool;
  if (choices.empty())
    for (Elem e = 0; e < carrier.size(); ++e) choices.push_back(e);
  std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
  std::vector<Term> terms;
  const std::size_t count = count_dist(rng);
  for (std::size_t i = 0; i < count; ++i) {
    ExponentVec e(shape.vars);
    for (int v = 0; v < shape.vars; ++v) e[v] = exp_dist(rng);
    terms.push_back({e, choices[pick(rng)]});
  }
  return Polynomial::from_terms(carrier, shape, std::move(terms));
}

}  // namespace zdiv
