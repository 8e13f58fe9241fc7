#pragma once

// McCoy's annihilator algorithm for f in S[G] acting on M[G], and the
// zero-divisor description of M[G] through associated primes.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdiv/polynomial.hpp"

namespace zdiv {

/// One reduction g -> a_r g of the induction on the number of terms of g.
struct McCoyStep {
  std::size_t r = 0;      ///< index of the first coefficient of f with a_r g != 0
  std::size_t terms = 0;  ///< term count of a_r g
  friend bool operator==(const McCoyStep&, const McCoyStep&) = default;
};

struct McCoyTrace {
  std::size_t initial_terms = 0;
  std::vector<McCoyStep> steps;
  Elem result = 0;  ///< nonzero b in M with f b = 0
};

/// Inputs on which one of the algorithm's internal claims failed.
struct McCoyCounterexample {
  Polynomial f;
  Polynomial g;
  Polynomial current;
  std::string assertion;
};

/// Raised when a claim the reduction relies on does not hold. Any instance
/// of this exception refutes the annihilation argument on a concrete input.
class proof_violation : public std::runtime_error {
 public:
  explicit proof_violation(McCoyCounterexample c)
      : std::runtime_error("proof violation: " + c.assertion), counterexample_(std::move(c)) {}
  const McCoyCounterexample& counterexample() const { return counterexample_; }

 private:
  McCoyCounterexample counterexample_;
};

/// Returns a nonzero constant b in M with f b = 0, given g != 0 with f g = 0.
///
/// Coefficients of f are scanned in strictly descending exponent order. While
/// g has more than one term and some a_i g is nonzero, g is replaced by a_r g
/// for the least such r; a_r must kill the leading coefficient of g, so the
/// term count strictly drops. When every a_i kills g (or g is a monomial) the
/// leading coefficient of g is the answer.
inline McCoyTrace mccoy_annihilator(const FiniteSemimodule& m, const Polynomial& f, const Polynomial& g) {
  if (!(f.shape() == g.shape())) throw precondition_error("f and g have different shapes");
  if (g.is_zero()) throw precondition_error("g must be nonzero");
  if (!scalar_action(m, f, g).is_zero()) throw precondition_error("f g is not zero");

  auto fail = [&](const Polynomial& cur, const std::string& what) {
    throw proof_violation(McCoyCounterexample{f, g, cur, what});
  };

  McCoyTrace trace;
  trace.initial_terms = g.term_count();
  Polynomial cur = g;
  while (true) {
    if (cur.is_monomial()) {
      trace.result = cur.leading().coeff;
      break;
    }
    std::optional<std::size_t> r;
    Polynomial reduced;
    for (std::size_t i = 0; i < f.term_count(); ++i) {
      Polynomial h = scale(m, f.terms()[i].coeff, cur);
      if (!h.is_zero()) {
        r = i;
        reduced = std::move(h);
        break;
      }
    }
    if (!r) {
      trace.result = cur.leading().coeff;
      break;
    }
    const Elem ar = f.terms()[*r].coeff;
    if (m.act(ar, cur.leading().coeff) != m.zero()) fail(cur, "a_r does not annihilate the leading coefficient of g");
    if (reduced.term_count() >= cur.term_count()) fail(cur, "a_r g does not have fewer terms than g");
    if (!scalar_action(m, f, reduced).is_zero()) fail(cur, "f does not annihilate a_r g");
    trace.steps.push_back({*r, reduced.term_count()});
    cur = std::move(reduced);
  }
  if (trace.result == m.zero()) fail(cur, "annihilating constant is zero");
  if (!act_on_constant(m, f, trace.result).is_zero()) fail(cur, "constant does not annihilate f");
  return trace;
}

/// Least-index nonzero b in M with f b = 0, if any.
inline std::optional<Elem> poly_zero_divisor_witness(const FiniteSemimodule& m, const Polynomial& f) {
  for (Elem b = 0; b < m.size(); ++b) {
    if (b == m.zero()) continue;
    bool killed = true;
    for (const auto& t : f.terms())
      if (m.act(t.coeff, b) != m.zero()) {
        killed = false;
        break;
      }
    if (killed) return b;
  }
  return std::nullopt;
}

/// A nonzero g from `candidates` with f g = 0. The bounded-degree oracle
/// that does not rely on the constant-annihilator argument.
inline std::optional<Polynomial> find_polynomial_annihilator(const FiniteSemimodule& m, const Polynomial& f,
                                                             const std::vector<Polynomial>& candidates) {
  for (const auto& g : candidates)
    if (!g.is_zero() && scalar_action(m, f, g).is_zero()) return g;
  return std::nullopt;
}

/// Z_{S[G]}(M[G]) as the union of p_i[G] for associated primes p_i covering Z(M).
class MonoidZeroDivisors {
 public:
  const std::vector<Ideal>& primes() const { return primes_; }
  /// generators()[i] is a nonzero element whose annihilator is primes()[i].
  const std::vector<Elem>& generators() const { return generators_; }

  /// f is a zero-divisor on M[G] iff c(f) lies in some p_i.
  bool contains(const Polynomial& f) const {
    for (const auto& p : primes_)
      if (coefficients_in(f, p)) return true;
    return false;
  }

  /// Index of a prime whose extension contains f.
  std::optional<std::size_t> component_of(const Polynomial& f) const {
    for (std::size_t i = 0; i < primes_.size(); ++i)
      if (coefficients_in(f, primes_[i])) return i;
    return std::nullopt;
  }

 private:
  friend MonoidZeroDivisors zero_divisors_of_MG(const FiniteSemimodule&, std::vector<Ideal>);
  std::vector<Ideal> primes_;
  std::vector<Elem> generators_;
};

/// Requires every listed prime to be Ann(x) for some nonzero x and their union
/// to equal Z_S(M).
inline MonoidZeroDivisors zero_divisors_of_MG(const FiniteSemimodule& m, std::vector<Ideal> primes) {
  MonoidZeroDivisors out;
  const ElementSet z = zero_divisor_set(m);
  ElementSet uni(m.scalars().size());
  for (const auto& p : primes) {
    if (!is_prime(m.scalars(), p)) throw precondition_error("listed ideal is not prime");
    std::optional<Elem> gen;
    for (Elem x = 0; x < m.size() && !gen; ++x)
      if (x != m.zero() && annihilator(m, x) == p) gen = x;
    if (!gen) throw precondition_error("listed prime " + format_ideal(m.scalars(), p) + " is not associated to M");
    out.generators_.push_back(*gen);
    uni |= p.members();
  }
  if (uni != z) throw precondition_error("listed primes do not cover Z(M) exactly");
  out.primes_ = std::move(primes);
  return out;
}

}  // namespace zdiv
