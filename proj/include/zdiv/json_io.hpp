#pragma once

// JSON documents for semirings, semimodules, polynomials and analysis reports.
// Ideals serialize as sorted index arrays, element sets as name arrays.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "zdiv/mccoy.hpp"
#include "zdiv/semialgebra.hpp"

namespace zdiv {

using json = nlohmann::ordered_json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw parse_error("'" + path + "': " + e.what());
  }
}

namespace detail {

inline const json& require_field(const json& j, const char* key, const char* doc) {
  if (!j.is_object() || !j.contains(key)) throw structural_error(std::string(doc) + " document lacks \"" + key + "\"");
  return j.at(key);
}

template <class T>
T read_field(const json& j, const char* key, const char* doc) {
  try {
    return require_field(j, key, doc).get<T>();
  } catch (const json::exception& e) {
    throw structural_error(std::string(doc) + " field \"" + key + "\": " + e.what());
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Semirings and semimodules

inline json to_json(const SemiringTables& t) {
  return json{{"name", t.name}, {"elements", t.elements}, {"add", t.add},
              {"mul", t.mul},   {"zero", t.zero},         {"one", t.one}};
}

inline json semiring_to_json(const FiniteSemiring& s) { return to_json(s.tables()); }

inline SemiringTables semiring_tables_from_json(const json& j) {
  SemiringTables t;
  t.name = j.is_object() && j.contains("name") ? detail::read_field<std::string>(j, "name", "semiring") : "semiring";
  t.elements = detail::read_field<std::vector<std::string>>(j, "elements", "semiring");
  t.add = detail::read_field<std::vector<std::vector<long long>>>(j, "add", "semiring");
  t.mul = detail::read_field<std::vector<std::vector<long long>>>(j, "mul", "semiring");
  t.zero = detail::read_field<long long>(j, "zero", "semiring");
  t.one = detail::read_field<long long>(j, "one", "semiring");
  return t;
}

/// Accepts either full tables or {"builtin": "<spec>"}.
inline FiniteSemiring semiring_from_json(const json& j, const Limits& limits = {}) {
  if (j.is_object() && j.contains("builtin")) return builtin_semiring(detail::read_field<std::string>(j, "builtin", "semiring"), limits);
  return FiniteSemiring::from_tables(semiring_tables_from_json(j), limits);
}

inline json semimodule_to_json(const FiniteSemimodule& m) {
  const auto t = m.tables();
  return json{{"name", t.name}, {"elements", t.elements}, {"add", t.add}, {"action", t.action}, {"zero", t.zero}};
}

inline SemimoduleTables semimodule_tables_from_json(const json& j) {
  SemimoduleTables t;
  t.name = j.is_object() && j.contains("name") ? detail::read_field<std::string>(j, "name", "semimodule") : "module";
  t.elements = detail::read_field<std::vector<std::string>>(j, "elements", "semimodule");
  t.add = detail::read_field<std::vector<std::vector<long long>>>(j, "add", "semimodule");
  t.action = detail::read_field<std::vector<std::vector<long long>>>(j, "action", "semimodule");
  t.zero = detail::read_field<long long>(j, "zero", "semimodule");
  return t;
}

/// Accepts full tables or {"builtin": "regular" | "zero" | "projection:I"}.
inline FiniteSemimodule semimodule_from_json(const FiniteSemiring& s, const json& j, const Limits& limits = {}) {
  if (j.is_object() && j.contains("builtin"))
    return builtin_semimodule(s, detail::read_field<std::string>(j, "builtin", "semimodule"));
  return FiniteSemimodule::from_tables(s, semimodule_tables_from_json(j), limits);
}

// ---------------------------------------------------------------------------
// Sets, ideals, polynomials

inline json ideal_to_json(const Ideal& i) { return json(i.elements()); }

inline json ideals_to_json(const std::vector<Ideal>& is) {
  json out = json::array();
  for (const auto& i : is) out.push_back(ideal_to_json(i));
  return out;
}

inline json names_to_json(const std::vector<std::string>& names, const ElementSet& set) {
  json out = json::array();
  set.for_each([&](Elem x) { out.push_back(names[x]); });
  return out;
}

template <CoefficientCarrier C>
json poly_to_json(const C& carrier, const Polynomial& f) {
  json out = json::array();
  for (const auto& t : f.terms()) {
    json exp = json::array();
    for (int v = 0; v < t.exp.dim(); ++v) exp.push_back(t.exp[v]);
    out.push_back(json{{"exp", exp}, {"coeff", carrier.element_name(t.coeff)}});
  }
  return out;
}

template <CoefficientCarrier C>
Polynomial poly_from_json(const json& j, const C& carrier, PolyShape shape = {}) {
  if (j.is_string()) return parse_poly(j.get<std::string>(), carrier, shape);
  if (!j.is_array()) throw structural_error("polynomial must be a string or an array of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    const auto exps = detail::read_field<std::vector<int>>(t, "exp", "term");
    const auto name = detail::read_field<std::string>(t, "coeff", "term");
    if (static_cast<int>(exps.size()) != shape.vars) throw structural_error("term exponent has the wrong dimension");
    ExponentVec e(shape.vars);
    for (int v = 0; v < shape.vars; ++v) e[v] = exps[v];
    if (!shape.laurent && !e.nonnegative()) throw parse_error("negative exponent without --laurent");
    auto c = carrier.find(name);
    if (!c) throw parse_error("unknown coefficient name '" + name + "'");
    terms.push_back({e, *c});
  }
  return Polynomial::from_terms(carrier, shape, std::move(terms));
}

// ---------------------------------------------------------------------------
// Reports

inline json axiom_report_to_json(const AxiomReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back(json{{"axiom", x.axiom}, {"witness", x.witness}});
  return json{{"passed", r.passed}, {"violations", v}};
}

inline json classification_to_json(const FiniteSemimodule& m, const Classification& c) {
  json j;
  j["semiring"] = m.scalars().name();
  j["module"] = m.name();
  j["zero_divisors"] = names_to_json(m.scalars().element_names(), c.zero_divisors);
  j["ass_primes"] = ideals_to_json(c.ass_primes);
  j["maximal_annihilators"] = ideals_to_json(c.maximal_annihilators);
  j["property_A"] = c.property_A;
  j["property_A_witness"] = c.property_A_witness ? ideal_to_json(*c.property_A_witness) : json(nullptr);
  j["very_few"] = c.very_few;
  j["degree"] = c.degree ? json(*c.degree) : json(nullptr);
  j["decomposition"] = ideals_to_json(c.decomposition);
  j["primal"] = c.primal;
  j["auslander"] = c.auslander;
  return j;
}

inline json mccoy_trace_to_json(const FiniteSemimodule& m, const McCoyTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) steps.push_back(json{{"r", s.r}, {"terms", s.terms}});
  return json{{"initial_terms", t.initial_terms}, {"steps", steps}, {"b", m.element_name(t.result)}};
}

inline json dm_to_json(const DedekindMertensResult& r) {
  return json{{"exponent", r.exponent ? json(*r.exponent) : json(nullptr)},
              {"absent_for_all", r.absent_for_all},
              {"examined", r.examined}};
}

inline json witness_to_json(const FiniteSemiring& b, const FiniteSemiring& s, const PredicateWitness& w) {
  json els = json::array();
  for (Elem e : w.elements) els.push_back(b.element_name(e));
  return json{{"elements", els}, {"scalar", w.scalar ? json(s.element_name(*w.scalar)) : json(nullptr)}, {"note", w.note}};
}

inline json content_report_to_json(const FiniteSemialgebra& a, const ContentReport& r) {
  const auto& s = a.scalars();
  const auto& b = a.carrier();
  json j;
  j["S"] = s.name();
  j["construction"] = a.construction();
  j["size"] = b.size();
  j["lambda_injective"] = r.lambda_injective;
  j["content_onto"] = r.content_onto;
  j["flags"] = json{{"ohm_rush", r.ohm_rush},
                    {"homogeneous", r.homogeneous},
                    {"weak_content", r.weak_content},
                    {"content", r.content},
                    {"mccoy", r.mccoy}};
  j["dm_max_exponent"] = r.dm_max_exponent ? json(*r.dm_max_exponent) : json(nullptr);
  json w = json::object();
  auto put = [&](const char* key, const std::optional<PredicateWitness>& x) {
    if (x) w[key] = witness_to_json(b, s, *x);
  };
  put("ohm_rush", r.ohm_rush_witness);
  put("homogeneous", r.homogeneous_witness);
  put("weak_content", r.weak_content_witness);
  put("content", r.content_witness);
  put("mccoy", r.mccoy_witness);
  j["witnesses"] = w;
  return j;
}

inline json search_report_to_json(const SearchReport& r) {
  json inst = json::array();
  for (const auto& i : r.instances) {
    json x;
    x["S"] = i.semiring;
    x["construction"] = i.construction;
    x["size"] = i.carrier_size;
    x["nilpotent_free"] = i.nilpotent_free;
    if (i.report) {
      x["flags"] = json{{"ohm_rush", i.report->ohm_rush},
                        {"homogeneous", i.report->homogeneous},
                        {"weak_content", i.report->weak_content},
                        {"content", i.report->content},
                        {"mccoy", i.report->mccoy}};
    } else {
      x["flags"] = nullptr;
      x["cap"] = i.cap_note;
    }
    x["weak_content_not_mccoy"] = i.weak_content_not_mccoy;
    x["nilpotent_free_transfer_violated"] = i.nilpotent_free_weak_content_not_mccoy;
    inst.push_back(std::move(x));
  }
  return json{{"instances", inst},
              {"candidates", r.candidates},
              {"transfer_violations", r.transfer_violations},
              {"cap_exhausted", r.cap_exhausted},
              {"conclusion", r.conclusion()}};
}

}  // namespace zdiv
