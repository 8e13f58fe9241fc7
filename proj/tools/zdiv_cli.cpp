// Command-line front end. Every command builds a JSON model; text output is a
// rendering of that model.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zdiv/zdiv.hpp"

namespace {

using zdiv::json;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string builtin;
  std::string semiring;
  std::string module;
  std::string target;  // axioms positional
  int degree = 3;
  int vars = 1;
  bool laurent = false;
  std::uint64_t seed = 0;
  std::string json_path;
  bool deterministic = false;
  std::string f;
  std::string g;
  std::size_t mmax = 64;
  std::string theorem;
  std::string suite;
  std::vector<std::string> constructions;
  std::vector<std::string> pool;
  bool sampled = false;
  std::size_t samples = 2000;
  std::string replay;
  std::size_t construction_cap = zdiv::Limits{}.construction_cap;
  std::size_t element_cap = zdiv::Limits{}.element_cap;
};

class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& m) : std::runtime_error("usage error: " + m) {}
};

zdiv::Limits limits_of(const Options& o) {
  zdiv::Limits l;
  l.construction_cap = o.construction_cap;
  l.element_cap = o.element_cap;
  return l;
}

/// A path to a JSON document, or else a builtin spec.
json document_or_builtin(const std::string& text) {
  if (std::filesystem::is_regular_file(text)) return zdiv::load_json_file(text);
  return json{{"builtin", text}};
}

json semiring_document(const Options& o) {
  if (!o.builtin.empty() && !o.semiring.empty()) throw usage_error("give either --builtin or --semiring, not both");
  if (!o.builtin.empty()) return json{{"builtin", o.builtin}};
  if (!o.semiring.empty()) return document_or_builtin(o.semiring);
  throw usage_error("no semiring given (use --builtin or --semiring)");
}

json module_document(const Options& o) {
  if (o.module.empty()) return json{{"builtin", "regular"}};
  return document_or_builtin(o.module);
}

zdiv::FiniteSemiring load_semiring(const Options& o) { return zdiv::semiring_from_json(semiring_document(o), limits_of(o)); }

zdiv::PolyShape shape_of(const Options& o) { return zdiv::PolyShape{o.vars, o.laurent}; }

// ---------------------------------------------------------------------------
// Text rendering of the JSON model

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!is_scalar(x) && !(x.is_array() && std::all_of(x.begin(), x.end(), is_scalar))) return false;
  return true;
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

std::string flat_text(const json& j) {
  if (is_scalar(j)) return scalar_text(j);
  std::string out = "[";
  bool first = true;
  for (const auto& x : j) {
    if (!first) out += ", ";
    first = false;
    out += flat_text(x);
  }
  return out + "]";
}

void render(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_scalar(v) || is_flat_array(v)) {
        os << pad << k << ": " << flat_text(v) << "\n";
      } else if (v.empty()) {
        os << pad << k << ": " << (v.is_array() ? "[]" : "{}") << "\n";
      } else {
        os << pad << k << ":\n";
        render(os, v, indent + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_scalar(v) || is_flat_array(v)) {
        os << pad << "- " << flat_text(v) << "\n";
      } else {
        os << pad << "-\n";
        render(os, v, indent + 1);
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

void emit(const Options& o, bool json_requested, const json& doc) {
  if (!json_requested) {
    render(std::cout, doc, 0);
    return;
  }
  const std::string text = doc.dump(2) + "\n";
  if (o.json_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.json_path, std::ios::binary);
  if (!out) throw zdiv::parse_error("cannot write '" + o.json_path + "'");
  out << text;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_axioms(const Options& o, bool as_json) {
  json doc;
  std::string source = o.target;
  if (source.empty()) source = !o.builtin.empty() ? o.builtin : o.semiring;
  if (source.empty()) throw usage_error("axioms needs a file or builtin");
  const json sdoc = document_or_builtin(source);
  zdiv::SemiringTables tables;
  if (sdoc.contains("builtin"))
    tables = zdiv::builtin_semiring(sdoc.at("builtin").get<std::string>(), limits_of(o)).tables();
  else
    tables = zdiv::semiring_tables_from_json(sdoc);
  const auto report = zdiv::check_semiring_axioms(tables);
  doc["semiring"] = tables.name;
  doc["size"] = tables.elements.size();
  doc["axioms"] = zdiv::axiom_report_to_json(report);
  bool passed = report.passed;
  if (!o.module.empty() && passed) {
    const auto s = zdiv::FiniteSemiring::from_tables(tables, limits_of(o));
    const json mdoc = module_document(o);
    zdiv::SemimoduleTables mt;
    if (mdoc.contains("builtin"))
      mt = zdiv::builtin_semimodule(s, mdoc.at("builtin").get<std::string>()).tables();
    else
      mt = zdiv::semimodule_tables_from_json(mdoc);
    const auto mrep = zdiv::check_semimodule_axioms(s, mt);
    doc["module"] = mt.name;
    doc["module_axioms"] = zdiv::axiom_report_to_json(mrep);
    passed = passed && mrep.passed;
  }
  emit(o, as_json, doc);
  return passed ? kExitOk : kExitFalsified;
}

int cmd_list_ideals(const Options& o, bool as_json) {
  const auto s = load_semiring(o);
  const auto limits = limits_of(o);
  const auto ideals = zdiv::enumerate_ideals(s, limits);
  json rows = json::array();
  for (const auto& i : ideals) {
    const bool prime = zdiv::is_prime(s, i);
    rows.push_back(json{{"ideal", zdiv::ideal_to_json(i)},
                        {"names", zdiv::names_to_json(s.element_names(), i.members())},
                        {"prime", prime},
                        {"subtractive", zdiv::is_subtractive(s, i)},
                        {"strong_krull", prime && zdiv::is_strong_krull_prime(s, i, limits)},
                        {"radical", zdiv::ideal_to_json(zdiv::radical_by_powers(s, i))}});
  }
  json doc{{"semiring", s.name()},
           {"elements", s.element_names()},
           {"ideals", rows},
           {"weak_gaussian", zdiv::is_weak_gaussian(s, limits)},
           {"subtractive", zdiv::is_subtractive_semiring(s, limits)}};
  emit(o, as_json, doc);
  return kExitOk;
}

int cmd_classify(const Options& o, bool as_json) {
  const auto s = load_semiring(o);
  const auto m = zdiv::semimodule_from_json(s, module_document(o), limits_of(o));
  const auto c = zdiv::classify(m, limits_of(o));
  emit(o, as_json, zdiv::classification_to_json(m, c));
  return kExitOk;
}

void require_polys(const Options& o) {
  if (o.f.empty() || o.g.empty()) throw usage_error("-f and -g are required");
}

int cmd_mccoy(const Options& o, bool as_json) {
  require_polys(o);
  const auto s = load_semiring(o);
  const auto m = zdiv::semimodule_from_json(s, module_document(o), limits_of(o));
  const auto f = zdiv::parse_poly(o.f, s, shape_of(o));
  const auto g = zdiv::parse_poly(o.g, m, shape_of(o));
  json doc{{"semiring", s.name()}, {"module", m.name()}, {"f", zdiv::format_poly(s, f)}, {"g", zdiv::format_poly(m, g)}};
  const auto trace = zdiv::mccoy_annihilator(m, f, g);
  const json trace_doc = zdiv::mccoy_trace_to_json(m, trace);
  for (const auto& [k, v] : trace_doc.items()) doc[k] = v;
  emit(o, as_json, doc);
  return kExitOk;
}

int cmd_dm(const Options& o, bool as_json) {
  require_polys(o);
  const auto s = load_semiring(o);
  const auto f = zdiv::parse_poly(o.f, s, shape_of(o));
  const auto g = zdiv::parse_poly(o.g, s, shape_of(o));
  const auto fg = zdiv::poly_mul(s, f, g);
  const auto cf = zdiv::content(s, f);
  const auto cg = zdiv::content(s, g);
  const auto cfg = zdiv::content(s, fg);
  const auto r = zdiv::dedekind_mertens_exponent(s, cf, cg, cfg, o.mmax);
  const auto wc = zdiv::weak_content_check(s, cf, cg, cfg);
  auto names = [&](const zdiv::Ideal& i) { return zdiv::names_to_json(s.element_names(), i.members()); };
  json doc{{"semiring", s.name()},
           {"f", zdiv::format_poly(s, f)},
           {"g", zdiv::format_poly(s, g)},
           {"fg", zdiv::format_poly(s, fg)},
           {"c(f)", names(cf)},
           {"c(g)", names(cg)},
           {"c(fg)", names(cfg)},
           {"c(f)c(g)", names(wc.cfcg)},
           {"radical c(fg)", names(wc.radical)},
           {"weak_content", json{{"holds", wc.holds},
                                 {"failed_inclusion", wc.failed_inclusion},
                                 {"element", wc.witness ? json(s.element_name(*wc.witness)) : json(nullptr)}}},
           {"dedekind_mertens", zdiv::dm_to_json(r)}};
  emit(o, as_json, doc);
  return kExitOk;
}

std::vector<std::string> construction_labels(const Options& o, const zdiv::FiniteSemiring& s) {
  return o.constructions.empty() ? zdiv::default_constructions(s) : o.constructions;
}

int cmd_semialgebra_scan(const Options& o, bool as_json) {
  const auto s = load_semiring(o);
  const auto limits = limits_of(o);
  json rows = json::array();
  for (const auto& label : construction_labels(o, s)) {
    try {
      zdiv::SemialgebraAnalysis an(zdiv::parse_construction(label).build(s, limits), limits);
      rows.push_back(zdiv::content_report_to_json(an.algebra(), an.report(o.mmax)));
    } catch (const zdiv::cap_exceeded& e) {
      rows.push_back(json{{"S", s.name()}, {"construction", label}, {"cap", e.what()}});
    }
  }
  emit(o, as_json, json{{"instances", rows}});
  return kExitOk;
}

int cmd_search(const Options& o, bool as_json) {
  zdiv::SearchConfig cfg;
  cfg.limits = limits_of(o);
  std::vector<std::string> pool = o.pool;
  if (pool.empty() && (!o.builtin.empty() || !o.semiring.empty())) {
    cfg.pool.push_back(load_semiring(o));
  } else {
    if (pool.empty()) pool = zdiv::builtin_pool();
    for (const auto& name : pool) cfg.pool.push_back(zdiv::semiring_from_json(document_or_builtin(name), cfg.limits));
  }
  const std::vector<std::string> labels =
      o.constructions.empty() ? std::vector<std::string>{"truncated:1", "truncated:2", "truncated:3", "monoid:idem2", "monoid:z2"}
                              : o.constructions;
  for (const auto& l : labels) cfg.constructions.push_back(zdiv::parse_construction(l));
  const auto report = zdiv::counterexample_search(cfg);
  emit(o, as_json, zdiv::search_report_to_json(report));
  return report.candidates > 0 || report.transfer_violations > 0 ? kExitFalsified : kExitOk;
}

int cmd_verify(const Options& o, bool as_json) {
  if (!o.replay.empty()) {
    const auto r = zdiv::replay_witness(zdiv::load_json_file(o.replay));
    emit(o, as_json, json{{"reproduced", r.reproduced}, {"detail", r.detail}});
    return r.reproduced ? kExitFalsified : kExitOk;
  }
  if (o.suite.empty() == o.theorem.empty()) throw usage_error("verify needs exactly one of --theorem or --suite");
  std::vector<zdiv::VerificationReport> reports;
  std::string name;
  if (!o.suite.empty()) {
    std::vector<std::string> pool = o.pool;
    if (pool.empty() && !o.builtin.empty()) pool.push_back(o.builtin);
    reports = zdiv::run_suite(o.suite, pool, o.seed);
    name = o.suite;
  } else {
    zdiv::CheckSpec spec;
    spec.theorem = zdiv::parse_theorem(o.theorem);
    const auto limits = limits_of(o);
    // Inline file documents so a witness replays without the original paths.
    const auto s = load_semiring(o);
    const json sdoc = semiring_document(o);
    spec.semiring = sdoc.contains("builtin") ? sdoc : zdiv::semiring_to_json(s);
    const json mdoc = module_document(o);
    spec.module = mdoc.contains("builtin") ? mdoc : zdiv::semimodule_to_json(zdiv::semimodule_from_json(s, mdoc, limits));
    spec.constructions = o.constructions;
    spec.degree = o.degree;
    spec.vars = o.vars;
    spec.laurent = o.laurent;
    spec.exhaustive = !o.sampled;
    spec.samples = o.samples;
    spec.seed = o.seed;
    reports.push_back(zdiv::run_check(spec));
    name = "single";
  }
  const json doc = zdiv::suite_to_json(name, reports, o.deterministic);
  emit(o, as_json, doc);
  return doc["summary"]["falsified"].get<std::size_t>() > 0 ? kExitFalsified : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-divisor and content analysis for finite commutative semirings"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--builtin", o.builtin, "builtin semiring, e.g. lagrassa or ideal:12");
    c->add_option("--semiring", o.semiring, "semiring JSON document (or builtin spec)");
    c->add_option("--module", o.module, "semimodule JSON document, or regular | zero | projection:I");
    c->add_option("--json", o.json_path, "emit JSON, to a file when a path is given")->expected(0, 1);
    c->add_flag("--deterministic", o.deterministic, "omit timing fields");
    c->add_option("--construction-cap", o.construction_cap, "largest carrier a construction may build");
    c->add_option("--element-cap", o.element_cap, "largest user-supplied carrier");
  };
  auto poly_opts = [&](CLI::App* c) {
    c->add_option("-f", o.f, "polynomial f");
    c->add_option("-g", o.g, "polynomial g");
    c->add_option("--k", o.vars, "number of variables")->check(CLI::Range(1, zdiv::kMaxVars));
    c->add_flag("--laurent", o.laurent, "allow negative exponents");
  };

  auto* axioms = app.add_subcommand("axioms", "validate semiring (and semimodule) axioms");
  common(axioms);
  axioms->add_option("target", o.target, "semiring JSON file or builtin spec");

  auto* list_ideals = app.add_subcommand("list-ideals", "enumerate ideals with prime/subtractive flags");
  common(list_ideals);

  auto* classify = app.add_subcommand("classify", "zero-divisor report for a semimodule");
  common(classify);

  auto* mccoy = app.add_subcommand("mccoy", "constant annihilator for f g = 0");
  common(mccoy);
  poly_opts(mccoy);

  auto* dm = app.add_subcommand("dm", "contents, weak content chain and Dedekind-Mertens exponent");
  common(dm);
  poly_opts(dm);
  dm->add_option("--mmax", o.mmax, "largest exponent to try");

  auto* scan = app.add_subcommand("semialgebra-scan", "content predicates of finite semialgebras");
  common(scan);
  scan->add_option("--construction", o.constructions, "truncated:D | monoid:NAME | projection:I (repeatable)");
  scan->add_option("--mmax", o.mmax, "largest Dedekind-Mertens exponent to try");

  auto* verify = app.add_subcommand("verify", "run a theorem check or a named suite");
  common(verify);
  verify->add_option("--theorem", o.theorem, "theorem id, e.g. T2_4");
  verify->add_option("--suite", o.suite, "paper-exhaustive | paper-sampled | quick");
  verify->add_option("--deg", o.degree, "degree bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--k", o.vars, "number of variables")->check(CLI::Range(1, zdiv::kMaxVars));
  verify->add_flag("--laurent", o.laurent, "Laurent exponents");
  verify->add_option("--seed", o.seed, "sampling seed");
  verify->add_flag("--sampled", o.sampled, "seeded sampling instead of exhaustive enumeration");
  verify->add_option("--samples", o.samples, "sample budget");
  verify->add_option("--construction", o.constructions, "semialgebra constructions (repeatable)");
  verify->add_option("--pool", o.pool, "semirings for a suite (repeatable)");
  verify->add_option("--replay", o.replay, "replay a falsification witness");

  auto* search = app.add_subcommand("search-counterexample", "look for weak content semialgebras that are not McCoy");
  common(search);
  search->add_option("--pool", o.pool, "semirings (repeatable); defaults to the builtin pool");
  search->add_option("--construction", o.constructions, "constructions (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const bool as_json = cmd->count("--json") > 0;
  try {
    const std::string name = cmd->get_name();
    if (name == "axioms") return cmd_axioms(o, as_json);
    if (name == "list-ideals") return cmd_list_ideals(o, as_json);
    if (name == "classify") return cmd_classify(o, as_json);
    if (name == "mccoy") return cmd_mccoy(o, as_json);
    if (name == "dm") return cmd_dm(o, as_json);
    if (name == "semialgebra-scan") return cmd_semialgebra_scan(o, as_json);
    if (name == "verify") return cmd_verify(o, as_json);
    return cmd_search(o, as_json);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}
