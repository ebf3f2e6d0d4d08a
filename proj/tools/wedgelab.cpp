#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "app/record.hpp"
#include "app/suite.hpp"
#include "app/survey.hpp"
#include "wedgelab/constructors.hpp"
#include "wedgelab/errors.hpp"
#include "wedgelab/functors.hpp"
#include "wedgelab/isoscope.hpp"
#include "wedgelab/presentation.hpp"
#include "wedgelab/wedge.hpp"

using namespace wedgelab;
using namespace wedgelab::app;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Global {
  std::string format = "table";
  bool no_timing = false;
  std::optional<std::size_t> max_cosets, dense_cutoff;
  std::optional<std::uint64_t> search_nodes, search_millis;

  Budgets budgets() const {
    Budgets b = Budgets::defaults();
    if (max_cosets) b.max_cosets = *max_cosets;
    if (dense_cutoff) b.dense_cutoff = *dense_cutoff;
    if (search_nodes) b.search_nodes = *search_nodes;
    if (search_millis) b.search_millis = *search_millis;
    return b;
  }
};

void emit(const Global& g, const std::vector<ResultRecord>& rows) {
  if (g.format == "json") {
    std::cout << records_to_json(rows);
  } else if (g.format == "csv") {
    std::cout << records_to_csv(rows);
  } else {
    std::cout << records_to_table(rows);
  }
}

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw ParameterViolation("expected key=value in '" + part + "'");
    out[part.substr(0, eq)] = part.substr(eq + 1);
  }
  return out;
}

/// --family F --params k=v,... as a descriptor.
std::string family_descriptor(const std::string& family, const std::string& params) {
  const auto p = parse_params(params);
  auto get = [&](const std::string& k) {
    const auto it = p.find(k);
    if (it == p.end()) throw ParameterViolation("family '" + family + "' needs parameter '" + k + "'");
    return it->second;
  };
  if (family == "holder") return "holder:" + get("n") + "," + get("m") + "," + get("r");
  if (family == "extraspecial") {
    const std::string exp = p.count("exp") ? get("exp") : "p";
    return "extraspecial:" + get("p") + "," + get("n") + "," + (exp == "p" ? "p" : "p2");
  }
  if (family == "abelian") {
    std::string f = get("factors");
    std::replace(f.begin(), f.end(), 'x', ',');
    return "abelian:" + f;
  }
  if (family == "cyclic" || family == "symmetric" || family == "alternating") return family + ":" + get("n");
  if (family == "dihedral" || family == "quaternion") return family + ":" + get("order");
  throw ParameterViolation("unknown family '" + family + "'");
}

GroupPtr build_functor(const std::string& functor, const GroupPtr& g, std::size_t n, WedgeStrategy ws,
                       const Budgets& b, std::string* provenance) {
  WedgeOptions o{ws, b};
  if (functor == "tau") {
    const auto w = wedge(g, o);
    if (provenance) *provenance = "wedge=" + to_string(w.strategy);
    return tau(w, b);
  }
  if (functor == "tauflat") {
    const auto w = wedge(g, o);
    if (provenance) *provenance = "wedge=" + to_string(w.strategy);
    return tau_flat(w, b);
  }
  if (functor == "k") return k_group(g, n, b);
  if (functor == "ktilde") {
    if (is_abelian(g)) return ktilde_abelian(g, n, b);
    if (n != 3) throw UnsupportedFamily("K~(G,n) for non-abelian G is built for n = 3 only");
    const CoverData c = any_schur_cover(g, b);
    if (provenance) *provenance = "cover=" + c.kind;
    return ktilde_from_cover(c, b);
  }
  throw ParameterViolation("unknown functor '" + functor + "'");
}

/// A descriptor, or tau(D), tauflat(D), k(D) and ktilde(D) with an optional
/// ";n" suffix inside the parentheses, e.g. k(holder:4,5,3;4).
GroupPtr parse_group_expr(const std::string& text, const Budgets& b) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') return group_from_descriptor(text);
  const std::string functor = text.substr(0, open);
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  std::size_t n = 3;
  const auto semi = inner.rfind(';');
  const auto close = inner.rfind(')');
  if (semi != std::string::npos && (close == std::string::npos || close < semi)) {
    try {
      n = std::stoul(inner.substr(semi + 1));
    } catch (const std::exception&) {
      throw ParameterViolation("bad arity in '" + text + "'");
    }
    inner = inner.substr(0, semi);
  }
  return build_functor(functor, parse_group_expr(inner, b), n, WedgeStrategy::Auto, b, nullptr);
}

int cmd_construct(const Global& gl, const std::string& family, const std::string& params, const std::string& group,
                  const std::string& pres_file, const std::string& cayley) {
  const Budgets b = gl.budgets();
  GroupPtr g;
  std::string name;
  if (!pres_file.empty()) {
    std::ifstream in(pres_file);
    if (!in) throw ParameterViolation("cannot read '" + pres_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    EnumerationOptions eo;
    eo.max_cosets = b.max_cosets;
    g = realize(parse_presentation(buf.str()), eo);
    name = pres_file;
  } else if (!family.empty()) {
    name = family_descriptor(family, params);
    g = group_from_descriptor(name);
  } else if (!group.empty()) {
    name = group;
    g = parse_group_expr(group, b);
  } else {
    throw ParameterViolation("give --family, --group or --presentation");
  }
  const auto start = std::chrono::steady_clock::now();
  ResultRecord r = describe_group(g, name, b);
  if (!gl.no_timing) {
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  if (!cayley.empty()) {
    if (g->order() > b.dense_cutoff) throw BudgetExceeded("Cayley export is limited to the dense cutoff");
    std::ofstream out(cayley);
    for (Elem x = 0; x < g->order(); ++x) {
      for (Elem y = 0; y < g->order(); ++y) out << (y ? "," : "") << g->mul(x, y);
      out << "\n";
    }
  }
  emit(gl, {r});
  return 0;
}

int cmd_functor(const Global& gl, const std::string& functor, const std::string& group, std::size_t n,
                const std::string& wedge_name) {
  const Budgets b = gl.budgets();
  const auto start = std::chrono::steady_clock::now();
  const GroupPtr g = parse_group_expr(group, b);
  const WedgeStrategy ws = parse_wedge_strategy(wedge_name);
  ResultRecord r;
  if (functor == "b0") {
    const auto w = wedge(g, WedgeOptions{ws, b});
    const auto inv = bogomolov(w);
    r.group = group;
    r.order = inv.order();
    r.abelian_invariants = inv.factors;
    r.center_invariants = inv.factors;
    r.note = inv.factors.empty() ? "trivial" : "B0 = " + inv.describe();
    r.params = "wedge=" + to_string(w.strategy);
  } else if (functor == "wedge" || functor == "multiplier") {
    const auto w = wedge(g, WedgeOptions{ws, b});
    r = describe_group(functor == "wedge" ? w.w : GroupPtr(subgroup_as_group(schur_multiplier(w), b.dense_cutoff).group),
                       group, b);
    r.params = "wedge=" + to_string(w.strategy);
  } else {
    std::string prov;
    const GroupPtr f = build_functor(functor, g, n, ws, b, &prov);
    r = describe_group(f, group, b);
    const bool arity = functor == "k" || functor == "ktilde";
    r.params = arity ? "n=" + std::to_string(n) + (prov.empty() ? "" : "," + prov) : prov;
  }
  r.functor = functor;
  if (!gl.no_timing) {
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  emit(gl, {r});
  return 0;
}

int cmd_survey(const Global& gl, SurveyOptions o) {
  o.budgets = gl.budgets();
  o.timing = !gl.no_timing;
  emit(gl, run_survey(o));
  return 0;
}

int cmd_verify(const Global& gl, const std::string& suite, const std::string& tier, const std::vector<std::string>& only,
               const std::string& fault) {
  if (suite != "paper") throw ParameterViolation("unknown suite '" + suite + "'");
  SuiteOptions o;
  o.tier = tier == "full" ? Tier::Full : Tier::Fast;
  o.budgets = gl.budgets();
  for (const auto& name : only) {
    const auto id = find_criterion(name);
    if (!id) throw ParameterViolation("unknown criterion '" + name + "'");
    o.only.push_back(*id);
  }
  if (!fault.empty()) {
    if (fault != "wedge-pairing") throw ParameterViolation("unknown fault '" + fault + "'");
    o.inject_wedge_fault = true;
  }
  const bool text = gl.format == "table";
  if (text) {
    o.on_result = [&](const CriterionResult& r) { std::cout << format_result(r, !gl.no_timing) << std::endl; };
  }
  const SuiteReport rep = run_suite(o);
  const bool ok = rep.ok(o.tier);
  if (text) {
    std::size_t pass = 0, fail = 0, unknown = 0;
    for (const auto& r : rep.results) {
      pass += r.status == Status::Pass;
      fail += r.status == Status::Fail;
      unknown += r.status == Status::Unknown;
    }
    std::cout << pass << " passed, " << fail << " failed, " << unknown << " unknown";
    if (!gl.no_timing) std::cout << " in " << rep.millis / 1000 << " s";
    std::cout << "\n";
  } else {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["suite"] = suite;
    doc["tier"] = tier;
    doc["ok"] = ok;
    doc["results"] = nlohmann::ordered_json::array();
    for (const auto& r : rep.results) {
      nlohmann::ordered_json j;
      j["id"] = r.info.id;
      j["key"] = r.info.key;
      j["tag"] = r.info.tag;
      j["status"] = to_string(r.status);
      j["detail"] = r.detail;
      j["timing_ms"] = gl.no_timing ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.millis);
      doc["results"].push_back(j);
    }
    std::cout << doc.dump(2) << "\n";
  }
  return ok ? 0 : kExitFail;
}

int cmd_iso(const Global& gl, const std::string& a, const std::string& b) {
  const Budgets bu = gl.budgets();
  const GroupPtr ga = parse_group_expr(a, bu), gb = parse_group_expr(b, bu);
  const IsoVerdict v = are_isomorphic(ga, gb, bu);
  if (gl.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["a"] = a;
    j["b"] = b;
    j["answer"] = to_string(v.answer);
    j["certificate"] = v.certificate;
    if (v.answer == Answer::No) j["witness"] = {{"name", v.witness.name}, {"a", v.witness.value_a}, {"b", v.witness.value_b}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(v.answer) << " (" << v.certificate << ")";
    if (v.answer == Answer::No) {
      std::cout << ": " << v.witness.name << " " << v.witness.value_a << " vs " << v.witness.value_b;
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wedgelab: exterior squares, K(G,n), tau(G) and K~(G,n) of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Global gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--no-timing", gl.no_timing, "Omit timing fields");
  app.add_option("--max-cosets", gl.max_cosets, "Coset enumeration budget");
  app.add_option("--search-nodes", gl.search_nodes, "Backtracking node budget");
  app.add_option("--search-millis", gl.search_millis, "Backtracking time budget per search");
  app.add_option("--dense-cutoff", gl.dense_cutoff, "Largest group stored as a Cayley table");

  std::string family, params, group, pres, cayley;
  auto* construct = app.add_subcommand("construct", "Build a group and print its invariants");
  construct->add_option("--family", family, "cyclic, abelian, dihedral, quaternion, symmetric, alternating, holder, extraspecial");
  construct->add_option("--params", params, "k=v pairs, e.g. n=2,m=3,r=2");
  construct->add_option("--group", group, "Descriptor such as holder:4,5,3 or tau(sym3)");
  construct->add_option("--presentation", pres, "File with 'gens: ...; rels: ...'");
  construct->add_option("--cayley", cayley, "Write the multiplication table as CSV");

  std::string functor, fgroup, wedge_name = "auto";
  std::size_t fn = 3;
  auto* fcmd = app.add_subcommand("functor", "Compute a functor of a group");
  fcmd->add_option("name", functor, "tau, k, ktilde, tauflat, b0, wedge or multiplier")
      ->required()
      ->check(CLI::IsMember({"tau", "k", "ktilde", "tauflat", "b0", "wedge", "multiplier"}));
  fcmd->add_option("--group", fgroup, "Group descriptor")->required();
  fcmd->add_option("--n", fn, "n for K(G,n) and K~(G,n)")->check(CLI::Range(2, 8));
  fcmd->add_option("--wedge", wedge_name, "auto, abelian, cover, product, generic or hopf");

  SurveyOptions so;
  so.jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* scmd = app.add_subcommand("survey", "Tabulate a family");
  scmd->add_option("--family", so.family, "holder or abelian-rank2")->required()->check(CLI::IsMember(survey_families()));
  scmd->add_option("--min-order", so.min_order, "Smallest group order");
  scmd->add_option("--max-order", so.max_order, "Largest group order");
  scmd->add_option("--jobs", so.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  std::string suite = "paper", tier = "fast", fault;
  std::vector<std::string> only;
  auto* vcmd = app.add_subcommand("verify", "Run the verification suite");
  vcmd->add_option("--suite", suite, "Suite name")->check(CLI::IsMember({"paper"}));
  vcmd->add_option("--tier", tier, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  vcmd->add_option("--only", only, "Criterion ids or keys")->delimiter(',');
  vcmd->add_option("--inject-fault", fault, "wedge-pairing: corrupt the crossed-pairing wedge");

  std::string ia, ib;
  auto* icmd = app.add_subcommand("iso", "Decide isomorphism of two groups");
  icmd->add_option("a", ia, "First group")->required();
  icmd->add_option("b", ib, "Second group")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(gl, family, params, group, pres, cayley);
    if (*fcmd) return cmd_functor(gl, functor, fgroup, fn, wedge_name);
    if (*scmd) return cmd_survey(gl, so);
    if (*vcmd) return cmd_verify(gl, suite, tier, only, fault);
    if (*icmd) return cmd_iso(gl, ia, ib);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParameterViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
