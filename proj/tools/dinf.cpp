// dinf: command-line surface over the finite D∞ toolkit.
//
// Exit codes: 0 pass, 1 verification failure (or library error), 2 usage.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dinf/acceptance.hpp"
#include "dinf/corpus.hpp"
#include "dinf/groupoid.hpp"
#include "dinf/homotopy.hpp"
#include "dinf/interpret.hpp"
#include "dinf/io.hpp"
#include "dinf/proof_paths.hpp"
#include "dinf/tower.hpp"

#ifndef DINF_DATA_DIR
#define DINF_DATA_DIR "data"
#endif

namespace {

using dinf::io::json;

struct Options {
  std::string format = "text";
  std::string file, file2, term, output, space, tower_file, predicate = "strict", data_dir = DINF_DATA_DIR;
  std::size_t k = 1, N = 2, levels = 3, fuel = 1000, steps = 0, budget = 100;
  std::uint32_t seed = 20240601;
  std::vector<std::string> env;
  bool corpus = false, dot = false;
};

int emit(const Options& o, const json& j, const std::string& text, bool ok = true) {
  if (!o.output.empty())
    dinf::io::write_file(o.output, j);
  else if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  return ok ? 0 : 1;
}

dinf::TowerPtr tower_of(const Options& o) {
  if (!o.tower_file.empty()) return dinf::io::tower_from_json(dinf::io::read_file(o.tower_file));
  if (o.k < 1 || o.N < 1 || o.N > 4) throw CLI::ValidationError("config", "need k >= 1 and 1 <= N <= 4");
  return dinf::Tower::build(o.k, o.N);
}

dinf::Environment env_of(const dinf::TowerPtr& t, const std::vector<std::string>& bindings) {
  dinf::Environment env(t);
  const auto& sp = t->element_cpo().poset();
  for (const auto& b : bindings) {
    auto eq = b.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--env", "bindings look like x=f#3");
    env = env.with(b.substr(0, eq), dinf::TowerElement::from_top(t, sp.index_of(b.substr(eq + 1))));
  }
  return env;
}

std::string components(const dinf::TowerElement& e) {
  std::string s = "(";
  for (std::size_t n = 0; n < e.components().size(); ++n)
    s += (n ? ", " : "") + e.tower()->level(n).cpo.poset().label(e.component(n));
  return s + ")";
}

// ---------------------------------------------------------------------------

int poset_cmd(const std::string& which, const Options& o) {
  auto p = dinf::io::poset_from_json(dinf::io::read_file(o.file));
  if (which == "check") {
    auto least = p.least();
    bool cpo = false;
    if (least) {
      dinf::Cpo::certify(p, *least);
      cpo = true;
    }
    json j{{"elements", p.size()}, {"partial_order", true}, {"cpo", cpo}};
    if (least) j["bottom"] = p.label(*least);
    return emit(o, j, "partial order on " + std::to_string(p.size()) + " elements" +
                          (cpo ? ", c.p.o. with bottom " + p.label(*least) : ", no least element") + "\n");
  }
  if (which == "opens") {
    auto s = dinf::io::scott_space_of(p);
    auto ups = dinf::upsets(p);
    bool agree = std::set<dinf::Mask>(s.opens().begin(), s.opens().end()) == std::set<dinf::Mask>(ups.begin(), ups.end());
    json list = json::array();
    std::string text;
    for (auto m : s.opens()) {
      list.push_back(dinf::format_subset(p, m));
      text += dinf::format_subset(p, m) + "\n";
    }
    text += std::to_string(s.opens().size()) + " opens; up-set enumeration " + (agree ? "agrees" : "DIFFERS") + "\n";
    return emit(o, {{"opens", list}, {"count", s.opens().size()}, {"upsets_agree", agree}}, text, agree);
  }
  std::cout << dinf::hasse_dot(p);
  return 0;
}

int tower_cmd(const std::string& which, const Options& o) {
  auto t = which == "inspect" ? dinf::io::tower_from_json(dinf::io::read_file(o.file)) : tower_of(o);
  if (which == "build") {
    auto j = dinf::io::to_json(*t);
    if (o.output.empty()) std::cout << j.dump(2) << "\n";
    else dinf::io::write_file(o.output, j);
    return 0;
  }
  bool ok = true;
  json checks = json::array();
  std::string text = "k=" + std::to_string(t->k()) + " N=" + std::to_string(t->depth()) + " sizes";
  for (auto s : t->sizes()) text += " " + std::to_string(s);
  text += "\n";
  for (const auto& c : t->projection_checks()) {
    ok = ok && c.ok();
    checks.push_back({{"level", c.level}, {"retraction", c.retraction}, {"deflation", c.deflation}, {"ok", c.ok()}});
    text += "projection pair " + std::to_string(c.level) + ": " + (c.ok() ? "ok" : "FAILED") + "\n";
  }
  text += "element space: " + std::to_string(t->element_space().size()) + " points, " +
          std::to_string(t->element_space().opens().size()) + " Scott opens\n";
  return emit(o, {{"sizes", t->sizes()}, {"projection_pairs", checks}, {"elements", t->element_space().size()}}, text, ok);
}

int lambda_cmd(const std::string& which, const Options& o) {
  if (which == "normalize") {
    auto n = dinf::normalize(dinf::parse(o.term), o.fuel);
    auto s = dinf::to_string(n.term);
    return emit(o, {{"term", s}, {"steps", n.steps}, {"normal", n.normal}},
                s + "\n(" + std::to_string(n.steps) + " steps" + (n.normal ? "" : ", fuel exhausted") + ")\n", n.normal);
  }
  auto t = tower_of(o);
  if (which == "eval") {
    auto v = dinf::interpret(dinf::parse(o.term), env_of(t, o.env));
    return emit(o, {{"value", v.label()}, {"components", v.components()}}, v.label() + " " + components(v) + "\n");
  }
  dinf::EqualityPredicate eq = dinf::strict_equality();
  if (o.predicate == "h") eq = dinf::path_component(t);
  else if (o.predicate.rfind("level", 0) == 0) eq = dinf::level_bounded(std::stoul(o.predicate.substr(5)));
  else if (o.predicate != "strict") throw CLI::ValidationError("--predicate", "strict, h or levelN");
  auto table = dinf::check_model_clauses(t, dinf::corpus::model_corpus(o.budget), eq);
  json rows = json::array();
  std::string text = "predicate " + table.predicate + "\n";
  bool ok = true;
  for (const auto& r : table.clauses) {
    ok = ok && r.pass();
    rows.push_back({{"clause", r.clause}, {"checked", r.checked}, {"failed", r.failed}, {"witness", r.witness.value_or("")}});
    text += "clause " + r.clause + ": " + std::to_string(r.checked - r.failed) + "/" + std::to_string(r.checked) +
            (r.witness ? "  e.g. " + *r.witness : "") + "\n";
  }
  return emit(o, {{"predicate", table.predicate}, {"clauses", rows}}, text, ok);
}

int homotopy_cmd(const std::string& which, const Options& o) {
  auto p = dinf::io::poset_from_json(dinf::io::read_file(o.file));
  if (which == "pi0") {
    auto n = dinf::pi0(p);
    return emit(o, {{"components", n}}, std::to_string(n) + " path components\n");
  }
  if (which == "pi1") {
    auto g = dinf::pi1(p);
    return emit(o, {{"class", g.summary()}, {"raw", g.raw.text()}, {"simplified", g.simplified.text()}, {"moves", g.moves}},
                g.summary() + "\nraw " + g.raw.text() + "\nsimplified " + g.simplified.text() + "\n");
  }
  auto cone = dinf::is_cone(p);
  json j{{"cone", cone.is_cone}};
  std::string text = cone.is_cone ? "contractible: cone with apex " + p.label(*cone.apex) + "\n" : "no cone point\n";
  if (cone.is_cone && p.least()) {
    auto r = dinf::verify_contraction_preimage(dinf::io::scott_space_of(p));
    j["contraction_preimages"] = r.ok();
    text += "contraction H(x,0)=bot, H(x,t)=x: " + std::to_string(r.entries.size()) + " proper opens, " +
            (r.ok() ? "all preimages open" : "FAILED") + "\n";
  }
  return emit(o, j, text, cone.is_cone);
}

int groupoid_cmd(const std::string& which, const Options& o) {
  if (which == "iso") {
    auto r = dinf::check_iso_F(tower_of(o), o.N);
    json j{{"elements", r.elements}, {"sequences", r.sequences}, {"injective", r.injective}, {"surjective", r.surjective},
           {"pairs", r.pairs_checked}, {"homomorphism_failures", r.homomorphism_failures},
           {"order_failures", r.order_failures}, {"cpo", r.transferred_order_is_cpo}, {"topology", r.topology_transfers}};
    return emit(o, j, j.dump(2) + "\n" + (r.ok() ? "F is an isomorphism\n" : "F FAILED\n"), r.ok());
  }
  auto D = dinf::build_D_groupoid(dinf::io::poset_from_json(dinf::io::read_file(o.space)), o.levels);
  const auto& g = D->groupoid->globular();
  if (which == "build") {
    if (o.dot) {
      std::cout << dinf::globular_dot(g);
      return 0;
    }
    json levels = json::array();
    for (std::size_t n = 0; n <= g.depth(); ++n) {
      json cells = json::array();
      for (std::size_t d = 0; d < g.size(n); ++d) cells.push_back(g.label(n, d));
      levels.push_back(cells);
    }
    std::string text;
    for (std::size_t n = 0; n <= g.depth(); ++n) text += "level " + std::to_string(n) + ": " + levels[n].dump() + "\n";
    bool cert = D->content == dinf::GroupContent::TrivialByContractibility;
    text += std::string("group content: ") + (cert ? "trivial by contractibility" : "unverified") + "\n";
    return emit(o, {{"levels", levels}, {"content", cert ? "trivial" : "unverified"}}, text);
  }
  auto r = dinf::check_strict_axioms(*D->groupoid);
  json j;
  std::string text;
  for (const auto& [axiom, n] : r.checked) {
    json w = json::array();
    for (const auto& v : r.violations)
      if (v.axiom == axiom) w.push_back(v.detail);
    j[axiom] = {{"pass", r.passes(axiom)}, {"instances", n}, {"witnesses", w}};
    text += "(" + axiom + ") " + (r.passes(axiom) ? "pass" : "FAIL") + " over " + std::to_string(n) + " instances\n";
  }
  bool diag = dinf::pullbacks_are_diagonal(g);
  j["diagonal_pullbacks"] = diag;
  text += std::string("pullbacks diagonal: ") + (diag ? "yes" : "no") + "\n";
  return emit(o, j, text, r.ok());
}

int proof_cmd(const std::string& which, const Options& o) {
  if (which == "make") {
    json out;
    if (o.corpus) {
      out["proofs"] = json::array();
      for (const auto& [name, p] : dinf::corpus::proofs()) out["proofs"].push_back(dinf::io::to_json(p, name));
    } else {
      std::vector<dinf::ProofStep> steps{{dinf::parse(o.term), dinf::StepKind::Start}};
      const std::size_t limit = o.steps ? o.steps : o.fuel;
      while (steps.size() <= limit) {
        auto rs = dinf::beta_step(steps.back().term);
        if (rs.empty()) break;
        steps.push_back({rs.front().term, dinf::StepKind::BetaForward});
      }
      out = dinf::io::to_json(dinf::ConversionProof::make(std::move(steps)), "normal-order");
    }
    if (o.output.empty()) std::cout << out.dump(2) << "\n";
    else dinf::io::write_file(o.output, out);
    return 0;
  }
  auto P = dinf::io::proof_from_json(dinf::io::read_file(o.file));
  auto Q = dinf::io::proof_from_json(dinf::io::read_file(o.file2));
  auto t = tower_of(o);
  auto env = o.env.empty() ? dinf::corpus::proof_environment(t) : env_of(t, o.env);
  auto c = dinf::proofs_equal_model(P, Q, env, t);
  json j{{"periods", {c.periods_p, c.periods_q}}, {"length_semantics", c.length_equal},
         {"homotopy", dinf::to_string(c.homotopy)}};
  std::string text = "t(p) = " + std::to_string(c.periods_p) + ", t(q) = " + std::to_string(c.periods_q) +
                     "\nlength semantics: " + (c.length_equal ? "equal" : "different") +
                     "\nhomotopy:         " + dinf::to_string(c.homotopy) + "\n";
  return emit(o, j, text);
}

int verify_cmd(const Options& o) {
  auto results = dinf::acceptance::run_all({o.data_dir, o.seed});
  bool ok = true;
  json j = json::array();
  std::string text;
  for (const auto& c : results) {
    ok = ok && c.pass;
    j.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    text += dinf::acceptance::line(c) + "\n";
  }
  return emit(o, j, text, ok);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite D-infinity toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", o.output, "Write JSON to a file");

  auto add_tower_opts = [&](CLI::App* c) {
    c->add_option("--k", o.k, "Size of the base flat domain");
    c->add_option("--N,-N", o.N, "Truncation level");
    c->add_option("--tower", o.tower_file, "Tower JSON");
  };
  std::map<CLI::App*, std::pair<std::string, std::string>> leaf;  // subcommand -> (group, verb)

  auto* poset = app.add_subcommand("poset", "Posets and Scott opens")->require_subcommand(1);
  for (const char* v : {"check", "opens", "hasse"}) {
    auto* c = poset->add_subcommand(v);
    c->add_option("file", o.file, "Poset JSON")->required()->check(CLI::ExistingFile);
    leaf[c] = {"poset", v};
  }
  auto* tower = app.add_subcommand("tower", "Projective tower of function spaces")->require_subcommand(1);
  {
    auto* b = tower->add_subcommand("build");
    add_tower_opts(b);
    leaf[b] = {"tower", "build"};
    auto* i = tower->add_subcommand("inspect");
    i->add_option("file", o.file, "Tower JSON")->required()->check(CLI::ExistingFile);
    leaf[i] = {"tower", "inspect"};
  }
  auto* lambda = app.add_subcommand("lambda", "Terms and the model")->require_subcommand(1);
  {
    auto* e = lambda->add_subcommand("eval");
    e->add_option("term", o.term)->required();
    e->add_option("--env", o.env, "x=label bindings");
    add_tower_opts(e);
    leaf[e] = {"lambda", "eval"};
    auto* n = lambda->add_subcommand("normalize");
    n->add_option("term", o.term)->required();
    n->add_option("--fuel", o.fuel);
    leaf[n] = {"lambda", "normalize"};
    auto* c = lambda->add_subcommand("clauses");
    c->add_option("--predicate", o.predicate, "strict | h | levelN");
    c->add_option("--budget", o.budget, "Assignments per term");
    add_tower_opts(c);
    leaf[c] = {"lambda", "clauses"};
  }
  auto* homotopy = app.add_subcommand("homotopy", "Homotopy invariants of finite spaces")->require_subcommand(1);
  for (const char* v : {"pi0", "pi1", "contractible"}) {
    auto* c = homotopy->add_subcommand(v);
    c->add_option("file", o.file, "Poset JSON")->required()->check(CLI::ExistingFile);
    leaf[c] = {"homotopy", v};
  }
  auto* groupoid = app.add_subcommand("groupoid", "Cell groupoids")->require_subcommand(1);
  for (const char* v : {"build", "verify"}) {
    auto* c = groupoid->add_subcommand(v);
    c->add_option("--space", o.space, "Poset JSON")->required()->check(CLI::ExistingFile);
    c->add_option("--levels", o.levels, "Truncation")->check(CLI::Range(1, 4));
    if (std::string(v) == "build") c->add_flag("--dot", o.dot, "Globular diagram as DOT");
    leaf[c] = {"groupoid", v};
  }
  {
    auto* c = groupoid->add_subcommand("iso");
    add_tower_opts(c);
    leaf[c] = {"groupoid", "iso"};
  }
  auto* proof = app.add_subcommand("proof", "Conversion proofs as paths")->require_subcommand(1);
  {
    auto* m = proof->add_subcommand("make");
    m->add_option("term", o.term);
    m->add_option("--steps", o.steps, "Stop after this many steps");
    m->add_flag("--corpus", o.corpus, "Write the built-in proof corpus");
    leaf[m] = {"proof", "make"};
    auto* c = proof->add_subcommand("compare");
    c->add_option("P", o.file)->required()->check(CLI::ExistingFile);
    c->add_option("Q", o.file2)->required()->check(CLI::ExistingFile);
    c->add_option("--env", o.env, "x=label bindings");
    add_tower_opts(c);
    leaf[c] = {"proof", "compare"};
  }
  auto* verify = app.add_subcommand("verify", "Acceptance suite")->require_subcommand(1);
  {
    auto* a = verify->add_subcommand("all");
    a->add_option("--data", o.data_dir, "Data directory");
    a->add_option("--seed", o.seed, "Seed for random posets and concatenations");
    leaf[a] = {"verify", "all"};
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    for (const auto& [cmd, name] : leaf) {
      if (!cmd->parsed()) continue;
      const auto& [group, verb] = name;
      if (group == "proof" && verb == "make" && !o.corpus && o.term.empty())
        throw CLI::ValidationError("proof make", "give a term or --corpus");
      if (group == "poset") return poset_cmd(verb, o);
      if (group == "tower") return tower_cmd(verb, o);
      if (group == "lambda") return lambda_cmd(verb, o);
      if (group == "homotopy") return homotopy_cmd(verb, o);
      if (group == "groupoid") return groupoid_cmd(verb, o);
      if (group == "proof") return proof_cmd(verb, o);
      if (group == "verify") return verify_cmd(o);
    }
  } catch (const CLI::Error& e) {
    std::cerr << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const dinf::Error& e) {
    std::cerr << json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}
