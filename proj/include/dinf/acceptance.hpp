#ifndef DINF_ACCEPTANCE_HPP
#define DINF_ACCEPTANCE_HPP

// The ten acceptance criteria, each reduced to one pass/fail line.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dinf/corpus.hpp"
#include "dinf/groupoid.hpp"
#include "dinf/homotopy.hpp"
#include "dinf/interpret.hpp"
#include "dinf/io.hpp"
#include "dinf/proof_paths.hpp"
#include "dinf/step_path.hpp"
#include "dinf/tower.hpp"

namespace dinf::acceptance {

struct Criterion {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Config {
  std::string data_dir;
  std::uint32_t seed = 20240601;
};

namespace detail {

inline std::vector<std::pair<std::string, Poset>> shipped_cpos(const Config& cfg) {
  std::vector<std::pair<std::string, Poset>> out;
  for (const char* n : {"nplus2", "L", "two-chain", "pseudo-circle-bottom"})
    out.emplace_back(n, io::poset_from_json(io::read_file(cfg.data_dir + "/posets/" + n + ".json")));
  auto rnd = corpus::random_posets(cfg.seed);
  for (std::size_t i = 0; i < rnd.size(); ++i) out.emplace_back("random-" + std::to_string(i), rnd[i]);
  return out;
}

/// Sizes of D₀ … D_N counted by brute force over every self-map, ordered
/// pointwise; shares nothing with the tower construction.
inline std::vector<std::size_t> brute_force_sizes(std::size_t k, std::size_t depth) {
  const std::size_t m0 = k + 1;
  std::vector<std::vector<bool>> leq(m0, std::vector<bool>(m0, false));
  for (std::size_t i = 0; i < m0; ++i) leq[0][i] = leq[i][i] = true;
  std::vector<std::size_t> sizes{m0};
  for (std::size_t n = 0; n < depth; ++n) {
    const auto m = leq.size();
    std::vector<std::vector<std::size_t>> maps;
    std::vector<std::size_t> f(m, 0);
    while (true) {
      bool mono = true;
      for (std::size_t x = 0; x < m && mono; ++x)
        for (std::size_t y = 0; y < m && mono; ++y)
          if (leq[x][y] && !leq[f[x]][f[y]]) mono = false;
      if (mono) maps.push_back(f);
      std::size_t i = 0;
      while (i < m && ++f[i] == m) f[i++] = 0;
      if (i == m) break;
    }
    std::vector<std::vector<bool>> next(maps.size(), std::vector<bool>(maps.size(), true));
    for (std::size_t a = 0; a < maps.size(); ++a)
      for (std::size_t b = 0; b < maps.size(); ++b)
        for (std::size_t x = 0; x < m; ++x)
          if (!leq[maps[a][x]][maps[b][x]]) next[a][b] = false;
    leq = std::move(next);
    sizes.push_back(maps.size());
  }
  return sizes;
}

inline std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace detail

inline Criterion scott_topology(const Config& cfg) {
  Criterion c{1, "Scott topology: literal enumeration = up-sets, bottom in no proper open", true, ""};
  std::size_t spaces = 0, opens = 0;
  for (const auto& [name, p] : detail::shipped_cpos(cfg)) {
    ++spaces;
    auto cpo = Cpo::certify(p, *p.least());
    auto literal = scott_opens(cpo).opens();
    auto ups = upsets(p);
    std::set<Mask> a(literal.begin(), literal.end()), b(ups.begin(), ups.end());
    opens += a.size();
    if (a != b) {
      c.pass = false;
      c.detail += name + ": enumerations differ; ";
    }
    for (auto o : literal)
      if (o != p.full_mask() && has(o, cpo.bottom())) {
        c.pass = false;
        c.detail += name + ": bottom in proper open " + format_subset(p, o) + "; ";
      }
  }
  c.detail += std::to_string(spaces) + " spaces, " + std::to_string(opens) + " opens";
  return c;
}

inline Criterion tower_sizes() {
  Criterion c{2, "Tower sizes k=1,N=2 -> 2,3,10; k=2,N=1 -> 3,11", true, ""};
  for (auto [k, n, expected] : {std::tuple{1, 2, std::vector<std::size_t>{2, 3, 10}},
                                std::tuple{2, 1, std::vector<std::size_t>{3, 11}}}) {
    auto got = Tower::build(k, n)->sizes();
    auto oracle = detail::brute_force_sizes(k, n);
    c.pass = c.pass && got == expected && oracle == expected;
    c.detail += "k=" + std::to_string(k) + ",N=" + std::to_string(n) + ": tower " + detail::join_sizes(got) +
                " brute-force " + detail::join_sizes(oracle) + "; ";
  }
  return c;
}

inline Criterion projection_pairs() {
  Criterion c{3, "Projection pairs: psi.phi = id, phi.psi <= id", true, ""};
  std::size_t checks = 0;
  for (auto [k, n] : {std::pair{1, 2}, std::pair{2, 1}}) {
    auto t = Tower::build(k, n);
    for (const auto& pc : t->projection_checks()) c.pass = c.pass && pc.ok();
    for (std::size_t j = 0; j < t->depth(); ++j) {
      const auto& lo = t->level(j).cpo.poset();
      const auto& hi = t->level(j + 1).cpo.poset();
      for (std::size_t x = 0; x < lo.size(); ++x, ++checks)
        if (t->psi(j)[t->phi(j)[x]] != x) c.pass = false;
      for (std::size_t y = 0; y < hi.size(); ++y, ++checks)
        if (!hi.leq(t->phi(j)[t->psi(j)[y]], y)) c.pass = false;
    }
  }
  c.detail = std::to_string(checks) + " pointwise checks";
  return c;
}

inline Criterion contractibility(const Config& cfg) {
  Criterion c{4, "Cones: is_cone, trivial pi1, contraction preimages; pseudo-circle free rank 1", true, ""};
  auto spaces = detail::shipped_cpos(cfg);
  spaces.emplace_back("one-point", io::poset_from_json(io::read_file(cfg.data_dir + "/posets/one-point.json")));
  for (const auto& [name, p] : spaces) {
    bool ok = is_cone(p).is_cone && pi1(p).classification == GroupClass::Trivial &&
              verify_contraction_preimage(io::scott_space_of(p)).ok();
    if (!ok) c.detail += name + " failed; ";
    c.pass = c.pass && ok;
  }
  auto circle = pi1(io::poset_from_json(io::read_file(cfg.data_dir + "/posets/pseudo-circle.json")));
  c.pass = c.pass && circle.classification == GroupClass::Free && circle.rank == 1;
  c.detail += std::to_string(spaces.size()) + " c.p.o.s; pseudo-circle pi1 " + circle.summary();
  return c;
}

inline Criterion example_paths(const Config& cfg) {
  Criterion c{5, "Example 2-paths: continuity, faces, products =_h", true, ""};
  auto file = io::read_file(cfg.data_dir + "/paths-L.json");
  auto space = share(io::scott_space_of(io::poset_from_json(file.at("space"))));
  std::map<std::string, StepPath1> one;
  std::map<std::string, StepPath2> two;
  for (const auto& j : file.at("paths")) {
    auto name = j.at("name").get<std::string>();
    if (j.at("dim").get<int>() == 1)
      one.emplace(name, io::path_from_json<1>(j, space));
    else
      two.emplace(name, io::path_from_json<2>(j, space));
  }
  std::size_t continuous = 0;
  for (const auto& [n, p] : one) continuous += check_continuity(p).continuous;
  for (const auto& [n, p] : two) continuous += check_continuity(p).continuous;
  if (continuous != one.size() + two.size()) {
    c.pass = false;
    c.detail += "discontinuous path; ";
  }
  auto to_top = [&](const std::string& a) { return one.at("p^{" + a + "->top}"); };
  auto to_bot = [&](const std::string& a) { return one.at("p^{" + a + "->bot}"); };
  std::size_t faces = 0;
  for (auto [a, b] : {std::pair{"0", "1"}, std::pair{"1", "2"}, std::pair{"0", "2"}}) {
    const auto& p = two.at(std::string("p^{") + a + "=>" + b + "}");
    const auto& q = two.at(std::string("q^{") + a + "=>" + b + "}");
    auto p_top = concat(to_top(a), reverse(to_top(b)));
    auto p_bot = concat(to_bot(a), reverse(to_bot(b)));
    auto q_a = concat(reverse(to_top(a)), to_bot(a));
    auto q_b = concat(reverse(to_top(b)), to_bot(b));
    bool ok = p.face(0, false) == p_top && p.face(0, true) == p_bot && q.face(0, false) == q_a && q.face(0, true) == q_b;
    faces += 4;
    if (!ok) c.detail += std::string("faces of ") + a + "=>" + b + " differ; ";
    c.pass = c.pass && ok;
  }
  auto group = pi1(space->poset());
  try {
    auto p = product(two.at("p^{0=>1}"), two.at("p^{1=>2}"), 0);
    auto q = product(two.at("q^{0=>1}"), two.at("q^{1=>2}"), 1);
    auto vp = homotopic(p, two.at("p^{0=>2}"), group);
    auto vq = homotopic(q, two.at("q^{0=>2}"), group);
    c.pass = c.pass && vp == Verdict::Homotopic && vq == Verdict::Homotopic;
    c.detail += std::to_string(continuous) + " continuous paths, " + std::to_string(faces) +
                " faces; p01*0p12 vs p02: " + to_string(vp) + "; q01*1q12 vs q02: " + to_string(vq);
  } catch (const FaceMismatch& e) {
    c.pass = false;
    c.detail += e.what();
  }
  return c;
}

inline Criterion groupoid_axioms(const Config& cfg) {
  Criterion c{6, "Groupoid axioms (a)-(g) on D(L), D(N+2), D(1-point) at N=3; diagonal pullbacks", true, ""};
  for (const char* n : {"L", "nplus2", "one-point"}) {
    auto D = build_D_groupoid(io::poset_from_json(io::read_file(cfg.data_dir + "/posets/" + n + ".json")), 3);
    auto r = check_strict_axioms(*D->groupoid);
    bool diag = pullbacks_are_diagonal(D->groupoid->globular());
    std::size_t instances = 0;
    for (const auto& [k, v] : r.checked) instances += v;
    c.pass = c.pass && r.ok() && diag;
    c.detail += std::string(n) + ": " + std::to_string(instances) + " instances, " +
                std::to_string(r.violations.size()) + " violations" + (diag ? "" : ", non-diagonal") + "; ";
  }
  return c;
}

inline Criterion iso_F() {
  Criterion c{7, "F : D_inf -> D-cells bijective, homomorphic, order-preserving (k=1,N=2)", true, ""};
  auto r = check_iso_F(Tower::build(1, 2), 2);
  c.pass = r.ok() && r.elements == 10 && r.pairs_checked == 100;
  c.detail = std::to_string(r.elements) + " elements, " + std::to_string(r.sequences) + " sequences, " +
             std::to_string(r.pairs_checked) + " pairs, " + std::to_string(r.homomorphism_failures) +
             " hom failures, " + std::to_string(r.order_failures) + " order failures";
  return c;
}

inline std::string clause_row(const ClauseTable& t) {
  std::string s = t.predicate + ":";
  for (const auto& r : t.clauses) s += " " + r.clause + "=" + std::to_string(r.checked - r.failed) + "/" + std::to_string(r.checked);
  return s;
}

inline Criterion model_clauses() {
  Criterion c{8, "Model clauses: 1,4,5 strict; 2,3,6,ext up to =_h", true, ""};
  auto t = Tower::build(1, 2);
  auto corpus = corpus::model_corpus();
  auto strict = check_model_clauses(t, corpus, strict_equality());
  auto h = check_model_clauses(t, corpus, path_component(t));
  for (const char* k : {"1", "4", "5"}) c.pass = c.pass && strict.clause(k).pass();
  for (const char* k : {"2", "3", "6", "ext"}) c.pass = c.pass && h.clause(k).pass();
  c.detail = clause_row(strict) + " | " + clause_row(h);
  for (std::size_t n : {0, 1}) c.detail += " | report " + clause_row(check_model_clauses(t, corpus, level_bounded(n)));
  return c;
}

inline Criterion proof_semantics(const Config& cfg) {
  Criterion c{9, "Proof paths: length verdicts, all homotopic, period additivity", true, ""};
  auto t = Tower::build(1, 2);
  auto env = corpus::proof_environment(t);
  auto proofs = io::proofs_from_json(io::read_file(cfg.data_dir + "/proofs.json"));
  std::set<std::pair<std::string, std::string>> equations;
  for (const auto& [n, p] : proofs) equations.insert({alpha_key(p.first()), alpha_key(p.last())});
  std::size_t compared = 0;
  for (const auto& [n, p] : proofs)
    for (const auto& [m, q] : proofs) {
      if (!alpha_equal(p.first(), q.first()) || !alpha_equal(p.last(), q.last())) continue;
      auto r = proofs_equal_model(p, q, env, t);
      ++compared;
      if (r.length_equal != (p.length() == q.length()) || r.homotopy != Verdict::Homotopic) {
        c.pass = false;
        c.detail += n + " vs " + m + " disagrees; ";
      }
    }
  std::vector<ConversionProof> pool;
  for (const auto& [n, p] : proofs) {
    pool.push_back(p);
    pool.push_back(proof_inverse(p));
  }
  std::mt19937 rng(cfg.seed);
  std::size_t additive = 0;
  for (int i = 0; i < 20; ++i) {
    const auto& p = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    std::vector<const ConversionProof*> next;
    for (const auto& q : pool)
      if (alpha_equal(p.last(), q.first())) next.push_back(&q);
    const auto& q = *next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
    auto pq = interpret_proof(proof_concat(p, q), env, t);
    auto ip = interpret_proof(p, env, t), iq = interpret_proof(q, env, t);
    if (pq.periods == ip.periods + iq.periods && pq.path.breaks()[0].size() == 2 * pq.periods + 1) ++additive;
  }
  c.pass = c.pass && proofs.size() >= 6 && equations.size() >= 3 && additive == 20;
  c.detail += std::to_string(proofs.size()) + " proofs, " + std::to_string(equations.size()) + " equations, " +
              std::to_string(compared) + " comparisons, additivity " + std::to_string(additive) + "/20";
  return c;
}

inline Criterion beta_level0() {
  Criterion c{10, "Weak beta-soundness at level 0 (k=1,N=2, definable environments)", true, ""};
  auto t = Tower::build(1, 2);
  auto terms = corpus::terms();
  auto defs = definable_elements(t, terms);
  auto r = beta_soundness(t, terms, defs);
  std::size_t asg = 0, bad = 0;
  for (const auto& p : r.pairs) {
    asg += p.assignments;
    bad += p.level0_disagreements;
  }
  c.pass = r.level0_sound();
  auto all = beta_soundness(t, terms, all_elements(t));
  std::size_t bad_all = 0, asg_all = 0;
  std::string witness;
  for (const auto& p : all.pairs) {
    asg_all += p.assignments;
    bad_all += p.level0_disagreements;
    if (p.witness && witness.empty()) witness = p.redex + " -> " + p.reduct + " " + *p.witness;
  }
  c.detail = std::to_string(r.pairs.size()) + " pairs, " + std::to_string(asg) + " assignments over " +
             std::to_string(defs.size()) + " definable elements, " + std::to_string(bad) +
             " disagreements | all-element sweep (reported): " + std::to_string(bad_all) + "/" +
             std::to_string(asg_all) + (witness.empty() ? "" : ", e.g. " + witness);
  return c;
}

inline std::vector<Criterion> run_all(const Config& cfg) {
  std::vector<Criterion> out;
  auto guard = [&](int id, const std::string& name, auto&& f) {
    try {
      out.push_back(f());
    } catch (const std::exception& e) {
      out.push_back({id, name, false, std::string("error: ") + e.what()});
    }
  };
  guard(1, "Scott topology", [&] { return scott_topology(cfg); });
  guard(2, "Tower sizes", [] { return tower_sizes(); });
  guard(3, "Projection pairs", [] { return projection_pairs(); });
  guard(4, "Cones", [&] { return contractibility(cfg); });
  guard(5, "Example 2-paths", [&] { return example_paths(cfg); });
  guard(6, "Groupoid axioms", [&] { return groupoid_axioms(cfg); });
  guard(7, "Isomorphism F", [] { return iso_F(); });
  guard(8, "Model clauses", [] { return model_clauses(); });
  guard(9, "Proof paths", [&] { return proof_semantics(cfg); });
  guard(10, "Weak beta-soundness", [] { return beta_level0(); });
  return out;
}

inline std::string line(const Criterion& c) {
  std::ostringstream s;
  s << "[" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << ". " << c.name << " -- " << c.detail;
  return s.str();
}

}  // namespace dinf::acceptance

#endif
