#ifndef DINF_INTERPRET_HPP
#define DINF_INTERPRET_HPP

// Denotational interpretation of untyped λ-terms in the truncated tower:
//   ⟦x⟧ρ = ρ(x),  ⟦PQ⟧ρ = ⟦P⟧ρ • ⟦Q⟧ρ,  ⟦λx.P⟧ρ = G(d ↦ ⟦P⟧[d/x]ρ)
// with G the truncated F⁻¹.  Also the model-clause checks with pluggable
// equality, the weak β-soundness report and the level-stability report.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dinf/homotopy.hpp"
#include "dinf/lambda.hpp"
#include "dinf/tower.hpp"

namespace dinf {

/// Total assignment of variables to elements; unlisted names map to ⊥.
class Environment {
 public:
  explicit Environment(TowerPtr tower) : tower_(std::move(tower)) {}

  const TowerPtr& tower() const { return tower_; }

  TowerElement operator()(const std::string& x) const {
    auto it = values_.find(x);
    return it == values_.end() ? TowerElement::bottom(tower_) : it->second;
  }

  /// [d/x]ρ
  Environment with(const std::string& x, TowerElement d) const {
    if (d.tower() != tower_) throw TowerMismatch();
    Environment e = *this;
    e.values_[x] = std::move(d);
    return e;
  }

  const std::map<std::string, TowerElement>& bindings() const { return values_; }

  /// Values on the given names, as top components.
  std::vector<std::size_t> restricted(const std::set<std::string>& names) const {
    std::vector<std::size_t> out;
    for (const auto& n : names) out.push_back((*this)(n).top());
    return out;
  }

  std::string describe() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : values_) {
      s += (first ? "" : ", ") + k + ":" + v.label();
      first = false;
    }
    return s + "}";
  }

 private:
  TowerPtr tower_;
  std::map<std::string, TowerElement> values_;
};

class Interpreter {
 public:
  explicit Interpreter(TowerPtr tower) : tower_(std::move(tower)) {}

  const TowerPtr& tower() const { return tower_; }

  TowerElement operator()(const TermPtr& t, const Environment& env) {
    if (env.tower() != tower_) throw TowerMismatch();
    auto fv = free_vars(t);
    auto key = std::pair{alpha_key(t), env.restricted(fv)};
    if (auto it = memo_.find(key); it != memo_.end()) return TowerElement::from_top(tower_, it->second);
    TowerElement result;
    if (auto v = t->as_var()) {
      result = env(v->name);
    } else if (auto a = t->as_app()) {
      result = apply((*this)(a->fn, env), (*this)(a->arg, env));
    } else {
      auto l = t->as_lam();
      result = fun_to_elem(tower_, [&](const TowerElement& d) { return (*this)(l->body, env.with(l->param, d)); });
    }
    memo_.emplace(std::move(key), result.top());
    return result;
  }

  TowerElement operator()(const TermPtr& t) { return (*this)(t, Environment(tower_)); }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  TowerPtr tower_;
  std::map<std::pair<std::string, std::vector<std::size_t>>, std::size_t> memo_;
};

inline TowerElement interpret(const TermPtr& t, const Environment& env) {
  Interpreter run(env.tower());
  return run(t, env);
}

/// Every assignment of `vars` to values drawn from `domain` (⊥ elsewhere),
/// in odometer order, truncated to `budget` entries.
inline std::vector<Environment> assignments(const TowerPtr& tower, const std::set<std::string>& vars,
                                            const std::vector<TowerElement>& domain,
                                            std::size_t budget = 1000) {
  std::vector<std::string> names(vars.begin(), vars.end());
  std::vector<std::size_t> digit(names.size(), 0);
  std::vector<Environment> out;
  while (out.size() < budget) {
    Environment e(tower);
    for (std::size_t i = 0; i < names.size(); ++i) e = e.with(names[i], domain[digit[i]]);
    out.push_back(std::move(e));
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == domain.size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return out;
}

inline std::vector<Environment> assignments(const TowerPtr& tower, const std::set<std::string>& vars,
                                            std::size_t budget = 1000) {
  return assignments(tower, vars, all_elements(tower), budget);
}

/// Denotations of the closed terms together with ⊥, closed under •.
inline std::vector<TowerElement> definable_elements(const TowerPtr& tower, const std::vector<TermPtr>& corpus) {
  Interpreter run(tower);
  std::set<std::size_t> tops{TowerElement::bottom(tower).top()};
  for (const auto& m : corpus)
    if (free_vars(m).empty()) tops.insert(run(m).top());
  for (std::size_t before = 0; before != tops.size();) {
    before = tops.size();
    auto cur = tops;
    for (auto a : cur)
      for (auto b : cur)
        tops.insert(apply(TowerElement::from_top(tower, a), TowerElement::from_top(tower, b)).top());
  }
  std::vector<TowerElement> out;
  for (auto t : tops) out.push_back(TowerElement::from_top(tower, t));
  return out;
}

// ---------------------------------------------------------------------------
// Equality predicates

struct EqualityPredicate {
  std::string name;
  std::function<bool(const TowerElement&, const TowerElement&)> equal;
};

inline EqualityPredicate strict_equality() {
  return {"strict", [](const TowerElement& a, const TowerElement& b) { return a == b; }};
}

/// Agreement of components at levels 0..n.
inline EqualityPredicate level_bounded(std::size_t n) {
  return {"level<=" + std::to_string(n),
          [n](const TowerElement& a, const TowerElement& b) { return a.agrees_through(b, n); }};
}

/// Same path component of the element space: the =_h relation on points.
inline EqualityPredicate path_component(const TowerPtr& tower) {
  auto ids = std::make_shared<std::vector<std::size_t>>(component_ids(tower->element_cpo().poset()));
  return {"path-component",
          [ids](const TowerElement& a, const TowerElement& b) { return (*ids)[a.top()] == (*ids)[b.top()]; }};
}

// ---------------------------------------------------------------------------
// Model clauses

struct ClauseResult {
  std::string clause;  // "1" … "6", "ext"
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<std::string> witness;
  bool pass() const { return failed == 0; }
};

struct ClauseTable {
  std::string predicate;
  std::vector<ClauseResult> clauses;

  const ClauseResult& clause(const std::string& c) const {
    for (const auto& r : clauses)
      if (r.clause == c) return r;
    throw FormatError("no clause " + c);
  }
};

struct ModelCorpus {
  std::vector<TermPtr> terms;
  /// Pairs (P, Q) and a variable x for the ξ-style clause 6.
  std::vector<std::tuple<std::string, TermPtr, TermPtr>> abstraction_pairs;
  std::size_t assignment_budget = 100;
};

namespace detail {

inline void collect_subterms(const TermPtr& t, std::vector<TermPtr>& out) {
  out.push_back(t);
  if (auto a = t->as_app()) {
    collect_subterms(a->fn, out);
    collect_subterms(a->arg, out);
  } else if (auto l = t->as_lam()) {
    collect_subterms(l->body, out);
  }
}

inline void record(ClauseResult& r, bool ok, const std::function<std::string()>& why) {
  ++r.checked;
  if (ok) return;
  ++r.failed;
  if (!r.witness) r.witness = why();
}

}  // namespace detail

/// Evaluates clauses 1–6 and extensionality over every subterm of the corpus
/// and every assignment of its free variables (up to the budget).
inline ClauseTable check_model_clauses(const TowerPtr& tower, const ModelCorpus& corpus,
                                       const EqualityPredicate& eq) {
  Interpreter run(tower);
  auto elements = all_elements(tower);
  ClauseTable table{eq.name, {}};
  for (const char* c : {"1", "2", "3", "4", "5", "6", "ext"}) table.clauses.push_back(ClauseResult{c, 0, 0, std::nullopt});
  auto& c1 = table.clauses[0];
  auto& c2 = table.clauses[1];
  auto& c3 = table.clauses[2];
  auto& c4 = table.clauses[3];
  auto& c5 = table.clauses[4];
  auto& c6 = table.clauses[5];
  auto& cext = table.clauses[6];

  std::vector<TermPtr> subterms;
  std::set<std::string> seen;
  for (const auto& t : corpus.terms) {
    std::vector<TermPtr> all;
    detail::collect_subterms(t, all);
    for (auto& s : all)
      if (seen.insert(to_string(s)).second) subterms.push_back(s);
  }

  for (const auto& m : subterms) {
    auto fv = free_vars(m);
    auto envs = assignments(tower, fv, corpus.assignment_budget);
    const auto text = to_string(m);
    for (const auto& rho : envs) {
      auto value = run(m, rho);
      auto where = [&] { return text + " under " + rho.describe(); };
      if (auto v = m->as_var()) detail::record(c1, value == rho(v->name), where);
      if (auto a = m->as_app())
        detail::record(c2, eq.equal(value, apply(run(a->fn, rho), run(a->arg, rho))), where);
      if (auto l = m->as_lam()) {
        for (const auto& d : elements)
          detail::record(c3, eq.equal(apply(value, d), run(l->body, rho.with(l->param, d))),
                         [&] { return text + " applied to " + d.label() + " under " + rho.describe(); });
        std::set<std::string> avoid;
        collect_names(m, avoid);
        auto y = fresh_name(l->param, avoid);
        auto renamed = lam(y, substitute(l->body, l->param, var(y)));
        detail::record(c5, eq.equal(value, run(renamed, rho)), where);
      }
      // clause 4: perturb a variable outside FV(M)
      std::set<std::string> avoid = fv;
      collect_names(m, avoid);
      auto outside = fresh_name("u", avoid);
      for (const auto& d : {elements.front(), elements.back()})
        detail::record(c4, value == run(m, rho.with(outside, d)), where);
      // extensionality: λx.Mx with x ∉ FV(M)
      auto x = fresh_name("x", avoid);
      detail::record(cext, eq.equal(run(lam(x, app(m, var(x))), rho), value), where);
    }
  }

  for (const auto& [x, p, q] : corpus.abstraction_pairs) {
    auto fv = free_vars(p);
    auto fq = free_vars(q);
    fv.insert(fq.begin(), fq.end());
    fv.erase(x);
    for (const auto& rho : assignments(tower, fv, corpus.assignment_budget)) {
      bool premise = true;
      for (const auto& d : elements)
        premise = premise && eq.equal(run(p, rho.with(x, d)), run(q, rho.with(x, d)));
      bool conclusion = eq.equal(run(lam(x, p), rho), run(lam(x, q), rho));
      detail::record(c6, !premise || conclusion,
                     [&] { return "\\" + x + ". " + to_string(p) + " vs " + to_string(q) + " under " + rho.describe(); });
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Weak β-soundness and level stability

struct BetaPairResult {
  std::string redex;
  std::string reduct;
  std::size_t assignments = 0;
  std::size_t level0_disagreements = 0;
  /// Over all assignments, the highest level through which the two
  /// interpretations always agree (−1 when level 0 already differs).
  long agreed_through = 0;
  std::optional<std::string> witness;
};

struct BetaSoundnessReport {
  std::size_t k = 0, depth = 0;
  std::vector<BetaPairResult> pairs;
  bool level0_sound() const {
    for (const auto& p : pairs)
      if (p.level0_disagreements) return false;
    return true;
  }
};

inline long agreement_level(const TowerElement& a, const TowerElement& b) {
  long n = -1;
  while (static_cast<std::size_t>(n + 1) < a.components().size() &&
         a.component(static_cast<std::size_t>(n + 1)) == b.component(static_cast<std::size_t>(n + 1)))
    ++n;
  return n;
}

/// For every corpus term M and every one-step reduct M′, compares ⟦M⟧ρ and
/// ⟦M′⟧ρ over all assignments of FV(M) into `domain` (within the budget).
inline BetaSoundnessReport beta_soundness(const TowerPtr& tower, const std::vector<TermPtr>& corpus,
                                          const std::vector<TowerElement>& domain, std::size_t budget = 1000) {
  Interpreter run(tower);
  BetaSoundnessReport report{tower->k(), tower->depth(), {}};
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& m : corpus) {
    for (const auto& r : beta_step(m)) {
      if (!seen.insert({alpha_key(m), alpha_key(r.term)}).second) continue;
      BetaPairResult res{to_string(m), to_string(r.term), 0, 0, static_cast<long>(tower->depth()), {}};
      for (const auto& rho : assignments(tower, free_vars(m), domain, budget)) {
        auto a = run(m, rho), b = run(r.term, rho);
        ++res.assignments;
        auto lvl = agreement_level(a, b);
        res.agreed_through = std::min(res.agreed_through, lvl);
        if (lvl < 0) {
          ++res.level0_disagreements;
          if (!res.witness) res.witness = rho.describe() + ": " + a.label() + " vs " + b.label();
        }
      }
      report.pairs.push_back(std::move(res));
    }
  }
  return report;
}

struct StabilityEntry {
  std::string term;
  std::vector<std::size_t> lower;  // components at truncation N
  std::vector<std::size_t> upper;  // components at truncation N+1, levels 0..N
  long agreed_through = -1;
};

struct StabilityReport {
  std::size_t k = 0, depth = 0;
  /// Levels covered by the approximation contract: ≤ N−2 (negative: none).
  long contract_level = 0;
  std::vector<StabilityEntry> entries;
  std::size_t violations() const {
    std::size_t v = 0;
    for (const auto& e : entries)
      if (e.agreed_through < contract_level) ++v;
    return v;
  }
};

/// Closed terms interpreted at truncations N and N+1, compared levelwise.
inline StabilityReport level_stability(const TowerPtr& lower, const TowerPtr& upper,
                                       const std::vector<TermPtr>& corpus) {
  if (lower->k() != upper->k() || upper->depth() != lower->depth() + 1)
    throw LevelOutOfRange("stability compares truncations N and N+1 of one tower family");
  Interpreter lo(lower), hi(upper);
  StabilityReport report{lower->k(), lower->depth(), static_cast<long>(lower->depth()) - 2, {}};
  for (const auto& m : corpus) {
    if (!free_vars(m).empty()) continue;
    auto a = lo(m), b = hi(m);
    StabilityEntry e{to_string(m), a.components(), {}, -1};
    for (std::size_t n = 0; n <= lower->depth(); ++n) e.upper.push_back(b.component(n));
    while (static_cast<std::size_t>(e.agreed_through + 1) <= lower->depth() &&
           e.lower[static_cast<std::size_t>(e.agreed_through + 1)] ==
               e.upper[static_cast<std::size_t>(e.agreed_through + 1)])
      ++e.agreed_through;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace dinf

#endif
