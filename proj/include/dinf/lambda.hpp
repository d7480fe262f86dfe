#ifndef DINF_LAMBDA_HPP
#define DINF_LAMBDA_HPP

// Untyped λ-terms: parsing, printing, α-equivalence, capture-avoiding
// substitution, one-step β-reduction and conversion proofs.

#include <cctype>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dinf/error.hpp"

namespace dinf {

class Term;
using TermPtr = std::shared_ptr<const Term>;

struct Var {
  std::string name;
};
struct App {
  TermPtr fn, arg;
};
struct Lam {
  std::string param;
  TermPtr body;
};

class Term {
 public:
  explicit Term(Var v) : node_(std::move(v)) {}
  explicit Term(App a) : node_(std::move(a)) {}
  explicit Term(Lam l) : node_(std::move(l)) {}

  const Var* as_var() const { return std::get_if<Var>(&node_); }
  const App* as_app() const { return std::get_if<App>(&node_); }
  const Lam* as_lam() const { return std::get_if<Lam>(&node_); }

 private:
  std::variant<Var, App, Lam> node_;
};

inline TermPtr var(std::string name) {
  if (name.empty()) throw FormatError("variable names must be non-empty");
  return std::make_shared<const Term>(Var{std::move(name)});
}
inline TermPtr app(TermPtr f, TermPtr a) {
  return std::make_shared<const Term>(App{std::move(f), std::move(a)});
}
inline TermPtr lam(std::string x, TermPtr body) {
  if (x.empty()) throw FormatError("variable names must be non-empty");
  return std::make_shared<const Term>(Lam{std::move(x), std::move(body)});
}

// ---------------------------------------------------------------------------
// Printing and parsing

namespace detail {
inline void print(const Term& t, std::string& out, bool fn_position, bool arg_position) {
  if (auto v = t.as_var()) {
    out += v->name;
  } else if (auto a = t.as_app()) {
    if (arg_position) out += '(';
    print(*a->fn, out, true, false);
    out += ' ';
    print(*a->arg, out, false, true);
    if (arg_position) out += ')';
  } else {
    auto l = t.as_lam();
    bool paren = fn_position || arg_position;
    if (paren) out += '(';
    out += '\\';
    out += l->param;
    out += ". ";
    print(*l->body, out, false, false);
    if (paren) out += ')';
  }
}
}  // namespace detail

inline std::string to_string(const TermPtr& t) {
  std::string out;
  detail::print(*t, out, false, false);
  return out;
}

namespace detail {
class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  TermPtr parse_all() {
    auto t = parse_term();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError(pos_, "unexpected trailing input");
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_lambda() {
    if (pos_ < s_.size() && s_[pos_] == '\\') return true;
    return s_.substr(pos_, 2) == "\xCE\xBB";  // UTF-8 λ
  }
  void eat_lambda() { pos_ += s_[pos_] == '\\' ? 1 : 2; }
  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }
  std::string ident() {
    skip_ws();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) throw SyntaxError(pos_, "expected identifier");
    auto start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  // term := '\' ident+ '.' term | atom atom* [lambda-term]
  TermPtr parse_term() {
    skip_ws();
    if (at_lambda()) return parse_lambda();
    TermPtr t = parse_atom();
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] == ')') return t;
      if (at_lambda()) return app(t, parse_lambda());
      t = app(t, parse_atom());
    }
  }

  TermPtr parse_lambda() {
    eat_lambda();
    std::vector<std::string> params{ident()};
    for (;;) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '.') break;
      if (pos_ >= s_.size() || !ident_start(s_[pos_])) throw SyntaxError(pos_, "expected '.'");
      params.push_back(ident());
    }
    ++pos_;
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] == ')') throw SyntaxError(pos_, "missing abstraction body");
    auto body = parse_term();
    for (auto it = params.rbegin(); it != params.rend(); ++it) body = lam(*it, body);
    return body;
  }

  TermPtr parse_atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of input");
    if (s_[pos_] == '(') {
      ++pos_;
      auto t = parse_term();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return t;
    }
    return var(ident());
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};
}  // namespace detail

/// `\x y. body` (or `λx. body`); application is left-associative and an
/// abstraction extends as far right as possible.
inline TermPtr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Variables, α-equivalence, substitution

inline void collect_free(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  if (auto v = t->as_var()) {
    if (!bound.count(v->name)) out.insert(v->name);
  } else if (auto a = t->as_app()) {
    collect_free(a->fn, bound, out);
    collect_free(a->arg, bound, out);
  } else {
    auto l = t->as_lam();
    bool fresh = bound.insert(l->param).second;
    collect_free(l->body, bound, out);
    if (fresh) bound.erase(l->param);
  }
}

inline std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

inline void collect_names(const TermPtr& t, std::set<std::string>& out) {
  if (auto v = t->as_var()) {
    out.insert(v->name);
  } else if (auto a = t->as_app()) {
    collect_names(a->fn, out);
    collect_names(a->arg, out);
  } else {
    out.insert(t->as_lam()->param);
    collect_names(t->as_lam()->body, out);
  }
}

/// Nameless rendering: bound variables become de Bruijn indices, free ones
/// keep their names.  Two terms are α-equivalent iff their keys are equal.
inline void debruijn(const TermPtr& t, std::vector<std::string>& scope, std::string& out) {
  if (auto v = t->as_var()) {
    for (std::size_t i = scope.size(); i-- > 0;)
      if (scope[i] == v->name) {
        out += '#';
        out += std::to_string(scope.size() - 1 - i);
        return;
      }
    out += v->name;
  } else if (auto a = t->as_app()) {
    out += '(';
    debruijn(a->fn, scope, out);
    out += ' ';
    debruijn(a->arg, scope, out);
    out += ')';
  } else {
    auto l = t->as_lam();
    out += "\\.";
    scope.push_back(l->param);
    debruijn(l->body, scope, out);
    scope.pop_back();
  }
}

inline std::string alpha_key(const TermPtr& t) {
  std::vector<std::string> scope;
  std::string out;
  debruijn(t, scope, out);
  return out;
}

inline bool alpha_equal(const TermPtr& a, const TermPtr& b) { return alpha_key(a) == alpha_key(b); }

inline std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string name = base;
  do name += '\''; while (avoid.count(name));
  return name;
}

/// [value/x]t, renaming binders that would capture free variables of value.
inline TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& value) {
  if (auto v = t->as_var()) return v->name == x ? value : t;
  if (auto a = t->as_app()) {
    auto f = substitute(a->fn, x, value);
    auto g = substitute(a->arg, x, value);
    if (f == a->fn && g == a->arg) return t;
    return app(f, g);
  }
  auto l = t->as_lam();
  if (l->param == x) return t;
  auto body_free = free_vars(l->body);
  if (!body_free.count(x)) return t;
  auto value_free = free_vars(value);
  if (value_free.count(l->param)) {
    std::set<std::string> avoid = value_free;
    collect_names(l->body, avoid);
    avoid.insert(x);
    auto y = fresh_name(l->param, avoid);
    auto renamed = substitute(l->body, l->param, var(y));
    return lam(y, substitute(renamed, x, value));
  }
  return lam(l->param, substitute(l->body, x, value));
}

// ---------------------------------------------------------------------------
// β-reduction

struct Reduct {
  /// Path to the contracted redex: 'f' = function side, 'a' = argument,
  /// 'b' = abstraction body.
  std::string position;
  TermPtr term;
};

namespace detail {
inline void beta_steps(const TermPtr& t, std::string& pos,
                       const std::function<TermPtr(TermPtr)>& rebuild, std::vector<Reduct>& out) {
  if (auto a = t->as_app()) {
    if (auto l = a->fn->as_lam()) out.push_back({pos, rebuild(substitute(l->body, l->param, a->arg))});
    pos.push_back('f');
    beta_steps(a->fn, pos, [&](TermPtr r) { return rebuild(app(r, a->arg)); }, out);
    pos.back() = 'a';
    beta_steps(a->arg, pos, [&](TermPtr r) { return rebuild(app(a->fn, r)); }, out);
    pos.pop_back();
  } else if (auto l = t->as_lam()) {
    pos.push_back('b');
    beta_steps(l->body, pos, [&](TermPtr r) { return rebuild(lam(l->param, r)); }, out);
    pos.pop_back();
  }
}
}  // namespace detail

/// Every one-step β-reduct, outermost redex first, then left to right.
inline std::vector<Reduct> beta_step(const TermPtr& t) {
  std::vector<Reduct> out;
  std::string pos;
  detail::beta_steps(t, pos, [](TermPtr r) { return r; }, out);
  return out;
}

inline bool beta_reduces_to(const TermPtr& from, const TermPtr& to) {
  for (const auto& r : beta_step(from))
    if (alpha_equal(r.term, to)) return true;
  return false;
}

struct Normalization {
  TermPtr term;
  std::size_t steps = 0;
  bool normal = false;  // false: fuel ran out
};

/// Normal-order reduction with a step budget.
inline Normalization normalize(TermPtr t, std::size_t fuel = 1000) {
  Normalization n{std::move(t), 0, false};
  while (n.steps < fuel) {
    auto rs = beta_step(n.term);
    if (rs.empty()) {
      n.normal = true;
      return n;
    }
    n.term = rs.front().term;
    ++n.steps;
  }
  n.normal = beta_step(n.term).empty();
  return n;
}

// ---------------------------------------------------------------------------
// Conversion proofs

enum class StepKind { Start, BetaForward, BetaBackward, Alpha };

inline std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::Start: return "start";
    case StepKind::BetaForward: return "beta";
    case StepKind::BetaBackward: return "beta-1";
    case StepKind::Alpha: return "alpha";
  }
  return "?";
}

inline StepKind step_kind_from_string(const std::string& s) {
  if (s == "start") return StepKind::Start;
  if (s == "beta" || s == "forward") return StepKind::BetaForward;
  if (s == "beta-1" || s == "backward") return StepKind::BetaBackward;
  if (s == "alpha") return StepKind::Alpha;
  throw FormatError("unknown step kind '" + s + "'");
}

struct ProofStep {
  TermPtr term;
  StepKind kind = StepKind::Start;
};

/// A validated chain M = N₀ =β N₁ =β … =β Nₙ = N.
class ConversionProof {
 public:
  static ConversionProof make(std::vector<ProofStep> steps) {
    if (steps.empty()) throw FormatError("a conversion proof needs at least one term");
    if (steps.front().kind != StepKind::Start) throw InvalidStep(0, "", to_string(steps.front().term));
    for (std::size_t i = 1; i < steps.size(); ++i) {
      const auto& prev = steps[i - 1].term;
      const auto& cur = steps[i].term;
      bool ok = false;
      switch (steps[i].kind) {
        case StepKind::BetaForward: ok = beta_reduces_to(prev, cur); break;
        case StepKind::BetaBackward: ok = beta_reduces_to(cur, prev); break;
        case StepKind::Alpha: ok = alpha_equal(prev, cur); break;
        case StepKind::Start: ok = false; break;
      }
      if (!ok) throw InvalidStep(i, to_string(prev), to_string(cur));
    }
    return ConversionProof(std::move(steps));
  }

  const std::vector<ProofStep>& steps() const { return steps_; }
  const TermPtr& first() const { return steps_.front().term; }
  const TermPtr& last() const { return steps_.back().term; }
  /// Number of time periods t(P): the non-start steps.
  std::size_t length() const { return steps_.size() - 1; }

 private:
  explicit ConversionProof(std::vector<ProofStep> s) : steps_(std::move(s)) {}
  std::vector<ProofStep> steps_;
};

inline ConversionProof proof_inverse(const ConversionProof& p) {
  const auto& s = p.steps();
  std::vector<ProofStep> out;
  out.push_back({s.back().term, StepKind::Start});
  for (std::size_t i = s.size() - 1; i > 0; --i) {
    auto k = s[i].kind;
    if (k == StepKind::BetaForward)
      k = StepKind::BetaBackward;
    else if (k == StepKind::BetaBackward)
      k = StepKind::BetaForward;
    out.push_back({s[i - 1].term, k});
  }
  return ConversionProof::make(std::move(out));
}

inline ConversionProof proof_concat(const ConversionProof& p, const ConversionProof& q) {
  if (!alpha_equal(p.last(), q.first()))
    throw EndpointMismatch("cannot concatenate: " + to_string(p.last()) + " is not " +
                           to_string(q.first()));
  auto steps = p.steps();
  steps.insert(steps.end(), q.steps().begin() + 1, q.steps().end());
  return ConversionProof::make(std::move(steps));
}

}  // namespace dinf

#endif
