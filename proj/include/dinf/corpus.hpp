#ifndef DINF_CORPUS_HPP
#define DINF_CORPUS_HPP

// Built-in spaces, terms and conversion proofs used by the tools and tests.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dinf/interpret.hpp"
#include "dinf/lambda.hpp"
#include "dinf/order.hpp"

namespace dinf::corpus {

/// ℕ⁺ₖ: ⊥ below k incomparable numerals.
inline Poset nplus(std::size_t k) { return flat_cpo(k).poset(); }

/// ⊥ ⊑ 0, 1, 2 ⊑ ⊤.
inline Poset lattice_L() {
  std::vector<std::pair<std::string, std::string>> pairs{{"bot", "top"}};
  for (const char* a : {"0", "1", "2"}) {
    pairs.emplace_back("bot", a);
    pairs.emplace_back(a, "top");
  }
  return Poset::certify({"bot", "0", "1", "2", "top"}, pairs);
}

inline Poset two_chain() { return chain_cpo(2).poset(); }

/// a, b ⊑ c, d: four points weakly equivalent to the circle.
inline Poset pseudo_circle() {
  return Poset::certify({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

inline Poset pseudo_circle_with_bottom() {
  return Poset::certify({"bot", "a", "b", "c", "d"}, {{"bot", "a"},
                                                      {"bot", "b"},
                                                      {"bot", "c"},
                                                      {"bot", "d"},
                                                      {"a", "c"},
                                                      {"a", "d"},
                                                      {"b", "c"},
                                                      {"b", "d"}});
}

inline Poset one_point() { return Poset::certify({"*"}, {}); }

/// A poset on 3..max_size points with least element "bot": a random
/// relation on the rest, oriented by index, then closed transitively.
inline Poset random_poset_with_bottom(std::mt19937& rng, std::size_t max_size = 7) {
  std::uniform_int_distribution<std::size_t> size_dist(3, max_size);
  std::bernoulli_distribution edge(0.35);
  const auto n = size_dist(rng);
  std::vector<std::string> labels{"bot"};
  for (std::size_t i = 1; i < n; ++i) labels.push_back("r" + std::to_string(i));
  std::vector<bool> rel(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    rel[i * n + i] = true;
    rel[0 * n + i] = true;
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) rel[i * n + j] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i * n + k] && rel[k * n + j]) rel[i * n + j] = true;
  return Poset::certify_matrix(std::move(labels), std::move(rel));
}

inline std::vector<Poset> random_posets(std::uint32_t seed, std::size_t count = 5) {
  std::mt19937 rng(seed);
  std::vector<Poset> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_poset_with_bottom(rng));
  return out;
}

// ---------------------------------------------------------------------------
// Terms

inline const std::string I = "(\\x.x)";
inline const std::string K = "(\\x y.x)";
inline const std::string S = "(\\x y z.x z (y z))";
inline const std::string Omega = "((\\x.x x) (\\x.x x))";

inline std::vector<std::string> term_texts() {
  return {I,
          K,
          S,
          Omega,
          K + " " + I + " " + Omega,
          "(\\x.x) y",
          "(\\x.x x) y",
          "(\\x y.x) y z",
          "(\\x.x) ((\\y.y) z)",
          S + " " + K + " " + K + " a",
          "\\x.f x",
          "\\x.(\\y.y) x",
          "(\\f x.f (f x)) " + I,
          "(\\x.f x) y",
          "(\\x.x y) (\\z.z)",
          "(\\x.\\y.x y) f"};
}

inline std::vector<TermPtr> terms() {
  std::vector<TermPtr> out;
  for (const auto& s : term_texts()) out.push_back(parse(s));
  return out;
}

inline ModelCorpus model_corpus(std::size_t budget = 100) {
  ModelCorpus c;
  c.terms = terms();
  c.abstraction_pairs = {{"x", parse("(\\y.y) x"), parse("x")},
                         {"x", parse("(\\y.x) z"), parse("x")},
                         {"x", parse(K + " x y"), parse("x")},
                         {"x", parse("f x"), parse("(\\y.f y) x")}};
  c.assignment_budget = budget;
  return c;
}

// ---------------------------------------------------------------------------
// Conversion proofs

struct ProofText {
  std::string name;
  std::vector<std::pair<std::string, std::string>> steps;  // (kind, term)
};

inline ConversionProof build(const ProofText& p) {
  std::vector<ProofStep> steps;
  for (const auto& [kind, term] : p.steps) steps.push_back({parse(term), step_kind_from_string(kind)});
  return ConversionProof::make(std::move(steps));
}

/// Seven proofs over three equations:
///   (\x.x)((\y.y) z) = z,  K a Ω = a,  S K K a = a.
inline std::vector<ProofText> proof_texts() {
  const std::string Ka = "(\\x y.x) a";
  return {
      {"id-outer",
       {{"start", "(\\x.x) ((\\y.y) z)"}, {"beta", "(\\y.y) z"}, {"beta", "z"}}},
      {"id-inner",
       {{"start", "(\\x.x) ((\\y.y) z)"}, {"beta", "(\\x.x) z"}, {"beta", "z"}}},
      {"id-detour",
       {{"start", "(\\x.x) ((\\y.y) z)"},
        {"beta", "(\\y.y) z"},
        {"beta", "z"},
        {"beta-1", "(\\w.w) z"},
        {"beta", "z"}}},
      {"k-omega",
       {{"start", K + " a " + Omega}, {"beta", "(\\y.a) " + Omega}, {"beta", "a"}}},
      {"k-omega-spin",
       {{"start", K + " a " + Omega}, {"beta", K + " a " + Omega}, {"beta", "(\\y.a) " + Omega}, {"beta", "a"}}},
      {"skk-head",
       {{"start", S + " " + K + " " + K + " a"},
        {"beta", "(\\y z." + K + " z (y z)) " + K + " a"},
        {"beta", "(\\z." + K + " z (" + K + " z)) a"},
        {"beta", Ka + " (" + Ka + ")"},
        {"beta", "(\\y.a) (" + Ka + ")"},
        {"beta", "a"}}},
      {"skk-inner",
       {{"start", S + " " + K + " " + K + " a"},
        {"beta", "(\\y z." + K + " z (y z)) " + K + " a"},
        {"beta", "(\\z." + K + " z (" + K + " z)) a"},
        {"beta", Ka + " (" + Ka + ")"},
        {"beta", Ka + " (\\y.a)"},
        {"beta", "(\\y.a) (\\y.a)"},
        {"beta", "a"}}},
  };
}

inline std::vector<std::pair<std::string, ConversionProof>> proofs() {
  std::vector<std::pair<std::string, ConversionProof>> out;
  for (const auto& p : proof_texts()) out.emplace_back(p.name, build(p));
  return out;
}

/// Free variables of the proof corpus bound to the largest λ-definable
/// element; everything else is ⊥.
inline Environment proof_environment(const TowerPtr& tower) {
  auto defs = definable_elements(tower, terms());
  Environment env(tower);
  for (const char* x : {"a", "y", "z"}) env = env.with(x, defs.back());
  return env;
}

}  // namespace dinf::corpus

#endif
