#ifndef DINF_PROOF_PATHS_HPP
#define DINF_PROOF_PATHS_HPP

// β-conversion proofs read as paths r₁ ∗ … ∗ rₙ in the tower's element
// space: each rᵢ sits at the common value a and dips to ⊥ mid-segment.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "dinf/error.hpp"
#include "dinf/homotopy.hpp"
#include "dinf/interpret.hpp"
#include "dinf/lambda.hpp"
#include "dinf/step_path.hpp"
#include "dinf/tower.hpp"

namespace dinf {

/// The tower's element space, sharing ownership with the tower.
inline SpacePtr element_space_ptr(const TowerPtr& tower) { return SpacePtr(tower, &tower->element_space()); }

struct SteppedInterpretation {
  ConversionProof proof;
  TowerElement base;
  std::size_t periods = 0;
  StepPath1 path;
};

/// Breakpoints 0, 1/2n, 1/n, …, 1 with ⊥ at every (2i−1)/2n and `a`
/// everywhere else.
inline StepPath1 stepped_path(const TowerPtr& tower, std::size_t a, std::size_t n) {
  auto space = element_space_ptr(tower);
  if (n == 0) return StepPath1::constant(space, a);
  const auto bottom = tower->element_cpo().bottom();
  std::vector<Rational> breaks;
  for (std::size_t j = 0; j <= 2 * n; ++j)
    breaks.push_back(Rational(static_cast<std::int64_t>(j), static_cast<std::int64_t>(2 * n)));
  std::vector<std::size_t> values(2 * breaks.size() - 1, a);
  for (std::size_t i = 1; i <= n; ++i) values[2 * (2 * i - 1)] = bottom;
  return StepPath1::make(space, {breaks}, values);
}

inline SteppedInterpretation interpret_proof(const ConversionProof& proof, const Environment& env,
                                             const TowerPtr& tower) {
  if (env.tower() != tower) throw TowerMismatch();
  Interpreter run(tower);
  const auto& steps = proof.steps();
  const auto a = run(steps.front().term, env);
  for (std::size_t i = 1; i < steps.size(); ++i)
    if (run(steps[i].term, env).component(0) != a.component(0))
      throw InterpretationMismatch(i, to_string(steps[i].term));
  return {proof, a, proof.length(), stepped_path(tower, a.top(), proof.length())};
}

struct ProofComparison {
  std::size_t periods_p = 0;
  std::size_t periods_q = 0;
  bool length_equal = false;  // P =_{D∞} Q read as t(p) = t(q)
  Verdict homotopy = Verdict::Unresolved;
};

inline ProofComparison proofs_equal_model(const ConversionProof& P, const ConversionProof& Q, const Environment& env,
                                          const TowerPtr& tower) {
  if (!alpha_equal(P.first(), Q.first()) || !alpha_equal(P.last(), Q.last()))
    throw EquationMismatch(to_string(P.first()) + " = " + to_string(P.last()) + " against " +
                           to_string(Q.first()) + " = " + to_string(Q.last()));
  auto p = interpret_proof(P, env, tower);
  auto q = interpret_proof(Q, env, tower);
  ProofComparison c;
  c.periods_p = p.periods;
  c.periods_q = q.periods;
  c.length_equal = p.periods == q.periods;
  c.homotopy = homotopic(p.path, q.path, pi1(tower->element_cpo().poset()));
  return c;
}

}  // namespace dinf

#endif
