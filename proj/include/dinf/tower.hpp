#ifndef DINF_TOWER_HPP
#define DINF_TOWER_HPP

// The function-space tower D₀ = {⊥,0,…,k−1}, Dₙ₊₁ = [Dₙ → Dₙ] with the
// embedding/projection pairs ⟨φₙ, ψₙ⟩, truncated at level N, and the
// truncated D∞ built on top of it.
//
// A truncated element is a compatible sequence (d₀,…,d_N) with
// ψₙ(dₙ₊₁) = dₙ.  It is determined by its top component, which is how
// elements are compared.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dinf/error.hpp"
#include "dinf/order.hpp"

namespace dinf {

struct TowerLevel {
  Cpo cpo;
  /// For n ≥ 1: the table of each element as a map Dₙ₋₁ → Dₙ₋₁.
  std::vector<std::vector<std::size_t>> tables;
  std::map<std::vector<std::size_t>, std::size_t> index;

  std::size_t size() const { return cpo.size(); }
};

struct ProjectionPairCheck {
  std::size_t level = 0;
  bool retraction = true;    // ψₙ∘φₙ = id on Dₙ
  bool deflation = true;     // φₙ∘ψₙ ⊑ id on Dₙ₊₁
  bool phi_monotone = true;
  bool psi_monotone = true;
  bool continuity_literal = false;  // literal Scott-continuity was evaluated
  bool phi_continuous = true;
  bool psi_continuous = true;

  bool ok() const {
    return retraction && deflation && phi_monotone && psi_monotone && phi_continuous &&
           psi_continuous;
  }
};

class Tower {
 public:
  static std::shared_ptr<const Tower> build(std::size_t k, std::size_t depth,
                                            const Limits& limits = {}) {
    if (k < 1) throw FormatError("tower needs k >= 1");
    if (depth < 1) throw LevelOutOfRange("tower needs N >= 1");
    auto t = std::shared_ptr<Tower>(new Tower());
    t->k_ = k;
    t->depth_ = depth;
    t->levels_.push_back({flat_cpo(k, limits), {}, {}});
    for (std::size_t n = 0; n < depth; ++n) {
      const auto& prev = t->levels_.back().cpo;
      FunctionSpace fs;
      try {
        fs = function_space(prev, prev, limits);
      } catch (const SizeLimitExceeded& e) {
        throw SizeLimitExceeded(e.count, "tower level " + std::to_string(n + 1));
      }
      t->levels_.push_back({std::move(fs.cpo), std::move(fs.tables), std::move(fs.index)});
    }
    t->build_projections();
    t->build_element_space(limits);
    return t;
  }

  std::size_t k() const { return k_; }
  /// Truncation level N.
  std::size_t depth() const { return depth_; }
  const TowerLevel& level(std::size_t n) const {
    if (n > depth_) throw LevelOutOfRange("level " + std::to_string(n) + " > N");
    return levels_[n];
  }
  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s;
    for (const auto& l : levels_) s.push_back(l.size());
    return s;
  }

  /// φₙ: Dₙ → Dₙ₊₁ and ψₙ: Dₙ₊₁ → Dₙ as index tables.
  const std::vector<std::size_t>& phi(std::size_t n) const { return phi_.at(n); }
  const std::vector<std::size_t>& psi(std::size_t n) const { return psi_.at(n); }

  /// φ_{n,m} = φₘ₋₁ ∘ … ∘ φₙ.
  std::size_t embed(std::size_t n, std::size_t m, std::size_t d) const {
    check_levels(n, m);
    if (d >= levels_[n].size()) throw UnknownElement(std::to_string(d));
    for (auto j = n; j < m; ++j) d = phi_[j][d];
    return d;
  }
  /// ψ_{m,n} = ψₙ ∘ … ∘ ψₘ₋₁.
  std::size_t project(std::size_t m, std::size_t n, std::size_t d) const {
    check_levels(n, m);
    if (d >= levels_[m].size()) throw UnknownElement(std::to_string(d));
    for (auto j = m; j > n; --j) d = psi_[j - 1][d];
    return d;
  }

  /// Applies an element of Dₙ (n ≥ 1) to an element of Dₙ₋₁.
  std::size_t call(std::size_t n, std::size_t f, std::size_t x) const {
    return level(n).tables.at(f).at(x);
  }

  const std::vector<ProjectionPairCheck>& projection_checks() const { return checks_; }

  /// The carrier of truncated elements (indexed by top component) under the
  /// componentwise order, with its Scott opens.
  const ScottSpace& element_space() const { return *space_; }
  bool has_element_space() const { return space_ != nullptr; }
  const Cpo& element_cpo() const { return element_cpo_; }

 private:
  Tower() = default;

  void check_levels(std::size_t n, std::size_t m) const {
    if (n > m || m > depth_)
      throw LevelOutOfRange("levels " + std::to_string(n) + ".." + std::to_string(m) +
                            " outside 0.." + std::to_string(depth_));
  }

  void build_projections() {
    const auto& d0 = levels_[0];
    const auto& d1 = levels_[1];
    // φ₀(d) = λa.d, ψ₀(g) = g(⊥₀)
    std::vector<std::size_t> phi0, psi0;
    for (std::size_t d = 0; d < d0.size(); ++d)
      phi0.push_back(lookup(1, std::vector<std::size_t>(d0.size(), d)));
    for (std::size_t g = 0; g < d1.size(); ++g) psi0.push_back(d1.tables[g][d0.cpo.bottom()]);
    phi_.push_back(std::move(phi0));
    psi_.push_back(std::move(psi0));
    // φₙ₊₁(d) = φₙ ∘ d ∘ ψₙ, ψₙ₊₁(g) = ψₙ ∘ g ∘ φₙ
    for (std::size_t n = 0; n + 1 < depth_; ++n) {
      const auto& up = levels_[n + 1];
      const auto& up2 = levels_[n + 2];
      std::vector<std::size_t> phin, psin;
      for (std::size_t d = 0; d < up.size(); ++d) {
        std::vector<std::size_t> table(up.size());
        for (std::size_t x = 0; x < up.size(); ++x) table[x] = phi_[n][up.tables[d][psi_[n][x]]];
        phin.push_back(lookup(n + 2, table));
      }
      for (std::size_t g = 0; g < up2.size(); ++g) {
        std::vector<std::size_t> table(levels_[n].size());
        for (std::size_t x = 0; x < table.size(); ++x) table[x] = psi_[n][up2.tables[g][phi_[n][x]]];
        psin.push_back(lookup(n + 1, table));
      }
      phi_.push_back(std::move(phin));
      psi_.push_back(std::move(psin));
    }
    for (std::size_t n = 0; n < depth_; ++n) checks_.push_back(check_pair(n));
  }

  std::size_t lookup(std::size_t level, const std::vector<std::size_t>& table) const {
    auto it = levels_[level].index.find(table);
    if (it == levels_[level].index.end())
      throw NotMonotone(0, 0);  // recursion left the continuous maps: a bug
    return it->second;
  }

  ProjectionPairCheck check_pair(std::size_t n) const {
    ProjectionPairCheck c;
    c.level = n;
    const auto& lo = levels_[n].cpo;
    const auto& hi = levels_[n + 1].cpo;
    for (std::size_t d = 0; d < lo.size(); ++d) c.retraction = c.retraction && psi_[n][phi_[n][d]] == d;
    for (std::size_t g = 0; g < hi.size(); ++g)
      c.deflation = c.deflation && hi.poset().leq(phi_[n][psi_[n][g]], g);
    c.phi_monotone = is_monotone(lo.poset(), hi.poset(), phi_[n]);
    c.psi_monotone = is_monotone(hi.poset(), lo.poset(), psi_[n]);
    Limits small;
    if (hi.size() <= small.exhaustive_elements) {
      c.continuity_literal = true;
      c.phi_continuous = is_scott_continuous(phi_[n], lo, hi);
      c.psi_continuous = is_scott_continuous(psi_[n], hi, lo);
    }
    return c;
  }

  void build_element_space(const Limits& limits) {
    // Componentwise order on compatible sequences, computed literally from
    // every component rather than assumed to coincide with the top order.
    const auto& top = levels_[depth_];
    const auto m = top.size();
    std::vector<std::vector<std::size_t>> comps(m);
    for (std::size_t d = 0; d < m; ++d)
      for (std::size_t n = 0; n <= depth_; ++n) comps[d].push_back(project(depth_, n, d));
    std::vector<bool> leq(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        bool below = true;
        for (std::size_t n = 0; n <= depth_ && below; ++n)
          below = levels_[n].cpo.poset().leq(comps[a][n], comps[b][n]);
        leq[a * m + b] = below;
      }
    element_cpo_ = Cpo::certify(Poset::by_construction(top.cpo.poset().labels(), std::move(leq)),
                                top.cpo.bottom(), limits);
    if (m <= limits.exhaustive_elements)
      space_ = std::make_shared<const ScottSpace>(scott_opens(element_cpo_, limits));
    else if (m <= 20)
      space_ = std::make_shared<const ScottSpace>(scott_space_from_upsets(element_cpo_));
  }

  std::size_t k_ = 1;
  std::size_t depth_ = 1;
  std::vector<TowerLevel> levels_;
  std::vector<std::vector<std::size_t>> phi_, psi_;
  std::vector<ProjectionPairCheck> checks_;
  Cpo element_cpo_;
  std::shared_ptr<const ScottSpace> space_;
};

using TowerPtr = std::shared_ptr<const Tower>;

class TowerElement {
 public:
  TowerElement() = default;

  /// The compatible sequence whose top component is `top` ∈ D_N.
  static TowerElement from_top(TowerPtr tower, std::size_t top) {
    const auto n = tower->depth();
    if (top >= tower->level(n).size()) throw UnknownElement(std::to_string(top));
    TowerElement e;
    e.components_.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) e.components_[j] = tower->project(n, j, top);
    e.tower_ = std::move(tower);
    return e;
  }

  static TowerElement bottom(TowerPtr tower) {
    auto b = tower->level(tower->depth()).cpo.bottom();
    return from_top(std::move(tower), b);
  }

  const TowerPtr& tower() const { return tower_; }
  std::size_t top() const { return components_.back(); }
  std::size_t component(std::size_t n) const { return components_.at(n); }
  const std::vector<std::size_t>& components() const { return components_; }

  /// ψₙ(dₙ₊₁) = dₙ for every n < N.
  bool compatible() const {
    for (std::size_t n = 0; n + 1 < components_.size(); ++n)
      if (tower_->psi(n)[components_[n + 1]] != components_[n]) return false;
    return true;
  }

  /// Components agree at every level ≤ n.
  bool agrees_through(const TowerElement& other, std::size_t n) const {
    for (std::size_t j = 0; j <= n && j < components_.size(); ++j)
      if (components_[j] != other.components_.at(j)) return false;
    return true;
  }

  std::string label() const { return tower_->level(tower_->depth()).cpo.poset().label(top()); }

  friend bool operator==(const TowerElement& a, const TowerElement& b) {
    return a.tower_ == b.tower_ && a.top() == b.top();
  }
  friend bool operator<(const TowerElement& a, const TowerElement& b) { return a.top() < b.top(); }

 private:
  TowerPtr tower_;
  std::vector<std::size_t> components_;
};

/// d ⊑ d′ iff dₙ ⊑ d′ₙ at every level.
inline bool leq(const TowerElement& a, const TowerElement& b) {
  const auto& t = *a.tower();
  for (std::size_t n = 0; n <= t.depth(); ++n)
    if (!t.level(n).cpo.poset().leq(a.component(n), b.component(n))) return false;
  return true;
}

inline std::vector<TowerElement> all_elements(const TowerPtr& tower) {
  std::vector<TowerElement> out;
  for (std::size_t d = 0; d < tower->level(tower->depth()).size(); ++d)
    out.push_back(TowerElement::from_top(tower, d));
  return out;
}

inline TowerElement make_element(const TowerPtr& tower, std::size_t top) {
  return TowerElement::from_top(tower, top);
}

/// a • b: the top-level application a_N(b_{N−1}) ∈ D_{N−1}, re-embedded at
/// level N; lower components follow by projection.
inline TowerElement apply(const TowerElement& a, const TowerElement& b) {
  const auto& tower = a.tower();
  if (tower != b.tower()) throw TowerMismatch();
  const auto n = tower->depth();
  const auto x = tower->call(n, a.top(), b.component(n - 1));
  return TowerElement::from_top(tower, tower->embed(n - 1, n, x));
}

using SemanticMap = std::function<TowerElement(const TowerElement&)>;

/// Truncated F⁻¹: realizes a semantic map by its top-level action
/// g(x) = f(φ(x))_{N−1} on D_{N−1}.
inline TowerElement fun_to_elem(const TowerPtr& tower, const SemanticMap& f) {
  const auto n = tower->depth();
  const auto& below = tower->level(n - 1);
  std::vector<std::size_t> g(below.size());
  for (std::size_t x = 0; x < below.size(); ++x) {
    auto arg = TowerElement::from_top(tower, tower->embed(n - 1, n, x));
    g[x] = f(arg).component(n - 1);
  }
  auto it = tower->level(n).index.find(g);
  if (it == tower->level(n).index.end()) throw NonMonotoneRealization();
  return TowerElement::from_top(tower, it->second);
}

/// Truncated F: b ↦ a • b.
inline SemanticMap elem_to_fun(const TowerElement& a) {
  return [a](const TowerElement& b) { return apply(a, b); };
}

}  // namespace dinf

#endif
