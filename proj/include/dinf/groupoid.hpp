#ifndef DINF_GROUPOID_HPP
#define DINF_GROUPOID_HPP

// Finite truncations of globular sets and strict ∞-groupoids, the axiom
// checker (a)–(g), and the groupoid 𝔇 of a space whose n-cells are the
// homotopy groups πₙ(D,d), one per point.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dinf/error.hpp"
#include "dinf/homotopy.hpp"
#include "dinf/order.hpp"
#include "dinf/tower.hpp"

namespace dinf {

class GlobularSet {
 public:
  GlobularSet() = default;

  /// cells[n] labels the n-cells; source[n-1], target[n-1] map Cₙ → Cₙ₋₁.
  GlobularSet(std::vector<std::vector<std::string>> cells, std::vector<std::vector<std::size_t>> source,
              std::vector<std::vector<std::size_t>> target)
      : cells_(std::move(cells)), source_(std::move(source)), target_(std::move(target)) {
    if (cells_.empty()) throw FormatError("a globular set needs level 0");
    if (source_.size() + 1 != cells_.size() || target_.size() + 1 != cells_.size())
      throw FormatError("source/target maps needed for every level above 0");
    for (std::size_t n = 1; n < cells_.size(); ++n) {
      if (source_[n - 1].size() != cells_[n].size() || target_[n - 1].size() != cells_[n].size())
        throw IncompleteTable("source/target at level " + std::to_string(n));
      for (std::size_t d = 0; d < cells_[n].size(); ++d)
        if (source_[n - 1][d] >= cells_[n - 1].size() || target_[n - 1][d] >= cells_[n - 1].size())
          throw UnknownElement(cells_[n][d] + " boundary");
    }
  }

  std::size_t depth() const { return cells_.size() - 1; }
  std::size_t size(std::size_t n) const { return cells_.at(n).size(); }
  const std::string& label(std::size_t n, std::size_t d) const { return cells_.at(n).at(d); }

  std::size_t s(std::size_t n, std::size_t d) const { return source_.at(n - 1).at(d); }
  std::size_t t(std::size_t n, std::size_t d) const { return target_.at(n - 1).at(d); }

  /// sᵏ and tᵏ from level n.
  std::size_t s_iter(std::size_t n, std::size_t k, std::size_t d) const {
    for (std::size_t j = 0; j < k; ++j) d = s(n - j, d);
    return d;
  }
  std::size_t t_iter(std::size_t n, std::size_t k, std::size_t d) const {
    for (std::size_t j = 0; j < k; ++j) d = t(n - j, d);
    return d;
  }

 private:
  std::vector<std::vector<std::string>> cells_;
  std::vector<std::vector<std::size_t>> source_, target_;
};

struct AxiomViolation {
  std::string axiom;  // "globular", "a" … "g"
  std::string detail;
};

struct GlobularReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// s∘s = s∘t and t∘s = t∘t on every level ≥ 2.
inline GlobularReport check_globular(const GlobularSet& g) {
  GlobularReport r;
  for (std::size_t n = 2; n <= g.depth(); ++n)
    for (std::size_t d = 0; d < g.size(n); ++d) {
      if (g.s(n - 1, g.s(n, d)) != g.s(n - 1, g.t(n, d)))
        r.violations.push_back({"globular", "s(s(" + g.label(n, d) + ")) != s(t(" + g.label(n, d) + "))"});
      if (g.t(n - 1, g.s(n, d)) != g.t(n - 1, g.t(n, d)))
        r.violations.push_back({"globular", "t(s(" + g.label(n, d) + ")) != t(t(" + g.label(n, d) + "))"});
    }
  return r;
}

/// Dₙ ×_{D_p} Dₙ = {(d′, d) : t^{n−p}(d) = s^{n−p}(d′)}.
inline std::vector<std::pair<std::size_t, std::size_t>> pullback_set(const GlobularSet& g, std::size_t n,
                                                                     std::size_t p) {
  if (!(p < n && n <= g.depth()))
    throw LevelOutOfRange("pullback needs 0 <= p < n <= " + std::to_string(g.depth()));
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t d2 = 0; d2 < g.size(n); ++d2)
    for (std::size_t d = 0; d < g.size(n); ++d)
      if (g.t_iter(n, n - p, d) == g.s_iter(n, n - p, d2)) out.push_back({d2, d});
  return out;
}

class CellGroupoid {
 public:
  using Table = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

  CellGroupoid(GlobularSet g, std::map<std::pair<std::size_t, std::size_t>, Table> compose,
               std::vector<std::vector<std::size_t>> identity)
      : g_(std::move(g)), compose_(std::move(compose)), identity_(std::move(identity)) {
    if (identity_.size() != g_.depth()) throw IncompleteTable("identity maps needed below the top level");
    for (std::size_t n = 0; n < g_.depth(); ++n)
      if (identity_[n].size() != g_.size(n)) throw IncompleteTable("identity at level " + std::to_string(n));
  }

  const GlobularSet& globular() const { return g_; }
  std::size_t depth() const { return g_.depth(); }

  bool in_pullback(std::size_t n, std::size_t p, std::size_t d2, std::size_t d) const {
    return g_.t_iter(n, n - p, d) == g_.s_iter(n, n - p, d2);
  }

  /// d′ ∘ₚ d on level n.
  std::size_t compose(std::size_t n, std::size_t p, std::size_t d2, std::size_t d) const {
    if (!in_pullback(n, p, d2, d))
      throw NonDiagonalPair("(" + g_.label(n, d2) + ", " + g_.label(n, d) + ") is not composable along " +
                            std::to_string(p));
    auto tab = compose_.find({n, p});
    if (tab == compose_.end()) throw IncompleteTable("no composition o" + std::to_string(p) + " on level " + std::to_string(n));
    auto it = tab->second.find({d2, d});
    if (it == tab->second.end())
      throw IncompleteTable("o" + std::to_string(p) + " undefined on (" + g_.label(n, d2) + ", " + g_.label(n, d) + ")");
    return it->second;
  }

  /// 1_d ∈ Cₙ₊₁.
  std::size_t id(std::size_t n, std::size_t d) const { return identity_.at(n).at(d); }

  /// iᵏ from level n.
  std::size_t id_iter(std::size_t n, std::size_t k, std::size_t d) const {
    for (std::size_t j = 0; j < k; ++j) d = id(n + j, d);
    return d;
  }

 private:
  GlobularSet g_;
  std::map<std::pair<std::size_t, std::size_t>, Table> compose_;
  std::vector<std::vector<std::size_t>> identity_;
};

struct AxiomReport {
  std::map<std::string, std::size_t> checked;  // per axiom letter
  std::vector<AxiomViolation> violations;

  bool ok() const { return violations.empty(); }
  bool passes(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return false;
    return true;
  }
};

/// Exhaustive check of the globularity identities and axioms (a)–(g).
inline AxiomReport check_strict_axioms(const CellGroupoid& G) {
  const auto& g = G.globular();
  const auto N = G.depth();
  AxiomReport r;
  for (const char* a : {"globular", "a", "b", "c", "d", "e", "f", "g"}) r.checked[a] = 0;
  auto fail = [&](const std::string& axiom, const std::string& what) { r.violations.push_back({axiom, what}); };
  auto L = [&](std::size_t n, std::size_t d) { return g.label(n, d); };

  for (const auto& v : check_globular(g).violations) r.violations.push_back(v);
  r.checked["globular"] = N >= 2 ? N - 1 : 0;

  // every pullback pair must have a composite
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t p = 0; p < n; ++p)
      for (auto [d2, d] : pullback_set(g, n, p)) (void)G.compose(n, p, d2, d);

  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t p = 0; p < n; ++p) {
      const auto pairs = pullback_set(g, n, p);
      // (a)
      for (auto [d2, d] : pairs) {
        ++r.checked["a"];
        const auto c = G.compose(n, p, d2, d);
        if (p + 1 == n) {
          if (g.s(n, c) != g.s(n, d) || g.t(n, c) != g.t(n, d2))
            fail("a", "boundary of " + L(n, d2) + " o" + std::to_string(p) + " " + L(n, d));
        } else {
          auto ss = std::pair{g.s(n, d2), g.s(n, d)}, tt = std::pair{g.t(n, d2), g.t(n, d)};
          if (!G.in_pullback(n - 1, p, ss.first, ss.second) || !G.in_pullback(n - 1, p, tt.first, tt.second) ||
              g.s(n, c) != G.compose(n - 1, p, ss.first, ss.second) ||
              g.t(n, c) != G.compose(n - 1, p, tt.first, tt.second))
            fail("a", "boundary of " + L(n, d2) + " o" + std::to_string(p) + " " + L(n, d));
        }
      }
      // (c)
      for (auto [d2, d1] : pairs)
        for (auto [e1, d] : pairs) {
          if (e1 != d1) continue;
          ++r.checked["c"];
          auto left = G.compose(n, p, G.compose(n, p, d2, d1), d);
          auto right = G.compose(n, p, d2, G.compose(n, p, d1, d));
          if (left != right) fail("c", "(" + L(n, d2) + ", " + L(n, d1) + ", " + L(n, d) + ")");
        }
      // (d) and (g)
      for (std::size_t d = 0; d < g.size(n); ++d) {
        ++r.checked["d"];
        const auto lu = G.id_iter(p, n - p, g.t_iter(n, n - p, d));
        const auto ru = G.id_iter(p, n - p, g.s_iter(n, n - p, d));
        if (!G.in_pullback(n, p, lu, d) || !G.in_pullback(n, p, d, ru) || G.compose(n, p, lu, d) != d ||
            G.compose(n, p, d, ru) != d)
          fail("d", L(n, d) + " along " + std::to_string(p));
        ++r.checked["g"];
        bool found = false;
        for (std::size_t b = 0; b < g.size(n) && !found; ++b)
          found = g.s(n, b) == g.t(n, d) && g.t(n, b) == g.s(n, d) && G.in_pullback(n, p, b, d) &&
                  G.in_pullback(n, p, d, b) && G.compose(n, p, b, d) == ru && G.compose(n, p, d, b) == lu;
        if (!found) fail("g", "no inverse of " + L(n, d) + " along " + std::to_string(p));
      }
      // (e): q < p
      for (std::size_t q = 0; q < p; ++q)
        for (auto [e2, e] : pairs)
          for (auto [d2, d] : pairs) {
            if (!G.in_pullback(n, q, e2, d2) || !G.in_pullback(n, q, e, d)) continue;
            ++r.checked["e"];
            auto l1 = G.compose(n, p, e2, e), l2 = G.compose(n, p, d2, d);
            auto r1 = G.compose(n, q, e2, d2), r2 = G.compose(n, q, e, d);
            if (!G.in_pullback(n, q, l1, l2) || !G.in_pullback(n, p, r1, r2) ||
                G.compose(n, q, l1, l2) != G.compose(n, p, r1, r2))
              fail("e", "(" + L(n, e2) + ", " + L(n, e) + ", " + L(n, d2) + ", " + L(n, d) + ") at p=" +
                            std::to_string(p) + ", q=" + std::to_string(q));
          }
    }
  // (b)
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t d = 0; d < g.size(n); ++d) {
      ++r.checked["b"];
      auto u = G.id(n, d);
      if (g.s(n + 1, u) != d || g.t(n + 1, u) != d) fail("b", "1_" + L(n, d));
    }
  // (f): 0 ≤ q < p < n ≤ N, pairs of p-cells
  for (std::size_t p = 1; p < N; ++p)
    for (std::size_t q = 0; q < p; ++q)
      for (auto [d2, d] : pullback_set(g, p, q)) {
        ++r.checked["f"];
        auto u2 = G.id(p, d2), u = G.id(p, d);
        if (!G.in_pullback(p + 1, q, u2, u) || G.compose(p + 1, q, u2, u) != G.id(p, G.compose(p, q, d2, d)))
          fail("f", "1_" + L(p, d2) + " o" + std::to_string(q) + " 1_" + L(p, d));
      }
  return r;
}

// ---------------------------------------------------------------------------
// The groupoid 𝔇 of a space

enum class GroupContent { TrivialByContractibility, Unverified };

/// πₙ(D,d) as a symbolic cell: equal iff same point and level.
struct SymbolicPiCell {
  std::size_t point = 0;
  std::size_t level = 0;
  friend bool operator==(const SymbolicPiCell&, const SymbolicPiCell&) = default;
};

struct DGroupoid {
  Poset space;
  std::shared_ptr<const CellGroupoid> groupoid;
  GroupContent content = GroupContent::Unverified;
  TowerPtr tower;  // set when the space is the element space of a tower

  SymbolicPiCell cell(std::size_t level, std::size_t index) const { return {index, level}; }
};

inline std::string pi_label(const Poset& space, std::size_t d, std::size_t n) {
  if (n == 0) return space.label(d);
  return "pi" + std::to_string(n) + "(" + space.label(d) + ")";
}

/// 𝔇ₙ = {πₙ(D,d)}, s = t = πₙ₋₁(D,d), 𝔡 ∘ₚ 𝔡 = 𝔡 on the diagonal,
/// 1_{πₙ(D,d)} = πₙ₊₁(D,d).  Cell index at every level is the point index.
inline std::shared_ptr<const DGroupoid> build_D_groupoid(const Poset& space, std::size_t levels,
                                                         TowerPtr tower = nullptr) {
  if (levels < 1) throw LevelOutOfRange("the groupoid needs N >= 1");
  const auto m = space.size();
  std::vector<std::vector<std::string>> cells(levels + 1);
  std::vector<std::vector<std::size_t>> src, tgt, ident;
  std::vector<std::size_t> same(m);
  for (std::size_t d = 0; d < m; ++d) same[d] = d;
  for (std::size_t n = 0; n <= levels; ++n)
    for (std::size_t d = 0; d < m; ++d) cells[n].push_back(pi_label(space, d, n));
  for (std::size_t n = 1; n <= levels; ++n) {
    src.push_back(same);
    tgt.push_back(same);
    ident.push_back(same);
  }
  GlobularSet g(std::move(cells), std::move(src), std::move(tgt));
  std::map<std::pair<std::size_t, std::size_t>, CellGroupoid::Table> comp;
  for (std::size_t n = 1; n <= levels; ++n)
    for (std::size_t p = 0; p < n; ++p)
      for (auto [d2, d] : pullback_set(g, n, p)) {
        if (d2 != d) throw NonDiagonalPair("pullback of the space groupoid left the diagonal");
        comp[{n, p}][{d, d}] = d;
      }
  auto out = std::make_shared<DGroupoid>();
  out->space = space;
  out->groupoid = std::make_shared<const CellGroupoid>(std::move(g), std::move(comp), std::move(ident));
  out->content = is_cone(space).is_cone ? GroupContent::TrivialByContractibility : GroupContent::Unverified;
  out->tower = std::move(tower);
  return out;
}

/// Every pullback (n,p) of the groupoid is the diagonal.
inline bool pullbacks_are_diagonal(const GlobularSet& g) {
  for (std::size_t n = 1; n <= g.depth(); ++n)
    for (std::size_t p = 0; p < n; ++p) {
      auto pb = pullback_set(g, n, p);
      if (pb.size() != g.size(n)) return false;
      for (auto [a, b] : pb)
        if (a != b) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Cell sequences (truncated 𝔇∞)

class CellSequence {
 public:
  CellSequence(std::shared_ptr<const DGroupoid> owner, std::vector<std::size_t> cells)
      : owner_(std::move(owner)), cells_(std::move(cells)) {}

  const std::shared_ptr<const DGroupoid>& owner() const { return owner_; }
  const std::vector<std::size_t>& cells() const { return cells_; }
  std::size_t cell(std::size_t n) const { return cells_.at(n); }
  std::size_t base() const { return cells_.front(); }

  /// ⟨d, c_d, c_{c_d}, …⟩
  std::string render() const {
    const auto& sp = owner_->space;
    std::string s = "<";
    for (std::size_t n = 0; n < cells_.size(); ++n) {
      if (n) s += ", ";
      std::string cell = sp.label(cells_[n]);
      for (std::size_t j = 0; j < n; ++j) cell = "c_" + (j ? "{" + cell + "}" : cell);
      s += cell;
    }
    return s + ">";
  }

  /// Equality is decided on level 0.
  friend bool operator==(const CellSequence& a, const CellSequence& b) {
    return a.owner_ == b.owner_ && a.cells_.front() == b.cells_.front();
  }

 private:
  std::shared_ptr<const DGroupoid> owner_;
  std::vector<std::size_t> cells_;
};

/// Every (𝔡₀, …, 𝔡_N) with s(𝔡ₙ₊₁) = t(𝔡ₙ₊₁) = 𝔡ₙ, by exhaustive search.
inline std::vector<CellSequence> build_cell_sequences(const std::shared_ptr<const DGroupoid>& D) {
  const auto& g = D->groupoid->globular();
  std::vector<CellSequence> out;
  std::vector<std::size_t> cur;
  std::function<void()> rec = [&] {
    const auto n = cur.size();
    if (n == g.depth() + 1) {
      out.emplace_back(D, cur);
      return;
    }
    for (std::size_t d = 0; d < g.size(n); ++d) {
      if (n > 0 && (g.s(n, d) != cur.back() || g.t(n, d) != cur.back())) continue;
      cur.push_back(d);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

inline CellSequence sequence_of(const std::shared_ptr<const DGroupoid>& D, std::size_t point) {
  return CellSequence(D, std::vector<std::size_t>(D->groupoid->depth() + 1, point));
}

/// Levelwise πₙ(a) • πₙ(b) := πₙ(a • b).
inline CellSequence apply_cells(const CellSequence& a, const CellSequence& b) {
  if (a.owner() != b.owner() || !a.owner()->tower) throw TowerMismatch();
  const auto& tower = a.owner()->tower;
  std::vector<std::size_t> cells;
  for (std::size_t n = 0; n < a.cells().size(); ++n)
    cells.push_back(apply(TowerElement::from_top(tower, a.cell(n)), TowerElement::from_top(tower, b.cell(n))).top());
  return CellSequence(a.owner(), std::move(cells));
}

struct IsoReport {
  std::size_t elements = 0;
  std::size_t sequences = 0;
  bool injective = false;
  bool surjective = false;
  std::size_t pairs_checked = 0;
  std::size_t homomorphism_failures = 0;
  std::size_t order_pairs_checked = 0;
  std::size_t order_failures = 0;
  bool transferred_order_is_cpo = false;
  bool topology_transfers = false;
  bool ok() const {
    return injective && surjective && homomorphism_failures == 0 && order_failures == 0 &&
           transferred_order_is_cpo && topology_transfers && sequences == elements;
  }
};

/// F : d ↦ ⟨π₀(d), π₁(d), …⟩ checked bijective, a •-homomorphism and an
/// order isomorphism, by exhaustion over the truncated tower.
inline IsoReport check_iso_F(const TowerPtr& tower, std::size_t levels) {
  const auto& space = tower->element_cpo().poset();
  auto D = build_D_groupoid(space, levels, tower);
  auto seqs = build_cell_sequences(D);
  auto elements = all_elements(tower);
  IsoReport r;
  r.elements = elements.size();
  r.sequences = seqs.size();

  std::vector<std::optional<std::size_t>> F(elements.size());  // index into seqs
  for (std::size_t i = 0; i < seqs.size(); ++i) F[seqs[i].base()] = F[seqs[i].base()] ? F[seqs[i].base()] : i;
  r.injective = true;
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b)
      if (a != b && F[a] && F[b] && seqs[*F[a]] == seqs[*F[b]]) r.injective = false;
  r.surjective = true;
  for (const auto& s : seqs) r.surjective = r.surjective && F[s.base()].has_value();
  for (auto& f : F) r.injective = r.injective && f.has_value();
  if (!r.injective || !r.surjective) return r;

  for (const auto& a : elements)
    for (const auto& b : elements) {
      ++r.pairs_checked;
      const auto lhs = apply_cells(seqs[*F[a.top()]], seqs[*F[b.top()]]);
      const auto ab = apply(a, b);
      const auto& rhs = seqs[*F[ab.top()]];
      if (!(lhs == rhs) || lhs.cells() != rhs.cells()) ++r.homomorphism_failures;
    }

  // order on sequences: 𝔞 ⊑ 𝔟 iff a ⊑ b, through the level-0 cell
  std::vector<std::string> labels;
  std::vector<bool> leq_matrix(seqs.size() * seqs.size());
  for (const auto& s : seqs) labels.push_back(s.render());
  for (std::size_t i = 0; i < seqs.size(); ++i)
    for (std::size_t j = 0; j < seqs.size(); ++j) {
      const auto& a = elements[seqs[i].base()];
      const auto& b = elements[seqs[j].base()];
      leq_matrix[i * seqs.size() + j] = leq(a, b);
      ++r.order_pairs_checked;
      if (leq(a, b) != space.leq(a.top(), b.top())) ++r.order_failures;
    }
  try {
    auto seq_poset = Poset::certify_matrix(labels, leq_matrix);
    auto bottom = seq_poset.least();
    if (bottom) {
      auto seq_cpo = Cpo::certify(seq_poset, *bottom);
      r.transferred_order_is_cpo = true;
      // Scott opens of the transferred order are the F-images of the opens of D∞
      auto opens = scott_opens(seq_cpo).opens();
      std::set<Mask> image;
      for (auto o : tower->element_space().opens()) {
        Mask m = 0;
        for (std::size_t i = 0; i < seqs.size(); ++i)
          if (has(o, seqs[i].base())) m |= bit(i);
        image.insert(m);
      }
      r.topology_transfers = std::set<Mask>(opens.begin(), opens.end()) == image;
    }
  } catch (const Error&) {
    r.transferred_order_is_cpo = false;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Output

/// Levels as columns; s and t drawn as a pair of arrows into the level below.
inline std::string globular_dot(const GlobularSet& g, const std::string& name = "globular") {
  std::ostringstream s;
  s << "digraph " << name << " {\n  rankdir=RL;\n  node [shape=plaintext];\n";
  for (std::size_t n = 0; n <= g.depth(); ++n) {
    s << "  subgraph cluster_" << n << " { label=\"level " << n << "\";";
    for (std::size_t d = 0; d < g.size(n); ++d) s << " \"" << n << ":" << d << "\" [label=\"" << g.label(n, d) << "\"];";
    s << " }\n";
  }
  for (std::size_t n = 1; n <= g.depth(); ++n)
    for (std::size_t d = 0; d < g.size(n); ++d) {
      s << "  \"" << n << ":" << d << "\" -> \"" << n - 1 << ":" << g.s(n, d) << "\" [label=\"s\"];\n";
      s << "  \"" << n << ":" << d << "\" -> \"" << n - 1 << ":" << g.t(n, d) << "\" [label=\"t\"];\n";
    }
  s << "}\n";
  return s.str();
}

}  // namespace dinf

#endif
