#ifndef DINF_HOMOTOPY_HPP
#define DINF_HOMOTOPY_HPP

// Homotopy oracle for finite spaces, working on the order complex of the
// specialization order: path components, an edge-path presentation of the
// fundamental group with Tietze simplification, cone/contractibility
// certificates and the symbolic check of the contraction H(x,0)=⊥, H(x,t)=x.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dinf/error.hpp"
#include "dinf/order.hpp"
#include "dinf/zigzag.hpp"

namespace dinf {

struct SimplicialComplex {
  std::vector<std::string> vertices;
  /// Maximal simplices, each a sorted list of vertex indices.
  std::vector<std::vector<std::size_t>> facets;

  std::size_t dimension() const {
    std::size_t d = 0;
    for (const auto& f : facets) d = std::max(d, f.size() - 1);
    return d;
  }
};

/// Simplices are the non-empty chains; facets are the maximal chains.
inline SimplicialComplex order_complex(const Poset& p) {
  SimplicialComplex c{p.labels(), {}};
  auto covers = p.covers();
  std::vector<std::vector<std::size_t>> up(p.size());
  std::vector<bool> minimal(p.size(), true);
  for (auto [a, b] : covers) {
    up[a].push_back(b);
    minimal[b] = false;
  }
  std::vector<std::size_t> chain;
  auto rec = [&](auto&& self, std::size_t x) -> void {
    chain.push_back(x);
    if (up[x].empty()) {
      auto f = chain;
      std::sort(f.begin(), f.end());
      c.facets.push_back(std::move(f));
    }
    for (auto y : up[x]) self(self, y);
    chain.pop_back();
  };
  for (std::size_t x = 0; x < p.size(); ++x)
    if (minimal[x]) rec(rec, x);
  std::sort(c.facets.begin(), c.facets.end());
  return c;
}

/// Component index of every point in the comparability graph.
inline std::vector<std::size_t> component_ids(const Poset& p) {
  std::vector<std::size_t> id(p.size(), p.size());
  std::size_t next = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (id[s] != p.size()) continue;
    std::queue<std::size_t> q;
    q.push(s);
    id[s] = next;
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      for (std::size_t y = 0; y < p.size(); ++y)
        if (id[y] == p.size() && p.comparable(x, y)) {
          id[y] = next;
          q.push(y);
        }
    }
    ++next;
  }
  return id;
}

inline std::size_t pi0(const Poset& p) {
  auto ids = component_ids(p);
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

// ---------------------------------------------------------------------------
// Group presentations

/// Letters are ±(generator + 1).
using Word = std::vector<int>;

inline Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

inline Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
}

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::string word_text(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += "*";
      s += generators.at(static_cast<std::size_t>(std::abs(w[i]) - 1));
      if (w[i] < 0) s += "^-1";
    }
    return s;
  }

  /// `⟨g1,...| r1,...⟩`
  std::string text() const {
    std::string s = "\xE2\x9F\xA8";
    for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? "," : "") + generators[i];
    s += " | ";
    for (std::size_t i = 0; i < relators.size(); ++i) s += (i ? "," : "") + word_text(relators[i]);
    return s + "\xE2\x9F\xA9";
  }
};

enum class GroupClass { Trivial, Free, Unresolved };

inline std::string to_string(GroupClass c) {
  switch (c) {
    case GroupClass::Trivial: return "trivial";
    case GroupClass::Free: return "free";
    case GroupClass::Unresolved: return "unresolved";
  }
  return "?";
}

struct FundamentalGroup {
  std::size_t base = 0;
  /// Edge-path presentation: one generator per non-tree edge, one relator
  /// per 2-simplex.
  GroupPresentation raw;
  GroupPresentation simplified;
  GroupClass classification = GroupClass::Unresolved;
  std::size_t rank = 0;
  std::size_t moves = 0;
  /// Raw generator of each non-tree edge (u ⊏ v), keyed by (u, v).
  std::map<std::pair<std::size_t, std::size_t>, int> edge_generator;
  /// Image of every raw generator as a word in the simplified generators.
  std::vector<Word> image;

  std::string summary() const {
    if (classification == GroupClass::Trivial) return "trivial";
    if (classification == GroupClass::Free) return "free rank " + std::to_string(rank);
    return "unresolved";
  }

  /// Edge-path word (raw generators) of a zigzag; tree edges contribute 1.
  Word raw_word(const Zigzag& z) const {
    Word w;
    const auto& pts = z.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      auto u = pts[i], v = pts[i + 1];
      bool upward = u < v;
      auto it = edge_generator.find(upward ? std::pair{u, v} : std::pair{v, u});
      if (it == edge_generator.end()) continue;
      // orientation: generator is the edge traversed from its lower end
      w.push_back(lower_first_.count({u, v}) ? it->second : -it->second);
    }
    return w;
  }

  Word simplify_word(const Word& raw_w) const {
    Word out;
    for (int x : raw_w) {
      const auto& img = image.at(static_cast<std::size_t>(std::abs(x) - 1));
      if (x > 0)
        out.insert(out.end(), img.begin(), img.end());
      else {
        auto inv = inverse(img);
        out.insert(out.end(), inv.begin(), inv.end());
      }
    }
    return free_reduce(out);
  }

  /// Oriented edges (a, b) with a ⊏ b, i.e. traversal from the lower end.
  std::set<std::pair<std::size_t, std::size_t>> lower_first_;
};

namespace detail {

inline std::size_t occurrences(const Word& w, int gen) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [&](int x) { return std::abs(x) == gen; }));
}

inline Word substitute_generator(const Word& w, int gen, const Word& value) {
  Word out;
  auto inv = inverse(value);
  for (int x : w) {
    if (x == gen)
      out.insert(out.end(), value.begin(), value.end());
    else if (x == -gen)
      out.insert(out.end(), inv.begin(), inv.end());
    else
      out.push_back(x);
  }
  return free_reduce(out);
}

}  // namespace detail

/// Tietze simplification: drop trivial relators, eliminate any generator
/// occurring exactly once in some relator.  Deterministic move order: the
/// shortest such relator first, then the smallest generator.
inline void simplify(FundamentalGroup& g, std::size_t move_budget) {
  std::vector<Word> rels = g.raw.relators;
  std::set<int> alive;
  for (std::size_t i = 0; i < g.raw.generators.size(); ++i) alive.insert(static_cast<int>(i + 1));
  g.image.clear();
  for (std::size_t i = 0; i < g.raw.generators.size(); ++i) g.image.push_back({static_cast<int>(i + 1)});

  auto tidy = [&] {
    std::vector<Word> next;
    std::set<Word> seen;
    for (auto& r : rels) {
      auto c = cyclic_reduce(r);
      if (c.empty() || !seen.insert(c).second) continue;
      next.push_back(std::move(c));
    }
    rels = std::move(next);
  };

  tidy();
  g.moves = 0;
  while (g.moves < move_budget) {
    std::optional<std::pair<std::size_t, int>> pick;
    for (std::size_t r = 0; r < rels.size(); ++r)
      for (int gen : alive) {
        if (detail::occurrences(rels[r], gen) != 1) continue;
        if (!pick || rels[r].size() < rels[pick->first].size() ||
            (rels[r].size() == rels[pick->first].size() && gen < pick->second))
          pick = std::pair{r, gen};
      }
    if (!pick) break;
    auto [ri, gen] = *pick;
    Word r = rels[ri];
    auto at = static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(), [&](int x) { return std::abs(x) == gen; }) - r.begin());
    std::rotate(r.begin(), r.begin() + static_cast<long>(at), r.end());
    // r = g^e w  ⇒  g = w⁻¹ (e = +1) or g = w (e = −1)
    Word rest(r.begin() + 1, r.end());
    Word value = r.front() > 0 ? inverse(rest) : rest;
    rels.erase(rels.begin() + static_cast<long>(ri));
    for (auto& other : rels) other = detail::substitute_generator(other, gen, value);
    for (auto& img : g.image) img = detail::substitute_generator(img, gen, value);
    alive.erase(gen);
    ++g.moves;
    tidy();
  }

  // Renumber surviving generators densely.
  std::map<int, int> renumber;
  g.simplified = {};
  for (int gen : alive) {
    renumber[gen] = static_cast<int>(g.simplified.generators.size() + 1);
    g.simplified.generators.push_back(g.raw.generators[static_cast<std::size_t>(gen - 1)]);
  }
  auto remap = [&](const Word& w) {
    Word out;
    for (int x : w) out.push_back(x > 0 ? renumber.at(x) : -renumber.at(-x));
    return out;
  };
  for (const auto& r : rels) g.simplified.relators.push_back(remap(r));
  for (auto& img : g.image) img = remap(img);

  if (alive.empty()) {
    g.classification = GroupClass::Trivial;
  } else if (rels.empty()) {
    g.classification = GroupClass::Free;
    g.rank = alive.size();
  } else {
    g.classification = GroupClass::Unresolved;
  }
}

/// Edge-path presentation of π₁ of the order complex at `base` (default:
/// the least element when there is one, else the first element).
inline FundamentalGroup pi1(const Poset& p, std::optional<std::size_t> base = std::nullopt,
                            std::size_t move_budget = 10000) {
  if (p.size() == 0) throw NotConnected(0);
  auto components = pi0(p);
  if (components != 1) throw NotConnected(components);
  FundamentalGroup g;
  g.base = base ? *base : p.least().value_or(0);
  if (g.base >= p.size()) throw UnknownElement(std::to_string(g.base));

  // BFS spanning tree over the comparability graph, neighbours ascending.
  std::set<std::pair<std::size_t, std::size_t>> tree;
  std::vector<bool> seen(p.size(), false);
  std::queue<std::size_t> q;
  q.push(g.base);
  seen[g.base] = true;
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    for (std::size_t y = 0; y < p.size(); ++y)
      if (!seen[y] && x != y && p.comparable(x, y)) {
        seen[y] = true;
        tree.insert({std::min(x, y), std::max(x, y)});
        q.push(y);
      }
  }

  // letter for the edge traversed from lower u to upper v
  auto letter = [&](std::size_t u, std::size_t v) -> Word {
    auto it = g.edge_generator.find({std::min(u, v), std::max(u, v)});
    if (it == g.edge_generator.end()) return {};
    return {g.lower_first_.count({u, v}) ? it->second : -it->second};
  };

  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (!p.comparable(a, b)) continue;
      auto lo = p.leq(a, b) ? a : b, hi = p.leq(a, b) ? b : a;
      g.lower_first_.insert({lo, hi});
      if (tree.count({a, b})) continue;
      g.raw.generators.push_back("e(" + p.label(lo) + "," + p.label(hi) + ")");
      g.edge_generator[{a, b}] = static_cast<int>(g.raw.generators.size());
    }

  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!p.lt(x, y)) continue;
      for (std::size_t z = 0; z < p.size(); ++z) {
        if (!p.lt(y, z)) continue;
        Word r = letter(x, y);
        auto yz = letter(y, z), zx = letter(z, x);
        r.insert(r.end(), yz.begin(), yz.end());
        r.insert(r.end(), zx.begin(), zx.end());
        if (!r.empty()) g.raw.relators.push_back(std::move(r));
      }
    }
  simplify(g, move_budget);
  return g;
}

// ---------------------------------------------------------------------------
// Contractibility

struct ConeWitness {
  bool is_cone = false;
  std::optional<std::size_t> apex;
};

/// A point comparable to every other point makes the order complex a cone.
inline ConeWitness is_cone(const Poset& p) {
  for (std::size_t a = 0; a < p.size(); ++a) {
    bool all = true;
    for (std::size_t x = 0; x < p.size() && all; ++x) all = p.comparable(a, x);
    if (all) return {true, a};
  }
  return {false, std::nullopt};
}

enum class HigherCertificate { TrivialByContractibility, NotCertified };

/// πₙ for n ≥ 2 is never computed numerically; cones get the contractibility
/// certificate (trivial in every dimension).
struct HomotopyGroupCertificate {
  std::size_t n = 0;
  HigherCertificate kind = HigherCertificate::NotCertified;
  std::optional<std::size_t> apex;
};

inline HomotopyGroupCertificate pi_n_certificate(const Poset& p, std::size_t n) {
  auto cone = is_cone(p);
  if (cone.is_cone) return {n, HigherCertificate::TrivialByContractibility, cone.apex};
  return {n, HigherCertificate::NotCertified, std::nullopt};
}

/// One term of a symbolic preimage: a set of points times a time piece.
enum class TimePiece { AtZero, HalfOpen };  // {0} and (0,1]

struct PreimagePiece {
  Mask points = 0;
  TimePiece time = TimePiece::AtZero;
  friend bool operator==(const PreimagePiece&, const PreimagePiece&) = default;
};

struct ContractionEntry {
  Mask open = 0;
  bool bottom_excluded = false;  // ⊥ ∉ A
  std::vector<PreimagePiece> preimage;
  bool equals_product = false;   // preimage = A × (0,1]
};

struct ContractionReport {
  std::size_t bottom = 0;
  std::vector<ContractionEntry> entries;  // one per proper open
  bool ok() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const auto& e) { return e.bottom_excluded && e.equals_product; });
  }
};

/// For every proper open A, evaluates H⁻¹(A) for H(x,0) = ⊥, H(x,t) = x
/// (t > 0) piece by piece and compares it with A × (0,1].
inline ContractionReport verify_contraction_preimage(const Poset& p, const std::vector<Mask>& opens) {
  auto bottom = p.least();
  if (!bottom) throw NotACpo("space has no least element");
  ContractionReport report;
  report.bottom = *bottom;
  for (auto a : opens) {
    if (a == p.full_mask()) continue;
    ContractionEntry e;
    e.open = a;
    e.bottom_excluded = !has(a, *bottom);
    Mask at_zero = 0, half_open = 0;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (has(a, *bottom)) at_zero |= bit(x);  // H(x,0) = ⊥
      if (has(a, x)) half_open |= bit(x);      // H(x,t) = x
    }
    if (at_zero) e.preimage.push_back({at_zero, TimePiece::AtZero});
    if (half_open) e.preimage.push_back({half_open, TimePiece::HalfOpen});
    std::vector<PreimagePiece> expected;
    if (a) expected.push_back({a, TimePiece::HalfOpen});
    e.equals_product = e.preimage == expected;
    report.entries.push_back(std::move(e));
  }
  return report;
}

inline ContractionReport verify_contraction_preimage(const ScottSpace& s) {
  return verify_contraction_preimage(s.poset(), s.opens());
}

// ---------------------------------------------------------------------------
// Path homotopy decision

enum class Verdict { Homotopic, NotHomotopic, Unresolved };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Homotopic: return "homotopic";
    case Verdict::NotHomotopic: return "not homotopic";
    case Verdict::Unresolved: return "unresolved";
  }
  return "?";
}

/// Decides z1 ≃ z2 rel endpoints via the word z1·z2⁻¹ in the simplified
/// presentation.
inline Verdict zigzag_homotopic(const Zigzag& z1, const Zigzag& z2, const FundamentalGroup& g) {
  if (z1.front() != z2.front() || z1.back() != z2.back())
    throw EndpointMismatch("zigzags do not share endpoints");
  if (g.classification == GroupClass::Trivial) return Verdict::Homotopic;
  auto w = g.raw_word(z1);
  auto w2 = inverse(g.raw_word(z2));
  w.insert(w.end(), w2.begin(), w2.end());
  auto reduced = g.simplify_word(w);
  if (g.classification == GroupClass::Free)
    return reduced.empty() ? Verdict::Homotopic : Verdict::NotHomotopic;
  return reduced.empty() ? Verdict::Homotopic : Verdict::Unresolved;
}

inline Verdict zigzag_homotopic(const Zigzag& z1, const Zigzag& z2, const Poset& space) {
  if (z1.front() != z2.front() || z1.back() != z2.back())
    throw EndpointMismatch("zigzags do not share endpoints");
  return zigzag_homotopic(z1, z2, pi1(space));
}

}  // namespace dinf

#endif
