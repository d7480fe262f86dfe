#ifndef DINF_ORDER_HPP
#define DINF_ORDER_HPP

// Finite posets, c.p.o. certification, Scott topology and Scott continuity.
//
// Elements are addressed by dense indices; labels are only used at the
// boundary (construction, JSON, DOT).  Subsets of small carriers are bit
// masks, which caps the subset-enumerating operations at 63 elements.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dinf/error.hpp"

namespace dinf {

using Mask = std::uint64_t;
inline constexpr std::size_t kMaxMaskElements = 63;

struct Limits {
  /// Largest carrier for which directed subsets are enumerated exhaustively.
  std::size_t exhaustive_elements = 16;
  /// Largest carrier accepted by function_space.
  std::size_t function_space = 20000;
};

inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline bool has(Mask m, std::size_t i) { return (m >> i) & 1U; }

inline std::vector<std::size_t> members(Mask m) {
  std::vector<std::size_t> out;
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

inline Mask to_mask(std::span<const std::size_t> xs) {
  Mask m = 0;
  for (auto x : xs) m |= bit(x);
  return m;
}

class Poset {
 public:
  Poset() = default;

  /// Builds a poset from labels and (a, b) pairs meaning a ⊑ b.  The
  /// reflexive closure is added; antisymmetry and transitivity are checked.
  static Poset certify(std::vector<std::string> elements,
                       const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
    Poset p(std::move(elements));
    const auto n = p.size();
    p.leq_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = true;
    for (const auto& [a, b] : leq_pairs) p.leq_[p.index_of(a) * n + p.index_of(b)] = true;
    p.check_partial_order();
    p.build_masks();
    return p;
  }

  /// Same as certify() but from a dense row-major relation matrix.
  static Poset certify_matrix(std::vector<std::string> labels, std::vector<bool> leq) {
    Poset p(std::move(labels));
    const auto n = p.size();
    if (leq.size() != n * n) throw FormatError("relation matrix has wrong size");
    p.leq_ = std::move(leq);
    for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = true;
    p.check_partial_order();
    p.build_masks();
    return p;
  }

  /// Trusted constructor for relations that are partial orders by
  /// construction (pointwise orders of function spaces).
  static Poset by_construction(std::vector<std::string> labels, std::vector<bool> leq) {
    Poset p(std::move(labels));
    p.leq_ = std::move(leq);
    p.build_masks();
    return p;
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(const std::string& label) const {
    auto i = find(label);
    if (!i) throw UnknownElement(label);
    return *i;
  }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
  bool lt(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  bool maskable() const { return size() <= kMaxMaskElements; }
  Mask full_mask() const { return size() == 64 ? ~Mask{0} : bit(size()) - 1; }
  /// Up-set ↑a as a mask (carrier must be maskable).
  Mask up(std::size_t a) const { return up_.at(a); }
  Mask down(std::size_t a) const { return down_.at(a); }

  std::optional<std::size_t> least() const {
    for (std::size_t i = 0; i < size(); ++i) {
      bool all = true;
      for (std::size_t j = 0; j < size() && all; ++j) all = leq(i, j);
      if (all) return i;
    }
    return std::nullopt;
  }

  /// Pairs (a, b) with a ⊏ b and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b) {
        if (!lt(a, b)) continue;
        bool direct = true;
        for (std::size_t c = 0; c < size() && direct; ++c) direct = !(lt(a, c) && lt(c, b));
        if (direct) out.emplace_back(a, b);
      }
    return out;
  }

  friend bool operator==(const Poset& x, const Poset& y) {
    return x.labels_ == y.labels_ && x.leq_ == y.leq_;
  }

 private:
  explicit Poset(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) throw FormatError("element labels must be non-empty");
      if (!index_.emplace(labels_[i], i).second) throw DuplicateElement(labels_[i]);
    }
  }

  void check_partial_order() const {
    const auto n = size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (leq(a, b) && leq(b, a)) throw AntisymmetryViolation(labels_[a], labels_[b]);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!leq(a, b)) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (leq(b, c) && !leq(a, c))
            throw TransitivityViolation(labels_[a], labels_[b], labels_[c]);
      }
  }

  void build_masks() {
    if (!maskable()) return;
    up_.assign(size(), 0);
    down_.assign(size(), 0);
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b)
        if (leq(a, b)) {
          up_[a] |= bit(b);
          down_[b] |= bit(a);
        }
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<bool> leq_;
  std::vector<Mask> up_, down_;
};

// ---------------------------------------------------------------------------
// Directed sets and least upper bounds

inline bool is_directed(const Poset& p, Mask x) {
  if (x == 0) return false;
  for (auto a : members(x))
    for (auto b : members(x))
      if ((p.up(a) & p.up(b) & x) == 0) return false;
  return true;
}

inline bool is_directed(const Poset& p, std::span<const std::size_t> subset) {
  if (subset.empty()) return false;
  for (auto a : subset)
    if (a >= p.size()) throw UnknownElement(std::to_string(a));
  for (auto a : subset)
    for (auto b : subset) {
      bool bounded = false;
      for (auto c : subset) bounded = bounded || (p.leq(a, c) && p.leq(b, c));
      if (!bounded) return false;
    }
  return true;
}

/// Least upper bound; the empty subset yields the least element, if any.
inline std::optional<std::size_t> lub(const Poset& p, std::span<const std::size_t> subset) {
  for (auto a : subset)
    if (a >= p.size()) throw UnknownElement(std::to_string(a));
  std::vector<std::size_t> bounds;
  for (std::size_t u = 0; u < p.size(); ++u)
    if (std::all_of(subset.begin(), subset.end(), [&](auto a) { return p.leq(a, u); }))
      bounds.push_back(u);
  for (auto u : bounds)
    if (std::all_of(bounds.begin(), bounds.end(), [&](auto v) { return p.leq(u, v); })) return u;
  return std::nullopt;
}

inline std::optional<std::size_t> lub(const Poset& p, Mask x) {
  auto xs = members(x);
  return lub(p, std::span<const std::size_t>(xs));
}

struct DirectedSubset {
  Mask elements = 0;
  std::optional<std::size_t> sup;
};

/// Every directed subset of the carrier, found by exhaustive search.
inline std::vector<DirectedSubset> directed_subsets(const Poset& p, const Limits& limits = {}) {
  if (p.size() > limits.exhaustive_elements || !p.maskable())
    throw SizeLimitExceeded(p.size(), "directed subset enumeration");
  std::vector<DirectedSubset> out;
  const Mask end = bit(p.size());
  for (Mask x = 1; x < end; ++x)
    if (is_directed(p, x)) out.push_back({x, lub(p, x)});
  return out;
}

// ---------------------------------------------------------------------------
// Complete partial orders

struct CpoCertificate {
  /// True when every directed subset was enumerated and its lub found.
  bool exhaustive = false;
  std::size_t directed_subsets_checked = 0;
  /// Every directed subset contained its own lub (finite-carrier witness).
  bool lub_is_member = true;
};

class Cpo {
 public:
  Cpo() = default;

  static Cpo certify(Poset poset, std::size_t bottom, const Limits& limits = {}) {
    if (bottom >= poset.size()) throw NotACpo("bottom is not an element");
    for (std::size_t x = 0; x < poset.size(); ++x)
      if (!poset.leq(bottom, x))
        throw NotACpo(poset.label(bottom) + " is not below " + poset.label(x));
    CpoCertificate cert;
    if (poset.size() <= limits.exhaustive_elements && poset.maskable()) {
      for (const auto& d : directed_subsets(poset, limits)) {
        if (!d.sup) throw NotACpo("a directed subset has no least upper bound");
        cert.lub_is_member = cert.lub_is_member && has(d.elements, *d.sup);
        ++cert.directed_subsets_checked;
      }
      cert.exhaustive = true;
    }
    // Larger finite carriers: a finite directed set contains an upper bound of
    // itself (induction on its size), which is then its lub.
    return Cpo(std::move(poset), bottom, cert);
  }

  static Cpo certify(Poset poset, const std::string& bottom, const Limits& limits = {}) {
    auto b = poset.index_of(bottom);
    return certify(std::move(poset), b, limits);
  }

  const Poset& poset() const { return poset_; }
  std::size_t bottom() const { return bottom_; }
  std::size_t size() const { return poset_.size(); }
  const CpoCertificate& certificate() const { return cert_; }

 private:
  Cpo(Poset p, std::size_t b, CpoCertificate c) : poset_(std::move(p)), bottom_(b), cert_(c) {}
  Poset poset_;
  std::size_t bottom_ = 0;
  CpoCertificate cert_;
};

/// Flat c.p.o. {⊥, 0, …, k−1} (the numerals truncated to k).
inline Cpo flat_cpo(std::size_t k, const Limits& limits = {}) {
  std::vector<std::string> labels{"bot"};
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(std::to_string(i));
    pairs.emplace_back("bot", std::to_string(i));
  }
  return Cpo::certify(Poset::certify(std::move(labels), pairs), 0, limits);
}

/// Chain 0 ⊑ 1 ⊑ … ⊑ n−1.
inline Cpo chain_cpo(std::size_t n, const Limits& limits = {}) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j) pairs.emplace_back("c" + std::to_string(j), labels.back());
  }
  return Cpo::certify(Poset::certify(std::move(labels), pairs), 0, limits);
}

// ---------------------------------------------------------------------------
// Scott topology

inline bool is_final(const Poset& p, Mask a) {
  for (auto x : members(a))
    if ((p.up(x) & ~a) != 0) return false;
  return true;
}

inline bool is_inaccessible(Mask a, const std::vector<DirectedSubset>& directed) {
  for (const auto& d : directed)
    if (d.sup && has(a, *d.sup) && (d.elements & a) == 0) return false;
  return true;
}

inline bool mask_order(Mask x, Mask y) {
  auto cx = std::popcount(x), cy = std::popcount(y);
  return cx != cy ? cx < cy : x < y;
}

class ScottSpace {
 public:
  ScottSpace() = default;
  ScottSpace(Cpo cpo, std::vector<Mask> opens) : cpo_(std::move(cpo)), opens_(std::move(opens)) {
    std::sort(opens_.begin(), opens_.end(), mask_order);
  }

  const Cpo& cpo() const { return cpo_; }
  const Poset& poset() const { return cpo_.poset(); }
  std::size_t size() const { return cpo_.size(); }
  const std::vector<Mask>& opens() const { return opens_; }
  bool is_open(Mask m) const { return std::binary_search(opens_.begin(), opens_.end(), m, mask_order); }

 private:
  Cpo cpo_;
  std::vector<Mask> opens_;
};

/// Scott opens, enumerated literally: every subset that is final and
/// inaccessible by directed suprema.
inline ScottSpace scott_opens(const Cpo& cpo, const Limits& limits = {}) {
  const auto& p = cpo.poset();
  auto directed = directed_subsets(p, limits);
  std::vector<Mask> opens;
  const Mask end = bit(p.size());
  for (Mask a = 0; a < end; ++a)
    if (is_final(p, a) && is_inaccessible(a, directed)) opens.push_back(a);
  return ScottSpace(cpo, std::move(opens));
}

/// All up-sets, produced as upward closures of arbitrary subsets.
inline std::vector<Mask> upsets(const Poset& p) {
  if (!p.maskable() || p.size() > 24) throw SizeLimitExceeded(p.size(), "up-set enumeration");
  std::vector<Mask> out;
  const Mask end = bit(p.size());
  for (Mask s = 0; s < end; ++s) {
    Mask closure = 0;
    for (auto x : members(s)) closure |= p.up(x);
    out.push_back(closure);
  }
  std::sort(out.begin(), out.end(), mask_order);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Builds the space from up-sets directly; valid for finite carriers once
/// the literal enumeration has been shown to agree (see the test suite).
inline ScottSpace scott_space_from_upsets(const Cpo& cpo) { return ScottSpace(cpo, upsets(cpo.poset())); }

// ---------------------------------------------------------------------------
// Monotone and continuous maps

/// First pair (x, y) with x ⊑ y but f(x) ⋢ f(y), if any.
inline std::optional<std::pair<std::size_t, std::size_t>> monotonicity_violation(
    const Poset& src, const Poset& dst, std::span<const std::size_t> table) {
  if (table.size() != src.size()) throw FormatError("function table does not cover the domain");
  for (auto v : table)
    if (v >= dst.size()) throw UnknownElement(std::to_string(v));
  for (std::size_t x = 0; x < src.size(); ++x)
    for (std::size_t y = 0; y < src.size(); ++y)
      if (src.leq(x, y) && !dst.leq(table[x], table[y])) return std::pair{x, y};
  return std::nullopt;
}

inline bool is_monotone(const Poset& src, const Poset& dst, std::span<const std::size_t> table) {
  return !monotonicity_violation(src, dst, table);
}

class MonotoneFn {
 public:
  static MonotoneFn certify(const Poset& src, const Poset& dst, std::vector<std::size_t> table) {
    if (auto v = monotonicity_violation(src, dst, table)) throw NotMonotone(v->first, v->second);
    return MonotoneFn(std::move(table));
  }
  std::size_t operator()(std::size_t x) const { return table_.at(x); }
  const std::vector<std::size_t>& table() const { return table_; }

 private:
  explicit MonotoneFn(std::vector<std::size_t> t) : table_(std::move(t)) {}
  std::vector<std::size_t> table_;
};

/// f(⊔X) = ⊔f(X) for every directed X ⊆ src, checked literally.
inline bool is_scott_continuous(std::span<const std::size_t> table, const Cpo& src, const Cpo& dst,
                                const Limits& limits = {}) {
  if (table.size() != src.size()) throw FormatError("function table does not cover the domain");
  for (const auto& d : directed_subsets(src.poset(), limits)) {
    std::vector<std::size_t> image;
    for (auto x : members(d.elements)) image.push_back(table[x]);
    auto sup_image = lub(dst.poset(), std::span<const std::size_t>(image));
    if (!d.sup || !sup_image || table[*d.sup] != *sup_image) return false;
  }
  return true;
}

/// [src → dst]: all monotone (= Scott-continuous on finite carriers) maps,
/// in lexicographic order of their tables, ordered pointwise.
struct FunctionSpace {
  Cpo cpo;
  std::vector<std::vector<std::size_t>> tables;
  std::map<std::vector<std::size_t>, std::size_t> index;

  std::optional<std::size_t> find(const std::vector<std::size_t>& table) const {
    auto it = index.find(table);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
  std::size_t size() const { return tables.size(); }
};

inline std::vector<std::vector<std::size_t>> enumerate_monotone_maps(const Poset& src,
                                                                     const Poset& dst,
                                                                     std::size_t limit) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> table(src.size());
  const auto n = src.size();
  // Depth-first in element order, values ascending: output is lexicographic.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(table);
      if (out.size() > limit) throw SizeLimitExceeded(out.size(), "function space");
      return;
    }
    for (std::size_t v = 0; v < dst.size(); ++v) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (src.leq(j, i)) ok = dst.leq(table[j], v);
        if (ok && src.leq(i, j)) ok = dst.leq(v, table[j]);
      }
      if (!ok) continue;
      table[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

inline FunctionSpace function_space(const Cpo& src, const Cpo& dst, const Limits& limits = {}) {
  FunctionSpace fs;
  fs.tables = enumerate_monotone_maps(src.poset(), dst.poset(), limits.function_space);
  const auto m = fs.tables.size();
  const auto n = src.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back("f#" + std::to_string(i));
    fs.index.emplace(fs.tables[i], i);
  }
  std::vector<bool> leq(m * m, false);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      bool below = true;
      for (std::size_t x = 0; x < n && below; ++x)
        below = dst.poset().leq(fs.tables[a][x], fs.tables[b][x]);
      leq[a * m + b] = below;
    }
  std::vector<std::size_t> bottom_table(n, dst.bottom());
  auto bottom = fs.index.at(bottom_table);
  fs.cpo = Cpo::certify(Poset::by_construction(std::move(labels), std::move(leq)), bottom, limits);
  return fs;
}

// ---------------------------------------------------------------------------
// Rendering

inline std::string hasse_dot(const Poset& p, const std::string& name = "poset") {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < p.size(); ++i) out << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

inline std::string format_subset(const Poset& p, Mask m) {
  std::string s = "{";
  bool first = true;
  for (auto x : members(m)) {
    if (!first) s += ",";
    s += p.label(x);
    first = false;
  }
  return s + "}";
}

}  // namespace dinf

#endif
