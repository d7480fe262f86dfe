#ifndef DINF_TEST_ORACLES_HPP
#define DINF_TEST_ORACLES_HPP

// Brute-force reference computations.  These deliberately avoid the
// library's masks, enumerators and caches: plain relation matrices and
// loops over every subset or every table.

#include <cstddef>
#include <set>
#include <vector>

#include "dinf/order.hpp"

namespace oracle {

using Rel = std::vector<std::vector<bool>>;
using Subset = std::vector<bool>;

inline Rel relation(const dinf::Poset& p) {
  Rel r(p.size(), std::vector<bool>(p.size()));
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) r[a][b] = p.leq(a, b);
  return r;
}

inline std::vector<Subset> all_subsets(std::size_t n) {
  std::vector<Subset> out;
  for (unsigned long m = 0; m < (1UL << n); ++m) {
    Subset s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (m >> i) & 1UL;
    out.push_back(s);
  }
  return out;
}

inline bool directed(const Rel& r, const Subset& x) {
  bool any = false;
  for (bool b : x) any = any || b;
  if (!any) return false;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (!x[a] || !x[b]) continue;
      bool found = false;
      for (std::size_t c = 0; c < x.size(); ++c) found = found || (x[c] && r[a][c] && r[b][c]);
      if (!found) return false;
    }
  return true;
}

/// −1 when absent.
inline long sup(const Rel& r, const Subset& x) {
  const auto n = r.size();
  for (std::size_t u = 0; u < n; ++u) {
    bool upper = true;
    for (std::size_t a = 0; a < n; ++a) upper = upper && (!x[a] || r[a][u]);
    if (!upper) continue;
    bool least = true;
    for (std::size_t v = 0; v < n; ++v) {
      bool vu = true;
      for (std::size_t a = 0; a < n; ++a) vu = vu && (!x[a] || r[a][v]);
      if (vu && !r[u][v]) least = false;
    }
    if (least) return static_cast<long>(u);
  }
  return -1;
}

/// Final and inaccessible by directed suprema, straight from the definition.
inline std::set<std::vector<bool>> scott_opens(const Rel& r) {
  const auto n = r.size();
  auto subsets = all_subsets(n);
  std::set<std::vector<bool>> out;
  for (const auto& a : subsets) {
    bool final = true;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (a[x] && r[x][y] && !a[y]) final = false;
    if (!final) continue;
    bool inaccessible = true;
    for (const auto& d : subsets) {
      if (!directed(r, d)) continue;
      auto s = sup(r, d);
      if (s < 0 || !a[static_cast<std::size_t>(s)]) continue;
      bool meets = false;
      for (std::size_t x = 0; x < n; ++x) meets = meets || (d[x] && a[x]);
      if (!meets) inaccessible = false;
    }
    if (inaccessible) out.insert(a);
  }
  return out;
}

inline std::vector<bool> mask_to_subset(dinf::Mask m, std::size_t n) {
  std::vector<bool> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (m >> i) & 1U;
  return s;
}

/// Every self-map table of an n-element set, in odometer order.
inline std::vector<std::vector<std::size_t>> all_tables(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(n, 0);
  while (true) {
    out.push_back(f);
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline bool monotone(const Rel& src, const Rel& dst, const std::vector<std::size_t>& f) {
  for (std::size_t x = 0; x < src.size(); ++x)
    for (std::size_t y = 0; y < src.size(); ++y)
      if (src[x][y] && !dst[f[x]][f[y]]) return false;
  return true;
}

inline std::size_t count_monotone(const Rel& src, const Rel& dst) {
  std::size_t c = 0;
  for (const auto& f : all_tables(src.size(), dst.size())) c += monotone(src, dst, f);
  return c;
}

}  // namespace oracle

#endif
