#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "dinf/io.hpp"
#include "dinf/tower.hpp"
#include "oracles.hpp"

using namespace dinf;

namespace {

/// Levels rebuilt from scratch: carriers as raw tables, φ/ψ by the
/// recursion φ₀(d) = λa.d, ψ₀(g) = g(⊥), φₙ₊₁(d) = φₙ∘d∘ψₙ, ψₙ₊₁(g) = ψₙ∘g∘φₙ.
struct Reference {
  std::vector<oracle::Rel> order;
  std::vector<std::vector<std::vector<std::size_t>>> tables;  // tables[n][d], n ≥ 1
  std::vector<std::vector<std::size_t>> phi, psi;

  Reference(std::size_t k, std::size_t depth) {
    oracle::Rel flat(k + 1, std::vector<bool>(k + 1, false));
    for (std::size_t i = 0; i <= k; ++i) flat[0][i] = flat[i][i] = true;
    order.push_back(flat);
    tables.push_back({});
    for (std::size_t n = 0; n < depth; ++n) {
      const auto& r = order.back();
      std::vector<std::vector<std::size_t>> maps;
      for (const auto& f : oracle::all_tables(r.size(), r.size()))
        if (oracle::monotone(r, r, f)) maps.push_back(f);
      oracle::Rel next(maps.size(), std::vector<bool>(maps.size(), true));
      for (std::size_t a = 0; a < maps.size(); ++a)
        for (std::size_t b = 0; b < maps.size(); ++b)
          for (std::size_t x = 0; x < r.size(); ++x)
            if (!r[maps[a][x]][maps[b][x]]) next[a][b] = false;
      order.push_back(next);
      tables.push_back(maps);
    }
    auto find = [&](std::size_t n, const std::vector<std::size_t>& t) {
      for (std::size_t i = 0; i < tables[n].size(); ++i)
        if (tables[n][i] == t) return i;
      ADD_FAILURE() << "table not found";
      return std::size_t{0};
    };
    std::vector<std::size_t> phi0, psi0;
    for (std::size_t d = 0; d <= k; ++d) phi0.push_back(find(1, std::vector<std::size_t>(k + 1, d)));
    for (const auto& g : tables[1]) psi0.push_back(g[0]);
    phi.push_back(phi0);
    psi.push_back(psi0);
    for (std::size_t n = 0; n + 1 < depth; ++n) {
      std::vector<std::size_t> ph, ps;
      for (const auto& d : tables[n + 1]) {
        std::vector<std::size_t> t;
        for (std::size_t x = 0; x < tables[n + 1].size(); ++x) t.push_back(phi[n][d[psi[n][x]]]);
        ph.push_back(find(n + 2, t));
      }
      for (const auto& g : tables[n + 2]) {
        std::vector<std::size_t> t;
        for (std::size_t x = 0; x < order[n].size(); ++x) t.push_back(psi[n][g[phi[n][x]]]);
        ps.push_back(find(n + 1, t));
      }
      phi.push_back(ph);
      psi.push_back(ps);
    }
  }
};

std::size_t identity_at(const TowerPtr& t, std::size_t n) {
  std::vector<std::size_t> id(t->level(n - 1).size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return t->level(n).index.at(id);
}

}  // namespace

TEST(Tower, Sizes) {
  EXPECT_EQ(Tower::build(1, 2)->sizes(), (std::vector<std::size_t>{2, 3, 10}));
  EXPECT_EQ(Tower::build(2, 1)->sizes(), (std::vector<std::size_t>{3, 11}));
  Reference r(1, 2);
  EXPECT_EQ(r.tables[2].size(), 10u);
}

TEST(Tower, ProjectionTablesMatchReference) {
  for (auto [k, n] : {std::pair{1, 2}, std::pair{2, 1}}) {
    auto t = Tower::build(k, n);
    Reference r(k, n);
    ASSERT_EQ(r.tables.size(), t->sizes().size());
    // tower index -> reference index, level by level
    std::vector<std::vector<std::size_t>> tr(t->depth() + 1);
    for (std::size_t d = 0; d < t->level(0).size(); ++d) tr[0].push_back(d);
    for (std::size_t j = 1; j <= t->depth(); ++j) {
      ASSERT_EQ(t->level(j).size(), r.tables[j].size());
      for (std::size_t d = 0; d < t->level(j).size(); ++d) {
        const auto& g = t->level(j).tables[d];
        std::vector<std::size_t> rg(g.size());
        for (std::size_t x = 0; x < g.size(); ++x) rg[tr[j - 1][x]] = tr[j - 1][g[x]];
        std::size_t hit = r.tables[j].size();
        for (std::size_t i = 0; i < r.tables[j].size(); ++i)
          if (r.tables[j][i] == rg) hit = i;
        ASSERT_LT(hit, r.tables[j].size());
        tr[j].push_back(hit);
      }
    }
    for (std::size_t j = 0; j < t->depth(); ++j) {
      for (std::size_t d = 0; d < t->level(j).size(); ++d)
        EXPECT_EQ(tr[j + 1][t->phi(j)[d]], r.phi[j][tr[j][d]]);
      for (std::size_t g = 0; g < t->level(j + 1).size(); ++g)
        EXPECT_EQ(tr[j][t->psi(j)[g]], r.psi[j][tr[j + 1][g]]);
      // order agrees under the translation
      for (std::size_t a = 0; a < t->level(j + 1).size(); ++a)
        for (std::size_t b = 0; b < t->level(j + 1).size(); ++b)
          EXPECT_EQ(t->level(j + 1).cpo.poset().leq(a, b), r.order[j + 1][tr[j + 1][a]][tr[j + 1][b]]);
    }
    for (const auto& c : t->projection_checks()) {
      EXPECT_TRUE(c.ok());
      EXPECT_TRUE(c.continuity_literal);
    }
  }
}

TEST(Tower, EmbedProject) {
  auto t = Tower::build(1, 1);
  for (std::size_t d = 0; d < 2; ++d) EXPECT_EQ(t->psi(0)[t->phi(0)[d]], d);
  auto t2 = Tower::build(1, 2);
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t d = 0; d < t2->level(n).size(); ++d) {
      EXPECT_EQ(t2->embed(n, n, d), d);
      for (std::size_t m = n; m <= 2; ++m) EXPECT_EQ(t2->project(m, n, t2->embed(n, m, d)), d);
    }
  EXPECT_EQ(t2->project(1, 0, t2->embed(0, 1, 1)), 1u);
  EXPECT_EQ(t2->project(1, 0, identity_at(t2, 1)), t2->level(0).cpo.bottom());
  EXPECT_THROW(t2->embed(2, 1, 0), LevelOutOfRange);
  EXPECT_THROW(t2->project(3, 0, 0), LevelOutOfRange);
}

TEST(TowerElement, FromTop) {
  auto t = Tower::build(1, 2);
  auto b = TowerElement::bottom(t);
  for (auto c : b.components()) EXPECT_EQ(c, 0u);
  auto e = TowerElement::from_top(t, identity_at(t, 2));
  EXPECT_EQ(e.component(1), identity_at(t, 1));
  EXPECT_EQ(e.component(0), t->level(0).cpo.bottom());
  for (const auto& x : all_elements(t)) EXPECT_TRUE(x.compatible());
}

TEST(Apply, BottomAndIdentity) {
  auto t = Tower::build(1, 2);
  auto bot = TowerElement::bottom(t);
  auto id = TowerElement::from_top(t, identity_at(t, 2));
  for (const auto& b : all_elements(t)) {
    EXPECT_EQ(apply(bot, b), bot);
    EXPECT_EQ(apply(id, b).component(1), b.component(1));
    EXPECT_TRUE(apply(b, b).compatible());
  }
}

TEST(Apply, MonotoneInBothArguments) {
  auto t = Tower::build(1, 2);
  auto els = all_elements(t);
  for (const auto& a : els)
    for (const auto& a2 : els)
      for (const auto& b : els)
        for (const auto& b2 : els)
          if (leq(a, a2) && leq(b, b2)) {
            EXPECT_TRUE(leq(apply(a, b), apply(a2, b2)));
          }
}

TEST(Apply, RejectsForeignTowers) {
  auto t = Tower::build(1, 2), u = Tower::build(1, 2);
  EXPECT_THROW(apply(TowerElement::bottom(t), TowerElement::bottom(u)), TowerMismatch);
}

TEST(FunToElem, IdentityAndConstant) {
  auto t = Tower::build(1, 2);
  auto idf = fun_to_elem(t, [](const TowerElement& x) { return x; });
  // top component is embed∘project on D₁
  const auto& g = t->level(2).tables[idf.top()];
  for (std::size_t x = 0; x < g.size(); ++x) EXPECT_EQ(g[x], x);
  for (const auto& b : all_elements(t)) EXPECT_TRUE(apply(idf, b).agrees_through(b, 0));
  auto bot = fun_to_elem(t, [&](const TowerElement&) { return TowerElement::bottom(t); });
  EXPECT_EQ(bot, TowerElement::bottom(t));
  auto f = elem_to_fun(TowerElement::bottom(t));
  for (const auto& b : all_elements(t)) EXPECT_EQ(f(b), TowerElement::bottom(t));
}

TEST(FunToElem, RoundTripIsExact) {
  auto t = Tower::build(1, 2);
  for (const auto& a : all_elements(t)) EXPECT_EQ(fun_to_elem(t, elem_to_fun(a)), a);
}

TEST(FunToElem, NonMonotone) {
  auto t = Tower::build(1, 2);
  auto els = all_elements(t);
  auto high = *std::find_if(els.begin(), els.end(), [](const TowerElement& e) { return e.component(1) != 0; });
  // ⊥ sent above everything else: not monotone
  auto f = [&](const TowerElement& x) { return x.top() == 0 ? high : TowerElement::bottom(t); };
  EXPECT_THROW(fun_to_elem(t, f), NonMonotoneRealization);
}

TEST(Tower, JsonRoundTrip) {
  auto t = Tower::build(1, 2);
  auto j = io::to_json(*t);
  EXPECT_EQ(io::tower_from_json(j)->sizes(), t->sizes());
  j["sizes"] = {2, 3, 11};
  EXPECT_THROW(io::tower_from_json(j), FormatError);
}

TEST(Tower, Guards) {
  EXPECT_THROW(Tower::build(0, 2), FormatError);
  EXPECT_THROW(Tower::build(1, 0), LevelOutOfRange);
  Limits tight;
  tight.function_space = 5;
  EXPECT_THROW(Tower::build(1, 2, tight), SizeLimitExceeded);
}
