#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dinf/corpus.hpp"
#include "dinf/order.hpp"
#include "oracles.hpp"

using namespace dinf;

namespace {

std::vector<std::size_t> ix(const Poset& p, std::initializer_list<const char*> labels) {
  std::vector<std::size_t> out;
  for (auto l : labels) out.push_back(p.index_of(l));
  return out;
}

std::set<std::vector<bool>> library_opens(const Poset& p) {
  std::set<std::vector<bool>> out;
  auto s = scott_opens(Cpo::certify(p, *p.least()));
  for (auto m : s.opens()) out.insert(oracle::mask_to_subset(m, p.size()));
  return out;
}

}  // namespace

TEST(Poset, OnePointIsReflexive) {
  auto p = Poset::certify({"a"}, {});
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.leq(0, 0));
}

TEST(Poset, NPlusTwo) {
  auto p = corpus::nplus(2);
  EXPECT_EQ(p.labels(), (std::vector<std::string>{"bot", "0", "1"}));
  EXPECT_TRUE(p.leq(p.index_of("bot"), p.index_of("0")));
  EXPECT_FALSE(p.comparable(p.index_of("0"), p.index_of("1")));
}

TEST(Poset, RejectsCycles) {
  EXPECT_THROW(Poset::certify({"a", "b"}, {{"a", "b"}, {"b", "a"}}), AntisymmetryViolation);
  EXPECT_THROW(Poset::certify({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), TransitivityViolation);
  EXPECT_THROW(Poset::certify({"a", "a"}, {}), DuplicateElement);
  EXPECT_THROW(Poset::certify({"a"}, {{"a", "z"}}), UnknownElement);
}

TEST(Directed, Examples) {
  auto p = corpus::nplus(2);
  for (std::size_t x = 0; x < p.size(); ++x) EXPECT_TRUE(is_directed(p, std::vector<std::size_t>{x}));
  EXPECT_FALSE(is_directed(p, ix(p, {"0", "1"})));
  EXPECT_TRUE(is_directed(p, ix(p, {"bot", "0"})));
  EXPECT_FALSE(is_directed(p, std::vector<std::size_t>{}));
  EXPECT_THROW(is_directed(p, std::vector<std::size_t>{7}), UnknownElement);
}

TEST(Lub, Examples) {
  auto L = corpus::lattice_L();
  EXPECT_EQ(lub(L, ix(L, {"0", "1"})), L.index_of("top"));
  EXPECT_EQ(lub(L, ix(L, {"bot"})), L.index_of("bot"));
  EXPECT_EQ(lub(L, std::vector<std::size_t>{}), L.index_of("bot"));
  auto N = corpus::nplus(2);
  EXPECT_FALSE(lub(N, ix(N, {"0", "1"})).has_value());
}

TEST(Lub, AgreesWithOracleOnEverySubset) {
  std::mt19937 rng(7);
  for (int i = 0; i < 5; ++i) {
    auto p = corpus::random_poset_with_bottom(rng);
    auto r = oracle::relation(p);
    for (const auto& s : oracle::all_subsets(p.size())) {
      std::vector<std::size_t> xs;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (s[j]) xs.push_back(j);
      auto got = lub(p, xs);
      auto want = oracle::sup(r, s);
      EXPECT_EQ(got ? static_cast<long>(*got) : -1L, want);
      EXPECT_EQ(is_directed(p, xs), oracle::directed(r, s));
    }
  }
}

TEST(ScottOpens, OnePoint) {
  auto opens = scott_opens(Cpo::certify(corpus::one_point(), 0)).opens();
  EXPECT_EQ(opens, (std::vector<Mask>{0, 1}));
}

TEST(ScottOpens, LatticeLHasTenOpens) {
  auto L = corpus::lattice_L();
  auto want = oracle::scott_opens(oracle::relation(L));
  EXPECT_EQ(want.size(), 10u);
  EXPECT_EQ(library_opens(L), want);
}

TEST(ScottOpens, NPlusTwo) {
  auto p = corpus::nplus(2);
  auto want = oracle::scott_opens(oracle::relation(p));
  std::set<std::vector<bool>> listed{{false, false, false}, {false, true, false}, {false, false, true},
                                     {false, true, true}, {true, true, true}};
  EXPECT_EQ(want, listed);
  EXPECT_EQ(library_opens(p), want);
}

TEST(ScottOpens, RandomPosetsFormTopologiesAvoidingBottom) {
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    auto p = corpus::random_poset_with_bottom(rng);
    auto want = oracle::scott_opens(oracle::relation(p));
    ASSERT_EQ(library_opens(p), want);
    auto s = scott_opens(Cpo::certify(p, *p.least()));
    auto ups = upsets(p);
    EXPECT_EQ(std::set<Mask>(s.opens().begin(), s.opens().end()), std::set<Mask>(ups.begin(), ups.end()));
    for (auto a : s.opens())
      for (auto b : s.opens()) {
        EXPECT_TRUE(s.is_open(a | b));
        EXPECT_TRUE(s.is_open(a & b));
      }
    for (auto a : s.opens())
      if (a != p.full_mask()) {
        EXPECT_FALSE(has(a, *p.least()));
      }
  }
}

TEST(Continuity, Examples) {
  auto L = Cpo::certify(corpus::lattice_L(), 0);
  std::vector<std::size_t> id{0, 1, 2, 3, 4}, to_bot(5, 0);
  EXPECT_TRUE(is_scott_continuous(id, L, L));
  EXPECT_TRUE(is_scott_continuous(to_bot, L, L));
  auto N = flat_cpo(2);
  std::vector<std::size_t> swap{1, 0, 2};  // f(bot) = 0, f(0) = bot
  EXPECT_FALSE(is_scott_continuous(swap, N, N));
  EXPECT_THROW(MonotoneFn::certify(N.poset(), N.poset(), swap), NotMonotone);
}

TEST(Continuity, EquivalentToMonotoneOnFiniteCarriers) {
  std::mt19937 rng(3);
  for (int i = 0; i < 6; ++i) {
    auto p = corpus::random_poset_with_bottom(rng, 4);
    auto cpo = Cpo::certify(p, 0);
    auto r = oracle::relation(p);
    for (const auto& f : oracle::all_tables(p.size(), p.size()))
      EXPECT_EQ(is_scott_continuous(f, cpo, cpo), oracle::monotone(r, r, f));
  }
}

TEST(FunctionSpace, Counts) {
  auto one = Cpo::certify(corpus::one_point(), 0);
  EXPECT_EQ(function_space(one, one).size(), 1u);
  auto N = flat_cpo(2);
  EXPECT_EQ(function_space(N, N).size(), oracle::count_monotone(oracle::relation(N.poset()), oracle::relation(N.poset())));
  EXPECT_EQ(function_space(N, N).size(), 11u);
  auto C = chain_cpo(2);
  EXPECT_EQ(function_space(C, C).size(), 3u);
}

TEST(FunctionSpace, PointwiseOrderIsCertified) {
  auto N = flat_cpo(2);
  auto fs = function_space(N, N);
  const auto& P = fs.cpo.poset();
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = 0; b < fs.size(); ++b) {
      bool pointwise = true;
      for (std::size_t x = 0; x < N.size(); ++x) pointwise = pointwise && N.poset().leq(fs.tables[a][x], fs.tables[b][x]);
      EXPECT_EQ(P.leq(a, b), pointwise);
    }
  EXPECT_EQ(fs.tables[fs.cpo.bottom()], (std::vector<std::size_t>{0, 0, 0}));
  EXPECT_TRUE(fs.cpo.certificate().exhaustive);
}

TEST(FunctionSpace, SizeLimit) {
  Limits tight;
  tight.function_space = 5;
  auto N = flat_cpo(2);
  EXPECT_THROW(function_space(N, N, tight), SizeLimitExceeded);
}

TEST(Hasse, CoversOnly) {
  auto dot = hasse_dot(corpus::lattice_L());
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 6);
}
