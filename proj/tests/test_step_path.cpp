#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <string>

#include "dinf/corpus.hpp"
#include "dinf/io.hpp"
#include "dinf/step_path.hpp"

using namespace dinf;

namespace {

using Q = Rational;
const Q half(1, 2);

// The worked example on L, transcribed as pointwise formulas.
std::string p_to_top(const std::string& a, Q t) { return t == Q(0) ? a : "top"; }
std::string p_to_bot(const std::string& a, Q t) { return t < Q(1) ? a : "bot"; }

std::string p_top(const std::string& a, const std::string& b, Q t) {
  if (t == Q(0)) return a;
  if (t < Q(1)) return "top";
  return b;
}
std::string p_bot(const std::string& a, const std::string& b, Q t) {
  if (t < half) return a;
  if (t == half) return "bot";
  return b;
}

std::string p2(const std::string& a, const std::string& b, Q t1, Q t2) {
  if ((t1 == Q(0) && Q(0) < t2 && t2 < Q(1)) || (Q(0) < t1 && t1 < Q(1) && Q(0) < t2 && t2 < Q(1))) return "top";
  if (t2 == Q(0) || (t1 == Q(1) && Q(0) < t2 && t2 < half)) return a;
  if (t2 == Q(1) || (t1 == Q(1) && half < t2 && t2 < Q(1))) return b;
  return "bot";
}

std::string q2(const std::string& a, const std::string& b, Q t1, Q t2) {
  if (t2 < half || (Q(0) < t1 && t1 < Q(1) && half <= t2 && t2 < Q(1))) return "top";
  if (t1 == Q(0) && half <= t2 && t2 < Q(1)) return a;
  if (t1 == Q(1) && half <= t2 && t2 < Q(1)) return b;
  return "bot";
}

std::vector<Q> samples() {
  std::vector<Q> out;
  for (int k = 0; k <= 24; ++k) out.push_back(Q(k, 24));
  return out;
}

struct Example {
  SpacePtr space;
  std::map<std::string, StepPath1> one;
  std::map<std::string, StepPath2> two;

  Example() {
    auto j = io::read_file(std::string(DINF_DATA_DIR) + "/paths-L.json");
    space = share(io::scott_space_of(io::poset_from_json(j["space"])));
    for (const auto& p : j["paths"]) {
      auto name = p["name"].get<std::string>();
      if (p["dim"] == 1)
        one.emplace(name, io::path_from_json<1>(p, space));
      else
        two.emplace(name, io::path_from_json<2>(p, space));
    }
  }
  std::string at(const StepPath1& p, Q t) const { return space->poset().label(p({t})); }
  std::string at(const StepPath2& p, Q t1, Q t2) const { return space->poset().label(p({t1, t2})); }
};

const Example& ex() {
  static Example e;
  return e;
}

std::size_t space_index(const std::string& l) { return ex().space->poset().index_of(l); }

const std::vector<std::string> names{"0", "1", "2"};
const std::vector<std::pair<std::string, std::string>> pairs{{"0", "1"}, {"1", "2"}, {"0", "2"}};

}  // namespace

TEST(Example, OnePathsMatchFormulas) {
  for (const auto& a : names)
    for (auto t : samples()) {
      EXPECT_EQ(ex().at(ex().one.at("p^{" + a + "->top}"), t), p_to_top(a, t));
      EXPECT_EQ(ex().at(ex().one.at("p^{" + a + "->bot}"), t), p_to_bot(a, t));
    }
}

TEST(Example, TwoPathsMatchFormulas) {
  for (const auto& [a, b] : pairs)
    for (auto t1 : samples())
      for (auto t2 : samples()) {
        EXPECT_EQ(ex().at(ex().two.at("p^{" + a + "=>" + b + "}"), t1, t2), p2(a, b, t1, t2)) << t1 << "," << t2;
        EXPECT_EQ(ex().at(ex().two.at("q^{" + a + "=>" + b + "}"), t1, t2), q2(a, b, t1, t2)) << t1 << "," << t2;
      }
}

TEST(Example, EveryShippedPathIsContinuous) {
  for (const auto& [n, p] : ex().one) EXPECT_TRUE(check_continuity(p)) << n;
  for (const auto& [n, p] : ex().two) EXPECT_TRUE(check_continuity(p)) << n;
}

TEST(Example, FacesAreTheComposites) {
  for (const auto& [a, b] : pairs) {
    const auto& P = ex().two.at("p^{" + a + "=>" + b + "}");
    auto top = concat(ex().one.at("p^{" + a + "->top}"), reverse(ex().one.at("p^{" + b + "->top}")));
    auto bot = concat(ex().one.at("p^{" + a + "->bot}"), reverse(ex().one.at("p^{" + b + "->bot}")));
    for (auto t : samples()) {
      EXPECT_EQ(ex().at(top, t), p_top(a, b, t));
      EXPECT_EQ(ex().at(bot, t), p_bot(a, b, t));
    }
    EXPECT_TRUE(P.face(0, false) == top);
    EXPECT_TRUE(P.face(0, true) == bot);
    EXPECT_EQ(base_points(P), (std::pair{space_index(a), space_index(b)}));
  }
}

TEST(Example, ProductsAndHomotopy) {
  auto g = pi1(ex().space->poset());
  const auto& p01 = ex().two.at("p^{0=>1}");
  const auto& p12 = ex().two.at("p^{1=>2}");
  const auto& p02 = ex().two.at("p^{0=>2}");
  auto prod = product(p01, p12, 0);
  // pointwise: halves along t₂
  for (auto t1 : samples())
    for (auto t2 : samples()) {
      auto expect = t2 <= half ? ex().at(p01, t1, 2 * t2) : ex().at(p12, t1, 2 * t2 - 1);
      EXPECT_EQ(ex().at(prod, t1, t2), expect);
    }
  EXPECT_TRUE(check_continuity(prod));
  EXPECT_EQ(homotopic(prod, p02, g), Verdict::Homotopic);
  EXPECT_FALSE(prod == p02);

  const auto& q01 = ex().two.at("q^{0=>1}");
  const auto& q12 = ex().two.at("q^{1=>2}");
  auto qprod = product(q01, q12, 1);
  for (auto t1 : samples())
    for (auto t2 : samples()) {
      auto expect = t1 <= half ? ex().at(q01, 2 * t1, t2) : ex().at(q12, 2 * t1 - 1, t2);
      EXPECT_EQ(ex().at(qprod, t1, t2), expect);
    }
  EXPECT_EQ(homotopic(qprod, ex().two.at("q^{0=>2}"), g), Verdict::Homotopic);
  EXPECT_TRUE(parallel(qprod, ex().two.at("q^{0=>2}")));
  EXPECT_THROW(product(p01, p02, 0), FaceMismatch);
  EXPECT_THROW(product(q01, q01, 1), FaceMismatch);
  EXPECT_THROW(product(p01, p12, 2), FormatError);
}

TEST(StepPath, ConcatIsHalving) {
  auto a = ex().one.at("p^{0->top}"), b = reverse(ex().one.at("p^{1->top}"));
  auto c = concat(a, b);
  for (auto t : samples()) {
    auto expect = t <= half ? ex().at(a, 2 * t) : ex().at(b, 2 * t - 1);
    EXPECT_EQ(ex().at(c, t), expect);
  }
  EXPECT_THROW(concat(a, a), FaceMismatch);
}

TEST(StepPath, ReverseAndRefine) {
  for (const auto& [n, p] : ex().one) {
    auto r = reverse(p);
    for (auto t : samples()) EXPECT_EQ(ex().at(r, t), ex().at(p, Q(1) - t));
    EXPECT_TRUE(reverse(r) == p);
    auto fine = p.refined({std::vector<Q>{Q(0), Q(1, 3), Q(1, 2), Q(1)}});
    EXPECT_TRUE(fine == p);
    for (auto t : samples()) EXPECT_EQ(fine({t}), p({t}));
  }
  auto c = concat(ex().one.at("p^{0->top}"), reverse(ex().one.at("p^{1->top}")));
  EXPECT_THROW(c.refined({std::vector<Q>{Q(0), Q(1, 3), Q(1)}}), MalformedPartition);
  const auto& P = ex().two.at("p^{0=>1}");
  EXPECT_TRUE(restrict(P, 1, Q(0)) == P.face(0, false));
  EXPECT_TRUE(restrict(P, 1, Q(1, 3)) == P.slice(0, 1));
  EXPECT_EQ(point_value(restrict(restrict(P, 1, Q(1)), 1, half)), space_index("bot"));
  EXPECT_THROW(restrict(P, 3, Q(0)), FormatError);
}

TEST(StepPath, Malformed) {
  auto s = ex().space;
  EXPECT_THROW(StepPath1::make(s, {std::vector<Q>{Q(0), half}}, {0, 0, 0}), MalformedPartition);
  EXPECT_THROW(StepPath1::make(s, {std::vector<Q>{Q(0), half, half, Q(1)}}, std::vector<std::size_t>(7, 0)),
               MalformedPartition);
  EXPECT_THROW(StepPath1::make(s, {std::vector<Q>{Q(0), Q(1)}}, {0, 0}), MalformedPartition);
  EXPECT_THROW(StepPath1::make(s, {std::vector<Q>{Q(0), Q(1)}}, {0, 0, 9}), UnknownElement);
  EXPECT_THROW(StepPath1::make(nullptr, {std::vector<Q>{Q(0), Q(1)}}, {0, 0, 0}), FormatError);
  EXPECT_THROW(parse_rational("1/0x"), FormatError);
  EXPECT_EQ(parse_rational("3/6"), half);
  EXPECT_EQ(to_string(Q(2, 4)), "1/2");
  EXPECT_THROW(ex().one.at("p^{0->top}")({Q(3, 2)}), FormatError);
}

TEST(StepPath, DiscontinuityIsWitnessed) {
  auto s = ex().space;
  const auto& L = s->poset();
  // ⊤ at an endpoint with a lower value next to it
  auto bad = StepPath1::make(s, {std::vector<Q>{Q(0), Q(1)}}, {L.index_of("top"), L.index_of("0"), L.index_of("0")});
  auto r = check_continuity(bad);
  ASSERT_FALSE(r);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(has(r.witness->open, L.index_of("top")));
  EXPECT_FALSE(has(r.witness->open, L.index_of("0")));
  // a value above its neighbours on an open interval is also discontinuous
  auto spike = StepPath1::make(s, {std::vector<Q>{Q(0), half, Q(1)}},
                               {L.index_of("0"), L.index_of("top"), L.index_of("0"), L.index_of("0"), L.index_of("0")});
  EXPECT_TRUE(check_continuity(spike));
  auto dip = StepPath1::make(s, {std::vector<Q>{Q(0), half, Q(1)}},
                             {L.index_of("0"), L.index_of("0"), L.index_of("top"), L.index_of("0"), L.index_of("0")});
  EXPECT_FALSE(check_continuity(dip));
}
