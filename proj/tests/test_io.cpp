#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "dinf/corpus.hpp"
#include "dinf/io.hpp"

using namespace dinf;
using io::json;

namespace {

std::string data(const std::string& rel) { return std::string(DINF_DATA_DIR) + "/" + rel; }

}  // namespace

TEST(IoPoset, ShippedFilesMatchCorpus) {
  std::vector<std::pair<std::string, Poset>> expect{{"posets/nplus2.json", corpus::nplus(2)},
                                                    {"posets/L.json", corpus::lattice_L()},
                                                    {"posets/two-chain.json", corpus::two_chain()},
                                                    {"posets/pseudo-circle.json", corpus::pseudo_circle()},
                                                    {"posets/pseudo-circle-bottom.json", corpus::pseudo_circle_with_bottom()},
                                                    {"posets/one-point.json", corpus::one_point()}};
  for (const auto& [file, p] : expect) EXPECT_TRUE(io::poset_from_json(io::read_file(data(file))) == p) << file;
}

TEST(IoPoset, RoundTrip) {
  std::vector<Poset> ps{corpus::lattice_L(), corpus::pseudo_circle()};
  for (const auto& p : corpus::random_posets(99, 10)) ps.push_back(p);
  for (const auto& p : ps) {
    auto j = io::to_json(p, "x");
    EXPECT_EQ(j["name"], "x");
    auto back = io::poset_from_json(json::parse(j.dump()));
    EXPECT_TRUE(back == p);
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) EXPECT_EQ(back.leq(a, b), p.leq(a, b));
  }
}

TEST(IoPoset, Rejections) {
  using io::json;
  EXPECT_THROW(io::poset_from_json(json{{"elements", {"a"}}}), FormatError);
  EXPECT_THROW(io::poset_from_json(json{{"elements", {"a", "b"}}, {"leq", {{"a"}}}}), FormatError);
  // a ⊑ b ⊑ c without a ⊑ c
  EXPECT_THROW(io::poset_from_json(json{{"elements", {"a", "b", "c"}}, {"leq", json::array({json::array({"a", "b"}), json::array({"b", "c"})})}}),
               TransitivityViolation);
  EXPECT_THROW(io::poset_from_json(json{{"elements", {"a", "b"}}, {"leq", json::array({json::array({"a", "b"}), json::array({"b", "a"})})}}),
               AntisymmetryViolation);
  EXPECT_THROW(io::poset_from_json(json{{"elements", {"a", "a"}}, {"leq", json::array()}}), DuplicateElement);
  EXPECT_THROW(io::poset_from_json(json{{"elements", {"a"}}, {"leq", json::array({json::array({"a", "q"})})}}), UnknownElement);
  EXPECT_THROW(io::scott_space_of(corpus::pseudo_circle()), NotACpo);
  EXPECT_THROW(io::read_file(data("nope.json")), FormatError);
}

TEST(IoTower, RoundTrip) {
  auto t = Tower::build(1, 2);
  auto j = json::parse(io::to_json(*t).dump());
  EXPECT_EQ(j["sizes"], (std::vector<std::size_t>{2, 3, 10}));
  EXPECT_EQ(j["levels"].size(), 3u);
  auto back = io::tower_from_json(j);
  for (std::size_t n = 0; n < 2; ++n) {
    EXPECT_EQ(back->phi(n), t->phi(n));
    EXPECT_EQ(back->psi(n), t->psi(n));
  }
  j["phi"][0][0] = 1;
  EXPECT_THROW(io::tower_from_json(j), FormatError);
  EXPECT_THROW(io::tower_from_json(json{{"k", 1}}), FormatError);
}

TEST(IoPath, RoundTripShippedExample) {
  auto j = io::read_file(data("paths-L.json"));
  auto space = share(io::scott_space_of(io::poset_from_json(j["space"])));
  std::size_t ones = 0, twos = 0;
  for (const auto& p : j["paths"]) {
    if (p["dim"] == 1) {
      auto path = io::path_from_json<1>(p, space);
      auto again = io::path_from_json<1>(json::parse(io::to_json(path).dump()));
      EXPECT_EQ(again.values(), path.values());
      EXPECT_EQ(again.breaks(), path.breaks());
      EXPECT_THROW(io::path_from_json<2>(p, space), FormatError);
      ++ones;
    } else {
      auto path = io::path_from_json<2>(p, space);
      auto again = io::path_from_json<2>(json::parse(io::to_json(path).dump()));
      EXPECT_EQ(again.values(), path.values());
      EXPECT_EQ(again.breaks(), path.breaks());
      ++twos;
    }
  }
  EXPECT_EQ(ones, 6u);
  EXPECT_EQ(twos, 6u);
  auto bad = j["paths"][0];
  bad["breaks"] = json::array({json::array({"0", "1/2"})});
  EXPECT_THROW(io::path_from_json<1>(bad, space), MalformedPartition);
  bad["breaks"] = json::array({json::array({"0", "x"})});
  EXPECT_THROW(io::path_from_json<1>(bad, space), FormatError);
}

TEST(IoProof, ShippedCorpusMatches) {
  auto shipped = io::proofs_from_json(io::read_file(data("proofs.json")));
  auto built = corpus::proofs();
  ASSERT_EQ(shipped.size(), built.size());
  for (std::size_t i = 0; i < built.size(); ++i) {
    EXPECT_EQ(shipped[i].first, built[i].first);
    const auto& a = shipped[i].second.steps();
    const auto& b = built[i].second.steps();
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t s = 0; s < a.size(); ++s) {
      EXPECT_TRUE(alpha_equal(a[s].term, b[s].term));
      EXPECT_EQ(a[s].kind, b[s].kind);
    }
  }
}

TEST(IoProof, RoundTripAndValidation) {
  for (const auto& [name, p] : corpus::proofs()) {
    auto j = json::parse(io::to_json(p, name).dump());
    EXPECT_EQ(j["name"], name);
    auto back = io::proof_from_json(j);
    EXPECT_EQ(back.length(), p.length());
    EXPECT_TRUE(alpha_equal(back.last(), p.last()));
  }
  json bad{{"steps", {{{"kind", "start"}, {"term", "(\\x.x) y"}}, {{"kind", "beta"}, {"term", "z"}}}}};
  EXPECT_THROW(io::proof_from_json(bad), InvalidStep);
  bad["steps"][1]["kind"] = "sideways";
  EXPECT_THROW(io::proof_from_json(bad), FormatError);
  bad["steps"][1] = {{"kind", "beta"}, {"term", "(("}};
  EXPECT_THROW(io::proof_from_json(bad), SyntaxError);
}

TEST(IoFile, WriteThenRead) {
  auto path = std::filesystem::temp_directory_path() / "dinf_io_test.json";
  io::write_file(path.string(), io::to_json(corpus::lattice_L(), "L"));
  EXPECT_TRUE(io::poset_from_json(io::read_file(path.string())) == corpus::lattice_L());
  std::filesystem::remove(path);
}
