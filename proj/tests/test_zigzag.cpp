#include <gtest/gtest.h>

#include "dinf/corpus.hpp"
#include "dinf/zigzag.hpp"

using namespace dinf;

TEST(Zigzag, CollapsesRepeats) {
  auto p = corpus::lattice_L();
  auto z = Zigzag::make(p, std::vector<std::string>{"0", "0", "top", "top", "1"});
  EXPECT_EQ(z.labels(p), (std::vector<std::string>{"0", "top", "1"}));
  EXPECT_EQ(z.front(), p.index_of("0"));
  EXPECT_EQ(z.back(), p.index_of("1"));
}

TEST(Zigzag, RejectsIncomparableSteps) {
  auto p = corpus::lattice_L();
  EXPECT_THROW(Zigzag::make(p, std::vector<std::string>{"0", "1"}), FormatError);
  EXPECT_THROW(Zigzag::make(p, std::vector<std::size_t>{}), FormatError);
  EXPECT_THROW(Zigzag::make(p, std::vector<std::size_t>{0, 9}), UnknownElement);
  EXPECT_THROW(Zigzag::make(p, std::vector<std::string>{"nope"}), UnknownElement);
}

TEST(Zigzag, Reversal) {
  auto p = corpus::pseudo_circle();
  auto z = Zigzag::make(p, std::vector<std::string>{"a", "c", "b", "d"});
  auto r = reversed(z, p);
  EXPECT_EQ(r.labels(p), (std::vector<std::string>{"d", "b", "c", "a"}));
  EXPECT_EQ(reversed(r, p), z);
  auto one = Zigzag::make(p, std::vector<std::string>{"a"});
  EXPECT_EQ(reversed(one, p), one);
}
