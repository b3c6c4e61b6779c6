#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "artin/presentation.hpp"
#include "fixtures.hpp"

using namespace artin;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(ARTIN_PRESENTATIONS) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Presentation, ParsesLabelsAndComments) {
  auto p = parse_presentation("# braid-like\ngenerators: a b c\npair: a b = 3  # m_ab\npair: a c = 2\npair: c b = inf\n");
  ASSERT_EQ(p.rank(), 3u);
  auto a = *p.find("a"), b = *p.find("b"), c = *p.find("c");
  EXPECT_TRUE(p.m(a, b).equals(3));
  EXPECT_TRUE(p.m(b, a).equals(3));
  EXPECT_TRUE(p.commutes(a, c));
  EXPECT_FALSE(p.m(b, c).is_finite());
  EXPECT_TRUE(p.m(b, c).at_least(1000));
  EXPECT_TRUE(p.commutes(a, a));
}

TEST(Presentation, RoundTripsThroughText) {
  for (auto name : {"braid325.art", "braid32inf.art", "dihedral5.art", "raag3.art", "b3.art"}) {
    auto p = parse_presentation(slurp(name));
    EXPECT_EQ(parse_presentation(format_presentation(p)), p) << name;
  }
}

TEST(Presentation, ReportsErrorPositions) {
  auto err = [](std::string_view text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_presentation(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  EXPECT_EQ(err("generators: a b\npair: a b = 1\n").first, 2u);
  EXPECT_EQ(err("generators: a b\npair: a b = 1\n").second, 13u);
  EXPECT_EQ(err("generators: a b\npair: a q = 3\n").first, 2u);
  EXPECT_EQ(err("generators: a b\npair: a b = x3\n").first, 2u);
  EXPECT_GT(err("generators: a b c\npair: a b = 3\n").first, 0u);  // missing pairs
  EXPECT_EQ(err("generators: a b\npair: a b = 3\npair: b a = 4\n").first, 3u);
  EXPECT_EQ(err("generators: a a\n").first, 1u);
  EXPECT_GT(err("pair: a b = 3\n").first, 0u);  // generators never declared
  EXPECT_EQ(err("generators: a b\nrelator: a b\n").first, 2u);
  EXPECT_EQ(err("generators: a b\npair: a b = 3 4\n").first, 2u);
}

TEST(Presentation, FindsForbiddenSubdiagrams) {
  using fixtures::abc;
  EXPECT_TRUE(validate_a3b3_free(abc(3, 2, 5)).empty());
  EXPECT_TRUE(validate_a3b3_free(abc(3, 2, 0)).empty());
  EXPECT_TRUE(validate_a3b3_free(abc(3, 3, 3)).empty());
  EXPECT_TRUE(validate_a3b3_free(abc(2, 2, 2)).empty());

  auto b3 = validate_a3b3_free(abc(3, 2, 4));
  ASSERT_EQ(b3.size(), 1u);
  EXPECT_EQ(b3[0].m_yz, 4);
  EXPECT_EQ(b3[0].x.index, 0);

  auto a3 = validate_a3b3_free(abc(2, 3, 3));  // c is the middle node
  ASSERT_EQ(a3.size(), 1u);
  EXPECT_EQ(a3[0].m_yz, 3);
  EXPECT_THROW(require_a3b3_free(abc(3, 2, 3)), HypothesisError);
}

TEST(Presentation, FourGeneratorDiagram) {
  // a-b-c-d path with labels 3,5,3: {a,b,c} is fine, {b,c,d} is fine.
  auto p = parse_presentation(
      "generators: a b c d\npair: a b = 3\npair: b c = 5\npair: c d = 3\n"
      "pair: a c = 2\npair: a d = 2\npair: b d = 2\n");
  EXPECT_TRUE(validate_a3b3_free(p).empty());
  p.set(*p.find("b"), *p.find("c"), CoxeterLabel::finite(4));
  EXPECT_EQ(validate_a3b3_free(p).size(), 2u);
}
