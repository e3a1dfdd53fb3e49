#include <gtest/gtest.h>

#include "grt/derivation.hpp"
#include "grt/parse.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace grt;

namespace {

AlphabetPtr XY() { return GradedAlphabet::xy(); }
LieElement lie(const std::string& text) { return parse_lie(text, XY()); }

}  // namespace

TEST(Derivation, ValidatesDegrees) {
  EXPECT_NO_THROW(Derivation(lie("[x,y]"), LieElement(XY()), 1));
  try {
    Derivation(lie("[x,y]"), LieElement(XY()), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Precondition);
  }
  EXPECT_THROW(Derivation(lie("x + [x,y]"), LieElement(XY()), 1), Error);
  EXPECT_EQ(Derivation(lie("[x,y]"), LieElement(XY()), 1).weight(), -2);
}

TEST(Derivation, ApplyExamples) {
  Derivation d(LieElement(XY()), lie("[y,[x,y]]"), 2);
  EXPECT_EQ(apply(d, lie("x")), LieElement(XY()));
  EXPECT_EQ(apply(d, lie("[x,y]")), lie("[x,[y,[x,y]]]"));
  Derivation ad = inner(lie("x"));
  EXPECT_EQ(apply(ad, lie("[x,y]")), lie("[x,[x,y]]"));
  EXPECT_TRUE(apply(ad, lie("x")).is_zero());
}

TEST(Derivation, InnerIsAdjoint) {
  grt::testing::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    auto v = grt::testing::random_homogeneous(rng, XY(), 1 + static_cast<int>(rng() % 4));
    auto e = grt::testing::random_element(rng, XY(), 4);
    EXPECT_EQ(apply(inner(v), e), bracket(v, e));
  }
}

TEST(Derivation, BracketOfInnerIsInner) {
  auto a = lie("[x,y]"), b = lie("[x,[x,y]]");
  EXPECT_EQ(der_bracket(inner(a), inner(b)), inner(bracket(a, b)));
  EXPECT_EQ(der_bracket(inner(a), inner(a)), zero_derivation(XY(), 4));
}

TEST(OuterDerivations, Dimensions) {
  const std::vector<int> expected{0, 3, 4, 9, 12, 27, 42, 82};
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(Integer(static_cast<unsigned long>(outder_dim(n))), outder_dim_formula(n)) << n;
    EXPECT_EQ(outder_dim(n), static_cast<std::size_t>(expected[static_cast<std::size_t>(n - 1)])) << n;
  }
}

TEST(OuterDerivations, InnerMapShape) {
  auto m = inner_map_matrix(3);
  EXPECT_EQ(m.cols(), 2u);
  EXPECT_EQ(rank(m), 2u);
}

TEST(Properties, Leibniz) {
  auto r = grt::testing::derivation_leibniz(3001, 200);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
}

TEST(Properties, BracketLaws) {
  auto r = grt::testing::derivation_bracket_laws(3002, 200);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
}
