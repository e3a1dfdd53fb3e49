#include <gtest/gtest.h>

#include <thread>

#include "grt/lie.hpp"
#include "grt/lyndon.hpp"
#include "grt/parse.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace grt;
using grt::testing::Rng;

namespace {

AlphabetPtr XY() { return GradedAlphabet::xy(); }

Word w(const std::string& letters) {
  Word out;
  for (char c : letters) out.push_back(c == 'x' ? 0 : 1);
  return out;
}

LieElement sigma(const std::string& letters, Rational c = 1) {
  return LieElement::basis(XY(), w(letters), c);
}

LieElement lie(const std::string& text) { return parse_lie(text, XY()); }

}  // namespace

TEST(Lyndon, SmallDegrees) {
  EXPECT_EQ(lyndon_words(*XY(), 1), (std::vector<Word>{w("x"), w("y")}));
  EXPECT_EQ(lyndon_words(*XY(), 2), (std::vector<Word>{w("xy")}));
  EXPECT_EQ(lyndon_words(*XY(), 3), (std::vector<Word>{w("xxy"), w("xyy")}));
}

TEST(Lyndon, MatchesBruteForceAndWitt) {
  for (unsigned n = 1; n <= 12; ++n) {
    auto words = lyndon_words(*XY(), static_cast<int>(n));
    EXPECT_EQ(words, grt::testing::brute_force_lyndon(2, n)) << n;
    EXPECT_EQ(Integer(static_cast<unsigned long>(words.size())), witt_dim(2, n)) << n;
  }
  auto abc = GradedAlphabet::uniform({"a", "b", "c"});
  for (unsigned n = 1; n <= 7; ++n)
    EXPECT_EQ(lyndon_words(*abc, static_cast<int>(n)), grt::testing::brute_force_lyndon(3, n));
}

TEST(Lyndon, WeightedAlphabetMayBeEmpty) {
  auto ab = GradedAlphabet::weighted({3, 5});
  EXPECT_TRUE(lyndon_words(*ab, 1).empty());
  EXPECT_TRUE(lyndon_words(*ab, 6).empty());
  EXPECT_EQ(lyndon_words(*ab, 8).size(), 1u);
}

TEST(Lyndon, StandardFactorization) {
  EXPECT_EQ(standard_factorization(w("xy")), std::make_pair(w("x"), w("y")));
  EXPECT_EQ(standard_factorization(w("xxy")), std::make_pair(w("x"), w("xy")));
  EXPECT_EQ(standard_factorization(w("xyy")), std::make_pair(w("xy"), w("y")));
  EXPECT_EQ(standard_factorization(w("xxyxy")), std::make_pair(w("xxy"), w("xy")));
  try {
    standard_factorization(w("x"));
    FAIL() << "expected AtomicWord";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AtomicWord);
  }
}

TEST(Lyndon, Triangularity) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& word : lyndon_words(*XY(), n)) {
      auto e = sigma_expansion(word);
      ASSERT_FALSE(e->empty());
      EXPECT_EQ(e->front().first, word);
      EXPECT_EQ(e->front().second, 1);
    }
}

TEST(Witt, Values) {
  EXPECT_EQ(witt_dim(2, 1), 2);
  EXPECT_EQ(witt_dim(2, 6), 9);
  EXPECT_EQ(witt_dim(2, 12), 335);
  for (unsigned k = 1; k <= 5; ++k)
    for (unsigned n = 1; n <= 14; ++n) EXPECT_EQ(witt_dim(k, n), grt::testing::naive_witt(k, n));
}

TEST(Witt, Weighted) {
  EXPECT_EQ(weighted_witt_dims({3}, 3).at(3), 1);
  auto odd = weighted_witt_dims({3, 5, 7, 9, 11}, 12);
  EXPECT_EQ(odd.at(6), 0);
  EXPECT_EQ(odd.at(8), 1);
  EXPECT_EQ(odd.at(11), 2);
  EXPECT_EQ(odd.at(12), 2);
  auto uniform = weighted_witt_dims({1, 1, 1}, 10);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(uniform.at(n), witt_dim(3, static_cast<unsigned>(n)));
}

TEST(Witt, TwoRoutesAgree) {
  const std::vector<std::vector<int>> gens{{1, 1}, {1, 2}, {3, 5, 7, 9, 11}, {2, 3, 3}, {1, 1, 1, 4}};
  for (const auto& g : gens) {
    auto necklace = necklace_dims(g, 14);
    auto counted = lyndon_count_dims(g, 14);
    ASSERT_TRUE(counted.has_value());
    EXPECT_EQ(necklace, *counted);
    EXPECT_TRUE(pbw_identity_holds(g, necklace, 14));
  }
  auto bad = necklace_dims({1, 1}, 6);
  bad[4] += 1;
  EXPECT_FALSE(pbw_identity_holds({1, 1}, bad, 6));
}

TEST(Bracket, Examples) {
  const LieElement x = generator(XY(), "x"), y = generator(XY(), "y");
  EXPECT_EQ(bracket(x, y), sigma("xy"));
  EXPECT_TRUE(bracket(x, x).is_zero());
  EXPECT_EQ(bracket(sigma("xy"), x), sigma("xxy", -1));
  EXPECT_EQ(bracket(x, sigma("xy")), sigma("xxy"));
}

TEST(Bracket, CapDropsHighDegrees) {
  auto a = lie("x + [x,y]");
  auto b = lie("y");
  auto capped = bracket(a, b, 2);
  EXPECT_EQ(capped, sigma("xy"));
  EXPECT_EQ(bracket(a, b).degrees(), (std::set<int>{2, 3}));
}

TEST(Bracket, AlphabetMismatch) {
  auto ab = GradedAlphabet::uniform({"a", "b"});
  try {
    bracket(generator(XY(), "x"), generator(ab, "a"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AlphabetMismatch);
  }
}

TEST(Expand, Examples) {
  EXPECT_EQ(to_string(expand_assoc(sigma("xy"))), "xy - yx");
  EXPECT_EQ(to_string(expand_assoc(sigma("xxy"))), "xxy - 2*xyx + yxx");
  EXPECT_TRUE(expand_assoc(LieElement(XY())).is_zero());
}

TEST(Project, Examples) {
  AssocPoly p(XY());
  p.add_term(w("xy"), 1);
  p.add_term(w("yx"), -1);
  EXPECT_EQ(project_lyndon(p), sigma("xy"));
  EXPECT_EQ(project_lyndon(expand_assoc(sigma("xxy"))), sigma("xxy"));
  AssocPoly bad(XY());
  bad.add_term(w("xy"), 1);
  try {
    project_lyndon(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotALiePolynomial);
  }
}

TEST(Element, Homogeneity) {
  auto e = lie("x + [x,y]");
  EXPECT_FALSE(e.is_homogeneous());
  EXPECT_THROW(e.degree(), Error);
  EXPECT_EQ(e.component(2), sigma("xy"));
  EXPECT_EQ(e.truncated(1), generator(XY(), "x"));
  EXPECT_FALSE(LieElement(XY()).degree().has_value());
  EXPECT_EQ(weight_of_degree(3), -6);
}

TEST(Element, RejectsNonLyndonWords) {
  LieElement e(XY());
  EXPECT_THROW(e.add_term(w("yx"), 1), Error);
  EXPECT_THROW(e.add_term(Word{2}, 1), Error);
}

TEST(Parse, Examples) {
  EXPECT_EQ(lie("[x,[x,y]]"), sigma("xxy"));
  EXPECT_TRUE(lie("[x,x]").is_zero());
  auto e = lie("3/2*[x,y] - y");
  EXPECT_EQ(e.size(), 2u);
  EXPECT_EQ(*e.coefficient(w("xy")), Rational(3, 2));
  EXPECT_EQ(*e.coefficient(w("y")), Rational(-1));
  EXPECT_EQ(lie("([x,y])"), sigma("xy"));
  EXPECT_EQ(lie("-2*[y,x]"), sigma("xy", 2));
}

TEST(Parse, Errors) {
  try {
    lie("[x,[x,y]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    EXPECT_EQ(e.position(), 8u);
  }
  try {
    lie("x + 2*");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  try {
    lie("[x,q]");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownGenerator);
  }
  EXPECT_THROW(lie("1/0*x"), Error);
  EXPECT_THROW(lie(""), ParseError);
}

TEST(Print, CanonicalForm) {
  EXPECT_EQ(to_string(lie("y - 3/2*[y,x]")), "y + 3/2*[x,y]");
  EXPECT_EQ(to_string(lie("[[x,y],y] - [x,[x,y]]")), "-1*[x,[x,y]] + [[x,y],y]");
  EXPECT_EQ(to_string(LieElement(XY())), "0");
  EXPECT_EQ(bracketing(*XY(), w("xxyxy")), "[[x,[x,y]],[x,y]]");
}

TEST(Print, ParseRoundTrip) {
  Rng rng(20240611);
  for (int i = 0; i < 200; ++i) {
    auto e = grt::testing::random_element(rng, XY(), 6);
    EXPECT_EQ(lie(to_string(e)), e) << to_string(e);
  }
  auto ab = GradedAlphabet::parse("a:1,b:2,c:3");
  for (int i = 0; i < 50; ++i) {
    auto e = grt::testing::random_element(rng, ab, 6);
    EXPECT_EQ(parse_lie(to_string(e), ab), e) << to_string(e);
  }
}

TEST(Modular, ReductionCommutesWithBracket) {
  Rng rng(7);
  for (std::uint64_t m : {12ull, 691ull, 97ull}) {
    for (int i = 0; i < 40; ++i) {
      LieElement a(XY()), b(XY());
      const auto ra = grt::testing::random_homogeneous(rng, XY(), 3);
      const auto rb = grt::testing::random_homogeneous(rng, XY(), 4);
      for (const auto& [key, c] : ra.terms()) a.add_basis_term(key, Rational(to_integer(c * 2)));
      for (const auto& [key, c] : rb.terms()) b.add_basis_term(key, Rational(to_integer(c * 2)));
      EXPECT_EQ(reduce_mod(bracket(a, b), m), bracket(reduce_mod(a, m), reduce_mod(b, m)));
    }
  }
}

TEST(Properties, JacobiAntisymmetry) {
  auto r = grt::testing::lie_jacobi_antisymmetry(1001, 200);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
}

TEST(Properties, OracleEquivalence) {
  auto r = grt::testing::lie_oracle_equivalence(1002, 200);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
}

TEST(Concurrency, CachesAreConsistent) {
  const int n = 9;
  std::vector<std::vector<std::string>> seen(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (const auto& word : lyndon_words(*XY(), n)) {
        auto e = LieElement::basis(XY(), word, 1);
        seen[static_cast<std::size_t>(t)].push_back(
            to_string(bracket(e, generator(XY(), t % 2 ? "x" : "y"))) +
            std::to_string(sigma_expansion(word)->size()));
      }
    });
  for (auto& th : pool) th.join();
  EXPECT_EQ(seen[0], seen[2]);
  EXPECT_EQ(seen[1], seen[3]);
}
