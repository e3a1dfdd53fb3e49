#include <gtest/gtest.h>

#include <chrono>

#include "grt/ihara.hpp"
#include "grt/linalg.hpp"
#include "grt/lyndon.hpp"
#include "grt/parse.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace grt;

namespace {

AlphabetPtr XY() { return GradedAlphabet::xy(); }
LieElement lie(const std::string& text) { return parse_lie(text, XY()); }

std::vector<Rational> coords(const LieElement& f, int n) {
  std::vector<Rational> out;
  for (const auto& w : lyndon_words(*XY(), n)) out.push_back(f.coefficient(w).value_or(Rational(0)));
  return out;
}

std::vector<Rational> rats(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(IharaElement, ShapeChecks) {
  EXPECT_NO_THROW(IharaElement(lie("[x,[x,y]]")));
  EXPECT_THROW(IharaElement(lie("x")), Error);
  EXPECT_THROW(IharaElement(lie("[x,y] + [x,[x,y]]")), Error);
  EXPECT_THROW(IharaElement(LieElement(XY())), Error);
  EXPECT_NO_THROW(IharaElement(LieElement(XY()), 4));
  auto abc = GradedAlphabet::uniform({"a", "b", "c"});
  EXPECT_THROW(IharaElement(parse_lie("[a,b]", abc)), Error);
}

TEST(IharaElement, DerivationShape) {
  auto f = lie("[x,[x,y]] - [[x,y],y]");
  auto d = IharaElement(f).derivation();
  EXPECT_TRUE(d.image_x().is_zero());
  EXPECT_EQ(d.image_y(), bracket(lie("y"), f));
  EXPECT_EQ(d.degree(), 3);
}

TEST(Conditions, SouleThree) {
  auto f3 = lie("[x,[x,y]] - [[x,y],y]");
  EXPECT_TRUE(satisfies_special_condition(f3));
  EXPECT_TRUE(special_condition_by_expansion(f3));
  EXPECT_TRUE(satisfies_stuffle_condition(f3));
  EXPECT_TRUE(is_stable_derivation(f3));
  auto g = lie("[x,[x,y]]");
  EXPECT_FALSE(is_stable_derivation(g));
  EXPECT_FALSE(is_stable_derivation(lie("[x,y]")));
}

TEST(Conditions, TwoRoutesForSpecialCondition) {
  grt::testing::Rng rng(41);
  for (int n = 2; n <= 7; ++n) {
    for (const auto& b : special_basis(n)) {
      EXPECT_TRUE(special_condition_by_expansion(b.f()));
      EXPECT_TRUE(satisfies_special_condition(b.f()));
    }
    for (int i = 0; i < 20; ++i) {
      auto f = grt::testing::random_homogeneous(rng, XY(), n);
      EXPECT_EQ(satisfies_special_condition(f), special_condition_by_expansion(f)) << to_string(f);
    }
  }
}

TEST(Conditions, StuffleAgreesWithTensorOracle) {
  grt::testing::Rng rng(43);
  for (int n = 2; n <= 8; ++n) {
    for (const auto& b : special_basis(n)) EXPECT_TRUE(grt::testing::stuffle_oracle(b.f())) << n;
    for (int i = 0; i < 20; ++i) {
      auto f = grt::testing::random_homogeneous(rng, XY(), n);
      EXPECT_EQ(satisfies_stuffle_condition(f), grt::testing::stuffle_oracle(f)) << to_string(f);
    }
  }
}

TEST(Basis, LowDegreeDimensions) {
  const std::vector<std::size_t> expected{0, 1, 0, 1, 0, 1, 1, 1, 1, 2, 2};
  for (int n = 2; n <= 12; ++n)
    EXPECT_EQ(special_basis(n).size(), expected[static_cast<std::size_t>(n - 2)]) << n;
}

TEST(Basis, MatchesIndependentRationalSystem) {
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(grt::testing::stable_dim_oracle(n), special_basis(n).size()) << n;
}

TEST(Basis, ModularDimensionsAgree) {
  for (int n = 2; n <= 11; ++n)
    for (std::uint64_t p : {23ull, 101ull, 1000003ull})
      EXPECT_EQ(stable_dimension_mod(n, p), special_basis(n).size()) << n << " mod " << p;
  EXPECT_THROW(stable_dimension_mod(5, 24), Error);
}

TEST(Basis, PrimitiveAndNormalized) {
  for (int n = 3; n <= 11; ++n)
    for (const auto& b : special_basis(n)) {
      auto v = primitive(coords(b.f(), n));
      std::vector<Rational> back(v.begin(), v.end());
      EXPECT_EQ(back, coords(b.f(), n));
      EXPECT_TRUE(is_stable_derivation(b.f()));
    }
}

TEST(Basis, DegreeBounds) {
  EXPECT_THROW(special_basis(1), Error);
  EXPECT_THROW(special_basis(17), Error);
  EXPECT_THROW(stable_derivation_system(0), Error);
}

TEST(Soule, Generators) {
  EXPECT_EQ(soule_generator(3).f(), lie("[x,[x,y]] - [[x,y],y]"));
  EXPECT_EQ(coords(soule_generator(5).f(), 5), rats({2, -4, 3, 4, 1, -2}));
  for (int m : {3, 5, 7, 9}) {
    auto f = soule_generator(m).f();
    Word lead(static_cast<std::size_t>(m - 1), 0);
    lead.push_back(1);
    ASSERT_TRUE(f.coefficient(lead).has_value());
    EXPECT_GT(sgn(*f.coefficient(lead)), 0);
  }
}

TEST(Soule, Errors) {
  try {
    soule_generator(4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Precondition);
  }
  try {
    soule_generator(11);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOneDimensional);
  }
}

TEST(Bracket, ThreeFiveIsNonzeroAndOuter) {
  auto b = ihara_bracket(soule_generator(3), soule_generator(5));
  EXPECT_EQ(b.degree(), 8);
  EXPECT_FALSE(b.f().is_zero());
  EXPECT_TRUE(is_stable_derivation(b.f()));
  auto d = b.derivation();
  // D_f is inner only if it equals ad(v) for some v of degree 8, and ad(v)(x) = 0 forces v = 0.
  auto basis = lyndon_words(*XY(), 8);
  RatMatrix m(0, basis.size() + 1);
  for (const auto& gen : {std::string("x"), std::string("y")}) {
    auto target = gen == "x" ? d.image_x() : d.image_y();
    for (const auto& w : lyndon_words(*XY(), 9)) {
      std::vector<Rational> row;
      for (const auto& v : basis)
        row.push_back(bracket(LieElement::basis(XY(), v, 1), generator(XY(), gen))
                          .coefficient(w)
                          .value_or(Rational(0)));
      row.push_back(target.coefficient(w).value_or(Rational(0)));
      m.append_row(row);
    }
  }
  RatMatrix lhs(0, basis.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    r.pop_back();
    lhs.append_row(r);
  }
  EXPECT_GT(rank(m), rank(lhs));
}

TEST(Bracket, AntisymmetryAndDegree) {
  auto f3 = soule_generator(3), f5 = soule_generator(5);
  auto ab = ihara_bracket(f3, f5), ba = ihara_bracket(f5, f3);
  EXPECT_EQ(ab.f(), -ba.f());
  EXPECT_TRUE(ihara_bracket(f3, f3).f().is_zero());
  EXPECT_EQ(ihara_bracket(f3, f3).degree(), 6);
}

TEST(Bracket, RejectsNonMembers) {
  IharaElement bad(lie("[x,[x,y]]"));
  try {
    ihara_bracket(bad, soule_generator(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Precondition);
  }
}

TEST(Bracket, Jacobi) {
  auto f3 = soule_generator(3).f(), f5 = soule_generator(5).f(), f7 = soule_generator(7).f();
  auto br = [](const LieElement& a, const LieElement& b) { return ihara_bracket_of(a, b); };
  auto sum = br(f3, br(f5, f7)) + br(f5, br(f7, f3)) + br(f7, br(f3, f5));
  EXPECT_TRUE(sum.is_zero());
}

TEST(Bracket, ModularRecomputationMatches) {
  auto f3 = soule_generator(3).f(), f5 = soule_generator(5).f();
  EXPECT_EQ(ihara_bracket_of(reduce_mod(f3, 691), reduce_mod(f5, 691)),
            reduce_mod(ihara_bracket_of(f3, f5), 691));
}

TEST(Congruence, DivisibleAtSixNineOne) {
  auto start = std::chrono::steady_clock::now();
  auto r = ihara_691_congruence(691);
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_TRUE(r.divisible);
  EXPECT_TRUE(r.nondivisible_coefficients.empty());
  ASSERT_TRUE(r.modular_check.has_value());
  EXPECT_TRUE(*r.modular_check);
  EXPECT_FALSE(r.sign_change.has_value());
  Integer content = 0;
  for (const auto& [w, c] : r.coefficients) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  EXPECT_EQ(content, 691);
  EXPECT_LT(secs, 60.0);
}

TEST(Congruence, NotDivisibleModFive) {
  auto r = ihara_691_congruence(5);
  EXPECT_FALSE(r.divisible);
  EXPECT_FALSE(r.nondivisible_coefficients.empty());
  ASSERT_TRUE(r.modular_check.has_value());
  EXPECT_FALSE(*r.modular_check);
  EXPECT_FALSE(r.sign_change.has_value());
}

TEST(Congruence, SignSearchRepairsFlippedSign) {
  auto f3 = soule_generator(3), f5 = soule_generator(5), f7 = soule_generator(7),
       f9 = soule_generator(9);
  auto r = check_bracket_congruence({{Integer(2), f3, f9}, {Integer(27), f5, f7}}, Integer(691));
  EXPECT_FALSE(r.divisible);
  ASSERT_TRUE(r.sign_change.has_value());
  EXPECT_EQ(*r.sign_change, (std::vector<int>{1, -1}));
}

TEST(Congruence, Errors) {
  auto f3 = soule_generator(3), f5 = soule_generator(5);
  try {
    check_congruence({{Integer(1), f3}, {Integer(1), f5}}, Integer(7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedDegrees);
  }
  EXPECT_THROW(check_congruence({{Integer(1), f3}}, Integer(1)), Error);
  auto ok = check_congruence({{Integer(7), f3}}, Integer(7));
  EXPECT_TRUE(ok.divisible);
}

TEST(Freeness, TableMatchesModel) {
  auto rows = freeness_table(12, 2);
  ASSERT_EQ(rows.size(), 11u);
  for (const auto& r : rows) {
    EXPECT_EQ(Integer(static_cast<unsigned long>(r.dimension)), r.free_model) << r.degree;
  }
  EXPECT_EQ(rows.front().degree, 2);
  EXPECT_EQ(rows.back().degree, 12);
}

TEST(Freeness, ThreadCountDoesNotChangeResult) {
  auto a = freeness_table(10, 1), b = freeness_table(10, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].degree, b[i].degree);
    EXPECT_EQ(a[i].dimension, b[i].dimension);
  }
}

TEST(Freeness, Caps) {
  EXPECT_THROW(freeness_table(13), Error);
  EXPECT_THROW(freeness_table(12, 1, 17), Error);
  EXPECT_TRUE(freeness_table(1).empty());
}

TEST(Properties, IharaBracketLaws) {
  auto r = grt::testing::ihara_bracket_laws(4001, 200);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
}
