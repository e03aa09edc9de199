#include <gtest/gtest.h>

#include "heckelab/resultant.hpp"

using namespace heckelab;

namespace {

const LaurentPoly q = LaurentPoly::var("q");
const LaurentPoly qi = LaurentPoly::var("q", -1);
const LaurentPoly a1 = LaurentPoly::var("a1");
const LaurentPoly a2 = LaurentPoly::var("a2");

LaurentPoly swap_vars(const LaurentPoly& f, const std::string& x, const std::string& y) {
  const LaurentPoly tmp = substitute(f, x, LaurentPoly::var("tmp"));
  return substitute(substitute(tmp, y, LaurentPoly::var(x)), "tmp", LaurentPoly::var(y));
}

}  // namespace

TEST(QBracket, SpecExamples) {
  EXPECT_EQ(q_bracket(1), LaurentPoly(1));
  EXPECT_EQ(q_bracket(2), q + qi);
  EXPECT_EQ(q_bracket(3), q * q + 1 + qi * qi);
  EXPECT_THROW(q_bracket(0), IndexOutOfRange);
}

TEST(QBracket, Specializations) {
  for (int r = 1; r <= 24; ++r) {
    const LaurentPoly b = q_bracket(r);
    EXPECT_EQ(b.size(), static_cast<std::size_t>(r));
    EXPECT_EQ(evaluate(b, {{"q", Rational(1)}}), Rational(r));
    EXPECT_EQ(evaluate(b, {{"q", Rational(-1)}}), Rational(r * sign_pow(r - 1)));
    EXPECT_EQ(substitute(b, "q", qi), b);
    // (q - q^-1) q_r = q^r - q^-r
    EXPECT_EQ((q - qi) * b, LaurentPoly::var("q", r) - LaurentPoly::var("q", -r));
  }
}

TEST(MatrixMq, SpecExamples) {
  EXPECT_EQ(build_M_q(1), PolyMatrix{{a1}});
  const PolyMatrix m2 = build_M_q(2);
  EXPECT_EQ(m2(0, 1), (a1 + a2) * a1 * a2);
  EXPECT_EQ(m2(0, 0), (q + qi) * a1 * a2);
  EXPECT_EQ(m2(1, 0), a1 + a2);
  EXPECT_EQ(m2(1, 1), (q + qi) * a1 * a2);
}

TEST(MatrixMq, VariantsAgreeUpToThree) {
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(build_M_q(n, LowerIndex::Printed), build_M_q(n)) << n;
  EXPECT_NE(build_M_q(4, LowerIndex::Printed), build_M_q(4));
  // Entry (3,2) of the n = 4 example needs s_1 s_2, as the corrected index gives.
  const auto names = alpha_names(4);
  const LaurentPoly s1 = elementary_symmetric(1, names), s2 = elementary_symmetric(2, names),
                    s3 = elementary_symmetric(3, names);
  EXPECT_EQ(build_M_q(4)(2, 1), q_bracket(3) * s3 + s1 * s2);
}

TEST(Resultant, RankOne) {
  EXPECT_EQ(build_resultant(1), (PolyMatrix{{1, qi * a1}, {1, q * a1}}));
  EXPECT_EQ(det(build_resultant(1)), (q - qi) * a1);
}

TEST(Resultant, EqualRoots) {
  for (int n = 1; n <= 3; ++n) {
    PolyMatrix m = build_resultant(n);
    for (int i = 2; i <= n; ++i)
      m = m.map([&](const LaurentPoly& e) { return substitute(e, SatakeSpec::alpha_name(i), a1); });
    EXPECT_EQ(det(m), ((q - qi) * a1).pow(static_cast<unsigned>(n * n))) << n;
  }
}

TEST(AppendixC, AllIdentitiesHold) {
  for (int n = 1; n <= 4; ++n) {
    const AppendixCCheck c = verify_appendix_c(n);
    EXPECT_TRUE(c.resultant_product) << n;
    EXPECT_TRUE(c.reduction) << n;
    EXPECT_TRUE(c.closed_form) << n;
  }
  EXPECT_THROW(verify_appendix_c(5), Oversize);
}

TEST(AppendixC, RankFiveWithRaisedLimit) {
  EXPECT_TRUE(verify_appendix_c(5, 5).all());
  const AppendixCCheck c = verify_appendix_c(5, 5, LowerIndex::Printed);
  EXPECT_TRUE(c.resultant_product);
  EXPECT_FALSE(c.closed_form);
  EXPECT_TRUE(q_minus_one_matches_det_pi(5, 5));
}

TEST(AppendixC, PrintedIndexFailsAtFour) {
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(verify_appendix_c(n, 4, LowerIndex::Printed).all());
  const AppendixCCheck c = verify_appendix_c(4, 4, LowerIndex::Printed);
  EXPECT_TRUE(c.resultant_product);
  EXPECT_FALSE(c.reduction);
  EXPECT_FALSE(c.closed_form);
}

TEST(AppendixC, SymmetricInAlphas) {
  for (int n = 2; n <= 3; ++n) {
    const LaurentPoly d = det(build_M_q(n));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        EXPECT_EQ(swap_vars(d, SatakeSpec::alpha_name(i), SatakeSpec::alpha_name(j)), d);
  }
}

TEST(AppendixC, CollisionOnlyKillsAtMinusOne) {
  for (int n = 2; n <= 3; ++n) {
    const LaurentPoly generic = substitute(det(build_M_q(n)), "a2", a1);
    EXPECT_FALSE(generic.is_zero());
    const LaurentPoly at_minus_one = substitute(det(specialize_q_minus_one(n)), "a2", a1);
    EXPECT_TRUE(at_minus_one.is_zero());
  }
}

TEST(QMinusOne, MatchesReducedMatrix) {
  const PolyMatrix m2 = specialize_q_minus_one(2);
  EXPECT_EQ(m2(0, 0), (a1 * a2).scaled(-2));
  EXPECT_EQ(specialize_q_minus_one(1), PolyMatrix{{a1}});
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(specialize_q_minus_one(n), reduced_matrix_m_prime(n)) << n;
}

TEST(QMinusOne, BridgesToSatakeDeterminant) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(q_minus_one_matches_det_pi(n)) << n;
}
