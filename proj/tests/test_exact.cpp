#include <gtest/gtest.h>

#include <random>

#include "heckelab/laurent.hpp"
#include "heckelab/poly_matrix.hpp"

using namespace heckelab;

namespace {

const LaurentPoly q = LaurentPoly::var("q");
const LaurentPoly qi = LaurentPoly::var("q", -1);

LaurentPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& names, int max_deg = 6) {
  std::uniform_int_distribution<int> nterms(0, 4), coef(-5, 5), expo(-max_deg / 2, max_deg / 2);
  std::uniform_int_distribution<std::size_t> nv(1, names.size());
  const std::size_t k = nv(rng);
  std::vector<std::string> vars(names.begin(), names.begin() + static_cast<long>(k));
  std::vector<LaurentPoly::Term> terms;
  for (int t = nterms(rng); t > 0; --t) {
    Exponents e;
    for (std::size_t v = 0; v < k; ++v) e.push_back(expo(rng));
    terms.push_back({e, Integer(coef(rng))});
  }
  return LaurentPoly::from_terms(vars, terms);
}

PolyMatrix random_int_matrix(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-9, 9);
  PolyMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational r = parse_rational("6/-4");
  EXPECT_EQ(numerator(r), -3);
  EXPECT_EQ(denominator(r), 2);
  EXPECT_EQ(to_string(parse_rational(" 10/5 ")), "2");
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, PValuation) {
  EXPECT_EQ(p_valuation(Integer(72), 2), 3);
  EXPECT_EQ(p_valuation(Rational(5, 27), 3), -3);
  EXPECT_EQ(ipow(Integer(3), 40), Integer("12157665459056928801"));
}

TEST(LaurentPoly, DifferenceOfSquares) { EXPECT_EQ((q + 1) * (q - 1), q * q - 1); }

TEST(LaurentPoly, InverseMonomial) {
  const LaurentPoly x = LaurentPoly::var("x"), xi = LaurentPoly::var("x", -1);
  EXPECT_EQ(x * xi, LaurentPoly(1));
  EXPECT_TRUE((x * xi).vars().empty());
}

TEST(LaurentPoly, BalancedSquare) {
  EXPECT_EQ((q + qi).pow(2), q.pow(2) + 2 + qi.pow(2));
  EXPECT_EQ((q + qi).pow(2).str(), "q^2 + 2 + q^-2");
}

TEST(LaurentPoly, CanonicalStorage) {
  const LaurentPoly f = LaurentPoly::from_terms({"y", "x"}, {{{1, 0}, Integer(2)}, {{0, 1}, Integer(3)}, {{1, 0}, Integer(-2)}});
  EXPECT_EQ(f, LaurentPoly::var("x").scaled(3));
  EXPECT_EQ(f.vars(), std::vector<std::string>{"x"});
  for (std::size_t i = 1; i < f.terms().size(); ++i) EXPECT_LT(f.terms()[i - 1].exp, f.terms()[i].exp);
  EXPECT_THROW(LaurentPoly::from_terms({"x", "x"}, {}), Error);
}

TEST(LaurentPoly, BigCoefficients) {
  const LaurentPoly f = (q + 1).pow(80);
  EXPECT_EQ(f.terms()[40].coef, Integer("107507208733336176461620"));
  EXPECT_EQ(evaluate(f, {{"q", Rational(1)}}), Rational(Integer(1) << 80));
}

TEST(LaurentPoly, RingAxiomsRandom) {
  std::mt19937_64 rng(20240611);
  const std::vector<std::string> names{"a", "p", "q"};
  for (int trial = 0; trial < 1500; ++trial) {
    const LaurentPoly a = random_poly(rng, names), b = random_poly(rng, names), c = random_poly(rng, names);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, LaurentPoly{});
    ASSERT_EQ(a * LaurentPoly(1), a);
    ASSERT_EQ(-(-a), a);
  }
}

TEST(LaurentPoly, ExactDivision) {
  std::mt19937_64 rng(7);
  const std::vector<std::string> names{"p", "q"};
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = random_poly(rng, names), b = random_poly(rng, names);
    if (b.is_zero()) continue;
    const auto quotient = exact_divide(a * b, b);
    ASSERT_TRUE(quotient.has_value());
    ASSERT_EQ(*quotient, a);
  }
  EXPECT_FALSE(exact_divide(q + 2, q + 1).has_value());
  EXPECT_THROW(divide_exact(q + 2, q + 1), NonExactDivision);
}

TEST(Substitute, SpecExamples) {
  const LaurentPoly p = LaurentPoly::var("p");
  EXPECT_EQ(substitute(q * q + q + 1, "q", p * p), p.pow(4) + p.pow(2) + 1);
  EXPECT_EQ(substitute(q + qi, "q", LaurentPoly(-1)), LaurentPoly(-2));
  EXPECT_THROW(substitute(qi, "q", q + 1), NegativeExponentSubstitution);
  EXPECT_EQ(substitute(p, "q", q + 1), p);
}

TEST(Substitute, IdentityRandom) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const LaurentPoly f = random_poly(rng, {"a", "p", "q"});
    ASSERT_EQ(substitute(f, "q", q), f);
    ASSERT_EQ(substitute(f, "a", LaurentPoly::var("a")), f);
  }
}

TEST(Substitute, EvaluateComposes) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> val(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly f = random_poly(rng, {"a", "p", "q"});
    const LaurentPoly g = random_poly(rng, {"a", "p"}, 4);
    std::map<std::string, Rational> assign{{"a", Rational(val(rng), 3)}, {"p", Rational(-val(rng))}};
    const Rational gv = evaluate(g, assign);
    if (gv == 0 && f.min_exponent("q") < 0) continue;
    LaurentPoly composed;
    try {
      composed = substitute(f, "q", g);
    } catch (const NegativeExponentSubstitution&) {
      continue;
    }
    auto with_q = assign;
    with_q["q"] = gv;
    ASSERT_EQ(evaluate(composed, assign), evaluate(f, with_q));
  }
}

TEST(Evaluate, SpecExamples) {
  EXPECT_EQ(evaluate(q * q - 1, {{"q", Rational(3)}}), Rational(8));
  const LaurentPoly a1 = LaurentPoly::var("a1"), a2 = LaurentPoly::var("a2");
  EXPECT_EQ(evaluate(a1 * a2, {{"a1", Rational(2)}, {"a2", Rational(1, 2)}}), Rational(1));
  EXPECT_THROW(evaluate(qi, {{"q", Rational(0)}}), ZeroToNegativePower);
  EXPECT_THROW(evaluate(a1 * a2, {{"a1", Rational(1)}}), MissingAssignment);
  EXPECT_EQ(evaluate(q, {{"q", Rational(0)}}), Rational(0));
}

TEST(ElementarySymmetric, SpecExamples) {
  const LaurentPoly a1 = LaurentPoly::var("a1"), a2 = LaurentPoly::var("a2"), a3 = LaurentPoly::var("a3");
  EXPECT_EQ(elementary_symmetric(0, {"a1", "a2"}), LaurentPoly(1));
  EXPECT_EQ(elementary_symmetric(1, {"a1", "a2", "a3"}), a1 + a2 + a3);
  EXPECT_EQ(elementary_symmetric(2, {"a1", "a2", "a3"}), a1 * a2 + a1 * a3 + a2 * a3);
  EXPECT_EQ(elementary_symmetric(3, {"a1", "a2", "a3"}), a1 * a2 * a3);
  EXPECT_THROW(elementary_symmetric(4, {"a1", "a2", "a3"}), IndexOutOfRange);
  EXPECT_THROW(elementary_symmetric(-1, {"a1"}), IndexOutOfRange);
}

TEST(Det, Identity) { EXPECT_EQ(det(PolyMatrix::identity(3)), LaurentPoly(1)); }

TEST(Det, ResultantRankOne) {
  const LaurentPoly a1 = LaurentPoly::var("a1");
  const PolyMatrix m{{1, qi * a1}, {1, q * a1}};
  EXPECT_EQ(det(m), (q - qi) * a1);
}

TEST(Det, BareissMatchesCofactor) {
  std::mt19937_64 rng(99);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      PolyMatrix m(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = random_poly(rng, {"p", "q"}, 4);
      ASSERT_EQ(det_bareiss(m), det_cofactor(m)) << "n=" << n;
    }
}

TEST(Det, IntegerMatrixMatchesRational) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 30; ++trial) {
      const PolyMatrix m = random_int_matrix(rng, n);
      std::vector<Rational> a;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.push_back(Rational(*m(i, j).constant_value()));
      ASSERT_EQ(Rational(*det_cofactor(m).constant_value()), det_rational(a, n));
      ASSERT_EQ(det_bareiss(m), det_cofactor(m));
    }
}

TEST(Det, Multiplicative) {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 100; ++trial) {
      const PolyMatrix a = random_int_matrix(rng, n), b = random_int_matrix(rng, n);
      ASSERT_EQ(det(a * b), det(a) * det(b));
    }
}

TEST(Det, SingularAndPivoting) {
  const PolyMatrix singular{{q, q * q}, {1, q}};
  EXPECT_TRUE(det_bareiss(singular).is_zero());
  const PolyMatrix needs_swap{{0, 1, 0}, {1, 0, 0}, {0, 0, q}};
  EXPECT_EQ(det_bareiss(needs_swap), -q);
  EXPECT_EQ(det_cofactor(needs_swap), -q);
}
