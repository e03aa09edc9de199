#include <gtest/gtest.h>

#include "heckelab/intersect.hpp"

using namespace heckelab;

namespace {
const LaurentPoly p = LaurentPoly::var("p");
}

TEST(DimD, Values) {
  EXPECT_EQ(dim_d(1, 1), 0);
  EXPECT_EQ(dim_d(2, 1), 1);
  EXPECT_EQ(dim_d(3, 2), 4);
  EXPECT_EQ(dim_d(4, 2), 7);
  EXPECT_THROW(dim_d(3, 0), IndexOutOfRange);
  EXPECT_THROW(dim_d(3, 4), IndexOutOfRange);
}

TEST(FundamentalNumber, SmallValues) {
  EXPECT_EQ(fundamental_number(1, 1), LaurentPoly(1));
  EXPECT_EQ(fundamental_number(2, 1), p.scaled(-2));
  EXPECT_EQ(fundamental_number(2, 2), p.scaled(-2));
  EXPECT_EQ(fundamental_number(3, 1), p.pow(2).scaled(3));
  // N(3,2) = 3p^4 + [3 choose 1]_{p^2} = 3p^4 + p^4 + p^2 + 1
  EXPECT_EQ(fundamental_number(3, 2), p.pow(4).scaled(4) + p.pow(2) + 1);
  EXPECT_THROW(fundamental_number(3, 4), IndexOutOfRange);
}

// The closed form must agree with the entries printed in the n = 2, 3, 4
// example matrices after the q = p^2 expansion of their product terms; the
// diagonal entry (1,1) of each is just N(n,1).
TEST(FundamentalNumber, MatchesFirstDiagonalEntry) {
  EXPECT_EQ(fundamental_number(2, 1), p.scaled(-2));
  EXPECT_EQ(fundamental_number(3, 1), p.pow(2).scaled(3));
  EXPECT_EQ(fundamental_number(4, 1), p.pow(3).scaled(-4));
}

TEST(FundamentalNumber, Duality) {
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_EQ(fundamental_number(n, k), fundamental_number(n, n + 1 - k)) << n << "," << k;
}

TEST(FundamentalNumber, BaseCase) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(untwisted_integral(n, 1), LaurentPoly(sign_pow(n - 1) * n));
}

TEST(FundamentalNumber, RecursionResidual) {
  for (int n = 1; n <= 12; ++n)
    for (int k = 2; 2 * k <= n + 1; ++k)
      EXPECT_EQ(recursion_residual(n, k), expected_recursion_residual(n, k)) << n << "," << k;
  EXPECT_THROW(recursion_residual(3, 1), IndexOutOfRange);
  EXPECT_THROW(recursion_residual(4, 3), IndexOutOfRange);
}

// Base case plus recursion determine I(n,k) for k <= (n+1)/2; rebuild N that
// way and compare with the closed form, using duality for the rest.
TEST(FundamentalNumber, RederivedFromRecursion) {
  for (int n = 1; n <= 12; ++n) {
    std::vector<LaurentPoly> rebuilt(static_cast<std::size_t>(n) + 1);
    rebuilt[1] =LaurentPoly::var("p", n - 1) * LaurentPoly(sign_pow(n - 1) * n);
    for (int k = 2; 2 * k <= n + 1; ++k) {
      const LaurentPoly prime_prev = LaurentPoly::var("p", n + 1 - 2 * (k - 1)) * rebuilt[static_cast<std::size_t>(k - 1)];
      const LaurentPoly integral = prime_prev + expected_recursion_residual(n, k);
      rebuilt[static_cast<std::size_t>(k)] = LaurentPoly::var("p", n + 1 - 2 * k) * integral;
    }
    for (int k = 1; 2 * k <= n + 1; ++k) {
      EXPECT_EQ(rebuilt[static_cast<std::size_t>(k)], fundamental_number(n, k)) << n << "," << k;
      EXPECT_EQ(rebuilt[static_cast<std::size_t>(k)], fundamental_number(n, n + 1 - k));
    }
  }
}

TEST(ExponentIdentity, Exhaustive) {
  EXPECT_TRUE(exponent_identity_check(3, 2, 0));
  for (int n = 1; n <= 12; ++n) {
    EXPECT_TRUE(exponent_identity_check(n, 1, 0));
    for (int k = 1; k <= n; ++k)
      for (int d = 0; d <= std::min(k - 1, n - k); ++d) EXPECT_TRUE(exponent_identity_check(n, k, d));
  }
}

TEST(GaussianBinomialP2, IsSubstitution) {
  EXPECT_EQ(gaussian_binomial_p2(2, 1), p.pow(2) + 1);
  EXPECT_EQ(gaussian_binomial_p2(3, 1), p.pow(4) + p.pow(2) + 1);
}
