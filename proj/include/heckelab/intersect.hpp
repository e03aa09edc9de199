#pragma once

// Fundamental intersection numbers N(n, k) as Laurent polynomials in p,
// together with the one-sided untwisted integrals and the blow-up recursion
// residual used to re-derive the closed form inductively.

#include <algorithm>
#include <string>

#include "heckelab/hecke.hpp"

namespace heckelab {

inline constexpr const char* kP = "p";

// Dimension of Gr(n,k) x Gr(n,k-1): (2k-1)n - 2k(k-1) - 1.
inline int dim_d(int n, int k) {
  require_range(1 <= k && k <= n, "dim_d(" + std::to_string(n) + "," + std::to_string(k) +
                                      ") needs 1 <= k <= n");
  return (2 * k - 1) * n - 2 * k * (k - 1) - 1;
}

// [n choose r]_{p^2}
inline LaurentPoly gaussian_binomial_p2(int n, int r) {
  return substitute(gaussian_binomial(n, r), kQ, LaurentPoly::var(kP, 2));
}

inline int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

// N(n,k) = (-1)^(n-1) sum_{delta=0}^{min(k-1, n-k)} (n - 2 delta) p^d(n-2delta, k-delta) [n choose delta]_{p^2}
inline LaurentPoly fundamental_number(int n, int k) {
  require_range(1 <= k && k <= n, "fundamental_number(" + std::to_string(n) + "," +
                                      std::to_string(k) + ") needs 1 <= k <= n");
  LaurentPoly sum;
  for (int delta = 0; delta <= std::min(k - 1, n - k); ++delta)
    sum += LaurentPoly::var(kP, dim_d(n - 2 * delta, k - delta)).scaled(n - 2 * delta) *
           gaussian_binomial_p2(n, delta);
  return sum.scaled(sign_pow(n - 1));
}

// I(n,k) = p^(2k-n-1) N(n,k): the integral with the twist moved onto one side.
inline LaurentPoly untwisted_integral(int n, int k) {
  require_range(1 <= k && k <= n, "untwisted_integral needs 1 <= k <= n");
  return LaurentPoly::var(kP, 2 * k - n - 1) * fundamental_number(n, k);
}

// I'(n,k) = p^(n+1-2k) N(n,k): the variant with the twist on the other factor.
inline LaurentPoly untwisted_prime_integral(int n, int k) {
  require_range(1 <= k && k <= n, "untwisted_prime_integral needs 1 <= k <= n");
  return LaurentPoly::var(kP, n + 1 - 2 * k) * fundamental_number(n, k);
}

// I(n,k) - I'(n,k-1); equals (-1)^(n-1) (n-2k+2) [n choose k-1]_{p^2} when the
// closed form is consistent with the blow-up induction.
inline LaurentPoly recursion_residual(int n, int k) {
  require_range(2 <= k && 2 * k <= n + 1, "recursion_residual(" + std::to_string(n) + "," +
                                              std::to_string(k) + ") needs 2 <= k <= (n+1)/2");
  return untwisted_integral(n, k) - untwisted_prime_integral(n, k - 1);
}

// The predicted residual, computed without touching N.
inline LaurentPoly expected_recursion_residual(int n, int k) {
  return gaussian_binomial_p2(n, k - 1).scaled(sign_pow(n - 1) * (n - 2 * k + 2));
}

// d(n-2delta, k-delta) + 2k-n-1 == 2(k-delta-1)(n-k-delta+1)
inline bool exponent_identity_check(int n, int k, int delta) {
  return dim_d(n - 2 * delta, k - delta) + 2 * k - n - 1 ==
         2 * (k - delta - 1) * (n - k - delta + 1);
}

}  // namespace heckelab
