#pragma once

// The q-deformed matrix M_n(q) over Z[q^+-1, alpha_1..alpha_n], the 2n x 2n
// resultant matrix of prod(x + q^-1 alpha_i) and prod(x + q alpha_i), and
// the exact check of the determinant identities linking them.

#include <string>
#include <vector>

#include "heckelab/matrix_m.hpp"
#include "heckelab/poly_matrix.hpp"

namespace heckelab {

// q^(r-1) + q^(r-3) + ... + q^(1-r)
inline LaurentPoly q_bracket(int r) {
  require_range(r >= 1, "q_bracket(" + std::to_string(r) + ") needs r >= 1");
  LaurentPoly out;
  for (int e = r - 1; e >= 1 - r; e -= 2) out += LaurentPoly::var(kQ, e);
  return out;
}

inline std::vector<std::string> alpha_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(SatakeSpec::alpha_name(i));
  return names;
}

// Which second index the strictly lower entries use:
// Corrected = s_delta s_(n+j-i-delta), Printed = s_delta s_(n+j-i+delta)
// (s_k = 0 for k > n).
enum class LowerIndex { Corrected, Printed };

inline PolyMatrix build_M_q(int n, LowerIndex variant = LowerIndex::Corrected) {
  require_range(n >= 1, "build_M_q needs n >= 1");
  const auto names = alpha_names(n);
  std::vector<LaurentPoly> s;
  for (int k = 0; k <= n; ++k) s.push_back(elementary_symmetric(k, names));
  auto sk = [&](int k) { return k <= n ? s[static_cast<std::size_t>(k)] : LaurentPoly{}; };
  PolyMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      LaurentPoly e;
      if (i <= j) {
        for (int d = 0; d <= std::min(i - 1, n - j); ++d)
          e += q_bracket(n + i - j - 2 * d) * sk(j - i + d) * sk(n - d);
      } else {
        for (int d = 0; d <= std::min(j - 1, n - i); ++d) {
          const int second = variant == LowerIndex::Corrected ? n + j - i - d : n + j - i + d;
          e += q_bracket(n + j - i - 2 * d) * sk(d) * sk(second);
        }
      }
      m(i - 1, j - 1) = std::move(e);
    }
  return m;
}

// Rows 0..n-1 carry q^-k s_k, rows n..2n-1 carry q^k s_k, shifted one column per row.
inline PolyMatrix build_resultant(int n) {
  require_range(n >= 1, "build_resultant needs n >= 1");
  const auto names = alpha_names(n);
  PolyMatrix m(2 * n);
  for (int k = 0; k <= n; ++k) {
    const LaurentPoly sk = elementary_symmetric(k, names);
    const LaurentPoly down = LaurentPoly::var(kQ, -k) * sk;
    const LaurentPoly up = LaurentPoly::var(kQ, k) * sk;
    for (int r = 0; r < n; ++r) {
      m(r, r + k) = down;
      m(n + r, r + k) = up;
    }
  }
  return m;
}

// prod_{i,j} (q alpha_j - q^-1 alpha_i)
inline LaurentPoly resultant_product(int n) {
  const auto names = alpha_names(n);
  const LaurentPoly q = LaurentPoly::var(kQ), qi = LaurentPoly::var(kQ, -1);
  LaurentPoly out(1);
  for (const auto& ai : names)
    for (const auto& aj : names) out *= q * LaurentPoly::var(aj) - qi * LaurentPoly::var(ai);
  return out;
}

// alpha_1 ... alpha_n prod_{i != j} (q alpha_i - q^-1 alpha_j)
inline LaurentPoly closed_form_det_M_q(int n) {
  const auto names = alpha_names(n);
  const LaurentPoly q = LaurentPoly::var(kQ), qi = LaurentPoly::var(kQ, -1);
  LaurentPoly out(1);
  for (const auto& a : names) out *= LaurentPoly::var(a);
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < names.size(); ++j)
      if (i != j) out *= q * LaurentPoly::var(names[i]) - qi * LaurentPoly::var(names[j]);
  return out;
}

struct AppendixCCheck {
  bool resultant_product = false;  // det N = prod_{i,j} (q alpha_j - q^-1 alpha_i)
  bool reduction = false;          // det N = (q - q^-1)^n det M
  bool closed_form = false;        // det M = alpha_1..alpha_n prod_{i!=j} (q alpha_i - q^-1 alpha_j)
  bool all() const { return resultant_product && reduction && closed_form; }
};

inline AppendixCCheck verify_appendix_c(int n, int max_n = 4, LowerIndex variant = LowerIndex::Corrected) {
  require_range(n >= 1, "verify_appendix_c needs n >= 1");
  if (n > max_n) throw Oversize("symbolic Appendix C check limited to n <= " + std::to_string(max_n));
  const LaurentPoly det_n = det(build_resultant(n));
  const LaurentPoly det_m = det(build_M_q(n, variant));
  const LaurentPoly factor = (LaurentPoly::var(kQ) - LaurentPoly::var(kQ, -1)).pow(static_cast<unsigned>(n));
  AppendixCCheck c;
  c.resultant_product = det_n == resultant_product(n);
  c.reduction = det_n == factor * det_m;
  c.closed_form = det_m == closed_form_det_M_q(n);
  return c;
}

inline PolyMatrix specialize_q_minus_one(int n, LowerIndex variant = LowerIndex::Corrected) {
  return build_M_q(n, variant).map([](const LaurentPoly& e) { return substitute(e, kQ, LaurentPoly(-1)); });
}

// The integer-coefficient matrix m' with M_pi(i,j) = s_n^-1 p^e(i,j) m'(i,j),
// written in e_k(alpha) so it can be compared with M_n(-1) directly.
inline PolyMatrix reduced_matrix_m_prime(int n) {
  require_range(n >= 1, "reduced_matrix_m_prime needs n >= 1");
  const auto names = alpha_names(n);
  std::vector<LaurentPoly> s;
  for (int k = 0; k <= n; ++k) s.push_back(elementary_symmetric(k, names));
  PolyMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int lo = std::min(i, j), hi = std::max(i, j);
      LaurentPoly e;
      for (int d = 0; d <= std::min(lo - 1, n - hi); ++d) {
        const int c = sign_pow(n + 1 + lo - hi) * (n + lo - hi - 2 * d);
        if (i <= j)
          e += (s[static_cast<std::size_t>(hi - lo + d)] * s[static_cast<std::size_t>(n - d)]).scaled(c);
        else
          e += (s[static_cast<std::size_t>(d)] * s[static_cast<std::size_t>(n + lo - hi - d)]).scaled(c);
      }
      m(i - 1, j - 1) = std::move(e);
    }
  return m;
}

// Renames alpha_i -> beta_i.
inline LaurentPoly alpha_to_beta(const LaurentPoly& f, int n) {
  LaurentPoly g = f;
  for (int i = 1; i <= n; ++i)
    g = substitute(g, SatakeSpec::alpha_name(i), LaurentPoly::var(SatakeSpec::beta_name(i)));
  return g;
}

// det M_n(-1), moved to beta coordinates, equals det(M_pi) p^-(n(n^2-1)/3) s_n^n.
inline bool q_minus_one_matches_det_pi(int n, int max_n = 4) {
  if (n > max_n) throw Oversize("symbolic comparison limited to n <= " + std::to_string(max_n));
  const SatakeSpec sat(n);
  const LaurentPoly lhs = alpha_to_beta(det(specialize_q_minus_one(n)), n);
  const DetPi dp = det_m_pi(n, max_n);
  const LaurentPoly rhs = localized_value(dp.value, sat.beta_names) * LaurentPoly::var(kP, -det_pi_exponent(n)) *
                          sat.s(n).pow(static_cast<unsigned>(n));
  return lhs == rhs;
}

}  // namespace heckelab
