#pragma once

// The supersingular intersection matrix M in two presentations: as products
// of minuscule Hecke operators T^(a) T^(b) S^-1 with signed p-power
// coefficients, and directly in the R^(a,b) S^-1 basis with N(n,k)
// coefficients. Plus its specialisation M_pi at a Satake parameter, where
// T^(i) acts by a^(i) = p^(i(n-i)) e_i(beta).

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "heckelab/hecke.hpp"
#include "heckelab/intersect.hpp"
#include "heckelab/poly_matrix.hpp"

namespace heckelab {

// coef * T^(a) T^(b) S^-1 with a <= b.
struct ProductTerm {
  LaurentPoly coef;
  int a = 0;
  int b = 0;
  friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

template <class Entry>
struct SquareMatrix {
  int n = 0;
  std::vector<Entry> entries;  // row-major, 0-based

  SquareMatrix() = default;
  explicit SquareMatrix(int size, Entry fill = Entry{})
      : n(size), entries(static_cast<std::size_t>(size) * size, fill) {}

  Entry& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
  const Entry& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
};

using FormalMatrix = SquareMatrix<std::vector<ProductTerm>>;
using HeckeMatrix = SquareMatrix<HeckeElement>;

// Entry (i, j), 1-based, as a list of product terms (one per delta).
inline std::vector<ProductTerm> intersection_entry_terms(int n, int i, int j) {
  require_range(n >= 1 && 1 <= i && i <= n && 1 <= j && j <= n, "matrix entry out of range");
  const bool upper = i <= j;
  const int lo = std::min(i, j), hi = std::max(i, j);
  std::vector<ProductTerm> out;
  for (int delta = 0; delta <= std::min(lo - 1, n - hi); ++delta) {
    const int m = n + lo - hi - 2 * delta;
    LaurentPoly coef = LaurentPoly::var(kP, dim_d(m, lo - delta)).scaled(sign_pow(n + 1 + lo - hi) * m);
    if (upper)
      out.push_back({std::move(coef), hi - lo + delta, n - delta});
    else
      out.push_back({std::move(coef), delta, n + lo - hi - delta});
  }
  return out;
}

inline FormalMatrix intersection_matrix_terms(int n) {
  require_range(n >= 1, "matrix rank must be positive");
  FormalMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.at(i - 1, j - 1) = intersection_entry_terms(n, i, j);
  return m;
}

// M with every T^(a) T^(b) S^-1 expanded in the double-coset basis.
// Coefficients are Laurent in p and q jointly.
inline HeckeMatrix build_matrix_hecke(int n) {
  const FormalMatrix f = intersection_matrix_terms(n);
  HeckeMatrix m(n, HeckeElement(n));
  for (int k = 0; k < n * n; ++k)
    for (const auto& t : f.entries[static_cast<std::size_t>(k)])
      m.entries[static_cast<std::size_t>(k)] += t.coef * s_twist(minuscule_product(n, t.a, t.b), -1);
  return m;
}

// M written directly in the R^(a,b) S^-1 basis with coefficients N(., .).
inline HeckeMatrix build_matrix_R(int n) {
  require_range(n >= 1, "matrix rank must be positive");
  HeckeMatrix m(n, HeckeElement(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int delta = 0; delta <= std::min(i - 1, n - j); ++delta) {
        const LaurentPoly c = fundamental_number(n + i - j - 2 * delta, i - delta);
        m.at(i - 1, j - 1).add(r_type(n, j - i + delta, n - delta).shifted(-1), c);
        if (i < j) m.at(j - 1, i - 1).add(r_type(n, delta, n + i - j - delta).shifted(-1), c);
      }
  return m;
}

// Residue field of the unramified quadratic extension: q = p^2.
inline HeckeMatrix specialize_q_to_p2(const HeckeMatrix& m) {
  HeckeMatrix out = m;
  for (auto& e : out.entries)
    e = e.map_coefficients([](const LaurentPoly& c) { return substitute(c, kQ, LaurentPoly::var(kP, 2)); });
  return out;
}

inline bool compare_forms(int n) { return specialize_q_to_p2(build_matrix_hecke(n)) == build_matrix_R(n); }

// Satake coordinates: beta_i = alpha_i / p^(n-1), s_i = e_i(beta),
// a^(i) = p^(i(n-i)) s_i.
struct SatakeSpec {
  int n = 0;
  std::vector<std::string> beta_names;

  explicit SatakeSpec(int rank) : n(rank) {
    require_range(rank >= 1, "Satake rank must be positive");
    for (int i = 1; i <= n; ++i) beta_names.push_back(beta_name(i));
  }

  static std::string beta_name(int i) { return "b" + std::to_string(i); }
  static std::string alpha_name(int i) { return "a" + std::to_string(i); }

  LaurentPoly s(int i) const { return elementary_symmetric(i, beta_names); }
  LaurentPoly a(int i) const {
    require_range(0 <= i && i <= n, "Hecke eigenvalue index out of range");
    return LaurentPoly::var(kP, i * (n - i)) * s(i);
  }
  LaurentPoly beta(int i) const { return LaurentPoly::var(beta_name(i)); }
  LaurentPoly alpha(int i) const { return LaurentPoly::var(kP, n - 1) * beta(i); }
};

// Coefficients of X^n, ..., X^0 of X^n + sum_i (-1)^i (p^2)^(i(i-1)/2) a^(i) X^(n-i).
inline std::vector<LaurentPoly> hecke_char_poly(int n) {
  const SatakeSpec sat(n);
  std::vector<LaurentPoly> c;
  for (int i = 0; i <= n; ++i) c.push_back((LaurentPoly::var(kP, i * (i - 1)) * sat.a(i)).scaled(sign_pow(i)));
  return c;
}

// num * s_n^power. s_n = beta_1 ... beta_n is a monomial, so this is just a
// Laurent polynomial written with the largest possible power of s_n pulled
// out: num has nonnegative beta exponents and is not divisible by s_n.
struct LocalizedEntry {
  LaurentPoly num;
  int sn_power = 0;
  friend bool operator==(const LocalizedEntry&, const LocalizedEntry&) = default;
};

inline LocalizedEntry normalize_localized(const LaurentPoly& value, const std::vector<std::string>& betas) {
  if (value.is_zero()) return {};
  int k = std::numeric_limits<int>::max();
  for (const auto& b : betas) k = std::min(k, value.min_exponent(b));
  LaurentPoly sn_inv(1);
  for (const auto& b : betas) sn_inv *= LaurentPoly::var(b, -k);
  return {value * sn_inv, k};
}

inline LaurentPoly localized_value(const LocalizedEntry& e, const std::vector<std::string>& betas) {
  LaurentPoly sn(1);
  for (const auto& b : betas) sn *= LaurentPoly::var(b, e.sn_power);
  return e.num * sn;
}

using LocalizedMatrix = SquareMatrix<LocalizedEntry>;

// M_pi: T^(i) -> a^(i), S^-1 -> 1 / s_n.
inline LocalizedMatrix specialize_matrix_pi(int n) {
  const SatakeSpec sat(n);
  const LaurentPoly sn_inv = divide_exact(LaurentPoly(1), sat.s(n));
  const FormalMatrix f = intersection_matrix_terms(n);
  std::vector<LaurentPoly> a;
  for (int i = 0; i <= n; ++i) a.push_back(sat.a(i));
  LocalizedMatrix m(n);
  for (int k = 0; k < n * n; ++k) {
    LaurentPoly num;
    for (const auto& t : f.entries[static_cast<std::size_t>(k)])
      num += t.coef * a[static_cast<std::size_t>(t.a)] * a[static_cast<std::size_t>(t.b)];
    m.entries[static_cast<std::size_t>(k)] = normalize_localized(num * sn_inv, sat.beta_names);
  }
  return m;
}

inline int det_pi_exponent(int n) { return n * (n * n - 1) / 3; }

// p^(n(n^2-1)/3) prod_{i<j} (beta_i - beta_j)^2 / s_n^(n-1).
inline LocalizedEntry closed_form_det_pi(int n) {
  const SatakeSpec sat(n);
  LaurentPoly v = LaurentPoly::var(kP, det_pi_exponent(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) v *= (sat.beta(i) - sat.beta(j)).pow(2);
  return normalize_localized(v * sat.s(n).unit_inverse().pow(static_cast<unsigned>(n - 1)), sat.beta_names);
}

struct DetPi {
  LocalizedEntry value;
  int sign = 0;  // value = sign * closed form; 0 if neither sign matches
};

inline DetPi det_m_pi(int n, int max_n = 4) {
  require_range(n >= 1, "det_m_pi needs n >= 1");
  if (n > max_n) throw Oversize("symbolic det_m_pi limited to n <= " + std::to_string(max_n));
  const SatakeSpec sat(n);
  const LocalizedMatrix m = specialize_matrix_pi(n);
  PolyMatrix values(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) values(i, j) = localized_value(m.at(i, j), sat.beta_names);
  DetPi out;
  out.value = normalize_localized(det(values), sat.beta_names);
  const LocalizedEntry cf = closed_form_det_pi(n);
  if (out.value == cf)
    out.sign = 1;
  else if (out.value == LocalizedEntry{-cf.num, cf.sn_power})
    out.sign = -1;
  return out;
}

inline Rational evaluate_localized(const LocalizedEntry& e, const std::map<std::string, Rational>& assign,
                                   const std::vector<std::string>& betas) {
  Rational v = evaluate(e.num, assign);
  if (e.sn_power == 0 || v == 0) return v;
  Rational s = 1;
  for (const auto& b : betas) s *= assign.at(b);
  if (s == 0) throw ZeroToNegativePower("s_n vanishes at the given Satake parameters");
  for (int k = 0; k < std::abs(e.sn_power); ++k) v = e.sn_power > 0 ? v * s : v / s;
  return v;
}

inline std::map<std::string, Rational> satake_assignment(const std::vector<Rational>& betas, const Rational& p) {
  std::map<std::string, Rational> assign{{kP, p}};
  for (std::size_t i = 0; i < betas.size(); ++i)
    assign[SatakeSpec::beta_name(static_cast<int>(i) + 1)] = betas[i];
  return assign;
}

// det(M_pi) at numeric Satake parameters, by rational elimination.
inline Rational numeric_det_pi(const std::vector<Rational>& betas, const Rational& p) {
  const int n = static_cast<int>(betas.size());
  const SatakeSpec sat(n);
  const auto assign = satake_assignment(betas, p);
  const LocalizedMatrix m = specialize_matrix_pi(n);
  std::vector<Rational> a;
  for (const auto& e : m.entries) a.push_back(evaluate_localized(e, assign, sat.beta_names));
  return det_rational(std::move(a), n);
}

// e(i,j) = (n+1)(i+j-1) - (i^2 + j^2)
inline int exponent_e(int n, int i, int j) {
  require_range(1 <= i && i <= n && 1 <= j && j <= n, "exponent_e index out of range");
  return (n + 1) * (i + j - 1) - (i * i + j * j);
}

// Every permutation sums e(i, sigma(i)) to n(n^2-1)/3, and each term of
// M_pi's entry (i, j) carries exactly p^e(i,j).
inline bool permutation_sum_check(int n) {
  require_range(1 <= n && n <= 8, "permutation_sum_check limited to 1 <= n <= 8");
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    int s = 0;
    for (int i = 1; i <= n; ++i) s += exponent_e(n, i, sigma[static_cast<std::size_t>(i - 1)]);
    if (s != det_pi_exponent(n)) return false;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (const auto& t : intersection_entry_terms(n, i, j)) {
        const int e = t.coef.max_exponent(kP) + t.a * (n - t.a) + t.b * (n - t.b);
        if (e != exponent_e(n, i, j)) return false;
      }
  return true;
}

// ---- display ----

enum class MatrixFormat { Pretty, Latex };

namespace detail {

inline std::string format_coef(const LaurentPoly& c, bool has_factor, bool latex) {
  // Coefficients here are single monomials k p^e.
  if (c.size() != 1 || c.vars().size() > 1 || (c.vars().size() == 1 && c.vars()[0] != kP))
    return "(" + c.str() + ")";
  const auto& t = c.terms()[0];
  const int e = c.vars().empty() ? 0 : t.exp[0];
  Integer k = t.coef;
  std::string s = k < 0 ? "-" : "";
  if (k < 0) k = -k;
  if (k != 1 || (e == 0 && !has_factor)) s += k.str();
  if (e != 0) {
    s += "p";
    if (e != 1) {
      const std::string es = std::to_string(e);
      s += latex ? (es.size() == 1 ? "^" + es : "^{" + es + "}") : "^" + es;
    }
  }
  return s;
}

inline std::string format_factors(int n, int a, int b, bool latex) {
  std::vector<std::string> f;
  auto op = [&](int r) { return latex ? "T_\\mathfrak{p}^{(" + std::to_string(r) + ")}" : "T^(" + std::to_string(r) + ")"; };
  if (0 < a && a < n) f.push_back(op(a));
  if (0 < b && b < n) f.push_back(op(b));
  const int s_power = (a == n) + (b == n) - 1;
  if (s_power == -1) f.push_back(latex ? "S_\\mathfrak{p}^{-1}" : "S^-1");
  if (s_power == 1) f.push_back(latex ? "S_\\mathfrak{p}" : "S");
  std::string out;
  for (const auto& x : f) out += (out.empty() || latex ? "" : " ") + x;
  return out;
}

}  // namespace detail

inline std::string format_entry(int n, const std::vector<ProductTerm>& terms, MatrixFormat fmt) {
  const bool latex = fmt == MatrixFormat::Latex;
  std::string out;
  for (const auto& t : terms) {
    const std::string factors = detail::format_factors(n, t.a, t.b, latex);
    std::string coef = detail::format_coef(t.coef, !factors.empty(), latex);
    std::string piece = coef;
    if (!factors.empty()) {
      if (!coef.empty() && coef != "-") piece += " ";
      piece += factors;
    }
    if (out.empty())
      out = piece;
    else if (piece.front() == '-')
      out += (latex ? "" : " ") + std::string("-") + (latex ? "" : " ") + piece.substr(1);
    else
      out += latex ? "+" + piece : " + " + piece;
  }
  return out.empty() ? "0" : out;
}

inline std::string format_matrix(const FormalMatrix& m, MatrixFormat fmt) {
  std::vector<std::string> cells;
  for (const auto& e : m.entries) cells.push_back(format_entry(m.n, e, fmt));
  std::ostringstream os;
  if (fmt == MatrixFormat::Latex) {
    os << "\\begin{pmatrix}\n";
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) os << (j ? " & " : "") << cells[static_cast<std::size_t>(i * m.n + j)];
      os << (i + 1 < m.n ? "\\\\\n" : "\n");
    }
    os << "\\end{pmatrix}\n";
    return os.str();
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(m.n), 0);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      width[static_cast<std::size_t>(j)] = std::max(width[static_cast<std::size_t>(j)], cells[static_cast<std::size_t>(i * m.n + j)].size());
  for (int i = 0; i < m.n; ++i) {
    os << "[ ";
    for (int j = 0; j < m.n; ++j) {
      const auto& c = cells[static_cast<std::size_t>(i * m.n + j)];
      os << c << std::string(width[static_cast<std::size_t>(j)] - c.size(), ' ') << (j + 1 < m.n ? " | " : " ");
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace heckelab
