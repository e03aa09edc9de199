#pragma once

// Multivariate Laurent polynomials with arbitrary-precision integer
// coefficients over an open universe of named variables.
//
// Canonical form: the variable list is sorted by name and contains only
// variables that occur with a nonzero exponent in some term; terms are sorted
// ascending by lexicographic order of their exponent vectors; no stored
// coefficient is zero. Two polynomials are equal iff their canonical forms
// are identical, so operator== is structural.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "heckelab/exact.hpp"

namespace heckelab {

using Exponents = boost::container::small_vector<int, 6>;

class LaurentPoly {
 public:
  struct Term {
    Exponents exp;
    Integer coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT: constants convert implicitly
  LaurentPoly(long long c) : LaurentPoly(Integer(c)) {}  // NOLINT
  explicit LaurentPoly(const Integer& c) {
    if (c != 0) terms_.push_back({Exponents{}, c});
  }

  // name^power
  static LaurentPoly var(std::string_view name, int power = 1) {
    LaurentPoly r;
    r.vars_.emplace_back(name);
    r.terms_.push_back({Exponents{power}, Integer(1)});
    r.canonicalize();
    return r;
  }

  // coef * prod name_k^e_k
  static LaurentPoly monomial(const Integer& coef,
                              const std::vector<std::pair<std::string, int>>& powers) {
    std::vector<std::string> names;
    Exponents exp;
    for (const auto& [name, e] : powers) {
      names.push_back(name);
      exp.push_back(e);
    }
    return from_terms(std::move(names), {{exp, coef}});
  }

  // Builds a polynomial from arbitrary (unsorted, possibly repeated) data.
  // Variable names must be distinct.
  static LaurentPoly from_terms(std::vector<std::string> names, std::vector<Term> terms) {
    std::vector<std::size_t> perm(names.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
    for (std::size_t i = 1; i < perm.size(); ++i)
      if (names[perm[i]] == names[perm[i - 1]])
        throw Error("duplicate variable name '" + names[perm[i]] + "'");
    LaurentPoly r;
    for (std::size_t i : perm) r.vars_.push_back(names[i]);
    r.terms_.reserve(terms.size());
    for (auto& t : terms) {
      if (t.exp.size() != names.size()) throw Error("exponent vector length mismatch");
      Exponents e(perm.size());
      for (std::size_t k = 0; k < perm.size(); ++k) e[k] = t.exp[perm[k]];
      r.terms_.push_back({std::move(e), std::move(t.coef)});
    }
    r.canonicalize();
    return r;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::optional<Integer> constant_value() const {
    if (terms_.empty()) return Integer(0);
    if (vars_.empty()) return terms_.front().coef;
    return std::nullopt;
  }

  // A single term with coefficient +1 or -1; such elements are invertible.
  bool is_unit_monomial() const {
    return terms_.size() == 1 && (terms_[0].coef == 1 || terms_[0].coef == -1);
  }

  bool has_var(std::string_view name) const { return var_index(name).has_value(); }

  int max_exponent(std::string_view name) const {
    auto k = var_index(name);
    if (!k || terms_.empty()) return 0;
    int m = std::numeric_limits<int>::min();
    for (const auto& t : terms_) m = std::max(m, t.exp[*k]);
    return m;
  }

  int min_exponent(std::string_view name) const {
    auto k = var_index(name);
    if (!k || terms_.empty()) return 0;
    int m = std::numeric_limits<int>::max();
    for (const auto& t : terms_) m = std::min(m, t.exp[*k]);
    return m;
  }

  // Splits f = sum_k c_k * name^k and returns the map k -> c_k.
  std::map<int, LaurentPoly> coefficients_in(std::string_view name) const {
    std::map<int, LaurentPoly> out;
    auto k = var_index(name);
    if (!k) {
      if (!is_zero()) out.emplace(0, *this);
      return out;
    }
    std::map<int, std::vector<Term>> buckets;
    for (const auto& t : terms_) {
      Exponents e = t.exp;
      e[*k] = 0;
      buckets[t.exp[*k]].push_back({std::move(e), t.coef});
    }
    for (auto& [power, ts] : buckets) out.emplace(power, from_terms(vars_, std::move(ts)));
    return out;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    return merge(a, b, false);
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return merge(a, b, true);
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    return multiply(a, b);
  }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly scaled(const Integer& c) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
  }

  // Multiplies by prod vars_[k]^shift[k] for a shift aligned with `names`.
  LaurentPoly shifted(const std::vector<std::string>& names, const Exponents& shift) const {
    LaurentPoly m;
    m.vars_ = names;
    m.terms_.push_back({shift, Integer(1)});
    m.canonicalize();
    return *this * m;
  }

  LaurentPoly pow(unsigned e) const {
    LaurentPoly result(1), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  // Inverse of a unit monomial.
  LaurentPoly unit_inverse() const {
    if (!is_unit_monomial()) throw NonExactDivision("inverse of a non-unit");
    LaurentPoly r = *this;
    for (auto& x : r.terms_[0].exp) x = -x;
    return r;
  }

  // Re-expresses the polynomial over a superset of its variables.
  std::vector<Term> terms_over(const std::vector<std::string>& names) const {
    std::vector<int> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::lower_bound(names.begin(), names.end(), vars_[i]);
      if (it == names.end() || *it != vars_[i]) throw Error("variable set is not a superset");
      where[i] = static_cast<int>(it - names.begin());
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Exponents e(names.size(), 0);
      for (std::size_t i = 0; i < vars_.size(); ++i) e[where[i]] = t.exp[i];
      out.push_back({std::move(e), t.coef});
    }
    return out;
  }

  // Terms printed in descending monomial order, e.g. "q^2 + 2 + q^-2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Integer c = it->coef;
      bool neg = c < 0;
      if (neg) c = -c;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      std::string mono;
      for (std::size_t k = 0; k < vars_.size(); ++k) {
        if (it->exp[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[k];
        if (it->exp[k] != 1) mono += "^" + std::to_string(it->exp[k]);
      }
      if (mono.empty())
        os << c.str();
      else if (c == 1)
        os << mono;
      else
        os << c.str() << "*" << mono;
    }
    return os.str();
  }

  static std::vector<std::string> union_vars(const std::vector<std::string>& a,
                                             const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

 private:
  std::vector<std::string> vars_;
  std::vector<Term> terms_;

  std::optional<std::size_t> var_index(std::string_view name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == vars_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  static bool exp_less(const Term& a, const Term& b) {
    return std::lexicographical_compare(a.exp.begin(), a.exp.end(), b.exp.begin(), b.exp.end());
  }

  // Sort, merge equal monomials, drop zeros and unused variables.
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), exp_less);
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().exp == t.exp)
        merged.back().coef += t.coef;
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coef == 0; });
    terms_ = std::move(merged);
    prune_vars();
  }

  void prune_vars() {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& t : terms_)
      for (std::size_t k = 0; k < vars_.size(); ++k)
        if (t.exp[k] != 0) used[k] = true;
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < vars_.size(); ++k)
      if (used[k]) names.push_back(vars_[k]);
    for (auto& t : terms_) {
      Exponents e;
      for (std::size_t k = 0; k < vars_.size(); ++k)
        if (used[k]) e.push_back(t.exp[k]);
      t.exp = std::move(e);
    }
    vars_ = std::move(names);
  }

  static std::pair<std::vector<Term>, std::vector<Term>> aligned(const LaurentPoly& a,
                                                                  const LaurentPoly& b,
                                                                  std::vector<std::string>& names) {
    if (a.vars_ == b.vars_) {
      names = a.vars_;
      return {a.terms_, b.terms_};
    }
    names = union_vars(a.vars_, b.vars_);
    return {a.terms_over(names), b.terms_over(names)};
  }

  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    LaurentPoly r;
    auto [ta, tb] = aligned(a, b, r.vars_);
    r.terms_.reserve(ta.size() + tb.size());
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
      if (j == tb.size() || (i < ta.size() && exp_less(ta[i], tb[j]))) {
        r.terms_.push_back(std::move(ta[i++]));
      } else if (i == ta.size() || exp_less(tb[j], ta[i])) {
        Term t = std::move(tb[j++]);
        if (subtract) t.coef = -t.coef;
        r.terms_.push_back(std::move(t));
      } else {
        Integer c = subtract ? ta[i].coef - tb[j].coef : ta[i].coef + tb[j].coef;
        if (c != 0) r.terms_.push_back({std::move(ta[i].exp), std::move(c)});
        ++i;
        ++j;
      }
    }
    r.prune_vars();
    return r;
  }

  static LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly r;
    auto [ta, tb] = aligned(a, b, r.vars_);
    const std::size_t nv = r.vars_.size();

    // Mixed-radix packing of result exponents into one 64-bit key. The first
    // variable is the most significant digit, so key order is monomial order.
    std::vector<long long> lo(nv), radix(nv);
    bool packable = true;
    {
      unsigned __int128 span = 1;
      for (std::size_t k = 0; k < nv; ++k) {
        int amin = std::numeric_limits<int>::max(), amax = std::numeric_limits<int>::min();
        int bmin = amin, bmax = amax;
        for (const auto& t : ta) amin = std::min(amin, t.exp[k]), amax = std::max(amax, t.exp[k]);
        for (const auto& t : tb) bmin = std::min(bmin, t.exp[k]), bmax = std::max(bmax, t.exp[k]);
        lo[k] = static_cast<long long>(amin) + bmin;
        radix[k] = static_cast<long long>(amax) + bmax - lo[k] + 1;
        span *= static_cast<unsigned __int128>(radix[k]);
        if (span > (static_cast<unsigned __int128>(1) << 62)) packable = false;
      }
    }

    if (packable) {
      // Digits may be negative for individual factors; the sum of the two keys
      // plus the offset has every digit in [0, radix), and unsigned wraparound
      // keeps the arithmetic exact modulo 2^64.
      auto key_of = [&](const Exponents& x) {
        std::uint64_t key = 0;
        for (std::size_t k = 0; k < nv; ++k)
          key = key * static_cast<std::uint64_t>(radix[k]) + static_cast<std::uint64_t>(x[k]);
        return key;
      };
      std::vector<std::uint64_t> ka(ta.size()), kb(tb.size());
      for (std::size_t i = 0; i < ta.size(); ++i) ka[i] = key_of(ta[i].exp);
      for (std::size_t j = 0; j < tb.size(); ++j) kb[j] = key_of(tb[j].exp);
      std::uint64_t base_offset = 0;
      for (std::size_t k = 0; k < nv; ++k)
        base_offset = base_offset * static_cast<std::uint64_t>(radix[k]) +
                      static_cast<std::uint64_t>(-lo[k]);
      std::unordered_map<std::uint64_t, Integer> acc;
      acc.reserve(ta.size() * tb.size() / 2 + 16);
      for (std::size_t i = 0; i < ta.size(); ++i)
        for (std::size_t j = 0; j < tb.size(); ++j) {
          Integer& slot = acc[ka[i] + kb[j] + base_offset];
          slot += ta[i].coef * tb[j].coef;
        }
      std::vector<std::pair<std::uint64_t, Integer>> flat;
      flat.reserve(acc.size());
      for (auto& kv : acc)
        if (kv.second != 0) flat.emplace_back(kv.first, std::move(kv.second));
      std::sort(flat.begin(), flat.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      r.terms_.reserve(flat.size());
      for (auto& [key, coef] : flat) {
        Exponents e(nv);
        std::uint64_t rest = key;
        for (std::size_t k = nv; k-- > 0;) {
          e[k] = static_cast<int>(static_cast<long long>(rest % static_cast<std::uint64_t>(radix[k])) + lo[k]);
          rest /= static_cast<std::uint64_t>(radix[k]);
        }
        r.terms_.push_back({std::move(e), std::move(coef)});
      }
      r.prune_vars();
      return r;
    }

    std::map<Exponents, Integer> acc;
    for (const auto& x : ta)
      for (const auto& y : tb) {
        Exponents e(nv);
        for (std::size_t k = 0; k < nv; ++k) e[k] = x.exp[k] + y.exp[k];
        acc[e] += x.coef * y.coef;
      }
    for (auto& [e, c] : acc)
      if (c != 0) r.terms_.push_back({e, std::move(c)});
    r.prune_vars();
    return r;
  }
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << f.str(); }

// Exact quotient a/b in the Laurent ring, or nullopt when b does not divide a.
//
// Both operands are shifted by monomials so that every variable has minimum
// exponent zero; the shifted divisor has no monomial factor, so Laurent
// divisibility coincides with polynomial divisibility and a lex-leading-term
// division by a single polynomial decides it.
inline std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw NonExactDivision("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  if (b.is_unit_monomial()) return a * b.unit_inverse();

  const auto names = LaurentPoly::union_vars(a.vars(), b.vars());
  const std::size_t nv = names.size();
  auto ta = a.terms_over(names);
  auto tb = b.terms_over(names);

  auto min_exps = [nv](const std::vector<LaurentPoly::Term>& ts) {
    Exponents m(nv, std::numeric_limits<int>::max());
    for (const auto& t : ts)
      for (std::size_t k = 0; k < nv; ++k) m[k] = std::min(m[k], t.exp[k]);
    return m;
  };
  const Exponents ma = min_exps(ta), mb = min_exps(tb);
  for (auto& t : ta)
    for (std::size_t k = 0; k < nv; ++k) t.exp[k] -= ma[k];
  for (auto& t : tb)
    for (std::size_t k = 0; k < nv; ++k) t.exp[k] -= mb[k];

  const LaurentPoly::Term& lead = tb.back();  // lex-largest, terms are sorted
  std::map<Exponents, Integer> rem;
  for (auto& t : ta) rem.emplace(std::move(t.exp), std::move(t.coef));
  std::vector<LaurentPoly::Term> quot;

  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    Exponents qe(nv);
    for (std::size_t k = 0; k < nv; ++k) {
      qe[k] = top->first[k] - lead.exp[k];
      if (qe[k] < 0) return std::nullopt;
    }
    Integer qc;
    {
      Integer r;
      boost::multiprecision::divide_qr(top->second, lead.coef, qc, r);
      if (r != 0) return std::nullopt;
    }
    for (const auto& t : tb) {
      Exponents e(nv);
      for (std::size_t k = 0; k < nv; ++k) e[k] = t.exp[k] + qe[k];
      auto it = rem.find(e);
      if (it == rem.end()) {
        rem.emplace(std::move(e), -(qc * t.coef));
      } else {
        it->second -= qc * t.coef;
        if (it->second == 0) rem.erase(it);
      }
    }
    quot.push_back({std::move(qe), std::move(qc)});
  }
  Exponents shift(nv);
  for (std::size_t k = 0; k < nv; ++k) shift[k] = ma[k] - mb[k];
  for (auto& t : quot)
    for (std::size_t k = 0; k < nv; ++k) t.exp[k] += shift[k];
  return LaurentPoly::from_terms(names, std::move(quot));
}

inline LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw NonExactDivision("(" + a.str() + ") / (" + b.str() + ") is not exact");
  return *q;
}

// f with `name` replaced by g. Negative powers of `name` require g to be a unit monomial.
inline LaurentPoly substitute(const LaurentPoly& f, std::string_view name, const LaurentPoly& g) {
  auto parts = f.coefficients_in(name);
  if (parts.empty()) return {};
  const bool invertible = g.is_unit_monomial();
  if (parts.begin()->first < 0 && !invertible)
    throw NegativeExponentSubstitution("cannot substitute non-unit " + g.str() + " for " +
                                       std::string(name) + " with negative exponent " +
                                       std::to_string(parts.begin()->first));
  const LaurentPoly ginv = invertible ? g.unit_inverse() : LaurentPoly(1);
  std::vector<LaurentPoly> up{LaurentPoly(1)}, down{LaurentPoly(1)};
  auto power = [&](int k) -> const LaurentPoly& {
    auto& cache = k >= 0 ? up : down;
    const auto& step = k >= 0 ? g : ginv;
    const std::size_t idx = static_cast<std::size_t>(k >= 0 ? k : -k);
    while (cache.size() <= idx) cache.push_back(cache.back() * step);
    return cache[idx];
  };
  LaurentPoly out;
  for (const auto& [k, c] : parts) out += c * power(k);
  return out;
}

// Exact value of f under a complete assignment of its variables.
inline Rational evaluate(const LaurentPoly& f, const std::map<std::string, Rational>& assign) {
  const auto& names = f.vars();
  std::vector<Rational> vals;
  vals.reserve(names.size());
  for (const auto& n : names) {
    auto it = assign.find(n);
    if (it == assign.end()) throw MissingAssignment("no value assigned to '" + n + "'");
    vals.push_back(it->second);
  }
  for (std::size_t k = 0; k < names.size(); ++k)
    if (vals[k] == 0 && f.min_exponent(names[k]) < 0)
      throw ZeroToNegativePower("'" + names[k] + "' = 0 raised to a negative power");
  std::vector<std::map<int, Rational>> cache(names.size());
  auto power = [&](std::size_t k, int e) -> const Rational& {
    auto it = cache[k].find(e);
    if (it != cache[k].end()) return it->second;
    Rational r = 1;
    Rational base = e < 0 ? Rational(1) / vals[k] : vals[k];
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
    return cache[k].emplace(e, r).first->second;
  };
  Rational total = 0;
  for (const auto& t : f.terms()) {
    Rational v = t.coef;
    for (std::size_t k = 0; k < names.size(); ++k)
      if (t.exp[k] != 0) v *= power(k, t.exp[k]);
    total += v;
  }
  return total;
}

// e_i(x_1, ..., x_m); e_0 = 1.
inline LaurentPoly elementary_symmetric(int i, const std::vector<std::string>& names) {
  const int m = static_cast<int>(names.size());
  require_range(i >= 0 && i <= m, "elementary_symmetric: index " + std::to_string(i) +
                                      " outside [0, " + std::to_string(m) + "]");
  // Coefficients of prod (1 + x_k t), truncated at t^i.
  std::vector<LaurentPoly> e(static_cast<std::size_t>(i) + 1);
  e[0] = 1;
  for (const auto& n : names) {
    const LaurentPoly x = LaurentPoly::var(n);
    for (int d = i; d >= 1; --d) e[d] += e[d - 1] * x;
  }
  return e[i];
}

}  // namespace heckelab
