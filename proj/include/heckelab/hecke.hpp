#pragma once

// Spherical Hecke algebra of GL_n over a local field with residue field of
// size q. Elements are finite sums of double cosets
// T(a_1, ..., a_n) = K diag(w^a_1, ..., w^a_n) K with coefficients in Z[q, q^-1]
// (or any LaurentPoly ring containing q).
//
// Only the products needed downstream are implemented symbolically: products
// of two minuscule operators T^(r) T^(s), and the central twist by powers of
// S = T^(n). General products are available numerically in hecke_oracle.hpp.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heckelab/laurent.hpp"

namespace heckelab {

inline constexpr const char* kQ = "q";

// Weakly decreasing exponent vector naming a double coset.
class CosetType {
 public:
  CosetType() = default;
  explicit CosetType(std::vector<int> exps) : exps_(std::move(exps)) {
    for (std::size_t i = 1; i < exps_.size(); ++i)
      if (exps_[i - 1] < exps_[i])
        throw Error("coset type must be weakly decreasing: " + str());
  }

  int n() const { return static_cast<int>(exps_.size()); }
  const std::vector<int>& exps() const { return exps_; }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }

  int total() const {
    int s = 0;
    for (int e : exps_) s += e;
    return s;
  }

  CosetType shifted(int k) const {
    CosetType t = *this;
    for (int& e : t.exps_) e += k;
    return t;
  }

  auto operator<=>(const CosetType&) const = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(exps_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> exps_;
};

// T(2^a, 1^(b-a), 0^(n-b)).
inline CosetType r_type(int n, int a, int b) {
  require_range(0 <= a && a <= b && b <= n,
                "R^(" + std::to_string(a) + "," + std::to_string(b) + ") needs 0 <= a <= b <= n=" +
                    std::to_string(n));
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < b; ++i) e[static_cast<std::size_t>(i)] = i < a ? 2 : 1;
  return CosetType(std::move(e));
}

inline CosetType t_type(int n, int r) {
  require_range(0 <= r && r <= n,
                "T^(" + std::to_string(r) + ") needs 0 <= r <= n=" + std::to_string(n));
  return r_type(n, 0, r);
}

class HeckeElement {
 public:
  using TermMap = std::map<CosetType, LaurentPoly, std::greater<>>;

  explicit HeckeElement(int n = 0) : n_(n) {}

  static HeckeElement basis(const CosetType& t, LaurentPoly coef = 1) {
    HeckeElement e(t.n());
    e.add(t, std::move(coef));
    return e;
  }

  int n() const { return n_; }
  // Sorted lexicographically descending by coset.
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly coefficient(const CosetType& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? LaurentPoly{} : it->second;
  }

  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) {
    a.check_rank(b);
    for (const auto& [t, c] : b.terms_) a.add(t, c);
    return a;
  }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) {
    a.check_rank(b);
    for (const auto& [t, c] : b.terms_) a.add(t, -c);
    return a;
  }
  HeckeElement& operator+=(const HeckeElement& b) { return *this = *this + b; }

  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& e) {
    HeckeElement r(e.n_);
    if (c.is_zero()) return r;
    for (const auto& [t, x] : e.terms_) r.add(t, c * x);
    return r;
  }

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  template <class F>
  HeckeElement map_coefficients(F&& f) const {
    HeckeElement r(n_);
    for (const auto& [t, c] : terms_) r.add(t, f(c));
    return r;
  }

  // Mutating builder used while assembling an element.
  void add(const CosetType& t, const LaurentPoly& c) {
    if (t.n() != n_) throw Error("coset " + t.str() + " has wrong rank for n=" + std::to_string(n_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [t, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")*T" + t.str();
    }
    return s;
  }

 private:
  int n_ = 0;
  TermMap terms_;

  void check_rank(const HeckeElement& o) const {
    if (o.n_ != n_) throw Error("HeckeElement rank mismatch");
  }
};

// Gaussian binomial [n choose r]_q, computed as the exact quotient
// prod_{k<r}(q^(n-k) - 1) / prod_{k=1..r}(q^k - 1).
inline LaurentPoly gaussian_binomial(int n, int r, std::string_view var = kQ) {
  require_range(0 <= r && r <= n, "gaussian_binomial(" + std::to_string(n) + "," +
                                      std::to_string(r) + ") needs 0 <= r <= n");
  LaurentPoly num(1), den(1);
  const LaurentPoly one(1);
  for (int k = 0; k < r; ++k) num *= LaurentPoly::var(var, n - k) - one;
  for (int k = 1; k <= r; ++k) den *= LaurentPoly::var(var, k) - one;
  return divide_exact(num, den);
}

enum class BasisKind { T, R, S };

inline HeckeElement hecke_T(int n, int r) { return HeckeElement::basis(t_type(n, r)); }
inline HeckeElement hecke_R(int n, int a, int b) { return HeckeElement::basis(r_type(n, a, b)); }
inline HeckeElement hecke_S(int n) { return hecke_T(n, n); }
inline HeckeElement hecke_identity(int n) { return hecke_T(n, 0); }

// T: params {r}; R: params {a, b}; S: no params.
inline HeckeElement basis_element(BasisKind kind, int n, const std::vector<int>& params = {}) {
  switch (kind) {
    case BasisKind::T:
      require_range(params.size() == 1, "T^(r) takes one parameter");
      return hecke_T(n, params[0]);
    case BasisKind::R:
      require_range(params.size() == 2, "R^(a,b) takes two parameters");
      return hecke_R(n, params[0], params[1]);
    case BasisKind::S:
      require_range(params.empty(), "S takes no parameters");
      return hecke_S(n);
  }
  throw Error("unknown basis kind");
}

// Multiplication by the central element S^k.
inline HeckeElement s_twist(const HeckeElement& e, int k) {
  HeckeElement r(e.n());
  for (const auto& [t, c] : e.terms()) r.add(t.shifted(k), c);
  return r;
}

// T^(r) T^(s) = sum_{i=0}^{min(r, n-s)} [s-r+2i choose i]_q R^(r-i, s+i)  for r <= s.
inline HeckeElement minuscule_product(int n, int r, int s) {
  require_range(n >= 1 && 0 <= r && r <= n && 0 <= s && s <= n,
                "minuscule_product(" + std::to_string(n) + "," + std::to_string(r) + "," +
                    std::to_string(s) + ") out of range");
  if (r > s) std::swap(r, s);
  HeckeElement out(n);
  for (int i = 0; i <= std::min(r, n - s); ++i)
    out.add(r_type(n, r - i, s + i), gaussian_binomial(s - r + 2 * i, i));
  return out;
}

}  // namespace heckelab
