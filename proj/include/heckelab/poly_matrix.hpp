#pragma once

// Square matrices over LaurentPoly and their exact determinants.

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "heckelab/laurent.hpp"

namespace heckelab {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
    if (n < 0) throw IndexOutOfRange("negative matrix dimension");
  }
  PolyMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows)
      : n_(static_cast<int>(rows.size())) {
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n_) throw Error("PolyMatrix rows must be square");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static PolyMatrix identity(int n) {
    PolyMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int n() const { return n_; }
  LaurentPoly& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  const LaurentPoly& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_ != b.n_) throw Error("PolyMatrix dimension mismatch");
    PolyMatrix c(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int j = 0; j < a.n_; ++j) {
        LaurentPoly s;
        for (int k = 0; k < a.n_; ++k) s += a(i, k) * b(k, j);
        c(i, j) = std::move(s);
      }
    return c;
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  // Entrywise map, e.g. a substitution.
  template <class F>
  PolyMatrix map(F&& f) const {
    PolyMatrix out(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = f(entries_[k]);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<LaurentPoly> entries_;
};

// Laplace expansion along the first row, memoised over the set of columns
// still available. Division-free; exponential in n, fine up to n ~ 12.
inline LaurentPoly det_cofactor(const PolyMatrix& m) {
  const int n = m.n();
  if (n == 0) return 1;
  if (n > 20) throw Oversize("cofactor expansion limited to n <= 20");
  std::unordered_map<std::uint32_t, LaurentPoly> memo;
  auto minor = [&](auto&& self, int row, std::uint32_t cols) -> LaurentPoly {
    if (row == n) return 1;
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    LaurentPoly total;
    int sign_pos = 0;
    for (int c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      const LaurentPoly& a = m(row, c);
      if (!a.is_zero()) {
        LaurentPoly sub = self(self, row + 1, cols & ~(1u << c));
        if (!sub.is_zero()) {
          if (sign_pos % 2 == 0)
            total += a * sub;
          else
            total -= a * sub;
        }
      }
      ++sign_pos;
    }
    memo.emplace(cols, total);
    return total;
  };
  return minor(minor, 0, (1u << n) - 1u);
}

// Fraction-free Bareiss elimination. Every division is asserted exact.
inline LaurentPoly det_bareiss(PolyMatrix m) {
  const int n = m.n();
  if (n == 0) return 1;
  int sign = 1;
  LaurentPoly prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m(r, k).is_zero()) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return {};
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = divide_exact(num, prev);
      }
      m(i, k) = LaurentPoly{};
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

// Cofactor expansion up to n = 12, Bareiss above. Bareiss quotients swell
// badly on sparse multivariate matrices such as the 10 x 10 resultant.
inline LaurentPoly det(const PolyMatrix& m) {
  return m.n() <= 12 ? det_cofactor(m) : det_bareiss(m);
}

// Determinant of a rational matrix (row-major, n x n) by Gaussian elimination.
inline Rational det_rational(std::vector<Rational> a, int n) {
  Rational d = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (a[r * n + k] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      for (int c = 0; c < n; ++c) std::swap(a[k * n + c], a[piv * n + c]);
      d = -d;
    }
    d *= a[k * n + k];
    for (int r = k + 1; r < n; ++r) {
      if (a[r * n + k] == 0) continue;
      Rational f = a[r * n + k] / a[k * n + k];
      for (int c = k; c < n; ++c) a[r * n + c] -= f * a[k * n + c];
    }
  }
  return d;
}

}  // namespace heckelab
