#pragma once

// Brute-force oracles for the spherical Hecke algebra, independent of the
// closed-form product in hecke.hpp: explicit left-coset representatives with
// uniformizer w = p and residue lifts {0, ..., p-1}, elementary-divisor
// classification by minor gcds, and direct counting of structure constants
// m(u, v; w) = #{(i, j) : z^-1 x_i y_j is p-integral}.

#include <algorithm>
#include <atomic>
#include <bitset>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "heckelab/hecke.hpp"

namespace heckelab {

struct OracleLimits {
  int max_n = 4;
  unsigned max_p = 3;
  std::uint64_t max_enum = max_enumeration();
};

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
      : n_(static_cast<int>(rows.size())) {
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n_) throw Error("IntMatrix rows must be square");
      for (long long v : row) a_.emplace_back(v);
    }
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMatrix diagonal(const std::vector<Integer>& d) {
    IntMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n_; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
  }

  int n() const { return n_; }
  Integer& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Integer& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix z(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        if (x(i, k) == 0) continue;
        for (int j = 0; j < x.n_; ++j) z(i, j) += x(i, k) * y(k, j);
      }
    return z;
  }

  IntMatrix scaled(const Integer& c) const {
    IntMatrix m = *this;
    for (auto& v : m.a_) v *= c;
    return m;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<Integer> a_;
};

inline bool is_small_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace detail {

inline void check_prime(unsigned p, const OracleLimits& lim) {
  if (!is_small_prime(p)) throw Error(std::to_string(p) + " is not prime");
  if (p > lim.max_p) throw Oversize("prime " + std::to_string(p) + " exceeds oracle bound " +
                                    std::to_string(lim.max_p));
}

inline void check_rank(int n, const OracleLimits& lim) {
  require_range(n >= 1, "rank must be positive");
  if (n > lim.max_n)
    throw Oversize("rank " + std::to_string(n) + " exceeds oracle bound " + std::to_string(lim.max_n));
}

inline void check_budget(std::uint64_t count, const OracleLimits& lim, const char* what) {
  if (count > lim.max_enum)
    throw Oversize(std::string(what) + ": enumeration of " + std::to_string(count) +
                   " items exceeds bound " + std::to_string(lim.max_enum));
}

inline Integer int_det(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  if (k == 1) return m(rows[0], cols[0]);
  Integer d = 0;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < k; ++c) {
    if (m(rows[0], cols[c]) == 0) continue;
    std::vector<int> sub_cols;
    for (std::size_t t = 0; t < k; ++t)
      if (t != c) sub_cols.push_back(cols[t]);
    Integer term = m(rows[0], cols[c]) * int_det(m, sub_rows, sub_cols);
    d += (c % 2 == 0) ? term : Integer(-term);
  }
  return d;
}

inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Runs body(begin, end) over [0, count) split across `workers` threads.
inline void parallel_ranges(std::size_t count, unsigned workers,
                            const std::function<void(std::size_t, std::size_t)>& body) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    body(0, count);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t b = 0; b < count; b += chunk)
    pool.emplace_back(body, b, std::min(count, b + chunk));
  for (auto& t : pool) t.join();
}

}  // namespace detail

// p-adic elementary-divisor exponents, largest first, via v_p(d_k / d_{k-1})
// where d_k is the gcd of all k x k minors.
inline CosetType snf_exponents(const IntMatrix& m, unsigned p) {
  const int n = m.n();
  std::vector<int> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = i;
  if (detail::int_det(m, rows, rows) == 0) throw SingularMatrix("snf_exponents of a singular matrix");
  std::vector<int> exps;
  int prev = 0;
  for (int k = 1; k <= n; ++k) {
    Integer g = 0;
    detail::for_each_subset(n, k, [&](const std::vector<int>& rs) {
      detail::for_each_subset(n, k, [&](const std::vector<int>& cs) {
        if (g == 1) return;
        g = gcd(g, abs(detail::int_det(m, rs, cs)));
      });
    });
    int v = p_valuation(g, p);
    exps.push_back(v - prev);
    prev = v;
  }
  std::sort(exps.begin(), exps.end(), std::greater<>());
  return CosetType(std::move(exps));
}

// Left-coset representatives x with T^(r) = disjoint union of xK: diagonal w
// on an r-subset I and 1 elsewhere; entry (i, j) free in {0..p-1} exactly when
// i > j, x_ii = w and x_jj = 1. Distinct choices give distinct lattices x O^n.
inline std::vector<IntMatrix> coset_reps(int n, int r, unsigned p, const OracleLimits& lim = {5, 5}) {
  detail::check_rank(n, lim);
  require_range(0 <= r && r <= n, "coset_reps needs 0 <= r <= n");
  detail::check_prime(p, lim);

  struct Shape {
    std::vector<bool> wdiag;
    std::vector<std::pair<int, int>> free;
  };
  std::vector<Shape> shapes;
  std::uint64_t total = 0;
  detail::for_each_subset(n, r, [&](const std::vector<int>& subset) {
    Shape s;
    s.wdiag.assign(static_cast<std::size_t>(n), false);
    for (int i : subset) s.wdiag[static_cast<std::size_t>(i)] = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (s.wdiag[static_cast<std::size_t>(i)] && !s.wdiag[static_cast<std::size_t>(j)])
          s.free.emplace_back(i, j);
    std::uint64_t c = 1;
    for (std::size_t k = 0; k < s.free.size(); ++k) c *= p;
    total += c;
    shapes.push_back(std::move(s));
  });
  detail::check_budget(total, lim, "coset_reps");

  std::vector<IntMatrix> out;
  out.reserve(total);
  for (const auto& s : shapes) {
    IntMatrix base(n);
    for (int i = 0; i < n; ++i) base(i, i) = s.wdiag[static_cast<std::size_t>(i)] ? Integer(p) : Integer(1);
    std::vector<unsigned> digits(s.free.size(), 0);
    while (true) {
      IntMatrix x = base;
      for (std::size_t k = 0; k < digits.size(); ++k) x(s.free[k].first, s.free[k].second) = digits[k];
      out.push_back(std::move(x));
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
      if (k == digits.size()) break;
    }
  }
  return out;
}

using CosetCounts = std::map<CosetType, Rational, std::greater<>>;

// Structure constants of (sum_i x_i K)(sum_j y_j K) for arbitrary
// representative lists. For every double coset w met by some product x_i y_j,
// counts pairs with z^-1 x_i y_j p-integral for z = diag(p^w).
inline CosetCounts coset_product_counts(const std::vector<IntMatrix>& xs,
                                        const std::vector<IntMatrix>& ys, unsigned p,
                                        unsigned workers = 1, const OracleLimits& lim = {}) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(xs.size()) * ys.size();
  detail::check_budget(pairs, lim, "coset_product_counts");
  std::vector<IntMatrix> prods(pairs);
  std::vector<CosetType> types(pairs);
  detail::parallel_ranges(pairs, workers, [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) {
      prods[k] = xs[k / ys.size()] * ys[k % ys.size()];
      types[k] = snf_exponents(prods[k], p);
    }
  });
  std::vector<CosetType> met(types.begin(), types.end());
  std::sort(met.begin(), met.end());
  met.erase(std::unique(met.begin(), met.end()), met.end());

  CosetCounts out;
  for (const auto& w : met) {
    std::vector<Integer> scale(static_cast<std::size_t>(w.n()));
    for (int i = 0; i < w.n(); ++i) scale[static_cast<std::size_t>(i)] = ipow(Integer(p), static_cast<unsigned>(w[i]));
    std::atomic<std::uint64_t> total{0};
    detail::parallel_ranges(pairs, workers, [&](std::size_t b, std::size_t e) {
      std::uint64_t c = 0;
      for (std::size_t k = b; k < e; ++k) {
        const IntMatrix& m = prods[k];
        bool integral = true;
        for (int i = 0; i < m.n() && integral; ++i)
          for (int j = 0; j < m.n() && integral; ++j) {
            if (m(i, j) == 0) continue;
            Rational entry(m(i, j), scale[static_cast<std::size_t>(i)]);
            integral = p_valuation(entry, p) >= 0;
          }
        if (integral) ++c;
      }
      total += c;
    });
    if (total.load()) out.emplace(w, Rational(total.load()));
  }
  return out;
}

// m(T^(r), T^(s); w) by exhaustive enumeration of S(n,r) x S(n,s).
inline CosetCounts product_oracle(int n, int r, int s, unsigned p, unsigned workers = 1,
                                  const OracleLimits& lim = {}) {
  detail::check_rank(n, lim);
  detail::check_prime(p, lim);
  return coset_product_counts(coset_reps(n, r, p, lim), coset_reps(n, s, p, lim), p, workers, lim);
}

// Number of left cosets gK in K diag(p^t) K, counted over upper-triangular
// Hermite forms: diagonal p^d_i, entry (i, j), i < j, reduced mod p^d_i.
inline Rational coset_degree_oracle(int n, const CosetType& t, unsigned p,
                                    const OracleLimits& lim = {3, 3}) {
  detail::check_rank(n, lim);
  detail::check_prime(p, lim);
  if (t.n() != n) throw Error("coset type rank mismatch");
  if (t[n - 1] < 0) throw IndexOutOfRange("coset_degree_oracle needs nonnegative exponents");
  if (t[0] > 2) throw Oversize("coset_degree_oracle limited to exponents <= 2");
  const int top = t[0], sum = t.total();

  std::vector<std::vector<int>> diagonals;
  std::uint64_t work = 0;
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  while (true) {
    int s = 0;
    for (int v : d) s += v;
    if (s == sum) {
      std::uint64_t c = 1;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = 0; k < d[static_cast<std::size_t>(i)]; ++k) c *= p;
      work += c;
      diagonals.push_back(d);
    }
    int k = 0;
    while (k < n && ++d[static_cast<std::size_t>(k)] > top) d[static_cast<std::size_t>(k++)] = 0;
    if (k == n) break;
  }
  detail::check_budget(work, lim, "coset_degree_oracle");

  std::uint64_t count = 0;
  for (const auto& diag : diagonals) {
    std::vector<std::pair<int, int>> cells;
    std::vector<unsigned> mod;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        cells.emplace_back(i, j);
        unsigned m = 1;
        for (int k = 0; k < diag[static_cast<std::size_t>(i)]; ++k) m *= p;
        mod.push_back(m);
      }
    std::vector<unsigned> digits(cells.size(), 0);
    while (true) {
      IntMatrix g(n);
      for (int i = 0; i < n; ++i) g(i, i) = ipow(Integer(p), static_cast<unsigned>(diag[static_cast<std::size_t>(i)]));
      for (std::size_t k = 0; k < cells.size(); ++k) g(cells[k].first, cells[k].second) = digits[k];
      if (snf_exponents(g, p) == t) ++count;
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] >= mod[k]) digits[k++] = 0;
      if (k == digits.size()) break;
    }
  }
  return Rational(count);
}

// Number of r-dimensional subspaces of F_p^n, by closing spans level by level
// starting from the zero subspace.
inline Rational subspace_count_oracle(int n, int r, unsigned p, const OracleLimits& lim = {5, 3}) {
  detail::check_rank(n, lim);
  require_range(0 <= r && r <= n, "subspace_count_oracle needs 0 <= r <= n");
  detail::check_prime(p, lim);
  unsigned size = 1;
  for (int i = 0; i < n; ++i) size *= p;
  constexpr unsigned kMaxPoints = 256;
  if (size > kMaxPoints) throw Oversize("subspace_count_oracle limited to p^n <= 256");

  using Set = std::bitset<kMaxPoints>;
  // Vectors are base-p digit strings packed into 0..p^n-1.
  std::vector<unsigned> add(static_cast<std::size_t>(size) * size), smul(static_cast<std::size_t>(p) * size);
  auto digits = [&](unsigned v) {
    std::vector<unsigned> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = v % p, v /= p;
    return d;
  };
  auto pack = [&](const std::vector<unsigned>& d) {
    unsigned v = 0;
    for (int i = n - 1; i >= 0; --i) v = v * p + d[static_cast<std::size_t>(i)];
    return v;
  };
  for (unsigned a = 0; a < size; ++a) {
    auto da = digits(a);
    for (unsigned b = 0; b < size; ++b) {
      auto db = digits(b);
      std::vector<unsigned> s(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
      add[a * size + b] = pack(s);
    }
    for (unsigned c = 0; c < p; ++c) {
      std::vector<unsigned> s(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (c * da[static_cast<std::size_t>(i)]) % p;
      smul[c * size + a] = pack(s);
    }
  }

  std::unordered_set<Set> level;
  Set zero;
  zero.set(0);
  level.insert(zero);
  std::uint64_t work = 0;
  for (int k = 0; k < r; ++k) {
    std::unordered_set<Set> next;
    for (const auto& u : level) {
      for (unsigned v = 0; v < size; ++v) {
        if (u.test(v)) continue;
        Set span;
        for (unsigned x = 0; x < size; ++x) {
          if (!u.test(x)) continue;
          for (unsigned c = 0; c < p; ++c) span.set(add[x * size + smul[c * size + v]]);
        }
        next.insert(span);
        work += span.count();
      }
      detail::check_budget(work, {lim.max_n, lim.max_p, lim.max_enum * 64}, "subspace_count_oracle");
    }
    level = std::move(next);
  }
  return Rational(level.size());
}

}  // namespace heckelab
