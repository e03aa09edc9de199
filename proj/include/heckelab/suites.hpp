#pragma once

// Verification suites behind `heckelab verify`. Each suite is a list of
// independent cases built in a fixed order (sorted by their parameter
// tuples); cases may run on several threads but land in their slot, so the
// report only differs between runs in its elapsed_ms fields.

#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "heckelab/hecke_oracle.hpp"
#include "heckelab/intersect.hpp"
#include "heckelab/io.hpp"
#include "heckelab/matrix_m.hpp"
#include "heckelab/resultant.hpp"

namespace heckelab {

struct CaseResult {
  std::string suite;
  std::string check;
  Json params = Json::object();
  std::string expected;
  bool pass = false;
  Json details = Json::object();  // extra top-level fields, e.g. detq's three flags
  std::int64_t elapsed_ms = 0;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  int max_n = 0;
  std::vector<unsigned> primes;
  std::vector<CaseResult> cases;

  std::size_t passed() const {
    std::size_t k = 0;
    for (const auto& c : cases) k += c.pass;
    return k;
  }
  std::size_t failed() const { return cases.size() - passed(); }
  bool ok() const { return failed() == 0; }

  Json to_json() const {
    Json cs = Json::array();
    for (const auto& c : cases) {
      Json j = {{"suite", c.suite}, {"check", c.check}, {"params", c.params}};
      for (const auto& [k, v] : c.details.items()) j[k] = v;
      j["expected"] = c.expected;
      j["status"] = c.pass ? "pass" : "fail";
      j["elapsed_ms"] = c.elapsed_ms;
      cs.push_back(std::move(j));
    }
    return {{"suite", suite},
            {"seed", seed},
            {"max_n", max_n},
            {"p", primes},
            {"cases", std::move(cs)},
            {"summary", {{"total", cases.size()}, {"passed", passed()}, {"failed", failed()}}}};
  }
};

struct SuiteOptions {
  int max_n = 4;
  std::vector<unsigned> primes{2, 3};
  std::uint64_t seed = 1;
  unsigned workers = 1;
  int symbolic_limit = 4;  // det_m_pi and Appendix C
};

namespace detail {

using CaseFn = std::function<CaseResult()>;

inline std::vector<CaseResult> run_cases(const std::vector<CaseFn>& fns, unsigned workers) {
  std::vector<CaseResult> out(fns.size());
  parallel_ranges(fns.size(), workers, [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) {
      const auto t0 = std::chrono::steady_clock::now();
      out[k] = fns[k]();
      out[k].elapsed_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    }
  });
  return out;
}

// Wraps a check so a thrown library error becomes a failing case.
inline CaseFn make_case(std::string suite, std::string check, Json params, std::string expected,
                        std::function<bool(Json&)> body) {
  return [=]() {
    CaseResult r{suite, check, params, expected};
    try {
      r.pass = body(r.details);
    } catch (const std::exception& ex) {
      r.pass = false;
      r.details["error"] = ex.what();
    }
    return r;
  };
}

inline std::map<CosetType, Rational, std::greater<>> at_q(const HeckeElement& e, unsigned q) {
  std::map<CosetType, Rational, std::greater<>> out;
  for (const auto& [t, c] : e.terms()) {
    Rational v = evaluate(c, {{kQ, Rational(q)}});
    if (v != 0) out.emplace(t, v);
  }
  return out;
}

inline bool hecke_matches_oracle(int n, int r, int s, unsigned p, unsigned workers) {
  return at_q(minuscule_product(n, r, s), p) == product_oracle(n, r, s, p, workers);
}

// deg(T^(r)) deg(T^(s)) = sum_w m(w) deg(w), everything at q = p.
inline bool mass_balance(int n, int r, int s, unsigned p) {
  const auto prod = at_q(minuscule_product(n, r, s), p);
  Rational rhs = 0;
  for (const auto& [w, m] : prod) rhs += m * coset_degree_oracle(n, w, p);
  return coset_degree_oracle(n, t_type(n, r), p) * coset_degree_oracle(n, t_type(n, s), p) == rhs;
}

// Distinct nonzero rationals num/den with |num| <= 20, den <= 9.
inline std::vector<Rational> random_betas(std::mt19937_64& rng, int n, bool distinct) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < n) {
    const int a = num(rng);
    if (a == 0) continue;
    Rational b(a, den(rng));
    if (distinct && std::find(out.begin(), out.end(), b) != out.end()) continue;
    out.push_back(b);
  }
  return out;
}

inline Json rationals_json(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

// Symbolic det M_pi is reused by several cases.
inline DetPi cached_det_m_pi(int n, int limit) {
  static std::mutex mu;
  static std::map<int, DetPi> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  DetPi r = det_m_pi(n, limit);
  std::lock_guard lock(mu);
  return memo.emplace(n, std::move(r)).first->second;
}

// X^n coefficients of prod (X - p^(n-1) beta_i) against hecke_char_poly.
inline bool char_poly_factors(int n) {
  const SatakeSpec sat(n);
  const LaurentPoly x = LaurentPoly::var("X");
  LaurentPoly lhs, rhs(1);
  const auto c = hecke_char_poly(n);
  for (int i = 0; i <= n; ++i) lhs += c[static_cast<std::size_t>(i)] * x.pow(static_cast<unsigned>(n - i));
  for (int i = 1; i <= n; ++i) rhs *= x - sat.alpha(i);
  return lhs == rhs;
}

}  // namespace detail

inline std::vector<detail::CaseFn> heckemul_cases(const SuiteOptions& o) {
  using detail::make_case;
  std::vector<detail::CaseFn> cs;
  for (unsigned p : o.primes)
    for (int n = 1; n <= std::min(o.max_n, 3); ++n)
      for (int r = 0; r <= n; ++r)
        for (int s = r; s <= n; ++s)
          cs.push_back(make_case("heckemul", "product_vs_oracle", {{"n", n}, {"r", r}, {"s", s}, {"p", p}},
                                 "minuscule_product at q=p equals the coset-count oracle",
                                 [=, w = o.workers](Json&) { return detail::hecke_matches_oracle(n, r, s, p, w); }));
  if (o.max_n >= 4 && std::find(o.primes.begin(), o.primes.end(), 2u) != o.primes.end())
    for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}})
      cs.push_back(make_case("heckemul", "product_vs_oracle", {{"n", 4}, {"r", r}, {"s", s}, {"p", 2}},
                             "minuscule_product at q=p equals the coset-count oracle",
                             [=, w = o.workers](Json&) { return detail::hecke_matches_oracle(4, r, s, 2, w); }));
  for (unsigned p : o.primes)
    for (int n = 1; n <= std::min(o.max_n, 3); ++n)
      for (int r = 0; r <= n; ++r)
        for (int s = r; s <= n; ++s)
          cs.push_back(make_case("heckemul", "mass_balance", {{"n", n}, {"r", r}, {"s", s}, {"p", p}},
                                 "deg T^(r) deg T^(s) = sum_w m(w) deg(w)",
                                 [=](Json&) { return detail::mass_balance(n, r, s, p); }));
  for (unsigned p : o.primes)
    for (int n = 1; n <= std::min(o.max_n, 5); ++n)
      for (int r = 0; r <= n; ++r)
        cs.push_back(make_case("heckemul", "subspace_count", {{"n", n}, {"r", r}, {"p", p}},
                               "Gaussian binomial at q=p counts r-subspaces of F_p^n", [=](Json& d) {
                                 const Rational count = subspace_count_oracle(n, r, p);
                                 d["count"] = to_string(count);
                                 return evaluate(gaussian_binomial(n, r), {{kQ, Rational(p)}}) == count;
                               }));
  for (int n = 1; n <= o.max_n; ++n)
    for (int r = 0; r <= n; ++r)
      cs.push_back(make_case("heckemul", "top_coefficient", {{"n", n}, {"r", r}},
                             "coefficient of R^(0,n) in T^(r) T^(n-r) is [n choose r]_q", [=](Json&) {
                               return minuscule_product(n, r, n - r).coefficient(r_type(n, 0, n)) ==
                                      gaussian_binomial(n, r);
                             }));
  return cs;
}

inline std::vector<detail::CaseFn> nnk_cases(const SuiteOptions& o) {
  using detail::make_case;
  std::vector<detail::CaseFn> cs;
  for (int n = 1; n <= o.max_n; ++n) {
    cs.push_back(make_case("nnk", "base_case", {{"n", n}}, "I(n,1) = (-1)^(n-1) n",
                           [=](Json&) { return untwisted_integral(n, 1) == LaurentPoly(sign_pow(n - 1) * n); }));
    cs.push_back(make_case("nnk", "duality", {{"n", n}}, "N(n,k) = N(n,n+1-k) for all k", [=](Json&) {
      for (int k = 1; k <= n; ++k)
        if (fundamental_number(n, k) != fundamental_number(n, n + 1 - k)) return false;
      return true;
    }));
    cs.push_back(make_case("nnk", "recursion", {{"n", n}},
                           "I(n,k) - I'(n,k-1) = (-1)^(n-1)(n-2k+2)[n choose k-1]_{p^2} for 2 <= k <= (n+1)/2",
                           [=](Json&) {
                             for (int k = 2; 2 * k <= n + 1; ++k)
                               if (recursion_residual(n, k) != expected_recursion_residual(n, k)) return false;
                             return true;
                           }));
    cs.push_back(make_case("nnk", "exponent_identity", {{"n", n}},
                           "d(n-2delta,k-delta) + 2k-n-1 = 2(k-delta-1)(n-k-delta+1)", [=](Json&) {
                             for (int k = 1; k <= n; ++k)
                               for (int d = 0; d <= std::min(k - 1, n - k); ++d)
                                 if (!exponent_identity_check(n, k, d)) return false;
                             return true;
                           }));
  }
  return cs;
}

inline std::vector<detail::CaseFn> forms_cases(const SuiteOptions& o) {
  using detail::make_case;
  std::vector<detail::CaseFn> cs;
  for (int n = 1; n <= o.max_n; ++n)
    cs.push_back(make_case("forms", "compare_forms", {{"n", n}},
                           "product form at q=p^2 equals the R-basis form entrywise",
                           [=](Json&) { return compare_forms(n); }));
  return cs;
}

inline std::vector<detail::CaseFn> mpi_cases(const SuiteOptions& o) {
  using detail::make_case;
  std::vector<detail::CaseFn> cs;
  const int top = std::min(o.max_n, o.symbolic_limit);
  for (int n = 1; n <= top; ++n) {
    cs.push_back(make_case("mpi", "det_closed_form", {{"n", n}},
                           "det M_pi = +-p^(n(n^2-1)/3) prod_{i<j}(b_i-b_j)^2 / s_n^(n-1)",
                           [=, lim = o.symbolic_limit](Json& d) {
                             const DetPi r = detail::cached_det_m_pi(n, lim);
                             d["sign"] = r.sign;
                             return r.sign != 0;
                           }));
    if (n >= 2)
      cs.push_back(make_case("mpi", "collision_annihilates", {{"n", n}}, "b2 := b1 kills the determinant numerator",
                             [=, lim = o.symbolic_limit](Json&) {
                               const DetPi r = detail::cached_det_m_pi(n, lim);
                               return substitute(r.value.num, SatakeSpec::beta_name(2),
                                                 LaurentPoly::var(SatakeSpec::beta_name(1)))
                                   .is_zero();
                             }));
    cs.push_back(make_case("mpi", "char_poly", {{"n", n}}, "Hecke polynomial = prod (X - p^(n-1) b_i)",
                           [=](Json&) { return detail::char_poly_factors(n); }));
  }
  for (int n = 1; n <= std::min(o.max_n, 6); ++n)
    cs.push_back(make_case("mpi", "permutation_sum", {{"n", n}},
                           "sum_i e(i,sigma(i)) = n(n^2-1)/3 and every term carries p^e(i,j)",
                           [=](Json&) { return permutation_sum_check(n); }));
  // Random tuples are drawn here, in case order, so the report does not
  // depend on the worker count.
  std::mt19937_64 rng(o.seed);
  for (unsigned p : o.primes)
    for (int n = 1; n <= top; ++n)
      for (int t = 0; t < 20; ++t) {
        const auto betas = detail::random_betas(rng, n, true);
        cs.push_back(make_case("mpi", "numeric_nondegenerate",
                               {{"n", n}, {"p", p}, {"trial", t}, {"betas", detail::rationals_json(betas)}},
                               "distinct betas give det = sign * closed form != 0",
                               [=, lim = o.symbolic_limit](Json& d) {
                                 const Rational v = numeric_det_pi(betas, Rational(p));
                                 const DetPi sym = detail::cached_det_m_pi(n, lim);
                                 const Rational cf =
                                     evaluate_localized(closed_form_det_pi(n), satake_assignment(betas, p),
                                                        SatakeSpec(n).beta_names);
                                 d["det"] = to_string(v);
                                 return v != 0 && v == sym.sign * cf;
                               }));
      }
  for (unsigned p : o.primes)
    for (int n = 2; n <= top; ++n) {
      auto betas = detail::random_betas(rng, n, true);
      betas[1] = betas[0];
      cs.push_back(make_case("mpi", "numeric_degenerate",
                             {{"n", n}, {"p", p}, {"betas", detail::rationals_json(betas)}},
                             "a repeated beta gives det = 0",
                             [=](Json&) { return numeric_det_pi(betas, Rational(p)) == 0; }));
    }
  return cs;
}

inline std::vector<detail::CaseFn> detq_cases(const SuiteOptions& o) {
  using detail::make_case;
  std::vector<detail::CaseFn> cs;
  const int top = std::min(o.max_n, o.symbolic_limit);
  for (int n = 1; n <= top; ++n) {
    cs.push_back(make_case("detq", "appendix_c", {{"n", n}},
                           "det N = prod, det N = (q-1/q)^n det M, det M = closed form",
                           [=, lim = o.symbolic_limit](Json& d) {
                             const AppendixCCheck c = verify_appendix_c(n, lim);
                             d["n"] = n;
                             d["resultant_product"] = c.resultant_product;
                             d["reduction"] = c.reduction;
                             d["closed_form"] = c.closed_form;
                             return c.all();
                           }));
    cs.push_back(make_case("detq", "printed_lower_index", {{"n", n}},
                           "the s_(n+j-i+delta) reading agrees with the closed form exactly when n <= 3",
                           [=, lim = o.symbolic_limit](Json& d) {
                             const AppendixCCheck c = verify_appendix_c(n, lim, LowerIndex::Printed);
                             d["n"] = n;
                             d["resultant_product"] = c.resultant_product;
                             d["reduction"] = c.reduction;
                             d["closed_form"] = c.closed_form;
                             return c.all() == (n <= 3);
                           }));
    cs.push_back(make_case("detq", "q_minus_one", {{"n", n}},
                           "M_n(-1) equals m' entrywise and det M_n(-1) = det M_pi p^-(n(n^2-1)/3) s_n^n",
                           [=, lim = o.symbolic_limit](Json&) {
                             return specialize_q_minus_one(n) == reduced_matrix_m_prime(n) &&
                                    q_minus_one_matches_det_pi(n, lim);
                           }));
  }
  return cs;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"heckemul", "nnk", "forms", "mpi", "detq", "all"};
  return names;
}

inline VerificationReport run_suite(const std::string& suite, const SuiteOptions& o) {
  std::vector<detail::CaseFn> cs;
  auto append = [&](std::vector<detail::CaseFn> more) { cs.insert(cs.end(), more.begin(), more.end()); };
  if (suite == "heckemul" || suite == "all") append(heckemul_cases(o));
  if (suite == "nnk" || suite == "all") append(nnk_cases(o));
  if (suite == "forms" || suite == "all") append(forms_cases(o));
  if (suite == "mpi" || suite == "all") append(mpi_cases(o));
  if (suite == "detq" || suite == "all") append(detq_cases(o));
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw IndexOutOfRange("unknown suite '" + suite + "'");
  VerificationReport rep{suite, o.seed, o.max_n, o.primes, {}};
  rep.cases = detail::run_cases(cs, o.workers);
  return rep;
}

}  // namespace heckelab
