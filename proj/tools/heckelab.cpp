// heckelab: print the intersection matrices, run verification suites,
// evaluate det(M_pi) at given Satake parameters, tabulate N(n,k).
//
// Exit codes: 0 success / all checks pass, 1 a verification failed,
// 2 usage or range error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "heckelab/heckelab.hpp"

namespace {

using namespace heckelab;

constexpr int kUsage = 2;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty item in list '" + s + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

std::vector<unsigned> parse_primes(const std::string& s) {
  std::vector<unsigned> out;
  for (const auto& t : split_commas(s)) {
    const Rational r = parse_rational(t);
    if (denominator(r) != 1 || r < 2 || r > 1000 || !is_small_prime(numerator(r).convert_to<unsigned>()))
      throw ParseError("'" + t + "' is not a prime below 1000");
    const unsigned p = numerator(r).convert_to<unsigned>();
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

int cmd_matrix(int n, const std::string& format) {
  require_range(1 <= n && n <= 8, "matrix --n must satisfy 1 <= n <= 8, got " + std::to_string(n));
  if (format == "json") {
    std::cout << to_json(build_matrix_hecke(n)).dump(2) << "\n";
  } else {
    std::cout << format_matrix(intersection_matrix_terms(n),
                               format == "latex" ? MatrixFormat::Latex : MatrixFormat::Pretty);
  }
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& o) {
  require_range(o.max_n >= 1, "verify --max-n must be positive");
  const VerificationReport rep = run_suite(suite, o);
  std::cout << rep.to_json().dump(2) << "\n";
  std::cerr << "suite " << suite << ": " << rep.passed() << "/" << rep.cases.size() << " passed";
  if (!rep.ok()) {
    std::cerr << "; failing:";
    for (const auto& c : rep.cases)
      if (!c.pass) std::cerr << "\n  " << c.suite << "/" << c.check << " " << c.params.dump();
  }
  std::cerr << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_det_pi(int n, const std::string& betas_text, const std::string& p_text, bool symbolic) {
  require_range(n >= 1, "det-pi --n must be positive");
  std::vector<Rational> betas;
  for (const auto& t : split_commas(betas_text)) betas.push_back(parse_rational(t));
  if (static_cast<int>(betas.size()) != n)
    throw IndexOutOfRange("--betas has " + std::to_string(betas.size()) + " entries, expected n=" +
                          std::to_string(n));
  const Rational p = parse_rational(p_text);
  if (p == 0) throw IndexOutOfRange("--p must be nonzero");

  const SatakeSpec sat(n);
  const auto assign = satake_assignment(betas, p);
  Rational value;
  if (symbolic) {
    const DetPi d = det_m_pi(n);
    std::cout << "symbolic: (" << d.value.num.str() << ") * s_" << n << "^" << d.value.sn_power << "\n";
    std::cout << "sign vs closed form: " << d.sign << "\n";
    value = evaluate_localized(d.value, assign, sat.beta_names);
  } else {
    value = numeric_det_pi(betas, p);
  }
  const Rational cf = evaluate_localized(closed_form_det_pi(n), assign, sat.beta_names);
  std::cout << "det(M_pi) = " << to_string(value) << "\n";
  std::cout << "verdict: " << (value != 0 ? "NONDEGENERATE" : "DEGENERATE") << "\n";
  std::cout << "closed form: +-" << to_string(cf) << "\n";
  std::cout << "agreement: ";
  if (value == cf && cf != 0)
    std::cout << "yes (sign +1)\n";
  else if (value == -cf && cf != 0)
    std::cout << "yes (sign -1)\n";
  else
    std::cout << (value == cf ? "yes (both zero)\n" : "no\n");
  return 0;
}

int cmd_nnk(int max_n, int only_k, const std::string& format, const std::string& p_text) {
  require_range(1 <= max_n && max_n <= 64, "nnk --max-n must satisfy 1 <= n <= 64");
  std::optional<Rational> p;
  if (!p_text.empty()) p = parse_rational(p_text);
  auto cell = [&](const LaurentPoly& f) -> std::string {
    return p ? to_string(evaluate(f, {{kP, *p}})) : f.str();
  };
  Json rows = Json::array();
  if (format == "csv") std::cout << "n,k,N\n";
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k) {
      if (only_k && k != only_k) continue;
      const LaurentPoly f = fundamental_number(n, k);
      if (format == "csv")
        std::cout << n << "," << k << ",\"" << cell(f) << "\"\n";
      else
        rows.push_back({{"n", n}, {"k", k}, {"N", p ? Json(cell(f)) : to_json(f)}});
    }
  if (format == "json") std::cout << rows.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Hecke-algebra and intersection-matrix identities"};
  app.require_subcommand(1);

  int matrix_n = 2;
  std::string matrix_format = "pretty";
  auto* matrix = app.add_subcommand("matrix", "print the intersection matrix M for rank n");
  matrix->add_option("--n", matrix_n, "rank, 1..8")->required();
  matrix->add_option("--format", matrix_format)->check(CLI::IsMember({"pretty", "json", "latex"}));

  std::string suite = "all", primes_text = "2,3";
  SuiteOptions opts;
  bool allow_large = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite; JSON report on stdout");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", opts.max_n, "largest rank to check");
  verify->add_option("--p", primes_text, "comma-separated primes");
  verify->add_option("--seed", opts.seed, "seed for random Satake parameters");
  verify->add_option("--workers", opts.workers, "worker threads")->check(CLI::Range(1u, 256u));
  verify->add_flag("--allow-large", allow_large, "raise the symbolic determinant limit to n = 5");

  int det_n = 1;
  std::string betas_text, det_p = "5";
  bool symbolic = false, numeric = false;
  auto* det_pi = app.add_subcommand("det-pi", "det(M_pi) at explicit Satake parameters beta_i");
  det_pi->add_option("--n", det_n)->required();
  det_pi->add_option("--betas", betas_text, "comma-separated rationals like 3/2")->required();
  det_pi->add_option("--p", det_p, "nonzero rational");
  auto* sym_flag = det_pi->add_flag("--symbolic", symbolic, "expand det symbolically first (n <= 4)");
  det_pi->add_flag("--numeric", numeric, "rational elimination (default)")->excludes(sym_flag);

  int nnk_max = 6, nnk_k = 0;
  std::string nnk_format = "csv", nnk_p;
  auto* nnk = app.add_subcommand("nnk", "tabulate N(n,k)");
  nnk->add_option("--max-n", nnk_max);
  nnk->add_option("--k", nnk_k, "only this k");
  nnk->add_option("--format", nnk_format)->check(CLI::IsMember({"csv", "json"}));
  nnk->add_option("--p", nnk_p, "evaluate at this p instead of printing polynomials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*matrix) return cmd_matrix(matrix_n, matrix_format);
    if (*verify) {
      opts.primes = parse_primes(primes_text);
      if (allow_large) {
        opts.symbolic_limit = 5;
        std::cerr << "warning: n = 5 symbolic determinants are outside the default range; term counts grow factorially\n";
      }
      return cmd_verify(suite, opts);
    }
    if (*det_pi) return cmd_det_pi(det_n, betas_text, det_p, symbolic);
    if (*nnk) return cmd_nnk(nnk_max, nnk_k, nnk_format, nnk_p);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
