#pragma once

// JSON encodings. Coefficients are decimal strings so big integers survive.
//   LaurentPoly  {"vars":[..],"terms":[{"exp":[..],"coef":"..."}]}  ascending monomials
//   PolyMatrix   {"n":k,"entries":[[poly,..],..]}
//   HeckeElement {"n":k,"terms":[{"coset":[..],"coef":poly}]}      cosets descending
//   HeckeMatrix  {"n":k,"entries":[[element,..],..]}

#include <json.hpp>

#include "heckelab/matrix_m.hpp"
#include "heckelab/poly_matrix.hpp"

namespace heckelab {

using Json = nlohmann::ordered_json;

inline Json to_json(const LaurentPoly& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms())
    terms.push_back({{"exp", std::vector<int>(t.exp.begin(), t.exp.end())}, {"coef", t.coef.str()}});
  return {{"vars", f.vars()}, {"terms", std::move(terms)}};
}

inline LaurentPoly poly_from_json(const Json& j) {
  try {
    auto names = j.at("vars").get<std::vector<std::string>>();
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto e = t.at("exp").get<std::vector<int>>();
      if (e.size() != names.size()) throw ParseError("exponent vector length does not match vars");
      terms.push_back({Exponents(e.begin(), e.end()), Integer(t.at("coef").get<std::string>())});
    }
    return LaurentPoly::from_terms(std::move(names), std::move(terms));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& ex) {
    throw ParseError(std::string("bad LaurentPoly JSON: ") + ex.what());
  }
}

inline Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.n()}, {"entries", std::move(rows)}};
}

inline PolyMatrix poly_matrix_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    PolyMatrix m(n);
    const auto& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != n) throw ParseError("row count does not match n");
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n) throw ParseError("column count does not match n");
      for (int k = 0; k < n; ++k) m(i, k) = poly_from_json(rows[i][k]);
    }
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad PolyMatrix JSON: ") + ex.what());
  }
}

inline Json to_json(const HeckeElement& e) {
  Json terms = Json::array();
  for (const auto& [t, c] : e.terms()) terms.push_back({{"coset", t.exps()}, {"coef", to_json(c)}});
  return {{"n", e.n()}, {"terms", std::move(terms)}};
}

inline HeckeElement hecke_from_json(const Json& j) {
  try {
    HeckeElement e(j.at("n").get<int>());
    for (const auto& t : j.at("terms"))
      e.add(CosetType(t.at("coset").get<std::vector<int>>()), poly_from_json(t.at("coef")));
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad HeckeElement JSON: ") + ex.what());
  }
}

inline Json to_json(const HeckeMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.n}, {"entries", std::move(rows)}};
}

inline HeckeMatrix hecke_matrix_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    HeckeMatrix m(n, HeckeElement(n));
    const auto& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != n) throw ParseError("row count does not match n");
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n) throw ParseError("column count does not match n");
      for (int k = 0; k < n; ++k) m.at(i, k) = hecke_from_json(rows[i][k]);
    }
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad HeckeMatrix JSON: ") + ex.what());
  }
}

}  // namespace heckelab
