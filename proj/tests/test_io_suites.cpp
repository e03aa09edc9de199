#include <gtest/gtest.h>

#include <random>

#include "heckelab/io.hpp"
#include "heckelab/resultant.hpp"
#include "heckelab/suites.hpp"

using namespace heckelab;

namespace {

const LaurentPoly q = LaurentPoly::var("q");
const LaurentPoly p = LaurentPoly::var("p");

Json without_timing(Json j) {
  for (auto& c : j["cases"]) c.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST(Json, LaurentPolyLayout) {
  const LaurentPoly f = (q + LaurentPoly::var("q", -1)).pow(2);
  EXPECT_EQ(to_json(f).dump(),
            R"({"vars":["q"],"terms":[{"exp":[-2],"coef":"1"},{"exp":[0],"coef":"2"},{"exp":[2],"coef":"1"}]})");
  EXPECT_EQ(to_json(LaurentPoly{}).dump(), R"({"vars":[],"terms":[]})");
}

TEST(Json, LaurentPolyRoundTrip) {
  const std::vector<LaurentPoly> samples{LaurentPoly{}, LaurentPoly(-7), (p + q).pow(5),
                                         (p - LaurentPoly::var("a1", -3)).pow(3), (q + 1).pow(90)};
  for (const auto& f : samples) {
    const std::string text = to_json(f).dump();
    const LaurentPoly back = poly_from_json(Json::parse(text));
    EXPECT_EQ(back, f);
    EXPECT_EQ(to_json(back).dump(), text);
  }
}

TEST(Json, RejectsMalformed) {
  EXPECT_THROW(poly_from_json(Json::parse(R"({"vars":["q"],"terms":[{"exp":[1,2],"coef":"1"}]})")), ParseError);
  EXPECT_THROW(poly_from_json(Json::parse(R"({"vars":["q"],"terms":[{"exp":[1],"coef":"x"}]})")), ParseError);
  EXPECT_THROW(poly_from_json(Json::parse(R"({"terms":[]})")), ParseError);
  EXPECT_THROW(hecke_from_json(Json::parse(R"({"n":2,"terms":[{"coset":[0,1],"coef":{"vars":[],"terms":[]}}]})")),
               Error);
}

TEST(Json, HeckeElementDescending) {
  const HeckeElement e = minuscule_product(3, 1, 2);
  const Json j = to_json(e);
  ASSERT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0]["coset"], Json::parse("[2,1,0]"));
  EXPECT_EQ(j["terms"][1]["coset"], Json::parse("[1,1,1]"));
  EXPECT_EQ(hecke_from_json(j), e);
}

TEST(Json, MatrixRoundTrip) {
  for (int n = 1; n <= 4; ++n) {
    const HeckeMatrix m = build_matrix_hecke(n);
    const std::string text = to_json(m).dump(2);
    const HeckeMatrix back = hecke_matrix_from_json(Json::parse(text));
    EXPECT_EQ(back, m);
    EXPECT_EQ(to_json(back).dump(2), text);
  }
  const PolyMatrix r = build_resultant(3);
  const std::string text = to_json(r).dump();
  EXPECT_EQ(poly_matrix_from_json(Json::parse(text)), r);
  EXPECT_EQ(to_json(poly_matrix_from_json(Json::parse(text))).dump(), text);
  EXPECT_THROW(poly_matrix_from_json(Json::parse(R"({"n":2,"entries":[]})")), ParseError);
}

TEST(Suites, SmallSuitesPass) {
  SuiteOptions o;
  o.max_n = 3;
  for (const std::string s : {"heckemul", "nnk", "forms", "detq"}) {
    const VerificationReport r = run_suite(s, o);
    EXPECT_TRUE(r.ok()) << s << "\n" << r.to_json().dump(2);
    EXPECT_GT(r.cases.size(), 0u);
  }
  EXPECT_THROW(run_suite("nosuch", o), IndexOutOfRange);
}

TEST(Suites, SummaryCountsMatchCases) {
  SuiteOptions o;
  o.max_n = 2;
  const Json j = run_suite("all", o).to_json();
  std::size_t pass = 0, fail = 0;
  for (const auto& c : j["cases"]) (c["status"] == "pass" ? pass : fail)++;
  EXPECT_EQ(j["summary"]["passed"], pass);
  EXPECT_EQ(j["summary"]["failed"], fail);
  EXPECT_EQ(j["summary"]["total"], pass + fail);
  EXPECT_EQ(fail, 0u);
}

TEST(Suites, DetqCaseShape) {
  SuiteOptions o;
  o.max_n = 1;
  const Json j = run_suite("detq", o).to_json();
  const Json& c = j["cases"][0];
  EXPECT_EQ(c["n"], 1);
  EXPECT_EQ(c["resultant_product"], true);
  EXPECT_EQ(c["reduction"], true);
  EXPECT_EQ(c["closed_form"], true);
  EXPECT_TRUE(c["elapsed_ms"].is_number_integer());
}

TEST(Suites, DeterministicAcrossWorkers) {
  SuiteOptions o;
  o.max_n = 3;
  o.seed = 77;
  const Json one = without_timing(run_suite("all", o).to_json());
  o.workers = 4;
  EXPECT_EQ(without_timing(run_suite("all", o).to_json()).dump(), one.dump());
}

TEST(Suites, SeedChangesRandomTuplesOnly) {
  SuiteOptions a, b;
  a.max_n = b.max_n = 2;
  b.seed = 2;
  const Json ja = without_timing(run_suite("mpi", a).to_json()), jb = without_timing(run_suite("mpi", b).to_json());
  EXPECT_NE(ja.dump(), jb.dump());
  EXPECT_EQ(ja["cases"].size(), jb["cases"].size());
  EXPECT_EQ(ja["summary"], jb["summary"]);
}

TEST(Suites, OracleErrorsBecomeFailures) {
  SuiteOptions o;
  o.max_n = 2;
  o.primes = {5};
  const VerificationReport r = run_suite("heckemul", o);
  EXPECT_FALSE(r.ok());
  bool saw_error = false;
  for (const auto& c : r.cases) saw_error |= c.details.contains("error");
  EXPECT_TRUE(saw_error);
}
