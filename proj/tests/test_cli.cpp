#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fanning/cli.hpp"
#include "fanning/errors.hpp"
#include "fanning/io.hpp"
#include "fanning/linalg.hpp"
#include "support/oracles.hpp"

using namespace fanning;

namespace {

std::string data(const std::string& name) { return std::string(FANNING_DATA_DIR) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("fanning_test_" + name)).string();
}

}  // namespace

TEST(Cli, ParseGrid) {
  EXPECT_EQ(cli::parse_grid("0:1:3"), (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_EQ(cli::parse_grid("0.25"), (std::vector<double>{0.25}));
  EXPECT_EQ(cli::parse_grid("-1,0,2"), (std::vector<double>{-1.0, 0.0, 2.0}));
  EXPECT_EQ(cli::parse_grid("2:2:1"), (std::vector<double>{2.0}));
  EXPECT_THROW(cli::parse_grid("0:1"), ParseError);
  EXPECT_THROW(cli::parse_grid("0:1:0"), ParseError);
  EXPECT_THROW(cli::parse_grid("1,0"), ParseError);
  EXPECT_THROW(cli::parse_grid("a,b"), ParseError);
}

TEST(Cli, InvariantsOfStandardCurve) {
  const Result r = run({"invariants", data("standard_k3_n2.json"), "--grid", "0:1:3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  ASSERT_EQ(doc["samples"].size(), 3u);
  for (const auto& s : doc["samples"]) {
    EXPECT_EQ(max_abs(matrix_from_json(s["kappa"], 2, 2, "kappa")), 0.0);
    EXPECT_EQ(max_abs(matrix_from_json(s["h"][0], 2, 2, "h1")), 0.0);
    EXPECT_EQ(s["D_spectrum"]["minus_one"], 4);
    EXPECT_EQ(s["D_spectrum"]["plus_one"], 2);
  }
}

TEST(Cli, TanCurveKappaIsOne) {
  const Result r = run({"invariants", data("tan_k2_n1.json"), "--grid", "-0.4:0.4:9"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& s : Json::parse(r.out)["samples"]) {
    EXPECT_NEAR(s["kappa"][0][0].get<double>(), 1.0, 1e-6);
    EXPECT_NEAR(s["schwarzian"][0][0].get<double>(), 2.0, 1e-6);
  }
}

TEST(Cli, MaurerCartanOfNormalCurveMatchesDisplay) {
  const Result r = run({"invariants", data("normal_k4_n2.json"), "--grid", "0:1:3", "--jacobi",
                        "--maurer-cartan", "H"});
  ASSERT_EQ(r.code, 0) << r.err;
  const FrameCurve curve = load_curve(data("normal_k4_n2.json"));
  const auto& ode = std::get<OdeFrameCurve>(curve);
  for (const auto& s : Json::parse(r.out)["samples"]) {
    const double t = s["t"].get<double>();
    std::vector<MatrixJet> p;
    for (const auto& pi : ode.coefficients()) p.push_back(pi.jet_at(t, 1));
    const Matrix expected = fanning::testing::k4_horizontal_display(2, fanning::testing::normal_invariants(p));
    const Matrix got = matrix_from_json(s["maurer_cartan"], 8, 8, "mc");
    EXPECT_LT(max_abs(got - expected), 1e-7);
    EXPECT_TRUE(s["jacobi"].is_array());
  }
}

TEST(Cli, NonNormalCurveReportsNullJacobi) {
  const Result r = run({"invariants", data("random_k3_n2.json"), "--grid", "0.5", "--jacobi"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out)["samples"][0]["jacobi"].is_null());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, CsvOutput) {
  const Result r = run({"invariants", data("standard_k3_n2.json"), "--grid", "0", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("t, name, i, j, value\n", 0), 0u);
  EXPECT_NE(r.out.find("0, kappa, 1, 1, 0\n"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"invariants", data("not_fanning.json")}).code, 3);
  EXPECT_EQ(run({"verify", data("not_fanning.json")}).code, 3);
  EXPECT_NE(run({"invariants", data("not_fanning.json")}).err.find("condition number"), std::string::npos);
  EXPECT_EQ(run({"invariants", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"invariants", data("standard_k3_n2.json"), "--grid", "1:0:3"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"invariants", data("standard_k3_n2.json"), "--tol", "-1"}).code, 2);
}

TEST(Cli, CongruentFixtures) {
  const std::string b = temp_path("congruent.json");
  const std::string p = temp_path("perturbed.json");
  ASSERT_EQ(run({"transform", data("random_k3_n2.json"), "--seed", "5", "--out", b}).code, 0);
  ASSERT_EQ(run({"transform", data("random_k3_n2.json"), "--seed", "5", "--perturb", "0.1", "--out", p}).code, 0);
  const Result ok = run({"congruent", data("random_k3_n2.json"), b});
  EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
  EXPECT_EQ(Json::parse(ok.out)["verdict"], "congruent");
  EXPECT_EQ(run({"congruent", data("random_k3_n2.json"), p}).code, 1);
  const Result self = run({"congruent", data("random_k3_n2.json"), data("random_k3_n2.json")});
  EXPECT_EQ(self.code, 0);
  EXPECT_LT(max_abs(matrix_from_json(Json::parse(self.out)["X"], 2, 2, "X") - Matrix::Identity(2, 2)), 1e-8);
  EXPECT_EQ(run({"congruent", data("random_k3_n2.json"), data("standard_k3_n2.json")}).code, 1);
  EXPECT_EQ(run({"congruent", data("random_k3_n2.json"), data("tan_k2_n1.json")}).code, 2);
  std::filesystem::remove(b);
  std::filesystem::remove(p);
}

TEST(Cli, OdeTransformIsCongruent) {
  const std::string b = temp_path("ode_congruent.json");
  ASSERT_EQ(run({"transform", data("normal_k4_n2.json"), "--seed", "9", "--out", b}).code, 0);
  EXPECT_EQ(run({"congruent", data("normal_k4_n2.json"), b, "--grid", "0:1:7"}).code, 0);
  std::filesystem::remove(b);
}

TEST(Cli, VerifyPasses) {
  for (const char* f : {"standard_k3_n2.json", "random_k3_n2.json", "normal_k4_n2.json", "tan_k2_n1.json"}) {
    const Result r = run({"verify", data(f), "--seed", "42"});
    EXPECT_EQ(r.code, 0) << f << "\n" << r.err;
    const Json doc = Json::parse(r.out);
    EXPECT_TRUE(doc["passed"].get<bool>());
    for (const auto& c : doc["checks"]) EXPECT_LT(c["residual"].get<double>(), 1e-8) << f << " " << c["name"];
  }
}

TEST(Cli, VerifyFailsUnderImpossibleTolerance) {
  const Result r = run({"verify", data("random_k3_n2.json"), "--tol", "1e-300"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("FAIL"), std::string::npos);
}

TEST(Cli, ToleranceFromEnvironment) {
  setenv("FANNING_TOL", "1e-300", 1);
  EXPECT_EQ(run({"verify", data("random_k3_n2.json")}).code, 1);
  EXPECT_EQ(run({"verify", data("random_k3_n2.json"), "--tol", "1e-6"}).code, 0);
  setenv("FANNING_TOL", "garbage", 1);
  EXPECT_EQ(run({"verify", data("random_k3_n2.json")}).code, 2);
  unsetenv("FANNING_TOL");
}

TEST(Cli, CanonicalizeAndNormalFrame) {
  const Result c = run({"canonicalize", data("random_k3_n2.json"), "--t", "0.3"});
  ASSERT_EQ(c.code, 0) << c.err;
  const Json doc = Json::parse(c.out);
  EXPECT_EQ(doc["orbit_coordinates"].size(), 2u);
  const Matrix a0 = matrix_from_json(doc["derivatives"][0], 6, 2, "A");
  EXPECT_LT(max_abs(a0 - Matrix::Identity(6, 2)), 1e-9);
  const Result n = run({"normal-frame", data("random_k3_n2.json"), "--grid", "0:1:4"});
  ASSERT_EQ(n.code, 0) << n.err;
  for (const auto& s : Json::parse(n.out)["samples"]) EXPECT_LT(s["normality_defect"].get<double>(), 1e-7);
}

TEST(Cli, OutputIsByteIdentical) {
  const std::vector<std::string> args{"verify", data("random_k3_n2.json"), "--seed", "7"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> inv{"invariants", data("normal_k4_n2.json"), "--jacobi"};
  EXPECT_EQ(run(inv).out, run(inv).out);
}

TEST(Cli, OutFile) {
  const std::string path = temp_path("report.json");
  ASSERT_EQ(run({"invariants", data("standard_k3_n2.json"), "--grid", "0", "--out", path}).code, 0);
  std::ifstream in(path);
  EXPECT_EQ(Json::parse(in)["command"], "invariants");
  std::filesystem::remove(path);
}
