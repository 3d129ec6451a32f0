#include <gtest/gtest.h>

#include <sstream>

#include "fanning/errors.hpp"
#include "fanning/io.hpp"
#include "fanning/linalg.hpp"
#include "support/generators.hpp"

using namespace fanning;
using namespace fanning::testing;

TEST(Io, PolynomialRoundTrip) {
  Rng rng(71);
  const FrameCurve a = random_polynomial_curve(3, 2, 4, rng);
  std::ostringstream os;
  write_json(os, curve_to_json(a));
  const FrameCurve b = curve_from_json(Json::parse(os.str()));
  for (double t : {0.0, 0.4, 1.0}) EXPECT_EQ(max_abs(curve_value(a, t) - curve_value(b, t)), 0.0);
}

TEST(Io, OdeRoundTrip) {
  Rng rng(72);
  const FrameCurve a = random_normal_ode_curve(3, 2, rng);
  std::ostringstream os;
  write_json(os, curve_to_json(a));
  const FrameCurve b = curve_from_json(Json::parse(os.str()));
  const auto& ob = std::get<OdeFrameCurve>(b);
  EXPECT_EQ(max_abs(ob.initial() - std::get<OdeFrameCurve>(a).initial()), 0.0);
  EXPECT_EQ(ob.coefficients().size(), 3u);
}

TEST(Io, MalformedInputIsParseError) {
  EXPECT_THROW(curve_from_json(Json::parse(R"({"kind":"polynomial","k":2})")), ParseError);
  EXPECT_THROW(curve_from_json(Json::parse(R"({"kind":"spline","k":2,"n":1})")), ParseError);
  EXPECT_THROW(curve_from_json(Json::parse(R"({"kind":"polynomial","k":2,"n":1,"coefficients":[[[1]]]})")),
               ParseError);
  EXPECT_THROW(curve_from_json(Json::parse(R"({"kind":"polynomial","k":2,"n":1,"coefficients":[[[1],["x"]]]})")),
               ParseError);
  EXPECT_THROW(
      curve_from_json(Json::parse(R"({"kind":"ode","k":2,"n":1,"P":[{"degree":1,"coefficients":[[[0]]]},
                                      {"degree":0,"coefficients":[[[0]]]}],"A0":[[1,0],[0,1]]})")),
      ParseError);
  EXPECT_THROW(load_curve("/nonexistent/curve.json"), ParseError);
}

TEST(Io, SeventeenDigits) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(2.0), "2");
  std::ostringstream os;
  Json doc;
  doc["x"] = 1.0 / 3.0;
  doc["bad"] = std::nan("");
  write_json(os, doc);
  EXPECT_NE(os.str().find("0.33333333333333331"), std::string::npos);
  EXPECT_NE(os.str().find("null"), std::string::npos);
}

TEST(Io, CsvRowMajor) {
  std::ostringstream os;
  write_csv_header(os);
  write_csv_matrix(os, 0.5, "K", (Matrix(2, 2) << 1, 2, 3, 4).finished());
  EXPECT_EQ(os.str(),
            "t, name, i, j, value\n"
            "0.5, K, 0, 0, 1\n"
            "0.5, K, 0, 1, 2\n"
            "0.5, K, 1, 0, 3\n"
            "0.5, K, 1, 1, 4\n");
}
