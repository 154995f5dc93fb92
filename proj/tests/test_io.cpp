#include <gtest/gtest.h>

#include "quatlie/io.hpp"

using namespace quatlie;
using io::json;

namespace {
const auto J = CubicNormStructure::hermitian3(1);
}

TEST(IO, ComplexRoundTrip) {
  EXPECT_EQ(io::complex_from(json::parse("[1.5, -2]")), MachineComplex(1.5, -2));
  EXPECT_EQ(io::complex_from(json(3.0)), MachineComplex(3.0, 0.0));
  EXPECT_EQ(io::complex_json(MachineComplex(0.25, 4)).dump(), "[0.25,4.0]");
  EXPECT_THROW(io::complex_from(json::parse("[1, 2, 3]")), io::InputError);
  EXPECT_THROW(io::complex_from(json("x")), io::InputError);
}

TEST(IO, CharacterForms) {
  FreudenthalSpace W(J);
  const RealW s = io::character_from(W, "0,-1,0,1");
  EXPECT_EQ(s.b, -1.0 * J.one<double>());
  EXPECT_EQ(s.d, 1.0);
  // full coordinate array in module order
  Vec<double> c(W.dim());
  for (std::size_t k = 0; k < W.dim(); ++k) c[k] = double(k);
  const RealW f = io::character_from(W, json(std::vector<double>(c.begin(), c.end())).dump());
  EXPECT_EQ(W.to_vec(f), c);
  const RealW o = io::character_from(W, R"({"omega": [1, 0, 0, 0]})");
  EXPECT_EQ(o.a, 1.0);
  EXPECT_THROW(io::character_from(W, "1,2,3"), io::InputError);
  EXPECT_THROW(io::character_from(W, "[1, 2"), io::InputError);
  EXPECT_THROW(io::character_from(W, R"({"w": 1})"), io::InputError);
}

TEST(IO, PointForms) {
  const LeviPoint p = io::point_from(J, "1.5,0.25,2");
  EXPECT_EQ(p.w, 1.5);
  EXPECT_EQ(p.X, 0.25 * J.one<double>());
  EXPECT_EQ(p.Y, 2.0 * J.one<double>());
  const LeviPoint q = io::point_from(J, R"({"w": 1, "X": [0,0,0,1,0,0], "Y": 1, "component": "w0"})");
  EXPECT_EQ(q.sign, ComponentSign::W0);
  EXPECT_EQ(q.X[3], 1.0);
  EXPECT_EQ(io::point_json(q)["component"], "w0");
  EXPECT_THROW(io::point_from(J, "1,0,-1"), io::InputError);  // Y not positive definite
  EXPECT_THROW(io::point_from(J, "-1,0,1"), io::InputError);
  EXPECT_THROW(io::point_from(J, "1,0"), io::InputError);
  EXPECT_THROW(io::point_from(J, R"({"w": 1, "X": [1, 2], "Y": 1})"), io::InputError);
  EXPECT_THROW(io::point_from(J, R"({"w": 1, "X": 0, "Y": 1, "component": "other"})"), io::InputError);
}

TEST(IO, FourierDatum) {
  const auto pd = io::fourier_from(json::parse(R"({"n": 2, "descriptor": "f4",
      "terms": [{"omega": [0, -1, 0, 1], "coeff": [1, 0.5]}], "beta": [0.5, 0], "H": "one"})"));
  EXPECT_EQ(pd.descriptor, "f4");
  EXPECT_EQ(pd.datum.n, 2);
  ASSERT_EQ(pd.datum.terms.size(), 1u);
  EXPECT_EQ(pd.datum.terms[0].coeff, MachineComplex(1, 0.5));
  EXPECT_TRUE(pd.datum.has_constant);
  EXPECT_TRUE(static_cast<bool>(pd.datum.H));
  const auto bare = io::fourier_from(json::parse(R"({"n": 1, "descriptor": "g2", "terms": []})"));
  EXPECT_FALSE(bare.datum.has_constant);
  const auto zero = io::fourier_from(json::parse(R"({"n": 1, "descriptor": "g2", "H": "zero"})"));
  EXPECT_TRUE(zero.datum.has_constant);
  EXPECT_FALSE(static_cast<bool>(zero.datum.H));
  for (const char* bad : {R"([1])", R"({"n": 1})", R"({"n": 0, "descriptor": "g2"})", R"({"n": 1, "descriptor": "q7"})",
                          R"({"n": 1, "descriptor": "g2", "terms": [{"omega": [1]}]})",
                          R"({"n": 1, "descriptor": "g2", "H": "two"})"})
    EXPECT_THROW(io::fourier_from(json::parse(bad)), io::InputError) << bad;
}

TEST(IO, ReportJson) {
  RunReport r;
  r.suite = "jacobi";
  r.descriptor = "g2";
  r.level = "quick";
  r.seed = 4;
  r.check(false, [] { return std::string("triple (1,2,3)"); });
  r.elapsed = 1.5;
  const json j = io::report_json(r, false);
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["counterexample"], "triple (1,2,3)");
  EXPECT_FALSE(j.contains("elapsed"));
  EXPECT_EQ(io::report_json(r, true)["elapsed"], 1.5);
}
