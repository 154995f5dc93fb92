#include <gtest/gtest.h>

#include "quatlie/verify.hpp"

using namespace quatlie;

TEST(RunReport, CountsAndFirstCounterexample) {
  RunReport r;
  EXPECT_FALSE(r.ok());
  r.check(true, [] { return std::string("unused"); });
  EXPECT_TRUE(r.ok());
  r.check(false, [] { return std::string("first"); });
  r.check(false, [] { return std::string("second"); });
  EXPECT_EQ(r.attempted, 3u);
  EXPECT_EQ(r.passed, 1u);
  EXPECT_EQ(*r.counterexample, "first");
  RunReport s;
  s.at_most(1e-9, 1e-6, [] { return std::string(); });
  s.at_most(std::nan(""), 1e-6, [] { return std::string("nan"); });
  EXPECT_TRUE(std::isinf(s.max_residual));
  EXPECT_EQ(*s.counterexample, "nan");
  r.merge(s);
  EXPECT_EQ(r.attempted, 5u);
  EXPECT_EQ(*r.counterexample, "first");
}

TEST(RunSuite, QuickSuitesPassOnG2) {
  for (const auto& suite : suite_names()) {
    if (suite == "isoSO") continue;
    const RunReport r = run_suite(suite, "g2", Level::Quick, 5);
    EXPECT_TRUE(r.ok()) << suite << ": " << r.counterexample.value_or("");
    EXPECT_GT(r.attempted, 0u) << suite;
    EXPECT_EQ(r.suite, suite);
    EXPECT_EQ(r.descriptor, "g2");
  }
  EXPECT_TRUE(run_suite("isoSO", "so:1", Level::Quick, 5).ok());
}

TEST(RunSuite, FullJacobiOnG2IsExhaustive) {
  const RunReport r = run_suite("jacobi", "g2", Level::Full, 3);
  // 14³ basis triples and 20 dense triples
  EXPECT_EQ(r.attempted, 14u * 14u * 14u + 20u);
  EXPECT_TRUE(r.ok());
}

TEST(RunSuite, DeterministicForSeed) {
  const RunReport a = run_suite("schmid", "g2", Level::Quick, 11), b = run_suite("schmid", "g2", Level::Quick, 11);
  EXPECT_EQ(a.attempted, b.attempted);
  EXPECT_EQ(a.max_residual, b.max_residual);
}

TEST(RunSuite, RejectsBadInput) {
  EXPECT_THROW(run_suite("nosuch", "g2", Level::Quick, 1), std::invalid_argument);
  EXPECT_THROW(run_suite("jacobi", "e9", Level::Quick, 1), std::invalid_argument);
  EXPECT_THROW(run_suite("isoSO", "f4", Level::Quick, 1), std::invalid_argument);
  EXPECT_THROW(parse_level("medium"), std::invalid_argument);
}

// The sweeps must notice a single corrupted structure constant.
TEST(Sweeps, DetectCorruptedTables) {
  GAlgebra G(CubicNormStructure::unit());
  GTables T(G);
  auto it = std::find_if(T.sc.table.begin(), T.sc.table.end(), [](const auto& row) { return !row.empty(); });
  ASSERT_NE(it, T.sc.table.end());
  (*it)[0].second += Rational(1);
  Sampler s(1);
  RunReport jac, kil, car;
  suite_jacobi(G, T.sc, Level::Full, s, jac);
  EXPECT_FALSE(jac.ok());
  EXPECT_TRUE(jac.counterexample.has_value());
  suite_killing(T, Level::Full, s, kil);
  EXPECT_FALSE(kil.ok());
  suite_cartan(T, car);
  EXPECT_FALSE(car.ok());
}

TEST(Numeric, BesselPositivityAndConstantTerm) {
  RunReport b;
  suite_bessel(b);
  EXPECT_TRUE(b.ok()) << b.counterexample.value_or("");
  RunReport p;
  suite_positivity(CubicNormStructure::hermitian3(1), 2000, 7, p);
  suite_degenerate(CubicNormStructure::hermitian3(1), 7, p);
  EXPECT_TRUE(p.ok()) << p.counterexample.value_or("");
  RunReport c;
  suite_const_term(CubicNormStructure::hermitian3(2), 3, 3, 9, c);
  EXPECT_TRUE(c.ok()) << c.counterexample.value_or("");
}

// Large |⟨ω,Z̃⟩| (small Y, large X) is where a fixed difference step breaks down.
TEST(Numeric, CharResidualsAtFastDecay) {
  auto J = CubicNormStructure::unit();
  FreudenthalSpace W(J);
  const RealW om = scaled_one_character(J, 0, -1, 0, 1);
  for (int n = 1; n <= 2; ++n) {
    LeviPoint p{1.8, {-1.9867}, {0.109735}, ComponentSign::Plus};
    ASSERT_GT(std::abs(omega_z_tilde(W, om, p)), 400.0);
    EXPECT_LE(max_relative(char_residuals(W, n, om, whittaker_bundle(W, n, om), p, coordinate_basis(J))), 1e-8);
  }
}
