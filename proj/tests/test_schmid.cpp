#include <gtest/gtest.h>

#include <cmath>

#include "quatlie/schmid.hpp"
#include "support.hpp"

using namespace quatlie;

namespace {
const MachineComplex I(0, 1);

RealW make_w(const CubicNormStructure& J, double a, double b, double c, double d) {
  return {a, b * J.one<double>(), c * J.one<double>(), d};
}

double worst_relative(const FreudenthalSpace& W, int n, const RealW& om, const ComponentBundle& B,
                      std::mt19937_64& rng, int points) {
  double m = 0;
  for (int s = 0; s < points; ++s) {
    LeviPoint p = sample_point(W.jordan(), rng, 0.5, 2.0);
    m = std::max(m, max_relative(char_residuals(W, n, om, B, p, coordinate_basis(W.jordan()))));
  }
  return m;
}
}  // namespace

// ---- D_{Z(E)} ----

TEST(DZ, NormOfY) {
  std::mt19937_64 rng(3);
  for (const auto& J : {CubicNormStructure::unit(), CubicNormStructure::hermitian3(1),
                        CubicNormStructure::hermitian3(8), CubicNormStructure::quadratic_pair(3)}) {
    qtest::Sampler S(5);
    for (int s = 0; s < 10; ++s) {
      LeviPoint p = sample_point(J, rng);
      RealJordan E = S.jordan<double>(J);
      PointFn f = [&](const LeviPoint& q) { return MachineComplex(J.norm(q.Y)); };
      const double ref = J.norm(p.Y) * J.trace(E);
      EXPECT_LE(std::abs(dz_derivative(J, E, f, p, false) - ref), 1e-8 * (std::abs(ref) + J.norm(p.Y)));
      EXPECT_LE(std::abs(dz_derivative(J, E, f, p, true) - ref), 1e-8 * (std::abs(ref) + J.norm(p.Y)));
    }
  }
}

TEST(DZ, CubicPolynomial) {
  std::mt19937_64 rng(7);
  for (const auto& J : {CubicNormStructure::unit(), CubicNormStructure::hermitian3(1),
                        CubicNormStructure::hermitian3(4), CubicNormStructure::quadratic_pair(2)}) {
    FreudenthalSpace W(J);
    qtest::Sampler S(11);
    for (int s = 0; s < 10; ++s) {
      LeviPoint p = sample_point(J, rng);
      RealW om = S.wvec<double>(W);
      RealJordan E = S.jordan<double>(J);
      PointFn f = [&](const LeviPoint& q) { return p_chi(W, om, q.Z()); };
      // ω = −(a,b,c,d): D_{Z(E)}p = 2i(aZ# + b×Z + c, E_Y), D_{Z*(E)}p = 0
      const ComplexJordan Z = p.Z();
      ComplexJordan g = MachineComplex(-om.a) * J.sharp(Z) - J.cross(vec_cast<MachineComplex>(om.b), Z) -
                        vec_cast<MachineComplex>(om.c);
      const ComplexJordan ey = vec_cast<MachineComplex>(J.U(jordan_sqrt(J, p.Y), E));
      const MachineComplex ref = 2.0 * I * J.pair(g, ey);
      const double sc = 1 + std::abs(ref) + std::abs(f(p));
      EXPECT_LE(std::abs(dz_derivative(J, E, f, p, false) - ref), 1e-8 * sc);
      EXPECT_LE(std::abs(dz_derivative(J, E, f, p, true)), 1e-8 * sc);
    }
  }
}

TEST(DZ, ConstantAndErrors) {
  auto J = CubicNormStructure::hermitian3(1);
  std::mt19937_64 rng(13);
  LeviPoint p = sample_point(J, rng);
  PointFn c = [](const LeviPoint&) { return MachineComplex(2.5, -1.0); };
  EXPECT_EQ(dz_derivative(J, J.one<double>(), c, p, false), MachineComplex(0.0));
  p.Y = J.diag(1.0, -2.0, 1.0);
  EXPECT_THROW(dz_derivative(J, J.one<double>(), c, p, false), std::domain_error);
}

// d/dt(αN(W+tV) + (β,(W+tV)#) + (γ,W+tV) + δ)|₀ = (αW# + β×W + γ, V), exactly. The left side is a
// cubic in t, so the ±1, ±2 central difference recovers its linear coefficient exactly.
TEST(DZ, CubicDerivativeExact) {
  for (const auto& J : {CubicNormStructure::unit(), CubicNormStructure::hermitian3(1),
                        CubicNormStructure::hermitian3(8), CubicNormStructure::quadratic_pair(2)}) {
    qtest::Sampler S(17);
    for (int s = 0; s < 10; ++s) {
      const Rational al = S.rational(), de = S.rational();
      auto Wz = S.jordan<Rational>(J), V = S.jordan<Rational>(J), be = S.jordan<Rational>(J),
           ga = S.jordan<Rational>(J);
      auto f = [&](int t) {
        JordanElement<Rational> x = Wz;
        x.axpy(Rational(t), V);
        return al * J.norm(x) + J.pair(be, J.sharp(x)) + J.pair(ga, x) + de;
      };
      const Rational lhs = (Rational(8) * (f(1) - f(-1)) - (f(2) - f(-2))) / Rational(12);
      JordanElement<Rational> g = al * J.sharp(Wz) + J.cross(be, Wz) + ga;
      EXPECT_EQ(lhs, J.pair(g, V)) << J.name();
    }
  }
}

// ---- character equations ----

TEST(CharResiduals, WhittakerCandidate) {
  std::mt19937_64 rng(19);
  for (const auto& J : {CubicNormStructure::unit(), CubicNormStructure::hermitian3(1)}) {
    FreudenthalSpace W(J);
    const RealW om = make_w(J, 0, -1, 0, 1);
    for (int n = 1; n <= 2; ++n) EXPECT_LE(worst_relative(W, n, om, whittaker_bundle(W, n, om), rng, 20), 1e-6);
  }
}

TEST(CharResiduals, GenericCharactersAndKinds) {
  std::mt19937_64 rng(23);
  for (const auto& J : {CubicNormStructure::hermitian3(2), CubicNormStructure::hermitian3(4),
                        CubicNormStructure::quadratic_pair(1)}) {
    FreudenthalSpace W(J);
    qtest::Sampler S(29);
    RealW om = make_w(J, 0, -1, 0, 1);
    om.axpy(0.05, S.wvec<double>(W));
    ASSERT_EQ(admissible(W, om), CharacterClass::Positive);
    EXPECT_LE(worst_relative(W, 3, om, whittaker_bundle(W, 3, om), rng, 3), 1e-6) << J.name();
  }
}

TEST(CharResiduals, ZeroAndPerturbedBundles) {
  std::mt19937_64 rng(31);
  for (const auto& J : {CubicNormStructure::unit(), CubicNormStructure::hermitian3(1)}) {
    FreudenthalSpace W(J);
    const RealW om = make_w(J, 0, -1, 0, 1);
    for (int n = 1; n <= 2; ++n) {
      ComponentBundle zero{n, [n](const LeviPoint&) { return std::vector<MachineComplex>(2 * n + 1, 0.0); }};
      LeviPoint p = sample_point(J, rng, 0.5, 2.0);
      for (const auto& r : char_residuals(W, n, om, zero, p, coordinate_basis(J))) EXPECT_EQ(r.abs, 0.0);
      ComponentBundle bent{n, [&W, n, om](const LeviPoint& q) {
                             auto v = whittaker_vector(W, n, om, q);
                             for (auto& x : v) x *= std::pow(q.w, 0.1);
                             return v;
                           }};
      EXPECT_GT(worst_relative(W, n, om, bent, rng, 5), 1e-3);
    }
  }
}

TEST(CharResiduals, RejectsW0AndMismatch) {
  auto J = CubicNormStructure::unit();
  FreudenthalSpace W(J);
  const RealW om = make_w(J, 0, -1, 0, 1);
  std::mt19937_64 rng(37);
  LeviPoint p = sample_point(J, rng);
  EXPECT_THROW(char_residuals(W, 2, om, whittaker_bundle(W, 1, om), p, coordinate_basis(J)), std::invalid_argument);
  p.sign = ComponentSign::W0;
  EXPECT_THROW(char_residuals(W, 1, om, whittaker_bundle(W, 1, om), p, coordinate_basis(J)), std::invalid_argument);
}

// Eliminating between the two w∂_w families: ((w∂_w)² − v²)G_v = |⟨ω,Z̃⟩|²G_v, G_v = w^{−2n−2}φ_v.
TEST(CharResiduals, EliminatedEulerEquation) {
  std::mt19937_64 rng(41);
  auto J = CubicNormStructure::hermitian3(1);
  FreudenthalSpace W(J);
  const RealW om = make_w(J, 0, -1, 0, 1);
  const int n = 2;
  for (int s = 0; s < 10; ++s) {
    LeviPoint p = sample_point(J, rng, 0.5, 2.0);
    auto G = [&](const LeviPoint& q) {
      auto v = whittaker_vector(W, n, om, q);
      for (auto& x : v) x /= std::pow(q.w, 2 * n + 2);
      return v;
    };
    auto EG = [&](const LeviPoint& q) { return euler_derivative(G, q); };
    auto e2 = euler_derivative(EG, p);
    auto g = G(p);
    const double u2 = std::norm(omega_z_tilde(W, om, p));
    for (int v = -n; v <= n; ++v) {
      const MachineComplex lhs = e2[v + n] - double(v * v) * g[v + n], rhs = u2 * g[v + n];
      EXPECT_LE(std::abs(lhs - rhs), 1e-6 * std::abs(rhs));
    }
  }
}

// ---- constant term ----

TEST(ConstTerm, MiddleSlot) {
  std::mt19937_64 rng(43);
  for (const auto& J : {CubicNormStructure::unit(), CubicNormStructure::hermitian3(1)}) {
    FreudenthalSpace W(J);
    for (int n = 1; n <= 3; ++n) {
      auto B = constant_term_bundle(W, n, HolomorphicFn(), MachineComplex(1.5, -0.5));
      for (int s = 0; s < 5; ++s) {
        LeviPoint p = sample_point(J, rng, 0.5, 2.0);
        EXPECT_LE(max_relative(const_term_residuals(W, n, B, p, coordinate_basis(J))), 1e-8);
      }
    }
  }
}

TEST(ConstTerm, HolomorphicSections) {
  std::mt19937_64 rng(47);
  for (const auto& J : {CubicNormStructure::unit(), CubicNormStructure::hermitian3(1)}) {
    FreudenthalSpace W(J);
    std::vector<HolomorphicFn> Hs = {
        [](const ComplexJordan&) { return MachineComplex(1.0); },
        [&J](const ComplexJordan& Z) { return std::exp(I * J.trace(Z)); },
        [&J](const ComplexJordan& Z) { return J.norm(Z) + 2.0 * J.trace(J.sharp(Z)) - I; }};
    for (int n = 1; n <= 3; ++n)
      for (const auto& H : Hs) {
        auto B = constant_term_bundle(W, n, H, 0.7);
        for (int s = 0; s < 4; ++s) {
          LeviPoint p = sample_point(J, rng, 0.5, 2.0);
          EXPECT_LE(max_relative(const_term_residuals(W, n, B, p, coordinate_basis(J))), 1e-6);
        }
      }
  }
}

TEST(ConstTerm, VanishingEnforced) {
  std::mt19937_64 rng(53);
  auto J = CubicNormStructure::hermitian3(1);
  FreudenthalSpace W(J);
  LeviPoint p = sample_point(J, rng, 0.5, 2.0);
  ComponentBundle zero{2, [](const LeviPoint&) { return std::vector<MachineComplex>(5, 0.0); }};
  EXPECT_EQ(max_relative(const_term_residuals(W, 2, zero, p, coordinate_basis(J))), 0.0);
  // an off-middle slot of the right w-weight still violates the system
  ComponentBundle stray{2, [](const LeviPoint& q) {
                          std::vector<MachineComplex> v(5, 0.0);
                          v[3] = std::pow(q.w, 6);
                          return v;
                        }};
  EXPECT_GT(max_relative(const_term_residuals(W, 2, stray, p, coordinate_basis(J))), 1e-3);
  // and a wrong w-weight in the middle slot is caught
  ComponentBundle heavy{2, [](const LeviPoint& q) {
                          std::vector<MachineComplex> v(5, 0.0);
                          v[2] = std::pow(q.w, 7);
                          return v;
                        }};
  EXPECT_GT(max_relative(const_term_residuals(W, 2, heavy, p, coordinate_basis(J))), 1e-3);
}

// ---- the symbolic table ----

namespace {
using CS = CayleyScalar;
const CS half{Rational(1, 2)};

// Corollary rows written directly: (1) (ε − 2(n+1) + v)F_v + ⟨ω,Z̃*⟩F_{v−1}, (2) (ε − 2(n+1) − v)F_v + ⟨ω,Z̃⟩F_{v+1},
// (3) (D_Z + (v/2)tr)F_v − ⟨ω,MV(E)⟩F_{v+1}, (4) (D_Z* − (v/2)tr)F_v − ⟨ω,MV(E)*⟩F_{v−1}.
std::vector<SchmidTerm> corollary(int family, int n, int v) {
  const CS vv{Rational(v)}, c{Rational(2 * (n + 1))};
  switch (family) {
    case 1:
      return {{CS(1), SchmidOp::Euler, WVector::None, 0},
              {vv - c, SchmidOp::One, WVector::None, 0},
              {CS(1), SchmidOp::DW, WVector::R0MinusI, -1}};
    case 2:
      return {{CS(1), SchmidOp::Euler, WVector::None, 0},
              {-vv - c, SchmidOp::One, WVector::None, 0},
              {CS(1), SchmidOp::DW, WVector::R0I, 1}};
    case 3:
      return {{CS(1), SchmidOp::DZ, WVector::None, 0},
              {half * vv, SchmidOp::TrE, WVector::None, 0},
              {CS(-1), SchmidOp::DW, WVector::VE, 1}};
    default:
      return {{CS(1), SchmidOp::DZStar, WVector::None, 0},
              {-half * vv, SchmidOp::TrE, WVector::None, 0},
              {CS(-1), SchmidOp::DW, WVector::VEStar, -1}};
  }
}
}  // namespace

TEST(SchmidTable, FamilyOneAtNOneVZero) {
  auto rows = schmid_coefficient_table(1);
  const SchmidRow* r = nullptr;
  for (const auto& x : rows)
    if (x.family == 1 && x.v == 0) r = &x;
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->slot, "[x^0][y^1]⊠(0,0,0,1)");
  // −½(ε − 4)F₀ + (i/2)∂^W_{r₀(−i)}F₋₁ + i∂_Heis F₀
  std::vector<SchmidTerm> expect = {{-half, SchmidOp::Euler, WVector::None, 0},
                                    {CS(2), SchmidOp::One, WVector::None, 0},
                                    {half * CS::i(), SchmidOp::DW, WVector::R0MinusI, -1},
                                    {CS::i(), SchmidOp::Heis, WVector::None, 0}};
  EXPECT_EQ(r->terms, expect);
}

TEST(SchmidTable, FamilyThreeRow) {
  for (const auto& r : schmid_coefficient_table(2)) {
    if (r.family != 3) continue;
    const CS vv{Rational(r.v)};
    // −(D_{Z(E)} + (v/2)tr E)F_v − i∂^W_{V(E)}F_{v+1}
    std::vector<SchmidTerm> expect = {{CS(-1), SchmidOp::DZ, WVector::None, 0},
                                      {-half * vv, SchmidOp::TrE, WVector::None, 0},
                                      {-CS::i(), SchmidOp::DW, WVector::VE, 1}};
    EXPECT_EQ(r.terms, expect);
    EXPECT_LT(r.v, 2);
  }
}

TEST(SchmidTable, CharacterSpecialization) {
  const CS scale[5] = {CS(0), -half, half, CS(-1), CS(1)};
  for (int n = 1; n <= 4; ++n) {
    auto rows = schmid_coefficient_table(n);
    EXPECT_EQ(rows.size(), std::size_t(8 * n));
    for (const auto& r : rows) {
      auto spec = character_specialize(r);
      auto expect = corollary(r.family, n, r.v);
      for (auto& t : expect) t.coeff = scale[r.family] * t.coeff;
      // drop identically-zero coefficients (e.g. tr term at v = 0)
      std::erase_if(expect, [](const SchmidTerm& t) { return t.coeff.is_zero(); });
      std::erase_if(spec.terms, [](const SchmidTerm& t) { return t.coeff.is_zero(); });
      EXPECT_EQ(spec.terms, expect) << to_string(r);
    }
  }
}
