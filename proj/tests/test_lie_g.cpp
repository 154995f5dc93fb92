#include <gtest/gtest.h>

#include "quatlie/lie_g.hpp"
#include "support.hpp"

using namespace quatlie;
using qtest::Sampler;

namespace {
using JE = JordanElement<Rational>;
using FV = FreudenthalVector<Rational>;
using GE = GElement<Rational>;

std::vector<GAlgebra> small_algebras() {
  std::vector<GAlgebra> v;
  for (const auto& J : qtest::all_descriptor_kinds())
    if (J.size() <= 9) v.emplace_back(J);
  return v;
}

GE random_g(const GAlgebra& G, Sampler& s) {
  const auto& W = G.space();
  const auto& J = G.jordan();
  const auto& M = G.h_algebra().m_algebra();
  GE g = G.sl2(s.rational(), s.rational(), s.rational());
  g.h.gamma = s.jordan<Rational>(J);
  g.h.x = s.jordan<Rational>(J);
  g.h.m = M.phi(s.jordan<Rational>(J), s.jordan<Rational>(J));
  g.we = s.wvec<Rational>(W);
  g.wf = s.wvec<Rational>(W);
  return g;
}
}  // namespace

TEST(LieG, Dimensions) {
  EXPECT_EQ(g_dim(CubicNormStructure::unit()), 14u);
  EXPECT_EQ(g_dim(CubicNormStructure::hermitian3(1)), 52u);
  EXPECT_EQ(g_dim(CubicNormStructure::hermitian3(2)), 78u);
  EXPECT_EQ(g_dim(CubicNormStructure::hermitian3(4)), 133u);
  EXPECT_EQ(g_dim(CubicNormStructure::hermitian3(8)), 248u);
  // J = F × S with dim S = r + 1 gives so(𝕍), dim 𝕍 = r + 7
  for (int r = 0; r <= 3; ++r) EXPECT_EQ(g_dim(CubicNormStructure::quadratic_pair(r)), std::size_t((r + 7) * (r + 6) / 2));
  // 3 + (2·1 + dim m(F)) + 2·4
  GAlgebra G2(CubicNormStructure::unit());
  EXPECT_EQ(G2.dim(), 3 + (2 + G2.h_algebra().m_algebra().dim()) + 2 * 4);
}

TEST(LieG, BracketExamples) {
  Sampler s(41);
  for (const auto& G : small_algebras()) {
    SCOPED_TRACE(G.jordan().name());
    const auto& W = G.space();
    FV v = s.wvec<Rational>(W), v2 = s.wvec<Rational>(W);
    Rational vv = W.symplectic(v, v2);
    EXPECT_EQ(G.bracket(G.e_tensor(v), G.e_tensor(v2)), vv * G.sl2<Rational>(1, 0, 0));
    EXPECT_EQ(G.bracket(G.sl2<Rational>(1, 0, 0), G.sl2<Rational>(0, 0, 1)), G.sl2<Rational>(0, 1, 0));
    GE expect = G.sl2<Rational>(0, -vv / 2, 0) + G.from_h(Rational(1, 2) * G.h_algebra().phi_ww(v, v2));
    EXPECT_EQ(G.bracket(G.e_tensor(v), G.f_tensor(v2)), expect);
    GE x = random_g(G, s);
    EXPECT_TRUE(G.bracket(x, x).is_zero());
  }
}

TEST(LieG, JacobiOnRandomTriples) {
  Sampler s(42);
  for (int k : {0, 1, 2, 3, 4}) {
    CubicNormStructure J = k == 0 ? CubicNormStructure::unit() : CubicNormStructure::hermitian3(1 << (k - 1));
    GAlgebra G(J);
    for (int t = 0; t < 3; ++t) {
      GE x = random_g(G, s), y = random_g(G, s), z = random_g(G, s);
      GE jac = G.bracket(x, G.bracket(y, z)) + G.bracket(y, G.bracket(z, x)) + G.bracket(z, G.bracket(x, y));
      ASSERT_TRUE(jac.is_zero()) << J.name();
      ASSERT_EQ(G.killing(G.bracket(x, z), y), -G.killing(G.bracket(y, z), x)) << J.name();
      ASSERT_EQ(G.cartan(G.bracket(x, y)), G.bracket(G.cartan(x), G.cartan(y))) << J.name();
    }
  }
}

TEST(LieG, KillingAndCartanExamples) {
  GAlgebra G(CubicNormStructure::hermitian3(1));
  GE e0 = G.sl2<Rational>(1, 0, 0), f0 = G.sl2<Rational>(0, 0, 1);
  EXPECT_EQ(G.killing(e0, f0), Rational(1));
  EXPECT_EQ(G.killing(G.sl2<Rational>(0, 1, 0), G.sl2<Rational>(0, 1, 0)), Rational(2));
  EXPECT_EQ(G.cartan(e0), -f0);
  EXPECT_EQ(G.cartan(G.sl2<Rational>(0, 1, 0)), G.sl2<Rational>(0, -1, 0));
  using C = CayleyScalar;
  GElement<C> ie0 = G.sl2<C>(C::i(), C(0), C(0));
  EXPECT_EQ(G.conj_real(ie0), G.sl2<C>(-C::i(), C(0), C(0)));
  Sampler s(43);
  GE x = random_g(G, s);
  EXPECT_EQ(G.cartan(G.cartan(x)), x);
  EXPECT_EQ(G.conj_real(x.cast<C>()), x.cast<C>());
}

TEST(LieG, FiveGrading) {
  Sampler s(44);
  for (const auto& G : small_algebras()) {
    SCOPED_TRACE(G.jordan().name());
    const auto& W = G.space();
    FV v = s.wvec<Rational>(W), v2 = s.wvec<Rational>(W);
    auto g = G.grade5(G.e_tensor(v));
    for (int d = 0; d < 5; ++d) EXPECT_EQ(g[d].is_zero(), d != 3);
    EXPECT_EQ(G.filtration_degree(G.sl2<Rational>(1, 1, 0)), 2);
    EXPECT_EQ(G.filtration_degree(G.f_tensor(v)), -1);
    GE b = G.bracket(G.e_tensor(v), G.e_tensor(v2));
    auto gb = G.grade5(b);
    for (int d = 0; d < 4; ++d) EXPECT_TRUE(gb[d].is_zero());
    GE x = random_g(G, s), y = random_g(G, s);
    GE sum = G.zero<Rational>();
    for (const auto& c : G.grade5(x)) sum += c;
    EXPECT_EQ(sum, x);
    auto gx = G.grade5(x), gy = G.grade5(y);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        GE br = G.bracket(gx[i], gy[j]);
        auto parts = G.grade5(br);
        for (int d = 0; d < 5; ++d)
          if (d != i + j - 2) {
            ASSERT_TRUE(parts[d].is_zero()) << i << "," << j;
          }
      }
  }
}

TEST(LieG, LeviActionIsAutomorphism) {
  Sampler s(45);
  for (const auto& G : small_algebras()) {
    SCOPED_TRACE(G.jordan().name());
    const auto& W = G.space();
    const auto& J = G.jordan();
    const auto& H = G.h_algebra();
    JE x = s.jordan<Rational>(J), y = s.jordan<Rational>(J);
    std::vector<HSimilitude<Rational>> gens{W.identity<Rational>(), W.n(x), W.n_dual(y), W.eta(Rational(2)),
                                            W.J2<Rational>(), W.scalar(Rational(3, 2)),
                                            W.scalar(Rational(2)) * W.n(x) * W.eta(Rational(-1, 3))};
    GE e0 = G.sl2<Rational>(1, 0, 0);
    GE x0 = random_g(G, s);
    EXPECT_EQ(G.h_adjoint(W.identity<Rational>(), x0), x0);
    for (const auto& g : gens) {
      EXPECT_EQ(G.h_adjoint(g, e0), g.nu * e0);
      for (int t = 0; t < 2; ++t) {
        GE a = random_g(G, s), b = random_g(G, s);
        ASSERT_EQ(G.h_adjoint(g, G.bracket(a, b)), G.bracket(G.h_adjoint(g, a), G.h_adjoint(g, b)));
        auto pa = G.grade5(a);
        for (int d = 0; d < 5; ++d) EXPECT_EQ(G.grade5(G.h_adjoint(g, pa[d]))[d], G.h_adjoint(g, pa[d]));
      }
      FV v = s.wvec<Rational>(W), w = s.wvec<Rational>(W);
      Matrix<Rational> lhs = g.nu.inv() * H.endo(H.phi_ww(W.apply(g, v), W.apply(g, w)));
      EXPECT_EQ(lhs, g.map * H.endo(H.phi_ww(v, w)) * *inverse(g.map));
    }
  }
}

TEST(LieG, StructureConstantsReproduceBracket) {
  for (const auto& G : small_algebras()) {
    if (G.dim() > 60) continue;
    SCOPED_TRACE(G.jordan().name());
    auto sc = G.structure_constants(true);
    Sampler s(46);
    for (int t = 0; t < 50; ++t) {
      std::size_t i = s.integer(0, int(G.dim()) - 1), j = s.integer(0, int(G.dim()) - 1);
      GE expect = G.zero<Rational>();
      for (const auto& [k, c] : sc.at(i, j)) expect.axpy(c, G.basis<Rational>(k));
      ASSERT_EQ(G.bracket(G.basis<Rational>(i), G.basis<Rational>(j)), expect);
    }
    for (std::size_t k = 0; k < G.dim(); ++k) EXPECT_EQ(G.basis_degree(k), G.filtration_degree(G.basis<Rational>(k)));
  }
}
