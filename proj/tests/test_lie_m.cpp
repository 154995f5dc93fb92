#include <gtest/gtest.h>

#include <map>

#include "quatlie/lie_m.hpp"
#include "support.hpp"

using namespace quatlie;
using qtest::Sampler;

namespace {
using JE = JordanElement<Rational>;
using ME = MElement<Rational>;

std::vector<MAlgebra> algebras() {
  std::vector<MAlgebra> v;
  for (const auto& J : qtest::all_descriptor_kinds()) v.emplace_back(J);
  return v;
}

// Random element of m(J) as a combination of Φ_{γ,x}.
ME random_m(const MAlgebra& M, Sampler& s, int terms = 2) {
  const auto& J = M.jordan();
  ME r = M.zero<Rational>();
  for (int t = 0; t < terms; ++t) r += M.phi(s.jordan<Rational>(J), s.jordan<Rational>(J));
  return r;
}
}  // namespace

TEST(LieM, Dimensions) {
  // a(J) for H₃(C): so(3), su(3), sp(3), f₄
  std::map<std::string, std::size_t> a_dims{{"H3(R)", 3}, {"H3(C)", 8}, {"H3(H)", 21}, {"H3(O)", 52}};
  for (const auto& M : algebras()) {
    auto it = a_dims.find(M.jordan().name());
    if (it != a_dims.end()) {
      EXPECT_EQ(M.a_dim(), it->second) << it->first;
    }
    EXPECT_EQ(M.dim(), M.a_dim() + M.jdim());
  }
  EXPECT_EQ(MAlgebra(CubicNormStructure::unit()).a_dim(), 0u);
}

TEST(LieM, PhiOperatorIdentities) {
  Sampler s(21);
  for (const auto& M : algebras()) {
    SCOPED_TRACE(M.jordan().name());
    const auto& J = M.jordan();
    JE one = J.one<Rational>();
    for (int t = 0; t < 5; ++t) {
      JE g = s.jordan<Rational>(J), x = s.jordan<Rational>(J), z = s.jordan<Rational>(J);
      ME p = M.phi(g, x);
      EXPECT_EQ(p.mu, 2 * J.pair(g, x));
      EXPECT_EQ(M.apply(p, z), M.apply(M.phi(g, z), x));
      EXPECT_EQ(M.apply(M.phi(one, x), z), J.jordan_product(x, z));
      EXPECT_TRUE(M.phi_wedge(one, z).is_zero());
      ME w = M.phi_wedge(x, z);
      EXPECT_EQ(w.mu, Rational(0));
      EXPECT_TRUE(M.apply(w, one).is_zero());
      EXPECT_EQ(M.phi_primed(g, x).mu, Rational(0));
      // Φ_{ι(X),Y} + Φ_{ι(Y),X} = {{X,Y},•}
      EXPECT_EQ(M.apply(M.phi(x, z) + M.phi(z, x), g), J.jordan_product(J.jordan_product(x, z), g));
      // (φz, γ) + (z, φ̃γ) = 0
      EXPECT_EQ(J.pair(M.apply(p, z), x) + J.pair(z, M.apply_dual(p, x)), Rational(0));
    }
  }
}

TEST(LieM, MultiplierIdentityOnBasisTriples) {
  Sampler s(22);
  for (const auto& M : algebras()) {
    SCOPED_TRACE(M.jordan().name());
    const auto& J = M.jordan();
    JE g = s.jordan<Rational>(J), x = s.jordan<Rational>(J), y = s.jordan<Rational>(J);
    EXPECT_TRUE(M.satisfies_multiplier(M.phi(g, x)));
    EXPECT_TRUE(M.satisfies_multiplier(M.phi_primed(g, x)));
    EXPECT_TRUE(M.satisfies_multiplier(M.phi_wedge(x, y)));
    EXPECT_TRUE(M.satisfies_multiplier(M.identity<Rational>()));
    ME bad = M.phi(g, x);
    bad.mu += 1;
    EXPECT_FALSE(M.satisfies_multiplier(bad));
  }
}

TEST(LieM, BracketRules) {
  Sampler s(23);
  for (const auto& M : algebras()) {
    SCOPED_TRACE(M.jordan().name());
    const auto& J = M.jordan();
    for (int t = 0; t < 3; ++t) {
      JE w = s.jordan<Rational>(J), x = s.jordan<Rational>(J), y = s.jordan<Rational>(J),
         z = s.jordan<Rational>(J);
      ME a = M.phi_wedge(w, x);
      EXPECT_EQ(M.bracket(a, M.jordan_mult(z)), M.jordan_mult(M.apply(a, z)));
      EXPECT_EQ(M.bracket(M.jordan_mult(y), M.jordan_mult(z)), M.phi_wedge(z, y));
      ME p = random_m(M, s);
      EXPECT_TRUE(M.bracket(p, p).is_zero());
      EXPECT_TRUE(M.satisfies_multiplier(M.bracket(p, random_m(M, s))));
    }
  }
}

TEST(LieM, CoordinatesRoundTrip) {
  Sampler s(24);
  for (const auto& M : algebras()) {
    SCOPED_TRACE(M.jordan().name());
    for (std::size_t k = 0; k < M.dim(); ++k) EXPECT_EQ(M.coords(M.basis<Rational>(k)), unit_vec<Rational>(M.dim(), k));
    ME p = random_m(M, s, 3);
    EXPECT_EQ(M.from_coords(M.coords(p)), p);
    if (M.jdim() > 1) {
      ME bad = M.zero<Rational>();
      bad.phi.set(0, 1, Rational(1));
      EXPECT_THROW(M.coords(bad), std::domain_error);
    }
  }
}

TEST(LieM, KillingFormClosedFormulas) {
  Sampler s(25);
  for (const auto& M : algebras()) {
    SCOPED_TRACE(M.jordan().name());
    const auto& J = M.jordan();
    for (int t = 0; t < 4; ++t) {
      JE g = s.jordan<Rational>(J), x = s.jordan<Rational>(J), g2 = s.jordan<Rational>(J),
         x2 = s.jordan<Rational>(J);
      ME p = random_m(M, s, 3);
      EXPECT_EQ(M.killing(p, M.phi(g, x)), J.pair(M.apply(p, x), g));
      Rational closed = J.pair(g, x) * J.pair(g2, x2) + J.pair(g, x2) * J.pair(g2, x) -
                        J.pair(J.cross(g, g2), J.cross(x, x2));
      EXPECT_EQ(M.killing(M.phi(g, x), M.phi(g2, x2)), closed);
      Rational primed = Rational(1, 3) * J.pair(g, x) * J.pair(g2, x2) + J.pair(g, x2) * J.pair(g2, x) -
                        J.pair(J.cross(g, g2), J.cross(x, x2));
      EXPECT_EQ(M.killing(M.phi_primed(g, x), M.phi_primed(g2, x2)), primed);
      // B_m(Φ_{ι(1),x}, Φ_{ι(1),x′}) from the closed formula: 2(x,x′)
      EXPECT_EQ(M.killing(M.jordan_mult(x), M.jordan_mult(x2)), 2 * J.pair(x, x2));
      EXPECT_EQ(M.killing(M.jordan_mult(x), M.jordan_mult(x2)), J.trace(J.jordan_product(x, x2)));
      // ½B_m(Φ_{w∧x},Φ_{y∧z})
      JE w = g, y = g2, z = x2;
      Rational wedge = J.pair(w, z) * J.pair(x, y) - J.pair(x, z) * J.pair(w, y) +
                       J.pair(J.cross(x, y), J.cross(w, z)) - J.pair(J.cross(w, y), J.cross(x, z));
      EXPECT_EQ(Rational(1, 2) * M.killing(M.phi_wedge(w, x), M.phi_wedge(y, z)), wedge);
      Rational pos = J.pair(w, w) * J.pair(x, x) - J.pair(w, x) * J.pair(w, x) -
                     J.pair(J.cross(w, x), J.cross(w, x)) + J.pair(J.cross(w, w), J.cross(x, x));
      ME wx = M.phi_wedge(w, x);
      EXPECT_EQ(Rational(-1, 2) * M.killing(wx, M.cartan(wx)), pos);
      ME q = random_m(M, s, 2);
      EXPECT_EQ(M.killing(p, q), M.killing(q, p));
    }
  }
}

TEST(LieM, KillingInvarianceOnBasisTriples) {
  for (const auto& M : algebras()) {
    if (M.dim() > 30) continue;  // H₃(H), H₃(O) sampled below
    SCOPED_TRACE(M.jordan().name());
    const std::size_t n = M.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          ME x = M.basis<Rational>(i), y = M.basis<Rational>(j), z = M.basis<Rational>(k);
          ASSERT_EQ(M.killing(M.bracket(x, z), y), -M.killing(M.bracket(y, z), x));
        }
  }
  Sampler s(26);
  for (int d : {4, 8}) {
    MAlgebra M(CubicNormStructure::hermitian3(d));
    for (int t = 0; t < 20; ++t) {
      ME x = random_m(M, s, 1), y = random_m(M, s, 1), z = random_m(M, s, 1);
      ASSERT_EQ(M.killing(M.bracket(x, z), y), -M.killing(M.bracket(y, z), x));
    }
  }
}

TEST(LieM, CartanInvolution) {
  Sampler s(27);
  for (const auto& M : algebras()) {
    SCOPED_TRACE(M.jordan().name());
    const auto& J = M.jordan();
    JE g = s.jordan<Rational>(J), x = s.jordan<Rational>(J), y = s.jordan<Rational>(J);
    EXPECT_EQ(M.cartan(M.phi(g, x)), -M.phi(x, g));
    EXPECT_EQ(M.cartan(M.phi_wedge(x, y)), M.phi_wedge(x, y));
    EXPECT_EQ(M.cartan(M.jordan_mult(x)), -M.jordan_mult(x));
    ME p = random_m(M, s), q = random_m(M, s);
    EXPECT_EQ(M.cartan(M.cartan(p)), p);
    EXPECT_EQ(M.cartan(M.bracket(p, q)), M.bracket(M.cartan(p), M.cartan(q)));
  }
}

TEST(LieM, CartanPairingPositiveDefinite) {
  for (const auto& M : algebras()) {
    SCOPED_TRACE(M.jordan().name());
    const std::size_t n = M.dim();
    std::vector<ME> b, tb;
    for (std::size_t k = 0; k < n; ++k) {
      b.push_back(M.basis<Rational>(k));
      tb.push_back(M.cartan(b.back()));
    }
    Matrix<Rational> gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gram.set(i, j, -M.killing(b[i], tb[j]));
    EXPECT_EQ(gram, gram.transpose());
    EXPECT_EQ(first_nonpositive_pivot(gram), -1);
  }
}
