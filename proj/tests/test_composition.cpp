#include <gtest/gtest.h>

#include "quatlie/composition.hpp"
#include "support.hpp"

using namespace quatlie;

namespace {
Vec<Rational> e(int dim, int k) { return unit_vec<Rational>(static_cast<std::size_t>(dim), static_cast<std::size_t>(k)); }
}  // namespace

TEST(Composition, QuaternionAndOctonionConventions) {
  CompositionAlgebra H(4), O(8);
  EXPECT_EQ(H.mul(e(4, 1), e(4, 2)), e(4, 3));  // i·j = k
  EXPECT_EQ(O.mul(e(8, 1), e(8, 2)), e(8, 3));
  // Doubling oracle: octonions restricted to the first half reproduce the quaternions.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto t = O.product(i, j);
      auto u = H.product(i, j);
      EXPECT_EQ(t.index, u.index);
      EXPECT_EQ(t.sign, u.sign);
    }
}

TEST(Composition, UnitConjugationNormTrace) {
  qtest::Sampler s(5);
  for (int dim : {1, 2, 4, 8}) {
    CompositionAlgebra C(dim);
    auto one = C.one<Rational>();
    EXPECT_EQ(C.conj(one), one);
    EXPECT_EQ(C.norm(one), Rational(1));
    for (int k = 0; k < dim; ++k) EXPECT_EQ(C.norm(e(dim, k)), Rational(1));
    for (int t = 0; t < 50; ++t) {
      auto x = s.vec<Rational>(static_cast<std::size_t>(dim));
      EXPECT_EQ(C.mul(one, x), x);
      EXPECT_EQ(C.mul(x, one), x);
      EXPECT_EQ(x + C.conj(x), C.trace(x) * one);
      EXPECT_EQ(C.mul(x, C.conj(x)), C.norm(x) * one);
      EXPECT_EQ(C.mul(C.conj(x), x), C.norm(x) * one);
    }
  }
}

TEST(Composition, NormIsMultiplicativeAndAlgebraAlternative) {
  qtest::Sampler s(6);
  for (int dim : {1, 2, 4, 8}) {
    CompositionAlgebra C(dim);
    for (int t = 0; t < 1000; ++t) {
      auto x = s.vec<Rational>(static_cast<std::size_t>(dim));
      auto y = s.vec<Rational>(static_cast<std::size_t>(dim));
      ASSERT_EQ(C.norm(C.mul(x, y)), C.norm(x) * C.norm(y));
      ASSERT_EQ(C.mul(x, C.mul(x, y)), C.mul(C.mul(x, x), y));
      ASSERT_EQ(C.mul(C.mul(y, x), x), C.mul(y, C.mul(x, x)));
    }
  }
}

TEST(Composition, TraceFormPositiveDefinite) {
  for (int dim : {1, 2, 4, 8}) {
    CompositionAlgebra C(dim);
    Matrix<Rational> g(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        // Gram of (x, y) ↦ tr(x·conj(y))
        auto p = C.mul(e(dim, i), C.conj(e(dim, j)));
        g.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), C.trace(p));
      }
    EXPECT_EQ(g, g.transpose());
    EXPECT_EQ(first_nonpositive_pivot(g), -1);
  }
}

TEST(Composition, MismatchedAlgebrasRejected) {
  CompositionAlgebra H(4);
  EXPECT_THROW(H.mul(e(8, 1), e(4, 1)), std::invalid_argument);
  EXPECT_THROW(CompositionAlgebra(3), std::invalid_argument);
}
