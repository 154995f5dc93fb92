#pragma once
// Seeded verification suites over a descriptor token. Exact suites compare with ==;
// numeric suites record the worst relative residual.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>

#include "quatlie/cayley.hpp"
#include "quatlie/lie_g3.hpp"
#include "quatlie/orthogonal.hpp"
#include "quatlie/sampling.hpp"
#include "quatlie/schmid.hpp"

namespace quatlie {

enum class Level { Quick, Full };

inline Level parse_level(const std::string& s) {
  if (s == "quick") return Level::Quick;
  if (s == "full") return Level::Full;
  throw std::invalid_argument("unknown level: " + s);
}
inline std::string to_string(Level l) { return l == Level::Quick ? "quick" : "full"; }

struct RunReport {
  std::string suite;
  std::string descriptor;
  std::string level;
  std::uint64_t attempted = 0;
  std::uint64_t passed = 0;
  double max_residual = 0.0;
  double elapsed = 0.0;
  std::uint64_t seed = 0;
  std::optional<std::string> counterexample;

  bool ok() const { return attempted > 0 && passed == attempted; }

  // Exact check; describe() runs only for the first failure.
  template <class F>
  bool check(bool good, F&& describe) {
    ++attempted;
    if (good) {
      ++passed;
    } else if (!counterexample) {
      counterexample = describe();
    }
    return good;
  }
  // Residual check: passes when value ≤ tol.
  template <class F>
  bool at_most(double value, double tol, F&& describe) {
    max_residual = std::max(max_residual, std::isnan(value) ? INFINITY : value);
    return check(value <= tol, std::forward<F>(describe));
  }
  void merge(const RunReport& o) {
    attempted += o.attempted;
    passed += o.passed;
    max_residual = std::max(max_residual, o.max_residual);
    if (!counterexample && o.counterexample) counterexample = o.counterexample;
  }
};

namespace detail {

template <class... A>
std::string cat(const A&... a) {
  std::ostringstream os;
  os.precision(17);
  (os << ... << a);
  return os.str();
}

inline auto ce(std::string s) {
  return [s = std::move(s)] { return s; };
}

// Sparse accumulator for linear combinations of basis elements.
class SparseAcc {
 public:
  explicit SparseAcc(std::size_t n) : v_(n), hit_(n, false) {}
  void add(std::uint32_t k, const Rational& c) {
    if (!hit_[k]) {
      hit_[k] = true;
      touched_.push_back(k);
    }
    v_[k] += c;
  }
  // Returns the first nonzero index, or -1; resets to zero.
  long drain() {
    long bad = -1;
    for (auto k : touched_) {
      if (bad < 0 && !v_[k].is_zero()) bad = k;
      v_[k] = Rational(0);
      hit_[k] = false;
    }
    touched_.clear();
    return bad;
  }

 private:
  std::vector<Rational> v_;
  std::vector<bool> hit_;
  std::vector<std::uint32_t> touched_;
};

using SparseRow = std::vector<StructureConstants::Entry>;

inline SparseRow sparse(const Vec<Rational>& v) {
  SparseRow r;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) r.emplace_back(static_cast<std::uint32_t>(k), v[k]);
  return r;
}

// Ordered basis triples: all of them when exhaustive, otherwise `samples` seeded draws.
template <class F>
void for_triples(std::size_t n, bool exhaustive, std::uint64_t samples, Sampler& s, F&& f) {
  if (exhaustive) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) f(i, j, k);
    return;
  }
  const int top = static_cast<int>(n) - 1;
  for (std::uint64_t t = 0; t < samples; ++t) {
    const auto i = static_cast<std::size_t>(s.integer(0, top));
    const auto j = static_cast<std::size_t>(s.integer(0, top));
    const auto k = static_cast<std::size_t>(s.integer(0, top));
    f(i, j, k);
  }
}

inline bool exhaustive_triples(std::size_t n, Level level) {
  return level == Level::Full ? n <= 52 : n * n * n <= 10000;
}
inline std::uint64_t triple_samples(Level level) { return level == Level::Full ? 100000 : 10000; }

template <class A>
Matrix<Rational> cartan_gram(const A& alg) {
  const std::size_t n = alg.dim();
  using E = decltype(alg.template basis<Rational>(0));
  std::vector<E> b, tb;
  for (std::size_t k = 0; k < n; ++k) {
    b.push_back(alg.template basis<Rational>(k));
    tb.push_back(alg.cartan(b.back()));
  }
  Matrix<Rational> g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.set(i, j, -alg.killing(b[i], tb[j]));
  return g;
}

}  // namespace detail

// ---- cubic norm axioms ----

// The four axioms, N(U_x y) = N(x)²N(y), and the polarization consistency of (x,y,z).
inline void suite_axioms(const CubicNormStructure& J, std::uint64_t samples, Sampler& s, RunReport& r) {
  using JE = JordanElement<Rational>;
  auto N = [&](const JE& a) { return J.norm(a); };
  auto tri = [&](const JE& x, const JE& y, const JE& z) {
    return N(x + y + z) - N(x + y) - N(x + z) - N(y + z) + N(x) + N(y) + N(z);
  };
  const JE one = J.one<Rational>();
  const std::string name = J.name();
  r.check(N(one) == Rational(1), detail::ce(name + ": N(1) != 1"));
  r.check(J.sharp(one) == one, detail::ce(name + ": 1# != 1"));
  for (std::uint64_t t = 0; t < samples; ++t) {
    const JE x = s.jordan<Rational>(J), y = s.jordan<Rational>(J);
    auto where = [&](const char* what) { return detail::ce(detail::cat(name, ": ", what, " fails at sample ", t)); };
    r.check(J.cross(one, x) == J.pair(one, x) * one - x, where("1 x x = (1,x)1 - x"));
    r.check(J.sharp(J.sharp(x)) == N(x) * x, where("(x#)# = N(x)x"));
    r.check(J.pair(x, y) == Rational(1, 4) * tri(one, one, x) * tri(one, one, y) - tri(one, x, y),
            where("(x,y) = 1/4 (1,1,x)(1,1,y) - (1,x,y)"));
    r.check(N(x + y) == N(x) + J.pair(J.sharp(x), y) + J.pair(x, J.sharp(y)) + N(y),
            where("N(x+y) expansion"));
    r.check(tri(x, x, x) == 6 * N(x), where("(x,x,x) = 6N(x)"));
    r.check(N(J.U(x, y)) == N(x) * N(x) * N(y), where("N(U_x y) = N(x)^2 N(y)"));
  }
}

// ---- structure-constant sweeps on g(J) ----

struct GTables {
  const GAlgebra& G;
  StructureConstants sc;
  std::vector<detail::SparseRow> theta;  // Θ(b_i) in coordinates
  Matrix<Rational> killing;

  explicit GTables(const GAlgebra& g) : G(g), sc(g.structure_constants(true)), killing(g.dim(), g.dim()) {
    const std::size_t n = g.dim();
    std::vector<GElement<Rational>> b;
    for (std::size_t k = 0; k < n; ++k) b.push_back(g.basis<Rational>(k));
    for (std::size_t k = 0; k < n; ++k) theta.push_back(detail::sparse(g.coords(g.cartan(b[k]))));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) killing.set(i, j, g.killing(b[i], b[j]));
  }
};

inline void suite_jacobi(const GAlgebra& G, const StructureConstants& sc, Level level, Sampler& s, RunReport& r) {
  const std::size_t n = G.dim();
  detail::SparseAcc acc(n);
  // [b_a, [b_b, b_c]] into acc
  auto nested = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& [l, x] : sc.at(b, c))
      for (const auto& [m, y] : sc.at(a, l)) acc.add(m, x * y);
  };
  detail::for_triples(n, detail::exhaustive_triples(n, level), detail::triple_samples(level), s,
                      [&](std::size_t i, std::size_t j, std::size_t k) {
                        nested(i, j, k);
                        nested(j, k, i);
                        nested(k, i, j);
                        const long bad = acc.drain();
                        r.check(bad < 0, [&] {
                          return detail::cat("Jacobi fails on basis triple (", i, ",", j, ",", k, ") at coordinate ", bad);
                        });
                      });
  // dense triples through the bracket itself
  const int dense = level == Level::Full ? 20 : 3;
  for (int t = 0; t < dense; ++t) {
    auto x = G.from_coords(s.vec<Rational>(n)), y = G.from_coords(s.vec<Rational>(n)), z = G.from_coords(s.vec<Rational>(n));
    auto jac = G.bracket(x, G.bracket(y, z)) + G.bracket(y, G.bracket(z, x)) + G.bracket(z, G.bracket(x, y));
    r.check(jac.is_zero(), detail::ce(detail::cat("Jacobi fails on dense triple ", t)));
  }
}

// B([b_i,b_j],b_k) + B(b_j,[b_i,b_k]) = 0 on the Jacobi sweep, plus symmetry.
inline void suite_killing(const GTables& T, Level level, Sampler& s, RunReport& r) {
  const std::size_t n = T.G.dim();
  const auto& K = T.killing;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      r.check(K(i, j) == K(j, i), [&] { return detail::cat("B not symmetric at (", i, ",", j, ")"); });
  detail::for_triples(n, detail::exhaustive_triples(n, level), detail::triple_samples(level), s,
                      [&](std::size_t i, std::size_t j, std::size_t k) {
                        Rational v(0);
                        for (const auto& [l, c] : T.sc.at(i, j)) v += c * K(l, k);
                        for (const auto& [l, c] : T.sc.at(i, k)) v += c * K(j, l);
                        r.check(v.is_zero(), [&] {
                          return detail::cat("B invariance fails on basis triple (", i, ",", j, ",", k, "): ", v.str());
                        });
                      });
  const int dense = level == Level::Full ? 20 : 3;
  for (int t = 0; t < dense; ++t) {
    auto x = T.G.from_coords(s.vec<Rational>(n)), y = T.G.from_coords(s.vec<Rational>(n)),
         z = T.G.from_coords(s.vec<Rational>(n));
    r.check(T.G.killing(T.G.bracket(x, y), z) == -T.G.killing(y, T.G.bracket(x, z)),
            detail::ce(detail::cat("B invariance fails on dense triple ", t)));
  }
}

// Θ² = 1 and Θ[x,y] = [Θx,Θy] on all basis pairs; B_Θ = −B(·,Θ·) positive definite on m, h⁰, g.
inline void suite_cartan(const GTables& T, RunReport& r) {
  const auto& G = T.G;
  const std::size_t n = G.dim();
  detail::SparseAcc acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [a, x] : T.theta[i])
      for (const auto& [b, y] : T.theta[a]) acc.add(b, x * y);
    acc.add(static_cast<std::uint32_t>(i), Rational(-1));
    r.check(acc.drain() < 0, [&] { return detail::cat("Theta^2 != 1 on basis element ", i); });
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [l, c] : T.sc.at(i, j))
        for (const auto& [m, t] : T.theta[l]) acc.add(m, c * t);
      for (const auto& [a, x] : T.theta[i])
        for (const auto& [b, y] : T.theta[j])
          for (const auto& [m, c] : T.sc.at(a, b)) acc.add(m, -(x * y * c));
      const long bad = acc.drain();
      r.check(bad < 0, [&] { return detail::cat("Theta not an automorphism on basis pair (", i, ",", j, ")"); });
    }
  Matrix<Rational> gg(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v(0);
      for (const auto& [b, t] : T.theta[j]) v -= t * T.killing(i, b);
      gg.set(i, j, v);
    }
  auto pd = [&](const Matrix<Rational>& g, const char* which) {
    r.check(g == g.transpose(), detail::ce(detail::cat("B_Theta Gram on ", which, " not symmetric")));
    const long p = first_nonpositive_pivot(g);
    r.check(p < 0, [&] { return detail::cat("B_Theta Gram on ", which, " has non-positive pivot ", p); });
  };
  pd(detail::cartan_gram(G.h_algebra().m_algebra()), "m(J)");
  pd(detail::cartan_gram(G.h_algebra()), "h(J)0");
  pd(gg, "g(J)");
}

// ---- Cayley transform ----

inline void suite_cayley(const CubicNormStructure& J, Level level, Sampler& s, RunReport& r) {
  using C = CayleyScalar;
  using JC = JordanElement<C>;
  using FC = FreudenthalVector<C>;
  using GC = GElement<C>;
  CayleyTransform T(J);
  const auto& G = T.G();
  const auto& W = G.space();
  const auto& H = G.h_algebra();
  const C i = C::i(), r2 = C::sqrt2(), half(Rational(1, 2)), one(1), O(0);
  const JC j1 = J.one<C>(), z = J.zero<C>();
  const std::string name = J.name();
  const int draws = level == Level::Full ? 3 : 1;
  for (int d = 0; d < draws; ++d) {
    const JC X = vec_cast<C>(s.jordan<Rational>(J)), Z = vec_cast<C>(s.jordan<Rational>(J));
    auto id = [&](int k, const GC& lhs, const GC& rhs) {
      r.check(lhs == rhs, detail::ce(detail::cat(name, ": Cayley identity ", k, " fails (draw ", d, ")")));
    };
    id(1, T.apply_inverse(T.h3()), G.e_tensor(-i * FC{one, z, z, O}));
    id(2, T.apply_inverse(T.h1(X)), G.e_tensor(-i * FC{O, X, z, O}));
    id(3, T.apply_inverse(T.hm1(Z)), G.e_tensor(-i * FC{O, z, Z, O}));
    id(4, T.apply_inverse(T.hm3()), G.e_tensor(-i * FC{O, z, z, one}));
    id(5, T.apply_inverse(T.n_E(X)), G.from_h(H.nL_dual(X)));
    id(6, T.apply_inverse(T.n_F(Z)), G.from_h(H.nL(Z)));
    id(7, T.apply_inverse(T.e_ell()), G.sl2<C>(one, O, O));
    id(8, T.apply_inverse(T.f_ell()), G.sl2<C>(O, O, one));
    id(9, T.apply_inverse(G.conj_real(T.h3())), G.f_tensor(-i * FC{O, z, z, one}));
    id(10, T.apply_inverse(G.conj_real(T.h1(X))), G.f_tensor(i * FC{O, z, X, O}));
    id(11, T.apply_inverse(G.conj_real(T.hm1(Z))), G.f_tensor(-i * FC{O, Z, z, O}));
    id(12, T.apply_inverse(G.conj_real(T.hm3())), G.f_tensor(i * FC{one, z, z, O}));

    auto helper = [&](int k, bool good) {
      r.check(good, detail::ce(detail::cat(name, ": Cayley helper relation ", k, " fails (draw ", d, ")")));
    };
    const auto ng = W.n_dual<C>(half * i * j1) * W.n<C>(i * j1);
    // n∨(i/2)n(i) on V(X), V̄(X), r₀(±i)
    helper(1, W.apply(ng, T.V(X)) == FC{O, i * X, z, O});
    helper(2, W.apply(ng, T.V(X, true)) == FC{O, z, C(-2) * X, O});
    helper(3, W.apply(ng, T.r0_scalar(i)) == FC{one, z, z, O});
    helper(4, W.apply(ng, T.r0_scalar(-i)) == C(-8) * i * FC{O, z, z, one});
    // C₂⁻¹ on V₂
    const auto& c2i = T.c2_inverse();
    helper(5, c2i(0, 0) * i + c2i(0, 1) == r2 && c2i(1, 0) * i + c2i(1, 1) == O && c2i(0, 0) * i - c2i(0, 1) == O &&
                  c2i(1, 0) * i - c2i(1, 1) == -r2 * i);
    Matrix<C> m(2, 2), mb(2, 2), e0(2, 2), f0(2, 2);
    m.set(0, 0, C(-1));
    m.set(0, 1, i);
    m.set(1, 0, i);
    m.set(1, 1, one);
    mb.set(0, 0, C(-1));
    mb.set(0, 1, -i);
    mb.set(1, 0, -i);
    mb.set(1, 1, one);
    e0.set(0, 1, -i);
    f0.set(1, 0, i);
    helper(6, half * (c2i * m * T.c2()) == e0 && half * (c2i * mb * T.c2()) == f0);
    // J₂ n_L(x) J₂⁻¹ = n_L∨(−x) and back
    const auto j2 = W.J2<C>();
    helper(7, G.h_adjoint(j2, G.from_h(H.nL(X))) == G.from_h(H.nL_dual(JC(-X))) &&
                  G.h_adjoint(j2, G.from_h(H.nL_dual(X))) == G.from_h(H.nL(JC(-X))));
    helper(8, T.hm1(Z) == half * i * G.h_adjoint(W.n_dual<C>(i * j1), G.from_h(H.nL(Z))));
    helper(9, T.hm1(Z) == half * i * G.h_adjoint(W.n<C>(-i * j1), G.from_h(H.nL_dual(Z))));
    helper(10, G.h_adjoint(ng, G.conj_real(T.hm1(Z))) == C(-2) * i * G.from_h(H.nL(Z)));
    bool eta = true;
    for (const C& lam : {C(2), r2, C(Rational(1, 3))})
      eta = eta && G.h_adjoint(W.eta<C>(lam), G.from_h(H.nL(Z))) == G.from_h(H.nL(JC(inverse(lam * lam) * Z)));
    helper(11, eta);
    helper(12, T.V(X) == W.n_apply(JC(-i * j1), FC{half * J.trace(X), i * X, z, O}) &&
                   T.V(X, true) == W.n_apply(JC(i * j1), FC{half * J.trace(X), -i * X, z, O}));
    helper(13, W.J2(T.V(X)) == -i * T.V(X) && W.J2(T.r0_scalar(i)) == i * T.r0_scalar(i));
  }
}

// ---- model isomorphisms ----

// g₃(J) → g(J): bracket, pairing and involution transported on basis pairs.
inline void suite_iso32(const CubicNormStructure& J, Level level, Sampler& s, RunReport& r) {
  G3Algebra A(J);
  const auto& G = A.z2();
  const std::size_t n = A.dim();
  r.check(n == G.dim(), detail::ce(detail::cat("dim g3 = ", n, " but dim g = ", G.dim())));
  std::vector<G3Element<Rational>> b;
  std::vector<GElement<Rational>> ib;
  EchelonBasis<Rational> ech(G.dim());
  for (std::size_t k = 0; k < n; ++k) {
    b.push_back(A.basis<Rational>(k));
    ib.push_back(A.iso_32(b.back()));
    ech.insert(G.coords(ib.back()));
  }
  r.check(ech.rank() == G.dim(), detail::ce("image of the g3 basis does not span g(J)"));
  for (std::size_t k = 0; k < n; ++k) {
    r.check(A.iso_23(ib[k]) == b[k], [&] { return detail::cat("iso_23(iso_32(b)) != b at ", k); });
    r.check(A.iso_32(A.cartan(b[k])) == G.cartan(ib[k]), [&] { return detail::cat("involution transport fails at ", k); });
  }
  auto pair = [&](std::size_t i, std::size_t j) {
    r.check(A.iso_32(A.bracket(b[i], b[j])) == G.bracket(ib[i], ib[j]),
            [&] { return detail::cat("bracket transport fails on basis pair (", i, ",", j, ")"); });
    r.check(A.killing(b[i], b[j]) == G.killing(ib[i], ib[j]),
            [&] { return detail::cat("pairing transport fails on basis pair (", i, ",", j, ")"); });
  };
  if (level == Level::Full && n <= 52) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) pair(i, j);
  } else {
    const std::uint64_t samples = level == Level::Full ? 100000 : 2000;
    const int top = static_cast<int>(n) - 1;
    for (std::uint64_t t = 0; t < samples; ++t) {
      const auto i = static_cast<std::size_t>(s.integer(0, top));
      const auto j = static_cast<std::size_t>(s.integer(0, top));
      pair(i, j);
    }
  }
}

// ∧²𝕍 → g(J) for J = F × S: full basis-pair sweep.
inline void suite_iso_so(const CubicNormStructure& J, RunReport& r) {
  OrthogonalModel O(J);
  const auto& G = O.g_algebra();
  const std::size_t n = O.wedge_dim();
  std::vector<Wedge2Element<Rational>> b;
  std::vector<GElement<Rational>> img;
  EchelonBasis<Rational> ech(G.dim());
  for (std::size_t k = 0; k < n; ++k) {
    b.push_back(O.basis<Rational>(k));
    img.push_back(O.so_to_g(b.back()));
    ech.insert(G.coords(img.back()));
  }
  r.check(n == G.dim() && ech.rank() == G.dim(), detail::ce("wedge basis image is not a basis of g(J)"));
  const Rational c = O.killing_ratio();
  r.check(c == Rational(1), detail::ce("B_g / B_so ratio is " + c.str()));
  for (std::size_t k = 0; k < n; ++k) {
    r.check(O.so_to_g(O.so_cartan(b[k])) == G.cartan(img[k]), [&] { return detail::cat("involution transport fails at ", k); });
    for (std::size_t l = 0; l < n; ++l) {
      r.check(O.so_to_g(O.so_bracket(b[k], b[l])) == G.bracket(img[k], img[l]),
              [&] { return detail::cat("bracket transport fails on (", k, ",", l, ")"); });
      r.check(G.killing(img[k], img[l]) == c * O.so_killing(b[k], b[l]),
              [&] { return detail::cat("pairing transport fails on (", k, ",", l, ")"); });
    }
  }
}

// ---- numeric checks ----

inline RealW scaled_one_character(const CubicNormStructure& J, double a, double b, double c, double d) {
  return {a, b * J.one<double>(), c * J.one<double>(), d};
}

// Character equations for the Whittaker vector of the (0,−1,0,1) class, and detectability of a w^{0.1} bend.
inline void suite_schmid_char(const CubicNormStructure& J, int n, int points, std::uint64_t seed, RunReport& r) {
  FreudenthalSpace W(J);
  const RealW om = scaled_one_character(J, 0, -1, 0, 1);
  std::mt19937_64 rng(seed);
  const auto basis = coordinate_basis(J);
  const auto B = whittaker_bundle(W, n, om);
  for (int s = 0; s < points; ++s) {
    const LeviPoint p = sample_point(J, rng, 0.5, 2.0);
    const double res = max_relative(char_residuals(W, n, om, B, p, basis));
    r.at_most(res, 1e-6, [&] {
      return detail::cat(J.name(), " n=", n, ": char residual ", res, " at w=", p.w, " (point ", s, ")");
    });
  }
  ComponentBundle bent{n, [&W, n, om](const LeviPoint& q) {
                         auto v = whittaker_vector(W, n, om, q);
                         for (auto& x : v) x *= std::pow(q.w, 0.1);
                         return v;
                       }};
  double worst = 0;
  for (int s = 0; s < 5; ++s)
    worst = std::max(worst, max_relative(char_residuals(W, n, om, bent, sample_point(J, rng, 0.5, 2.0), basis)));
  r.check(worst > 1e-3, [&] { return detail::cat(J.name(), " n=", n, ": perturbed bundle residual only ", worst); });
}

// φ₀ = w^{2(n+1)} alone and the H ≡ 1 section both satisfy the ω = 0 system; stray middle slots are caught.
inline void suite_const_term(const CubicNormStructure& J, int n, int points, std::uint64_t seed, RunReport& r) {
  FreudenthalSpace W(J);
  std::mt19937_64 rng(seed);
  const auto basis = coordinate_basis(J);
  const auto middle = constant_term_bundle(W, n, HolomorphicFn(), MachineComplex(1.0));
  const auto one = constant_term_bundle(W, n, [](const ComplexJordan&) { return MachineComplex(1.0); }, 1.0);
  for (int s = 0; s < points; ++s) {
    const LeviPoint p = sample_point(J, rng, 0.5, 2.0);
    const auto mv = middle.eval(p);
    bool slots = true;
    for (int k = -n; k <= n; ++k)
      slots = slots && mv[static_cast<std::size_t>(k + n)] == (k == 0 ? MachineComplex(std::pow(p.w, 2 * n + 2)) : 0.0);
    r.check(slots, [&] { return detail::cat(J.name(), " n=", n, ": phi_0 slot layout wrong at point ", s); });
    for (const auto* B : {&middle, &one}) {
      const double res = max_relative(const_term_residuals(W, n, *B, p, basis));
      r.at_most(res, 1e-6, [&] {
        return detail::cat(J.name(), " n=", n, ": constant-term residual ", res, " at point ", s);
      });
    }
    const auto ov = one.eval(p);
    bool quiet = true;
    for (int k = 1 - n; k < n; ++k) quiet = quiet && (k == 0 || ov[static_cast<std::size_t>(k + n)] == 0.0);
    r.check(quiet, [&] { return detail::cat(J.name(), " n=", n, ": middle slot nonzero for H = 1"); });
  }
  if (n >= 2) {
    // a nonzero slot with 0 < |k| < n must be rejected
    ComponentBundle stray{n, [n](const LeviPoint& q) {
                            std::vector<MachineComplex> v(static_cast<std::size_t>(2 * n + 1), 0.0);
                            v[static_cast<std::size_t>(n + 1)] = std::pow(q.w, 2 * n + 2);
                            return v;
                          }};
    const double res = max_relative(const_term_residuals(W, n, stray, sample_point(J, rng, 0.5, 2.0), basis));
    r.check(res > 1e-3, [&] { return detail::cat(J.name(), " n=", n, ": stray middle slot not detected (", res, ")"); });
  }
}

inline void suite_bessel(RunReport& r) {
  auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
  for (int v = 0; v <= 12; ++v)
    for (double z = 0.5; z <= 50.0; z *= 1.2) {
      const double k = bessel_k(v, z);
      if (v >= 1) {
        const double e = rel(bessel_k(v + 1, z), bessel_k(v - 1, z) + (2.0 * v / z) * k);
        r.at_most(e, 1e-10, [&] { return detail::cat("K recurrence off by ", e, " at v=", v, " z=", z); });
      }
      const double o = rel(k, boost::math::cyl_bessel_k(v, z));
      r.at_most(o, 1e-9, [&] { return detail::cat("K_v vs oracle off by ", o, " at v=", v, " z=", z); });
      // −(z∂ − v)K_v = zK_{v+1} and ((z∂)² − v²)K_v = z²K_v
      // K_v varies on scale min(z, 1); the step keeps truncation near h⁴ and rounding near ε/h²
      const double h = 1e-3 * std::min(z, 1.0);
      auto K = [&](double t) { return bessel_k(v, t); };
      const double d1 = (8 * (K(z + h) - K(z - h)) - (K(z + 2 * h) - K(z - 2 * h))) / (12 * h);
      const double d2 = (-K(z - 2 * h) + 16 * K(z - h) - 30 * k + 16 * K(z + h) - K(z + 2 * h)) / (12 * h * h);
      const double e1 = rel(-(z * d1 - v * k), z * bessel_k(v + 1, z));
      r.at_most(e1, 1e-8, [&] { return detail::cat("first-order identity off by ", e1, " at v=", v, " z=", z); });
      // the second difference quotient carries ~1e-16/h² of rounding, so the scale is the sum of terms
      const double lhs = z * z * d2 + z * d1 - v * v * k, rhs = z * z * k;
      const double e2 = std::abs(lhs - rhs) / (std::abs(z * z * d2) + std::abs(z * d1) + v * v * k + rhs);
      r.at_most(e2, 1e-8, [&] { return detail::cat("second-order identity off by ", e2, " at v=", v, " z=", z); });
    }
}

inline void suite_positivity(const CubicNormStructure& J, std::uint64_t samples, std::uint64_t seed, RunReport& r) {
  FreudenthalSpace W(J);
  const auto res = positivity_scan(W, scaled_one_character(J, 0, -1, 0, 1), static_cast<int>(samples), seed);
  const double diff = res.min_difference.value_or(-INFINITY);
  r.check(diff >= 8.0 * (1 - 1e-9), [&] { return detail::cat(J.name(), ": difference statistic ", diff, " < 8"); });
  r.check(res.min_statistic >= 4.0 * (1 - 1e-9),
          [&] { return detail::cat(J.name(), ": |p| statistic ", res.min_statistic, " < 4"); });
  // ω = −(1,0,0,d) vanishes at Z = e^{iπ/3} d^{1/3} 1
  for (double d : {0.5, 1.0, 3.0, 17.0, 250.0}) {
    const RealW om = scaled_one_character(J, -1, 0, 0, -d);
    const MachineComplex z = std::polar(std::cbrt(d), std::acos(-1.0) / 3);
    const double v = std::abs(p_chi(W, om, ComplexJordan(z * J.one<MachineComplex>())));
    r.at_most(v / (1 + d), 1e-12, [&] { return detail::cat(J.name(), ": |p(Z)| = ", v, " at d=", d); });
  }
}

// Rank ≤ 3 characters: the η-directed scan drives the statistic to 0.
inline void suite_degenerate(const CubicNormStructure& J, std::uint64_t seed, RunReport& r) {
  FreudenthalSpace W(J);
  std::vector<std::pair<std::string, RealW>> reps = {{"rank 1", scaled_one_character(J, 1, 0, 0, 0)}};
  if (J.kind() == JordanKind::Hermitian3) {
    reps.push_back({"rank 2", {0.0, J.diag(1.0, 1.0, 0.0), J.zero<double>(), 0.0}});
    reps.push_back({"rank 3", {0.0, J.one<double>(), J.zero<double>(), 0.0}});
  }
  for (const auto& [label, om] : reps) {
    const auto res = positivity_scan(W, om, 200, seed, ScanMode::EtaDirected, 1e6);
    r.at_most(res.min_statistic, 1e-3, [&] { return detail::cat(J.name(), " ", label, ": statistic ", res.min_statistic); });
  }
}

// ---- dispatch ----

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> s{"axioms", "jacobi", "killing", "cartan", "cayley", "iso32", "isoSO", "schmid"};
  return s;
}

inline RunReport run_suite(const std::string& suite, const std::string& token, Level level, std::uint64_t seed) {
  const CubicNormStructure J = descriptor_for(token);
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw std::invalid_argument("unknown suite: " + suite);
  if (suite == "isoSO" && J.kind() != JordanKind::QuadraticPair)
    throw std::invalid_argument("isoSO needs an so:R algebra");
  RunReport r;
  r.suite = suite;
  r.descriptor = token;
  r.level = to_string(level);
  r.seed = seed;
  Sampler s(seed);
  const auto t0 = std::chrono::steady_clock::now();
  if (suite == "axioms") {
    suite_axioms(J, level == Level::Full ? 1000 : 200, s, r);
  } else if (suite == "jacobi") {
    GAlgebra G(J);
    suite_jacobi(G, G.structure_constants(true), level, s, r);
  } else if (suite == "killing" || suite == "cartan") {
    GAlgebra G(J);
    GTables T(G);
    if (suite == "killing")
      suite_killing(T, level, s, r);
    else
      suite_cartan(T, r);
  } else if (suite == "cayley") {
    suite_cayley(J, level, s, r);
  } else if (suite == "iso32") {
    suite_iso32(J, level, s, r);
  } else if (suite == "isoSO") {
    suite_iso_so(J, r);
  } else {
    const int points = level == Level::Full ? 20 : 5;
    for (int n = 1; n <= 2; ++n) {
      suite_schmid_char(J, n, points, seed + static_cast<std::uint64_t>(n), r);
      suite_const_term(J, n, points, seed + 10 + static_cast<std::uint64_t>(n), r);
    }
  }
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace quatlie
