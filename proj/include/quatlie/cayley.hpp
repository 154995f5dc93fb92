#pragma once
// Cayley transform 𝒞 = (C₂ ⊠ C_h)·w₂₃ on g(J) ⊗ Q(i,√2), the k-basis (e_ℓ, h_ℓ, f_ℓ, n_E, n_H, n_F),
// the p-basis (h₃, h₁, h₋₁, h₋₃) with its (a,b,c,d)_p packing, and the Iwasawa re-expressions.
//   C₂ = (1/√2)(i −1; 1 −i),  C_h = n(−i) n∨(−i/2) η(2^{−1/2}),  w₂₃ = (−1 0 0; 0 0 −1; 0 −1 0).
// Scalar arguments of n, n∨ stand for multiples of 1_J.

#include <stdexcept>
#include <string>

#include "quatlie/lie_g3.hpp"

namespace quatlie {

using CS = CayleyScalar;

// (a,b,c,d)_p = a·h₃ + h₁(b) + h₋₁(c) + d·h₋₃
struct PVector {
  CS a;
  JordanElement<CS> b, c;
  CS d;
  friend bool operator==(const PVector& x, const PVector& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

// x = n + l + k with n in the nilpotent radical (e₀, e⊗W_J, n_L(J)), l in the split torus / Levi
// part and k in the compact subalgebra.
struct IwasawaParts {
  GElement<CS> n, levi, k;
};

class CayleyTransform {
 public:
  explicit CayleyTransform(const CubicNormStructure& j) : A_(j) {
    const auto& W = G().space();
    const auto& J = jordan();
    const CS i = CS::i();
    JordanElement<CS> one = J.one<CS>();
    CS r2inv = inverse(CS::sqrt2());
    ch_ = W.n<CS>(-i * one) * W.n_dual<CS>(CS(Rational(-1, 2)) * i * one) * W.eta<CS>(r2inv);
    ch_inv_ = W.eta<CS>(CS::sqrt2()) * W.n_dual<CS>(CS(Rational(1, 2)) * i * one) * W.n<CS>(i * one);
    c2_ = Matrix<CS>(2, 2);
    c2_.set(0, 0, r2inv * i);
    c2_.set(0, 1, -r2inv);
    c2_.set(1, 0, r2inv);
    c2_.set(1, 1, -r2inv * i);
    c2_inv_ = *inverse(c2_);
    w23_ = Matrix<CS>(3, 3);
    w23_.set(0, 0, CS(-1));
    w23_.set(1, 2, CS(-1));
    w23_.set(2, 1, CS(-1));
  }

  const G3Algebra& z3() const { return A_; }
  const GAlgebra& G() const { return A_.z2(); }
  const CubicNormStructure& jordan() const { return A_.jordan(); }
  const HSimilitude<CS>& c_h() const { return ch_; }
  const HSimilitude<CS>& c_h_inverse() const { return ch_inv_; }
  const Matrix<CS>& c2() const { return c2_; }
  const Matrix<CS>& c2_inverse() const { return c2_inv_; }

  // SL₂ acting on sl₂ ⊕ V₂⊗W_J; h(J)⁰ is fixed.
  GElement<CS> sl2_adjoint(const Matrix<CS>& g, const GElement<CS>& x) const {
    auto gi = inverse(g);
    if (!gi) throw std::invalid_argument("sl2_adjoint: singular matrix");
    Matrix<CS> X(2, 2);
    X.set(0, 0, x.h0);
    X.set(0, 1, x.e0);
    X.set(1, 0, x.f0);
    X.set(1, 1, -x.h0);
    Matrix<CS> Y = g * X * *gi;
    GElement<CS> r = x;
    r.h0 = Y(0, 0);
    r.e0 = Y(0, 1);
    r.f0 = Y(1, 0);
    r.we = g(0, 0) * x.we + g(0, 1) * x.wf;
    r.wf = g(1, 0) * x.we + g(1, 1) * x.wf;
    return r;
  }
  // w₂₃ through the Z/3 model; w₂₃ is its own inverse.
  GElement<CS> w23(const GElement<CS>& x) const { return A_.iso_32(A_.sl3_adjoint(w23_, A_.iso_23(x))); }

  GElement<CS> apply(const GElement<CS>& x) const {
    return G().h_adjoint(ch_, sl2_adjoint(c2_, w23(x)));
  }
  GElement<CS> apply_inverse(const GElement<CS>& x) const {
    return w23(G().h_adjoint(ch_inv_, sl2_adjoint(c2_inv_, x)));
  }
  // Dense matrix of 𝒞 (or 𝒞⁻¹) in the basis of GAlgebra.
  Matrix<CS> matrix(bool inv = false) const {
    const std::size_t n = G().dim();
    Matrix<CS> m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      GElement<CS> b = G().basis<CS>(k);
      m.set_column(k, G().coords(inv ? apply_inverse(b) : apply(b)));
    }
    return m;
  }

  // ---- k-basis ----
  FreudenthalVector<CS> r0_scalar(const CS& z) const { return G().space().r0(CS(z) * jordan().one<CS>()); }
  // V(X) = ½(tr X, −i tr X + 2iX, tr X − 2X, −i tr X);  V(X)* its conjugate
  FreudenthalVector<CS> V(const JordanElement<CS>& x, bool star = false) const {
    const auto& J = jordan();
    const CS i = star ? -CS::i() : CS::i();
    CS tr = J.trace(x);
    JordanElement<CS> one = J.one<CS>();
    JordanElement<CS> b = CS(2) * i * x, c = CS(-2) * x;
    b.axpy(-i * tr, one);
    c.axpy(tr, one);
    FreudenthalVector<CS> v{tr, b, c, -i * tr};
    v *= half();
    return v;
  }
  GElement<CS> e_ell() const { return iepf(CS(Rational(1, 4)), r0_scalar(CS::i()), true); }
  GElement<CS> f_ell() const { return iepf(CS(Rational(1, 4)), r0_scalar(-CS::i()), false); }
  // h_ℓ = (i/2)((0 1; −1 0) + n_L(−1) + n_L∨(ι(1)))
  GElement<CS> h_ell() const {
    const auto& H = G().h_algebra();
    JordanElement<CS> one = jordan().one<CS>();
    GElement<CS> g = G().sl2<CS>(CS(1), CS(0), CS(-1));
    g.h = H.nL<CS>(-one) + H.nL_dual<CS>(one);
    g *= half() * CS::i();
    return g;
  }
  GElement<CS> n_E(const JordanElement<CS>& x) const { return iepf(half(), V(x, true), true); }
  GElement<CS> n_F(const JordanElement<CS>& x) const { return iepf(half(), V(x), false); }
  // n_H(X) = (i/2)(tr X (0 1; −1 0) + n_L(tr X − 2X) + n_L∨(ι(2X − tr X)))
  GElement<CS> n_H(const JordanElement<CS>& x) const {
    const auto& J = jordan();
    const auto& H = G().h_algebra();
    CS tr = J.trace(x);
    JordanElement<CS> y = CS(-2) * x;
    y.axpy(tr, J.one<CS>());
    GElement<CS> g = G().sl2<CS>(tr, CS(0), -tr);
    g.h = H.nL<CS>(y) + H.nL_dual<CS>(-y);
    g *= half() * CS::i();
    return g;
  }

  // ---- p-basis ----
  GElement<CS> h3() const { return G().sl2<CS>(half() * CS::i(), CS(Rational(-1, 2)), half() * CS::i()); }
  GElement<CS> h1(const JordanElement<CS>& x) const { return iepf(half(), V(x), true); }
  // h₋₁(Z) = (i/2)(n_L(Z) + n_L∨(ι(Z))) + ½M(Φ_{1,Z})
  GElement<CS> hm1(const JordanElement<CS>& z) const {
    const auto& H = G().h_algebra();
    GElement<CS> g = G().zero<CS>();
    g.h = half() * CS::i() * (H.nL<CS>(z) + H.nL_dual<CS>(z));
    g.h.axpy(half(), H.from_m(H.m_algebra().jordan_mult(z)));
    return g;
  }
  GElement<CS> hm3() const { return iepf(CS(Rational(1, 4)), r0_scalar(CS::i()), false); }

  GElement<CS> pack(const PVector& p) const {
    GElement<CS> g = p.a * h3();
    g += h1(p.b);
    g += hm1(p.c);
    g.axpy(p.d, hm3());
    return g;
  }

  // [n_F(X), (a,b,c,d)_p] = (0, aX, b×X, (X,c))_p
  PVector nF_action(const JordanElement<CS>& x, const PVector& p) const {
    const auto& J = jordan();
    return {CS(0), p.a * x, J.cross(p.b, x), J.pair(x, p.c)};
  }
  // [n_E(X), (a,b,c,d)_p] = ((b,X), c×X, dX, 0)_p
  PVector nE_action(const JordanElement<CS>& x, const PVector& p) const {
    const auto& J = jordan();
    return {J.pair(p.b, x), J.cross(p.c, x), p.d * x, CS(0)};
  }
  // [n_H(X), (a,b,c,d)_p] = (tr X·a, tr X·b − {X,b}, {X,c} − tr X·c, −tr X·d)_p
  PVector nH_action(const JordanElement<CS>& x, const PVector& p) const {
    const auto& J = jordan();
    CS tr = J.trace(x);
    JordanElement<CS> b = tr * p.b - J.jordan_product(x, p.b);
    JordanElement<CS> c = J.jordan_product(x, p.c) - tr * p.c;
    return {tr * p.a, b, c, -tr * p.d};
  }

  // ---- Iwasawa ----
  //   h₃ = −½ε + i e₀ − ¼h_ℓ − ¼n_H(1)
  //   h₁(X) = ie⊗V(X) − n_F(X)
  //   h₋₁(Z) = ½M(Φ_{1,Z}) + i n_L(Z) + (tr Z/4)h_ℓ + ½n_H(Z − tr Z/2)
  //   h₋₃ = (i/2)e⊗r₀(i) − e_ℓ
  IwasawaParts iwasawa_h3() const {
    const auto& J = jordan();
    IwasawaParts p{G().sl2<CS>(CS::i(), CS(0), CS(0)), G().sl2<CS>(CS(0), CS(Rational(-1, 2)), CS(0)), G().zero<CS>()};
    p.k = CS(Rational(-1, 4)) * (h_ell() + n_H(J.one<CS>()));
    return p;
  }
  IwasawaParts iwasawa_h1(const JordanElement<CS>& x) const {
    return {G().e_tensor(CS::i() * V(x)), G().zero<CS>(), -n_F(x)};
  }
  IwasawaParts iwasawa_hm1(const JordanElement<CS>& z) const {
    const auto& J = jordan();
    const auto& H = G().h_algebra();
    CS tr = J.trace(z);
    IwasawaParts p{G().from_h(CS::i() * H.nL<CS>(z)), G().from_h(half() * H.from_m(H.m_algebra().jordan_mult(z))),
                   G().zero<CS>()};
    JordanElement<CS> y = z;
    y.axpy(-half() * tr, J.one<CS>());
    p.k = CS(Rational(1, 4)) * tr * h_ell() + half() * n_H(y);
    return p;
  }
  IwasawaParts iwasawa_hm3() const { return {G().e_tensor(half() * CS::i() * r0_scalar(CS::i())), G().zero<CS>(), -e_ell()}; }
  // Dispatch by name: "h3", "h1", "h-1", "h-3".
  IwasawaParts iwasawa_express(const std::string& which, const JordanElement<CS>& arg = {}) const {
    if (which == "h3") return iwasawa_h3();
    if (which == "h1") return iwasawa_h1(arg);
    if (which == "h-1") return iwasawa_hm1(arg);
    if (which == "h-3") return iwasawa_hm3();
    throw std::invalid_argument("iwasawa_express: unsupported element " + which);
  }

 private:
  static CS half() { return CS(Rational(1, 2)); }
  // s(ie ± f) ⊗ w
  GElement<CS> iepf(const CS& s, const FreudenthalVector<CS>& w, bool plus) const {
    GElement<CS> g = G().zero<CS>();
    g.we = s * CS::i() * w;
    g.wf = plus ? s * w : -s * w;
    return g;
  }

  G3Algebra A_;
  HSimilitude<CS> ch_, ch_inv_;
  Matrix<CS> c2_, c2_inv_, w23_;
};

}  // namespace quatlie
