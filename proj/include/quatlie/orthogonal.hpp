#pragma once
// The quadratic-space realization of g(J) for J = F × S:
//   V = F ⊕ S ⊕ F with q_V(α,s,β) = αβ − q_S(s),
//   𝕍 = M₂ ⊕ V with q(m,v) = det m + q_V(v),
// and the isomorphism so(𝕍) ≅ ∧²𝕍 → g(J) at α = ½.
//
// Coordinates on 𝕍: [a, b, c, d | α, s₀, …, s_r, β] for m = (a b; c d).
// M₂ ≅ V₂⊗V₂ by m ↦ e⊗(a,c) + f⊗(b,d), so E₁₁ = e⊗e, E₁₂ = f⊗e, E₂₁ = e⊗f, E₂₂ = f⊗f.
// An element of ∧²𝕍 is held as an antisymmetric matrix P with p = Σ_{i<j} P_ij e_i∧e_j; it acts
// on 𝕍 by P·G where G is the Gram matrix of ( , ).

#include <stdexcept>
#include <utility>

#include "quatlie/lie_g.hpp"

namespace quatlie {

template <class T>
struct Wedge2Element {
  Matrix<T> p;

  bool is_zero() const { return p.is_zero(); }
  Wedge2Element& operator+=(const Wedge2Element& o) {
    p += o.p;
    return *this;
  }
  Wedge2Element& operator-=(const Wedge2Element& o) {
    p -= o.p;
    return *this;
  }
  Wedge2Element& operator*=(const T& s) {
    p *= s;
    return *this;
  }
  friend Wedge2Element operator+(Wedge2Element a, const Wedge2Element& b) { return a += b; }
  friend Wedge2Element operator-(Wedge2Element a, const Wedge2Element& b) { return a -= b; }
  friend Wedge2Element operator*(const T& s, Wedge2Element a) { return a *= s; }
  Wedge2Element operator-() const { return {-p}; }
  friend bool operator==(const Wedge2Element& a, const Wedge2Element& b) { return a.p == b.p; }
  friend bool operator!=(const Wedge2Element& a, const Wedge2Element& b) { return !(a == b); }
};

template <class T>
using Sl2Matrix = Matrix<T>;  // 2×2, traceless

class OrthogonalModel {
 public:
  explicit OrthogonalModel(const CubicNormStructure& J) : G_(J) {
    if (J.kind() != JordanKind::QuadraticPair) throw std::invalid_argument("OrthogonalModel: needs a quadratic_pair descriptor");
    const auto& g = J.s_gram();
    sdim_ = g.size();
    n_ = 4 + vdim();
    gram_ = Matrix<Rational>(n_, n_);
    gram_.set(0, 3, Rational(1));
    gram_.set(3, 0, Rational(1));
    gram_.set(1, 2, Rational(-1));
    gram_.set(2, 1, Rational(-1));
    const std::size_t a = 4, b = 4 + sdim_ + 1;
    gram_.set(a, b, Rational(1));
    gram_.set(b, a, Rational(1));
    for (std::size_t k = 0; k < sdim_; ++k) gram_.set(a + 1 + k, a + 1 + k, Rational(-2) * g[k]);

    // ι_𝕍(m, v) = (J₂mJ₂⁻¹, ι_V v), ι_V(α,s,β) = (β, −ι_S s, α)
    iota_ = Matrix<Rational>(n_, n_);
    iota_.set(3, 0, Rational(1));
    iota_.set(0, 3, Rational(1));
    iota_.set(2, 1, Rational(-1));
    iota_.set(1, 2, Rational(-1));
    iota_.set(a, b, Rational(1));
    iota_.set(b, a, Rational(1));
    iota_.set(a + 1, a + 1, Rational(-1));
    for (std::size_t k = 1; k < sdim_; ++k) iota_.set(a + 1 + k, a + 1 + k, Rational(1));

    ratio_ = compute_ratio();
  }

  const GAlgebra& g_algebra() const { return G_; }
  const CubicNormStructure& jordan() const { return G_.jordan(); }
  std::size_t dim() const { return n_; }
  std::size_t vdim() const { return sdim_ + 2; }
  std::size_t wedge_dim() const { return n_ * (n_ - 1) / 2; }
  const Matrix<Rational>& gram() const { return gram_; }
  const Matrix<Rational>& iota() const { return iota_; }
  // B_g(so_to_g p, so_to_g q) = killing_ratio() · B_so(p, q)
  const Rational& killing_ratio() const { return ratio_; }

  // ---- ∧²𝕍 ----
  template <class T>
  Wedge2Element<T> zero() const {
    return {Matrix<T>(n_, n_)};
  }
  template <class T>
  Wedge2Element<T> wedge(const Vec<T>& v, const Vec<T>& w) const {
    Wedge2Element<T> r = zero<T>();
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        T x = v[i] * w[j] - w[i] * v[j];
        if (!is_zero(x)) r.p.set(i, j, x);
      }
    return r;
  }
  // e_i ∧ e_j
  template <class T>
  Wedge2Element<T> wedge(std::size_t i, std::size_t j) const {
    return wedge(unit_vec<T>(n_, i), unit_vec<T>(n_, j));
  }
  // Basis e_i∧e_j, i < j, in lexicographic order.
  template <class T>
  Wedge2Element<T> basis(std::size_t k) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (k < n_ - 1 - i) return wedge<T>(i, i + 1 + k);
      k -= n_ - 1 - i;
    }
    throw std::out_of_range("OrthogonalModel::basis");
  }

  template <class T>
  T form(const Vec<T>& x, const Vec<T>& y) const {
    return dot(x, mat_cast<T>(gram_).apply(y));
  }
  // Matrix of p acting on 𝕍.
  template <class T>
  Matrix<T> action(const Wedge2Element<T>& p) const {
    return p.p * mat_cast<T>(gram_);
  }
  template <class T>
  Wedge2Element<T> so_bracket(const Wedge2Element<T>& p, const Wedge2Element<T>& q) const {
    Matrix<T> g = mat_cast<T>(gram_);
    return {p.p * g * q.p - q.p * g * p.p};
  }
  // B_so = ½ tr(action(p)·action(q))
  template <class T>
  T so_killing(const Wedge2Element<T>& p, const Wedge2Element<T>& q) const {
    Matrix<T> m = action(p) * action(q);
    T t{};
    for (std::size_t i = 0; i < n_; ++i) t += m(i, i);
    return t * inverse(T(2));
  }
  template <class T>
  Wedge2Element<T> so_cartan(const Wedge2Element<T>& p) const {
    Matrix<T> i = mat_cast<T>(iota_);
    return {i * p.p * i.transpose()};
  }

  // ---- V₂ ⊗ V ≅ W_J ----
  // e⊗(α,s,β) + f⊗(γ,t,δ) ↦ (α, (γ,s), (β, ι_S t), δ)
  template <class T>
  FreudenthalVector<T> w_embed(const Vec<T>& x, const Vec<T>& y) const {
    if (x.size() != vdim() || y.size() != vdim()) throw std::invalid_argument("w_embed: V element of wrong size");
    const std::size_t jd = sdim_ + 1;
    FreudenthalVector<T> w{x[0], JordanElement<T>(jd), JordanElement<T>(jd), y[vdim() - 1]};
    w.b[0] = y[0];
    w.c[0] = x[vdim() - 1];
    for (std::size_t k = 0; k < sdim_; ++k) {
      w.b[1 + k] = x[1 + k];
      w.c[1 + k] = k == 0 ? y[1 + k] : -y[1 + k];
    }
    return w;
  }
  template <class T>
  std::pair<Vec<T>, Vec<T>> w_unembed(const FreudenthalVector<T>& w) const {
    Vec<T> x(vdim()), y(vdim());
    x[0] = w.a;
    x[vdim() - 1] = w.c[0];
    y[0] = w.b[0];
    y[vdim() - 1] = w.d;
    for (std::size_t k = 0; k < sdim_; ++k) {
      x[1 + k] = w.b[1 + k];
      y[1 + k] = k == 0 ? w.c[1 + k] : -w.c[1 + k];
    }
    return {x, y};
  }

  // ---- so(M₂) ≅ sl₂ ⊕ sl₂ ----
  // v·v′ as the map x ↦ ⟨v′,x⟩v + ⟨v,x⟩v′ on V₂.
  template <class T>
  static Sl2Matrix<T> sym2(const Vec<T>& v, const Vec<T>& w) {
    Sl2Matrix<T> m(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
      // ⟨u, e⟩ = −u₁, ⟨u, f⟩ = u₀
      m.at(i, 0) = -(v[i] * w[1] + w[i] * v[1]);
      m.at(i, 1) = v[i] * w[0] + w[i] * v[0];
    }
    return m;
  }
  // (v₁⊗v₂)∧(v₁′⊗v₂′) ↦ −½(⟨v₂,v₂′⟩v₁·v₁′, ⟨v₁,v₁′⟩v₂·v₂′), read off the M₂ × M₂ block of p.
  template <class T>
  std::pair<Sl2Matrix<T>, Sl2Matrix<T>> so4_split(const Wedge2Element<T>& p) const {
    std::pair<Sl2Matrix<T>, Sl2Matrix<T>> r{Sl2Matrix<T>(2, 2), Sl2Matrix<T>(2, 2)};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        const T& c = p.p(i, j);
        if (is_zero(c)) continue;
        auto [u1, u2] = m2_factors<T>(i);
        auto [w1, w2] = m2_factors<T>(j);
        T k = c * T(Rational(-1, 2));
        r.first.axpy(k * symp(u2, w2), sym2(u1, w1));
        r.second.axpy(k * symp(u1, w1), sym2(u2, w2));
      }
    return r;
  }

  // sl₂⁽²⁾ ⊕ so(V) → h(J)⁰ through the action on V₂⁽²⁾ ⊗ V ≅ W_J. pv is an antisymmetric
  // coefficient matrix on V.
  template <class T>
  HElement<T> to_h(const Sl2Matrix<T>& s, const Matrix<T>& pv) const {
    const auto& W = G_.space();
    Matrix<T> gv(vdim(), vdim());
    for (std::size_t i = 0; i < vdim(); ++i)
      for (std::size_t j = 0; j < vdim(); ++j) gv.set(i, j, scalar_cast<T>(gram_(4 + i, 4 + j)));
    Matrix<T> a = pv * gv;
    Matrix<T> e(W.dim(), W.dim());
    for (std::size_t k = 0; k < W.dim(); ++k) {
      auto [x, y] = w_unembed(W.template basis<T>(k));
      Vec<T> x2 = s(0, 0) * x + s(0, 1) * y + a.apply(x);
      Vec<T> y2 = s(1, 0) * x + s(1, 1) * y + a.apply(y);
      e.set_column(k, W.to_vec(w_embed(x2, y2)));
    }
    return G_.h_algebra().from_endo(e);
  }

  template <class T>
  GElement<T> so_to_g(const Wedge2Element<T>& p) const {
    GElement<T> g = G_.zero<T>();
    auto [s1, s2] = so4_split(p);
    g.h0 = s1(0, 0);
    g.e0 = s1(0, 1);
    g.f0 = s1(1, 0);
    Matrix<T> pv(vdim(), vdim());
    for (std::size_t i = 0; i < vdim(); ++i)
      for (std::size_t j = 0; j < vdim(); ++j) pv.set(i, j, p.p(4 + i, 4 + j));
    g.h = to_h(s2, pv);
    // m∧v ↦ m⊗v = v₁ ⊗ (v₂ ⊗ v) for m = v₁⊗v₂
    Vec<T> zv(vdim());
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < vdim(); ++j) {
        const T& c = p.p(i, 4 + j);
        if (is_zero(c)) continue;
        auto [u1, u2] = m2_factors<T>(i);
        Vec<T> v = c * unit_vec<T>(vdim(), j);
        FreudenthalVector<T> w = !is_zero(u2[0]) ? w_embed(v, zv) : w_embed(zv, v);
        if (!is_zero(u1[0]))
          g.we += w;
        else
          g.wf += w;
      }
    return g;
  }

 private:
  template <class T>
  static T symp(const Vec<T>& x, const Vec<T>& y) {
    return x[0] * y[1] - x[1] * y[0];
  }
  // E₁₁, E₁₂, E₂₁, E₂₂ as pure tensors v₁⊗v₂ in V₂⁽¹⁾⊗V₂⁽²⁾.
  template <class T>
  static std::pair<Vec<T>, Vec<T>> m2_factors(std::size_t i) {
    Vec<T> e = unit_vec<T>(2, 0), f = unit_vec<T>(2, 1);
    switch (i) {
      case 0:
        return {e, e};
      case 1:
        return {f, e};
      case 2:
        return {e, f};
      default:
        return {f, f};
    }
  }

  Rational compute_ratio() const {
    for (std::size_t k = 0; k < wedge_dim(); ++k)
      for (std::size_t l = k; l < wedge_dim(); ++l) {
        auto p = basis<Rational>(k), q = basis<Rational>(l);
        Rational b = so_killing(p, q);
        if (b.is_zero()) continue;
        return G_.killing(so_to_g(p), so_to_g(q)) / b;
      }
    throw std::logic_error("OrthogonalModel: B_so vanishes");
  }

  GAlgebra G_;
  std::size_t sdim_ = 0, n_ = 0;
  Matrix<Rational> gram_, iota_;
  Rational ratio_;
};

}  // namespace quatlie
