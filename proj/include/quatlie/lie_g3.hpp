#pragma once
// The Z/3 model g(J) = sl₃ ⊕ m(J)⁰ ⊕ V₃⊗J ⊕ V₃∨⊗J∨, its pairing and Cartan involution, the
// isomorphism onto the Z/2 model (α = ½) and the compact generators so₃^ℓ(v), n_v(X).
// V₃ has basis v₁, v₂, v₃ with dual basis δ₁, δ₂, δ₃; v_i∧v_j = δ_k and δ_i∧δ_j = v_k for
// (i,j,k) cyclic. J∨ is stored through ι, so both tensor slots hold JordanElements.

#include <array>
#include <stdexcept>

#include "quatlie/lie_g.hpp"

namespace quatlie {

template <class T>
struct G3Element {
  Matrix<T> sl3;                     // traceless 3×3
  MElement<T> m0;                    // μ = 0
  std::array<JordanElement<T>, 3> vj;  // Σ v_i ⊗ vj[i]
  std::array<JordanElement<T>, 3> dj;  // Σ δ_i ⊗ dj[i]

  bool is_zero() const {
    if (!sl3.is_zero() || !m0.is_zero()) return false;
    for (int i = 0; i < 3; ++i)
      if (!vj[i].is_zero() || !dj[i].is_zero()) return false;
    return true;
  }
  G3Element& operator+=(const G3Element& o) {
    sl3 += o.sl3;
    m0 += o.m0;
    for (int i = 0; i < 3; ++i) {
      vj[i] += o.vj[i];
      dj[i] += o.dj[i];
    }
    return *this;
  }
  G3Element& operator-=(const G3Element& o) {
    sl3 -= o.sl3;
    m0 -= o.m0;
    for (int i = 0; i < 3; ++i) {
      vj[i] -= o.vj[i];
      dj[i] -= o.dj[i];
    }
    return *this;
  }
  G3Element& operator*=(const T& s) {
    sl3 *= s;
    m0 *= s;
    for (int i = 0; i < 3; ++i) {
      vj[i] *= s;
      dj[i] *= s;
    }
    return *this;
  }
  void axpy(const T& s, const G3Element& o) {
    if (quatlie::is_zero(s)) return;
    sl3.axpy(s, o.sl3);
    m0.axpy(s, o.m0);
    for (int i = 0; i < 3; ++i) {
      vj[i].axpy(s, o.vj[i]);
      dj[i].axpy(s, o.dj[i]);
    }
  }
  friend G3Element operator+(G3Element a, const G3Element& b) { return a += b; }
  friend G3Element operator-(G3Element a, const G3Element& b) { return a -= b; }
  friend G3Element operator*(const T& s, G3Element a) { return a *= s; }
  G3Element operator-() const {
    G3Element r = *this;
    r *= T(-1);
    return r;
  }
  friend bool operator==(const G3Element& a, const G3Element& b) {
    return a.sl3 == b.sl3 && a.m0 == b.m0 && a.vj == b.vj && a.dj == b.dj;
  }
  friend bool operator!=(const G3Element& a, const G3Element& b) { return !(a == b); }

  template <class U>
  G3Element<U> cast() const {
    G3Element<U> r{mat_cast<U>(sl3), m0.template cast<U>(), {}, {}};
    for (int i = 0; i < 3; ++i) {
      r.vj[i] = vec_cast<U>(vj[i]);
      r.dj[i] = vec_cast<U>(dj[i]);
    }
    return r;
  }
};

class G3Algebra {
 public:
  explicit G3Algebra(const CubicNormStructure& j) : G_(j) { build_j0(); }

  const GAlgebra& z2() const { return G_; }
  const MAlgebra& m_algebra() const { return G_.h_algebra().m_algebra(); }
  const CubicNormStructure& jordan() const { return G_.jordan(); }
  std::size_t jdim() const { return jordan().size(); }
  std::size_t m0_dim() const { return m_algebra().dim() - 1; }
  std::size_t dim() const { return 8 + m0_dim() + 6 * jdim(); }

  template <class T>
  G3Element<T> zero() const {
    const auto& J = jordan();
    return {Matrix<T>(3, 3), m_algebra().zero<T>(), {J.zero<T>(), J.zero<T>(), J.zero<T>()},
            {J.zero<T>(), J.zero<T>(), J.zero<T>()}};
  }
  template <class T>
  G3Element<T> from_sl3(const Matrix<T>& a) const {
    G3Element<T> r = zero<T>();
    r.sl3 = a;
    return r;
  }
  // E_ij with 1-based indices.
  template <class T>
  G3Element<T> elem(int i, int j) const {
    Matrix<T> a(3, 3);
    a.set(i - 1, j - 1, T(1));
    return from_sl3(a);
  }
  template <class T>
  G3Element<T> from_m0(const MElement<T>& m) const {
    if (!quatlie::is_zero(m.mu)) throw std::invalid_argument("G3Algebra: m(J)⁰ element needs μ = 0");
    G3Element<T> r = zero<T>();
    r.m0 = m;
    return r;
  }
  // v ⊗ X for v = Σ v[i] v_i
  template <class T>
  G3Element<T> v_tensor(const std::array<T, 3>& v, const JordanElement<T>& x) const {
    G3Element<T> r = zero<T>();
    for (int i = 0; i < 3; ++i) r.vj[i] = v[i] * x;
    return r;
  }
  template <class T>
  G3Element<T> d_tensor(const std::array<T, 3>& d, const JordanElement<T>& g) const {
    G3Element<T> r = zero<T>();
    for (int i = 0; i < 3; ++i) r.dj[i] = d[i] * g;
    return r;
  }

  template <class T>
  G3Element<T> bracket(const G3Element<T>& x, const G3Element<T>& y) const {
    const auto& J = jordan();
    const auto& M = m_algebra();
    G3Element<T> r = zero<T>();
    r.sl3 = commutator(x.sl3, y.sl3);
    r.m0 = M.bracket(x.m0, y.m0);
    // sl₃ and m(J)⁰ acting on V₃⊗J and V₃∨⊗J∨; φ₃ acts on V₃∨ by −φ₃ᵗ
    auto act = [&](const G3Element<T>& a, const G3Element<T>& b, T s) {
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (!quatlie::is_zero(a.sl3(i, j))) r.vj[i].axpy(s * a.sl3(i, j), b.vj[j]);
          if (!quatlie::is_zero(a.sl3(j, i))) r.dj[i].axpy(-s * a.sl3(j, i), b.dj[j]);
        }
        if (!a.m0.is_zero()) {
          if (!b.vj[i].is_zero()) r.vj[i].axpy(s, M.apply(a.m0, b.vj[i]));
          if (!b.dj[i].is_zero()) r.dj[i].axpy(s, M.apply_dual(a.m0, b.dj[i]));
        }
      }
    };
    act(x, y, T(1));
    act(y, x, T(-1));
    // (v_i∧v_j) ⊗ (X×X′) = δ_k ⊗ …, and dually
    for (int k = 0; k < 3; ++k) {
      int i = (k + 1) % 3, j = (k + 2) % 3;
      r.dj[k] += J.cross(x.vj[i], y.vj[j]) - J.cross(x.vj[j], y.vj[i]);
      r.vj[k] += J.cross(x.dj[i], y.dj[j]) - J.cross(x.dj[j], y.dj[i]);
    }
    // [δ_j⊗γ, v_i⊗X] = (X,γ)(E_ij − ⅓δ_ij) + δ_ij Φ′_{γ,X}
    auto mixed = [&](const G3Element<T>& d, const G3Element<T>& v, T s) {
      for (int i = 0; i < 3; ++i) {
        if (v.vj[i].is_zero()) continue;
        for (int j = 0; j < 3; ++j) {
          if (d.dj[j].is_zero()) continue;
          T p = s * J.pair(v.vj[i], d.dj[j]);
          r.sl3.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += p;
          if (i == j) {
            for (std::size_t t = 0; t < 3; ++t) r.sl3.at(t, t) -= sc<T>(1, 3) * p;
            r.m0.axpy(s, M.phi_primed(d.dj[j], v.vj[i]));
          }
        }
      }
    };
    mixed(x, y, T(1));
    mixed(y, x, T(-1));
    return r;
  }

  // tr(m₁m₂) on sl₃, B_m on m(J)⁰, B(v⊗X, δ′⊗γ′) = −δ′(v)(X,γ′)
  template <class T>
  T killing(const G3Element<T>& x, const G3Element<T>& y) const {
    const auto& J = jordan();
    T s(0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) s += x.sl3(i, j) * y.sl3(j, i);
    s += m_algebra().killing(x.m0, y.m0);
    for (int i = 0; i < 3; ++i) s -= J.pair(x.vj[i], y.dj[i]) + J.pair(y.vj[i], x.dj[i]);
    return s;
  }

  // −Xᵗ on sl₃, Θ_m on m(J)⁰, v⊗X ↔ ι(v)⊗ι(X)
  template <class T>
  G3Element<T> cartan(const G3Element<T>& x) const {
    G3Element<T> r{-x.sl3.transpose(), m_algebra().cartan(x.m0), x.dj, x.vj};
    return r;
  }

  // Adjoint action of g ∈ SL₃: conjugation on sl₃, g on V₃, g⁻ᵗ on V₃∨.
  template <class T>
  G3Element<T> sl3_adjoint(const Matrix<T>& g, const G3Element<T>& x) const {
    auto gi = inverse(g);
    if (!gi) throw std::invalid_argument("sl3_adjoint: singular matrix");
    Matrix<T> git = gi->transpose();
    G3Element<T> r = zero<T>();
    r.sl3 = g * x.sl3 * *gi;
    r.m0 = x.m0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        if (!quatlie::is_zero(g(i, j))) r.vj[i].axpy(g(i, j), x.vj[j]);
        if (!quatlie::is_zero(git(i, j))) r.dj[i].axpy(git(i, j), x.dj[j]);
      }
    return r;
  }

  // Z/3 → Z/2:
  //   E₁₃ ↦ E, E₃₁ ↦ F, E₁₁ − E₃₃ ↦ H, φ_s = E₁₁ − 2E₂₂ + E₃₃ ↦ M(−2·Id, μ = −6),
  //   aE₁₂ + v₁⊗b + δ₃⊗c + dE₂₃ ↦ e⊗(a,b,c,d),
  //   a′E₃₂ + v₃⊗b′ − δ₁⊗c′ − d′E₂₁ ↦ f⊗(a′,b′,c′,d′),
  //   δ₂⊗γ + φ + v₂⊗X ↦ n_L∨(γ) + M(φ) + n_L(−X).
  template <class T>
  GElement<T> iso_32(const G3Element<T>& x) const {
    const auto& M = m_algebra();
    const Matrix<T>& A = x.sl3;
    GElement<T> g = G_.zero<T>();
    g.e0 = A(0, 2);
    g.f0 = A(2, 0);
    // diag(a₁,a₂,a₃) = p(E₁₁ − E₃₃) + qφ_s
    T q = sc<T>(-1, 2) * A(1, 1);
    g.h0 = A(0, 0) - q;
    g.we = {A(0, 1), x.vj[0], x.dj[2], A(1, 2)};
    g.wf = {A(2, 1), x.vj[2], -x.dj[0], -A(1, 0)};
    g.h.gamma = x.dj[1];
    g.h.x = x.vj[1];
    g.h.m = x.m0;
    g.h.m.axpy(T(-2) * q, M.identity<T>());
    return g;
  }
  template <class T>
  G3Element<T> iso_23(const GElement<T>& g) const {
    const auto& M = m_algebra();
    G3Element<T> x = zero<T>();
    T q = -g.h.m.mu / T(6);
    T p = g.h0;
    Matrix<T> A(3, 3);
    A.set(0, 2, g.e0);
    A.set(2, 0, g.f0);
    A.set(0, 0, p + q);
    A.set(1, 1, T(-2) * q);
    A.set(2, 2, q - p);
    A.set(0, 1, g.we.a);
    A.set(1, 2, g.we.d);
    A.set(2, 1, g.wf.a);
    A.set(1, 0, -g.wf.d);
    x.sl3 = A;
    x.vj[0] = g.we.b;
    x.dj[2] = g.we.c;
    x.vj[2] = g.wf.b;
    x.dj[0] = -g.wf.c;
    x.dj[1] = g.h.gamma;
    x.vj[1] = g.h.x;
    x.m0 = g.h.m;
    x.m0.axpy(T(2) * q, M.identity<T>());
    return x;
  }

  // u(v_j) = E_{j−1,j+1} − E_{j+1,j−1}, indices mod 3
  template <class T>
  Matrix<T> u(const std::array<T, 3>& v) const {
    Matrix<T> a(3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t lo = (j + 2) % 3, hi = (j + 1) % 3;
      a.at(lo, hi) += v[j];
      a.at(hi, lo) -= v[j];
    }
    return a;
  }
  // so₃^ℓ(v) = ¼(u(v) + v⊗1 + ι(v)⊗1)
  template <class T>
  G3Element<T> so3l(const std::array<T, 3>& v) const {
    const auto one = jordan().one<T>();
    G3Element<T> r = from_sl3(u(v)) + v_tensor(v, one) + d_tensor(v, one);
    r *= sc<T>(1, 4);
    return r;
  }
  // n_v(X) = (tr X/4)u(v) + ½v⊗(X − tr X/2) + ½ι(v)⊗(X − tr X/2)
  template <class T>
  G3Element<T> n_v(const std::array<T, 3>& v, const JordanElement<T>& x) const {
    const auto& J = jordan();
    T tr = J.trace(x);
    JordanElement<T> y = x;
    y.axpy(sc<T>(-1, 2) * tr, J.one<T>());
    G3Element<T> r = from_sl3(sc<T>(1, 4) * tr * u(v));
    r += sc<T>(1, 2) * (v_tensor(v, y) + d_tensor(v, y));
    return r;
  }

  // Basis: E_ij (i≠j), E₁₁ − E₂₂, E₂₂ − E₃₃; m(J)⁰ basis; v_i ⊗ E_k; δ_i ⊗ E_k.
  template <class T>
  G3Element<T> basis(std::size_t k) const {
    const std::size_t n = jdim(), md = m0_dim();
    static constexpr int off[6][2] = {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};
    if (k < 6) return elem<T>(off[k][0], off[k][1]);
    if (k < 8) {
      int i = static_cast<int>(k) - 5;
      return elem<T>(i, i) - elem<T>(i + 1, i + 1);
    }
    k -= 8;
    if (k < md) return from_m0(m0_basis<T>(k));
    k -= md;
    std::array<T, 3> e{T(0), T(0), T(0)};
    if (k < 3 * n) {
      e[k / n] = T(1);
      return v_tensor(e, jordan().basis<T>(static_cast<int>(k % n)));
    }
    k -= 3 * n;
    if (k < 3 * n) {
      e[k / n] = T(1);
      return d_tensor(e, jordan().basis<T>(static_cast<int>(k % n)));
    }
    throw std::out_of_range("G3Algebra::basis");
  }
  // a(J) basis, then {E_k − (tr E_k/tr E_k₀)E_k₀, •} for k ≠ k₀
  template <class T>
  MElement<T> m0_basis(std::size_t k) const {
    const auto& M = m_algebra();
    if (k < M.a_dim()) return M.basis<T>(k);
    k -= M.a_dim();
    return M.jordan_mult(vec_cast<T>(j0_basis_.at(k)));
  }

 private:
  void build_j0() {
    const auto& J = jordan();
    const int n = J.dim();
    int k0 = -1;
    for (int k = 0; k < n && k0 < 0; ++k)
      if (!J.trace(J.basis<Rational>(k)).is_zero()) k0 = k;
    for (int k = 0; k < n; ++k) {
      if (k == k0) continue;
      JordanElement<Rational> e = J.basis<Rational>(k);
      e.axpy(-J.trace(e) / J.trace(J.basis<Rational>(k0)), J.basis<Rational>(k0));
      j0_basis_.push_back(e);
    }
  }
  GAlgebra G_;
  std::vector<JordanElement<Rational>> j0_basis_;
};

}  // namespace quatlie
