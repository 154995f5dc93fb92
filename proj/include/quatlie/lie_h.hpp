#pragma once
// h(J)⁰ = J∨ ⊕ m(J) ⊕ J in its three-step grading, its action on W_J, the map
// Sym²(W_J) → h(J)⁰ given by Φ_{w,w′}, the pairing B_h and the Cartan involution Θ_h.

#include <stdexcept>
#include <utility>

#include "quatlie/freudenthal.hpp"
#include "quatlie/lie_m.hpp"

namespace quatlie {

// γ in degree −1, m in degree 0, x in degree +1; acts on W_J as n_L∨(γ) + M(m) + n_L(−x).
template <class T>
struct HElement {
  JordanElement<T> gamma;
  MElement<T> m;
  JordanElement<T> x;

  bool is_zero() const { return gamma.is_zero() && m.is_zero() && x.is_zero(); }
  HElement& operator+=(const HElement& o) {
    gamma += o.gamma;
    m += o.m;
    x += o.x;
    return *this;
  }
  HElement& operator-=(const HElement& o) {
    gamma -= o.gamma;
    m -= o.m;
    x -= o.x;
    return *this;
  }
  HElement& operator*=(const T& s) {
    gamma *= s;
    m *= s;
    x *= s;
    return *this;
  }
  void axpy(const T& s, const HElement& o) {
    gamma.axpy(s, o.gamma);
    m.axpy(s, o.m);
    x.axpy(s, o.x);
  }
  friend HElement operator+(HElement a, const HElement& b) { return a += b; }
  friend HElement operator-(HElement a, const HElement& b) { return a -= b; }
  friend HElement operator*(const T& s, HElement a) { return a *= s; }
  HElement operator-() const { return {-gamma, -m, -x}; }
  friend bool operator==(const HElement& a, const HElement& b) {
    return a.gamma == b.gamma && a.m == b.m && a.x == b.x;
  }
  friend bool operator!=(const HElement& a, const HElement& b) { return !(a == b); }

  template <class U>
  HElement<U> cast() const {
    return {vec_cast<U>(gamma), m.template cast<U>(), vec_cast<U>(x)};
  }
};

class HAlgebra {
 public:
  explicit HAlgebra(const CubicNormStructure& j) : W_(j), M_(j) {}

  const FreudenthalSpace& space() const { return W_; }
  const MAlgebra& m_algebra() const { return M_; }
  const CubicNormStructure& jordan() const { return W_.jordan(); }
  std::size_t jdim() const { return W_.jdim(); }
  std::size_t dim() const { return 2 * jdim() + M_.dim(); }

  template <class T>
  HElement<T> zero() const {
    return {jordan().zero<T>(), M_.zero<T>(), jordan().zero<T>()};
  }
  template <class T>
  HElement<T> from_gamma(const JordanElement<T>& g) const {
    HElement<T> h = zero<T>();
    h.gamma = g;
    return h;
  }
  template <class T>
  HElement<T> from_m(const MElement<T>& m) const {
    HElement<T> h = zero<T>();
    h.m = m;
    return h;
  }
  template <class T>
  HElement<T> from_x(const JordanElement<T>& x) const {
    HElement<T> h = zero<T>();
    h.x = x;
    return h;
  }
  // Elements acting as n_L(X) and n_L∨(γ).
  template <class T>
  HElement<T> nL(const JordanElement<T>& x) const {
    return from_x<T>(-x);
  }
  template <class T>
  HElement<T> nL_dual(const JordanElement<T>& g) const {
    return from_gamma<T>(g);
  }

  // M(φ)(a,b,c,d) = (−μ/2·a, −μ/2·b + φb, μ/2·c + φ̃c, μ/2·d)
  template <class T>
  FreudenthalVector<T> m_apply(const MElement<T>& m, const FreudenthalVector<T>& v) const {
    T h = sc<T>(1, 2) * m.mu;
    FreudenthalVector<T> r{-h * v.a, m.phi.apply(v.b), M_.apply_dual(m, v.c), h * v.d};
    r.b.axpy(-h, v.b);
    r.c.axpy(h, v.c);
    return r;
  }
  template <class T>
  FreudenthalVector<T> apply(const HElement<T>& h, const FreudenthalVector<T>& v) const {
    FreudenthalVector<T> r = m_apply(h.m, v);
    if (!h.gamma.is_zero()) r += W_.nL_dual(h.gamma, v);
    if (!h.x.is_zero()) r -= W_.nL(h.x, v);
    return r;
  }
  template <class T>
  Matrix<T> endo(const HElement<T>& h) const {
    return W_.matrix_of<T>([&](const FreudenthalVector<T>& v) { return apply(h, v); });
  }

  // [γ, x] = Φ_{γ,x}; m(J) acts by φ on J and by φ̃ on J∨.
  template <class T>
  HElement<T> bracket(const HElement<T>& p, const HElement<T>& q) const {
    HElement<T> r;
    r.gamma = M_.apply_dual(p.m, q.gamma) - M_.apply_dual(q.m, p.gamma);
    r.m = M_.bracket(p.m, q.m);
    if (!p.gamma.is_zero() && !q.x.is_zero()) r.m += M_.phi(p.gamma, q.x);
    if (!q.gamma.is_zero() && !p.x.is_zero()) r.m -= M_.phi(q.gamma, p.x);
    r.x = p.m.phi.apply(q.x) - q.m.phi.apply(p.x);
    return r;
  }

  // B_h = B_m(φ,φ′) − (x,γ′) − (x′,γ)
  template <class T>
  T killing(const HElement<T>& p, const HElement<T>& q) const {
    return M_.killing(p.m, q.m) - jordan().pair(p.x, q.gamma) - jordan().pair(q.x, p.gamma);
  }
  // Θ_h(γ, φ, x) = (ι(x), Θ_m φ, ι(γ)); agrees with conjugation by J₂.
  template <class T>
  HElement<T> cartan(const HElement<T>& h) const {
    return {h.x, M_.cartan(h.m), h.gamma};
  }

  // Φ_{w,w′} in the grading, by polarizing
  // ¼Φ_{v,v} = n_L(c# − db) + n_L∨(ac − b#) + M(Φ_{c,b} + (ad − (b,c))Id_J).
  template <class T>
  HElement<T> phi_ww(const FreudenthalVector<T>& w, const FreudenthalVector<T>& wp) const {
    const auto& J = jordan();
    HElement<T> r;
    JordanElement<T> y = J.cross(w.c, wp.c);
    y.axpy(-w.d, wp.b);
    y.axpy(-wp.d, w.b);
    r.x = T(-2) * y;
    r.gamma = J.cross(w.b, wp.b);
    r.gamma *= T(-1);
    r.gamma.axpy(w.a, wp.c);
    r.gamma.axpy(wp.a, w.c);
    r.gamma *= T(2);
    r.m = M_.phi(w.c, wp.b) + M_.phi(wp.c, w.b);
    T s = w.a * wp.d + wp.a * w.d - J.pair(w.b, wp.c) - J.pair(wp.b, w.c);
    r.m.axpy(s, M_.identity<T>());
    r.m *= T(2);
    return r;
  }

  // Inverse of endo on h(J)⁰; throws when the map is not in the image.
  template <class T>
  HElement<T> from_endo(const Matrix<T>& e) const {
    const std::size_t n = jdim();
    if (e.rows() != W_.dim() || e.cols() != W_.dim()) throw std::invalid_argument("from_endo: wrong size");
    HElement<T> h = zero<T>();
    for (std::size_t k = 0; k < n; ++k) {
      h.x[k] = -e(1 + k, 0);
      h.gamma[k] = e(1 + n + k, 2 * n + 1);
    }
    h.m.mu = T(-2) * e(0, 0);
    T half = sc<T>(1, 2) * h.m.mu;
    Matrix<T> phi(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) phi.set(i, j, e(1 + i, 1 + j));
    for (std::size_t i = 0; i < n; ++i) phi.at(i, i) += half;
    h.m.phi = phi;
    if (endo(h) != e) throw std::domain_error("from_endo: map not in h(J)^0");
    return h;
  }

  // Basis order: J∨ slot, m(J) basis, J slot.
  template <class T>
  HElement<T> basis(std::size_t k) const {
    const std::size_t n = jdim();
    if (k < n) return from_gamma<T>(jordan().basis<T>(static_cast<int>(k)));
    if (k < n + M_.dim()) return from_m<T>(M_.basis<T>(k - n));
    return from_x<T>(jordan().basis<T>(static_cast<int>(k - n - M_.dim())));
  }
  template <class T>
  Vec<T> coords(const HElement<T>& h, bool check = true) const {
    const std::size_t n = jdim();
    Vec<T> r(dim());
    Vec<T> mc = M_.coords(h.m, check);
    for (std::size_t k = 0; k < n; ++k) {
      r[k] = h.gamma[k];
      r[n + M_.dim() + k] = h.x[k];
    }
    for (std::size_t k = 0; k < M_.dim(); ++k) r[n + k] = mc[k];
    return r;
  }
  template <class T>
  HElement<T> from_coords(const Vec<T>& c) const {
    HElement<T> h = zero<T>();
    for (std::size_t k = 0; k < dim(); ++k)
      if (!is_zero(c[k])) h.axpy(c[k], basis<T>(k));
    return h;
  }

 private:
  FreudenthalSpace W_;
  MAlgebra M_;
};

}  // namespace quatlie
