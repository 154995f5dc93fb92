#pragma once
// g(J) = (sl₂ ⊕ h(J)⁰) ⊕ (V₂ ⊗ W_J) with bracket parameter α = ½, the pairing B_g, the
// Cartan involution Θ_g, the 5-grading and the adjoint action of H_J on g(J).
// V₂ has symplectic basis e, f with ⟨e,f⟩ = 1; sl₂ has the triple E = e²/2, H = −ef, F = −f²/2.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quatlie/lie_h.hpp"

namespace quatlie {

template <class T>
struct GElement {
  T e0{0}, h0{0}, f0{0};  // coefficients of E, H, F
  HElement<T> h;
  FreudenthalVector<T> we;  // e ⊗ we
  FreudenthalVector<T> wf;  // f ⊗ wf

  bool is_zero() const {
    return quatlie::is_zero(e0) && quatlie::is_zero(h0) && quatlie::is_zero(f0) && h.is_zero() && we.is_zero() &&
           wf.is_zero();
  }
  GElement& operator+=(const GElement& o) {
    e0 += o.e0;
    h0 += o.h0;
    f0 += o.f0;
    h += o.h;
    we += o.we;
    wf += o.wf;
    return *this;
  }
  GElement& operator-=(const GElement& o) {
    e0 -= o.e0;
    h0 -= o.h0;
    f0 -= o.f0;
    h -= o.h;
    we -= o.we;
    wf -= o.wf;
    return *this;
  }
  GElement& operator*=(const T& s) {
    e0 *= s;
    h0 *= s;
    f0 *= s;
    h *= s;
    we *= s;
    wf *= s;
    return *this;
  }
  void axpy(const T& s, const GElement& o) {
    if (quatlie::is_zero(s)) return;
    e0 += s * o.e0;
    h0 += s * o.h0;
    f0 += s * o.f0;
    h.axpy(s, o.h);
    we.axpy(s, o.we);
    wf.axpy(s, o.wf);
  }
  friend GElement operator+(GElement a, const GElement& b) { return a += b; }
  friend GElement operator-(GElement a, const GElement& b) { return a -= b; }
  friend GElement operator*(const T& s, GElement a) { return a *= s; }
  GElement operator-() const { return {-e0, -h0, -f0, -h, -we, -wf}; }
  friend bool operator==(const GElement& a, const GElement& b) {
    return a.e0 == b.e0 && a.h0 == b.h0 && a.f0 == b.f0 && a.h == b.h && a.we == b.we && a.wf == b.wf;
  }
  friend bool operator!=(const GElement& a, const GElement& b) { return !(a == b); }

  template <class U>
  GElement<U> cast() const {
    return {scalar_cast<U>(e0), scalar_cast<U>(h0), scalar_cast<U>(f0), h.template cast<U>(), fv_cast<U>(we),
            fv_cast<U>(wf)};
  }
};

// Sparse structure constants [b_i, b_j] = Σ_k c_ij^k b_k over a fixed basis.
struct StructureConstants {
  using Entry = std::pair<std::uint32_t, Rational>;
  std::size_t n = 0;
  std::vector<std::vector<Entry>> table;  // row-major n × n

  const std::vector<Entry>& at(std::size_t i, std::size_t j) const { return table[i * n + j]; }
  std::size_t nonzeros() const {
    std::size_t s = 0;
    for (const auto& r : table) s += r.size();
    return s;
  }
};

class GAlgebra {
 public:
  explicit GAlgebra(const CubicNormStructure& j) : H_(j) {}

  const HAlgebra& h_algebra() const { return H_; }
  const FreudenthalSpace& space() const { return H_.space(); }
  const CubicNormStructure& jordan() const { return H_.jordan(); }
  std::size_t dim() const { return 3 + H_.dim() + 2 * space().dim(); }

  template <class T>
  GElement<T> zero() const {
    return {T(0), T(0), T(0), H_.zero<T>(), space().zero<T>(), space().zero<T>()};
  }
  template <class T>
  GElement<T> sl2(const T& e, const T& h, const T& f) const {
    GElement<T> g = zero<T>();
    g.e0 = e;
    g.h0 = h;
    g.f0 = f;
    return g;
  }
  template <class T>
  GElement<T> from_h(const HElement<T>& h) const {
    GElement<T> g = zero<T>();
    g.h = h;
    return g;
  }
  template <class T>
  GElement<T> e_tensor(const FreudenthalVector<T>& w) const {
    GElement<T> g = zero<T>();
    g.we = w;
    return g;
  }
  template <class T>
  GElement<T> f_tensor(const FreudenthalVector<T>& w) const {
    GElement<T> g = zero<T>();
    g.wf = w;
    return g;
  }

  // Action of the degree-zero part (sl₂ ⊕ h(J)⁰) of x on e⊗we + f⊗wf.
  template <class T>
  std::pair<FreudenthalVector<T>, FreudenthalVector<T>> act0(const GElement<T>& x, const FreudenthalVector<T>& we,
                                                             const FreudenthalVector<T>& wf) const {
    FreudenthalVector<T> re = H_.apply(x.h, we), rf = H_.apply(x.h, wf);
    re.axpy(x.h0, we);
    re.axpy(x.e0, wf);
    rf.axpy(x.f0, we);
    rf.axpy(-x.h0, wf);
    return {re, rf};
  }

  template <class T>
  GElement<T> bracket(const GElement<T>& x, const GElement<T>& y) const {
    const auto& W = space();
    GElement<T> r = zero<T>();
    // sl₂: [E,H] = −2E, [E,F] = H, [H,F] = −2F
    r.e0 = T(2) * (x.h0 * y.e0 - x.e0 * y.h0);
    r.h0 = x.e0 * y.f0 - x.f0 * y.e0;
    r.f0 = T(2) * (x.f0 * y.h0 - x.h0 * y.f0);
    r.h = H_.bracket(x.h, y.h);
    // [g₀, g₁]
    auto [xe, xf] = act0(x, y.we, y.wf);
    auto [ye, yf] = act0(y, x.we, x.wf);
    r.we = xe - ye;
    r.wf = xf - yf;
    // [g₁, g₁] at α = ½
    bool xw = !x.we.is_zero() || !x.wf.is_zero(), yw = !y.we.is_zero() || !y.wf.is_zero();
    if (xw && yw) {
      T ef = W.symplectic(x.we, y.wf), fe = W.symplectic(x.wf, y.we);
      r.e0 += W.symplectic(x.we, y.we);
      r.h0 -= sc<T>(1, 2) * (ef + fe);
      r.f0 -= W.symplectic(x.wf, y.wf);
      if (!x.we.is_zero() && !y.wf.is_zero()) r.h.axpy(sc<T>(1, 2), H_.phi_ww(x.we, y.wf));
      if (!x.wf.is_zero() && !y.we.is_zero()) r.h.axpy(sc<T>(-1, 2), H_.phi_ww(x.wf, y.we));
    }
    return r;
  }

  // B_g = tr-form on sl₂ + B_h − 2α⟨v,v′⟩⟨w,w′⟩
  template <class T>
  T killing(const GElement<T>& x, const GElement<T>& y) const {
    const auto& W = space();
    T s = x.e0 * y.f0 + x.f0 * y.e0 + T(2) * x.h0 * y.h0;
    s += H_.killing(x.h, y.h);
    s -= W.symplectic(x.we, y.wf);
    s += W.symplectic(x.wf, y.we);
    return s;
  }

  // Θ_g: conjugation by J₂ on sl₂ and h(J)⁰, J₂ ⊗ J₂ on V₂ ⊗ W_J (J₂e = −f, J₂f = e).
  template <class T>
  GElement<T> cartan(const GElement<T>& x) const {
    const auto& W = space();
    return {-x.f0, -x.h0, -x.e0, H_.cartan(x.h), W.J2(x.wf), -W.J2(x.we)};
  }

  // Coefficientwise complex conjugation (the real form g(J) ⊗ R).
  template <class T>
  GElement<T> conj_real(const GElement<T>& x) const {
    auto cv = [](Vec<T> v) {
      for (auto& c : v) c = conj(c);
      return v;
    };
    auto cw = [&](const FreudenthalVector<T>& w) { return FreudenthalVector<T>{conj(w.a), cv(w.b), cv(w.c), conj(w.d)}; };
    Matrix<T> phi(x.h.m.phi.rows(), x.h.m.phi.cols());
    for (std::size_t i = 0; i < phi.rows(); ++i)
      for (std::size_t j = 0; j < phi.cols(); ++j) phi.set(i, j, conj(x.h.m.phi(i, j)));
    HElement<T> h{cv(x.h.gamma), MElement<T>{phi, conj(x.h.m.mu)}, cv(x.h.x)};
    return {conj(x.e0), conj(x.h0), conj(x.f0), h, cw(x.we), cw(x.wf)};
  }

  // Components in degrees −2, −1, 0, 1, 2.
  template <class T>
  std::array<GElement<T>, 5> grade5(const GElement<T>& x) const {
    std::array<GElement<T>, 5> g{zero<T>(), zero<T>(), zero<T>(), zero<T>(), zero<T>()};
    g[0].f0 = x.f0;
    g[1].wf = x.wf;
    g[2].h0 = x.h0;
    g[2].h = x.h;
    g[3].we = x.we;
    g[4].e0 = x.e0;
    return g;
  }
  // Largest degree with a nonzero component; −3 for the zero element.
  template <class T>
  int filtration_degree(const GElement<T>& x) const {
    auto g = grade5(x);
    for (int d = 2; d >= -2; --d)
      if (!g[static_cast<std::size_t>(d + 2)].is_zero()) return d;
    return -3;
  }

  // g·((a b; c −a) + φ₀ + e⊗v + f⊗v′) = (a νb; ν⁻¹c −a) + gφ₀g⁻¹ + e⊗gv + ν⁻¹f⊗gv′
  template <class T>
  GElement<T> h_adjoint(const HSimilitude<T>& g, const GElement<T>& x) const {
    const auto& W = space();
    auto ginv = inverse(g.map);
    if (!ginv) throw std::invalid_argument("h_adjoint: map not invertible");
    T nu_inv = inverse(g.nu);
    GElement<T> r = zero<T>();
    r.e0 = g.nu * x.e0;
    r.h0 = x.h0;
    r.f0 = nu_inv * x.f0;
    if (!x.h.is_zero()) r.h = H_.from_endo(g.map * H_.endo(x.h) * *ginv);
    r.we = W.apply(g, x.we);
    r.wf = nu_inv * W.apply(g, x.wf);
    return r;
  }

  // Basis: E, H, F; h(J)⁰ basis; e ⊗ (W_J basis); f ⊗ (W_J basis).
  template <class T>
  GElement<T> basis(std::size_t k) const {
    const std::size_t hd = H_.dim(), wd = space().dim();
    if (k == 0) return sl2<T>(T(1), T(0), T(0));
    if (k == 1) return sl2<T>(T(0), T(1), T(0));
    if (k == 2) return sl2<T>(T(0), T(0), T(1));
    k -= 3;
    if (k < hd) return from_h(H_.basis<T>(k));
    k -= hd;
    if (k < wd) return e_tensor(space().basis<T>(k));
    k -= wd;
    if (k < wd) return f_tensor(space().basis<T>(k));
    throw std::out_of_range("GAlgebra::basis");
  }
  template <class T>
  Vec<T> coords(const GElement<T>& x, bool check = true) const {
    const std::size_t hd = H_.dim(), wd = space().dim();
    Vec<T> r(dim());
    r[0] = x.e0;
    r[1] = x.h0;
    r[2] = x.f0;
    Vec<T> hc = H_.coords(x.h, check);
    for (std::size_t k = 0; k < hd; ++k) r[3 + k] = hc[k];
    Vec<T> ve = space().to_vec(x.we), vf = space().to_vec(x.wf);
    for (std::size_t k = 0; k < wd; ++k) {
      r[3 + hd + k] = ve[k];
      r[3 + hd + wd + k] = vf[k];
    }
    return r;
  }
  template <class T>
  GElement<T> from_coords(const Vec<T>& c) const {
    const std::size_t hd = H_.dim(), wd = space().dim();
    GElement<T> g = zero<T>();
    g.e0 = c[0];
    g.h0 = c[1];
    g.f0 = c[2];
    Vec<T> hc(hd), ve(wd), vf(wd);
    for (std::size_t k = 0; k < hd; ++k) hc[k] = c[3 + k];
    for (std::size_t k = 0; k < wd; ++k) {
      ve[k] = c[3 + hd + k];
      vf[k] = c[3 + hd + wd + k];
    }
    g.h = H_.from_coords(hc);
    g.we = space().from_vec(ve);
    g.wf = space().from_vec(vf);
    return g;
  }
  // Degree of basis element k in the 5-grading.
  int basis_degree(std::size_t k) const {
    const std::size_t hd = H_.dim(), wd = space().dim();
    if (k == 0) return 2;
    if (k == 2) return -2;
    if (k < 3 + hd) return 0;
    return k < 3 + hd + wd ? 1 : -1;
  }

  // All [b_i, b_j] in basis coordinates. check=false skips the a(J) membership residual.
  StructureConstants structure_constants(bool check = false) const {
    const std::size_t n = dim();
    std::vector<GElement<Rational>> b;
    b.reserve(n);
    for (std::size_t k = 0; k < n; ++k) b.push_back(basis<Rational>(k));
    StructureConstants sc;
    sc.n = n;
    sc.table.assign(n * n, {});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Vec<Rational> c = coords(bracket(b[i], b[j]), check);
        auto& row = sc.table[i * n + j];
        auto& neg = sc.table[j * n + i];
        for (std::size_t k = 0; k < n; ++k)
          if (!c[k].is_zero()) {
            row.emplace_back(static_cast<std::uint32_t>(k), c[k]);
            neg.emplace_back(static_cast<std::uint32_t>(k), -c[k]);
          }
      }
    return sc;
  }

 private:
  HAlgebra H_;
};

// dim g(J) = 3 + dim h(J)⁰ + 2 dim W_J
inline std::size_t g_dim(const CubicNormStructure& j) { return GAlgebra(j).dim(); }

}  // namespace quatlie
