#pragma once
// Freudenthal's space W_J = F ⊕ J ⊕ J∨ ⊕ F, its forms, and the similitude group generators.
// J∨ is identified with J through the trace pairing throughout.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quatlie/jordan.hpp"

namespace quatlie {

template <class T>
struct FreudenthalVector {
  T a{};
  JordanElement<T> b;
  JordanElement<T> c;
  T d{};

  FreudenthalVector() = default;
  FreudenthalVector(T a_, JordanElement<T> b_, JordanElement<T> c_, T d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  bool is_zero() const { return quatlie::is_zero(a) && quatlie::is_zero(d) && b.is_zero() && c.is_zero(); }

  FreudenthalVector& operator+=(const FreudenthalVector& o) {
    a += o.a;
    b += o.b;
    c += o.c;
    d += o.d;
    return *this;
  }
  FreudenthalVector& operator-=(const FreudenthalVector& o) {
    a -= o.a;
    b -= o.b;
    c -= o.c;
    d -= o.d;
    return *this;
  }
  FreudenthalVector& operator*=(const T& s) {
    a *= s;
    b *= s;
    c *= s;
    d *= s;
    return *this;
  }
  void axpy(const T& s, const FreudenthalVector& o) {
    if (quatlie::is_zero(s)) return;
    a += s * o.a;
    b.axpy(s, o.b);
    c.axpy(s, o.c);
    d += s * o.d;
  }
  friend FreudenthalVector operator+(FreudenthalVector x, const FreudenthalVector& y) { return x += y; }
  friend FreudenthalVector operator-(FreudenthalVector x, const FreudenthalVector& y) { return x -= y; }
  friend FreudenthalVector operator*(const T& s, FreudenthalVector x) { return x *= s; }
  FreudenthalVector operator-() const { return {-a, -b, -c, -d}; }
  friend bool operator==(const FreudenthalVector& x, const FreudenthalVector& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const FreudenthalVector& x, const FreudenthalVector& y) { return !(x == y); }
};

template <class U, class T>
FreudenthalVector<U> fv_cast(const FreudenthalVector<T>& v) {
  return {scalar_cast<U>(v.a), vec_cast<U>(v.b), vec_cast<U>(v.c), scalar_cast<U>(v.d)};
}

// Element of H_J given by its matrix on W_J (coordinates a, b, c, d), similitude ν and generator word.
template <class T>
struct HSimilitude {
  Matrix<T> map;
  T nu{1};
  std::vector<std::string> word;

  friend HSimilitude operator*(const HSimilitude& g, const HSimilitude& h) {
    HSimilitude r{g.map * h.map, g.nu * h.nu, g.word};
    r.word.insert(r.word.end(), h.word.begin(), h.word.end());
    return r;
  }
  template <class U>
  HSimilitude<U> cast() const {
    HSimilitude<U> r{Matrix<U>(map.rows(), map.cols()), scalar_cast<U>(nu), word};
    for (std::size_t i = 0; i < map.rows(); ++i)
      for (std::size_t j = 0; j < map.cols(); ++j)
        if (!is_zero(map(i, j))) r.map.set(i, j, scalar_cast<U>(map(i, j)));
    return r;
  }
};

class FreudenthalSpace {
 public:
  explicit FreudenthalSpace(CubicNormStructure j) : J_(std::move(j)) {}

  const CubicNormStructure& jordan() const { return J_; }
  std::size_t jdim() const { return J_.size(); }
  std::size_t dim() const { return 2 * J_.size() + 2; }

  // ---- coordinates: a, b₁..bₙ, c₁..cₙ, d ----
  template <class T>
  FreudenthalVector<T> zero() const {
    return {T(0), J_.zero<T>(), J_.zero<T>(), T(0)};
  }
  template <class T>
  FreudenthalVector<T> make(const T& a, const JordanElement<T>& b, const JordanElement<T>& c, const T& d) const {
    return {a, b, c, d};
  }
  template <class T>
  FreudenthalVector<T> basis(std::size_t k) const {
    return from_vec(unit_vec<T>(dim(), k));
  }
  template <class T>
  Vec<T> to_vec(const FreudenthalVector<T>& v) const {
    const std::size_t n = jdim();
    Vec<T> r(dim());
    r[0] = v.a;
    for (std::size_t k = 0; k < n; ++k) {
      r[1 + k] = v.b[k];
      r[1 + n + k] = v.c[k];
    }
    r[2 * n + 1] = v.d;
    return r;
  }
  template <class T>
  FreudenthalVector<T> from_vec(const Vec<T>& r) const {
    const std::size_t n = jdim();
    if (r.size() != dim()) throw std::invalid_argument("FreudenthalSpace: vector of wrong dimension");
    FreudenthalVector<T> v = zero<T>();
    v.a = r[0];
    for (std::size_t k = 0; k < n; ++k) {
      v.b[k] = r[1 + k];
      v.c[k] = r[1 + n + k];
    }
    v.d = r[2 * n + 1];
    return v;
  }

  // ---- forms ----
  // ⟨v,w⟩ = ad′ − (b,c′) + (c,b′) − da′
  template <class T>
  T symplectic(const FreudenthalVector<T>& v, const FreudenthalVector<T>& w) const {
    return v.a * w.d - J_.pair(v.b, w.c) + J_.pair(v.c, w.b) - v.d * w.a;
  }
  // (v,w) = ⟨J₂v, w⟩
  template <class T>
  T sym_pair(const FreudenthalVector<T>& v, const FreudenthalVector<T>& w) const {
    return symplectic(J2(v), w);
  }
  template <class T>
  T quartic(const FreudenthalVector<T>& v) const {
    T s = v.a * v.d - J_.pair(v.b, v.c);
    return s * s + T(4) * v.a * J_.norm(v.c) + T(4) * v.d * J_.norm(v.b) -
           T(4) * J_.pair(J_.sharp(v.b), J_.sharp(v.c));
  }
  template <class T>
  FreudenthalVector<T> J2(const FreudenthalVector<T>& v) const {
    return {v.d, -v.c, v.b, -v.a};
  }

  // v♭ in closed form.
  template <class T>
  FreudenthalVector<T> flat(const FreudenthalVector<T>& v) const {
    const T &a = v.a, &d = v.d;
    const auto &b = v.b, &c = v.c;
    T bc = J_.pair(b, c);
    T s = a * d - bc;
    auto bs = J_.sharp(b), cs = J_.sharp(c);
    FreudenthalVector<T> r = zero<T>();
    r.a = -a * a * d + a * bc - T(2) * J_.norm(b);
    r.b = T(-2) * J_.cross(c, bs) + T(2) * a * cs - s * b;
    r.c = T(2) * J_.cross(b, cs) - T(2) * d * bs + s * c;
    r.d = a * d * d - d * bc + T(2) * J_.norm(c);
    return r;
  }

  // 3t(v,v,x) as the derivative of v♭ in direction x: ♭(v+x) − ♭(v−x) = 6t(v,v,x) + 2x♭.
  template <class T>
  FreudenthalVector<T> t3(const FreudenthalVector<T>& v, const FreudenthalVector<T>& x) const {
    FreudenthalVector<T> r = flat(v + x) - flat(v - x);
    r *= inverse(T(2));
    r -= flat(x);
    return r;
  }

  // t(x,y,z) by polarizing 3t(v,v,z) in v.
  template <class T>
  FreudenthalVector<T> trilinear(const FreudenthalVector<T>& x, const FreudenthalVector<T>& y,
                                 const FreudenthalVector<T>& z) const {
    FreudenthalVector<T> r = t3(x + y, z) - t3(x, z) - t3(y, z);
    r *= inverse(T(6));
    return r;
  }
  // (w,x,y,z) = ⟨w, t(x,y,z)⟩
  template <class T>
  T quadrilinear(const FreudenthalVector<T>& w, const FreudenthalVector<T>& x, const FreudenthalVector<T>& y,
                 const FreudenthalVector<T>& z) const {
    return symplectic(w, trilinear(x, y, z));
  }

  // Φ_{w,w′}(x) = 6t(w,w′,x) + ⟨w′,x⟩w + ⟨w,x⟩w′
  template <class T>
  FreudenthalVector<T> phi_apply(const FreudenthalVector<T>& w, const FreudenthalVector<T>& wp,
                                 const FreudenthalVector<T>& x) const {
    FreudenthalVector<T> r = t3(w + wp, x) - t3(w, x) - t3(wp, x);
    r.axpy(symplectic(wp, x), w);
    r.axpy(symplectic(w, x), wp);
    return r;
  }
  template <class T>
  Matrix<T> phi_matrix(const FreudenthalVector<T>& w, const FreudenthalVector<T>& wp) const {
    return matrix_of<T>([&](const FreudenthalVector<T>& x) { return phi_apply(w, wp, x); });
  }

  // 0 iff v = 0; ≤1 iff Φ_{v,v} = 0; ≤2 iff v♭ = 0; ≤3 iff q(v) = 0; else 4.
  template <class T>
  int rank(const FreudenthalVector<T>& v) const {
    if (v.is_zero()) return 0;
    bool phi_zero = true;
    for (std::size_t k = 0; k < dim() && phi_zero; ++k) phi_zero = phi_apply(v, v, basis<T>(k)).is_zero();
    if (phi_zero) return 1;
    if (flat(v).is_zero()) return 2;
    if (is_zero(quartic(v))) return 3;
    return 4;
  }

  // ---- Lie algebra actions ----
  // n_L(x)(a,b,c,d) = (0, ax, b×x, (c,x))
  template <class T>
  FreudenthalVector<T> nL(const JordanElement<T>& x, const FreudenthalVector<T>& v) const {
    return {T(0), v.a * x, J_.cross(v.b, x), J_.pair(v.c, x)};
  }
  // n_L∨(γ)(a,b,c,d) = ((b,γ), γ×c, dγ, 0)
  template <class T>
  FreudenthalVector<T> nL_dual(const JordanElement<T>& g, const FreudenthalVector<T>& v) const {
    return {J_.pair(v.b, g), J_.cross(g, v.c), v.d * g, T(0)};
  }

  // ---- group elements acting on vectors ----
  template <class T>
  FreudenthalVector<T> n_apply(const JordanElement<T>& x, const FreudenthalVector<T>& v) const {
    return {v.a, v.b + v.a * x, v.c + J_.cross(v.b, x) + v.a * J_.sharp(x),
            v.d + J_.pair(v.c, x) + J_.pair(v.b, J_.sharp(x)) + v.a * J_.norm(x)};
  }
  // exp(n_L∨(y)); the b-slot carries the d·y# term of the exponential series.
  template <class T>
  FreudenthalVector<T> n_dual_apply(const JordanElement<T>& y, const FreudenthalVector<T>& v) const {
    return {v.a + J_.pair(v.b, y) + J_.pair(v.c, J_.sharp(y)) + v.d * J_.norm(y),
            v.b + J_.cross(v.c, y) + v.d * J_.sharp(y), v.c + v.d * y, v.d};
  }
  template <class T>
  FreudenthalVector<T> eta_apply(const T& z, const FreudenthalVector<T>& v) const {
    T zi = inverse(z);
    return {z * z * z * v.a, z * v.b, zi * v.c, zi * zi * zi * v.d};
  }

  // r₀(Z) = (1, −Z, Z#, −N(Z)) = n(−Z)(1,0,0,0)
  template <class T>
  FreudenthalVector<T> r0(const JordanElement<T>& Z) const {
    return {T(1), -Z, J_.sharp(Z), -J_.norm(Z)};
  }

  // ---- similitude generators ----
  template <class T>
  HSimilitude<T> identity() const {
    return {Matrix<T>::identity(dim()), T(1), {}};
  }
  template <class T>
  HSimilitude<T> n(const JordanElement<T>& x) const {
    return {matrix_of<T>([&](const FreudenthalVector<T>& v) { return n_apply(x, v); }), T(1), {"n"}};
  }
  template <class T>
  HSimilitude<T> n_dual(const JordanElement<T>& y) const {
    return {matrix_of<T>([&](const FreudenthalVector<T>& v) { return n_dual_apply(y, v); }), T(1), {"n_dual"}};
  }
  template <class T>
  HSimilitude<T> eta(const T& z) const {
    if (is_zero(z)) throw std::domain_error("eta: z must be invertible");
    return {matrix_of<T>([&](const FreudenthalVector<T>& v) { return eta_apply(z, v); }), T(1), {"eta"}};
  }
  template <class T>
  HSimilitude<T> J2() const {
    return {matrix_of<T>([&](const FreudenthalVector<T>& v) { return J2(v); }), T(1), {"J2"}};
  }
  // M(δ,m)(a,b,c,d) = (δ⁻¹a, δ⁻¹m(b), δ m̃(c), δd) with m̃ the pairing-adjoint inverse of m.
  template <class T>
  HSimilitude<T> M(const T& delta, const Matrix<T>& m) const {
    const std::size_t n = jdim();
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("M: map of wrong size");
    T lambda = J_.norm(m.apply(J_.one<T>()));
    if (!scalar_close(delta * delta, lambda)) throw std::invalid_argument("M: delta^2 != lambda(m)");
    auto minv = inverse(m);
    if (!minv) throw std::invalid_argument("M: map not invertible");
    Matrix<T> mt = dual_map(*minv);
    T di = inverse(delta);
    auto f = [&](const FreudenthalVector<T>& v) -> FreudenthalVector<T> {
      return {di * v.a, di * m.apply(v.b), delta * mt.apply(v.c), delta * v.d};
    };
    return {matrix_of<T>(f), T(1), {"M"}};
  }
  // Similitude scaling by the central element: t·Id_W with ν = t².
  template <class T>
  HSimilitude<T> scalar(const T& t) const {
    return {t * Matrix<T>::identity(dim()), t * t, {"scalar"}};
  }

  template <class T>
  FreudenthalVector<T> apply(const HSimilitude<T>& g, const FreudenthalVector<T>& v) const {
    return from_vec(g.map.apply(to_vec(v)));
  }

  // g·r₀(Z) = j(g,Z)·r₀(gZ); returns (j, gZ).
  template <class T>
  std::pair<T, JordanElement<T>> r0_and_action(const HSimilitude<T>& g, const JordanElement<T>& Z) const {
    FreudenthalVector<T> v = apply(g, r0(Z));
    if (is_zero(v.a)) throw std::domain_error("r0_and_action: degenerate leading coefficient");
    T j = v.a;
    JordanElement<T> gz = -(inverse(j) * v.b);
    if constexpr (std::is_same_v<T, MachineComplex>) {
      JordanElement<double> y(gz.size());
      for (std::size_t k = 0; k < gz.size(); ++k) y[k] = gz[k].imag();
      if (!J_.positive_definite(y)) throw std::domain_error("r0_and_action: Im(gZ) not positive definite");
    }
    return {j, gz};
  }

  // m ↦ m̃ on J∨ ≅ J: the map with (m z, m̃ γ) = (z, γ), i.e. P⁻¹(m⁻¹)ᵀP for diagonal Gram P.
  template <class T>
  Matrix<T> dual_map(const Matrix<T>& minv) const {
    const std::size_t n = jdim();
    Matrix<T> r(n, n);
    const auto& p = J_.pairing_diag();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const T& x = minv(j, i);
        if (is_zero(x)) continue;
        r.set(i, j, from_rational<T>(p[j] / p[i]) * x);
      }
    return r;
  }

  template <class T, class F>
  Matrix<T> matrix_of(F f) const {
    Matrix<T> m(dim(), dim());
    for (std::size_t k = 0; k < dim(); ++k) m.set_column(k, to_vec(f(basis<T>(k))));
    return m;
  }

 private:
  template <class T>
  static bool scalar_close(const T& x, const T& y) {
    if constexpr (is_exact_v<T>) {
      return x == y;
    } else {
      return std::abs(x - y) <= 1e-10 * (1.0 + std::abs(y));
    }
  }

  CubicNormStructure J_;
};

}  // namespace quatlie
