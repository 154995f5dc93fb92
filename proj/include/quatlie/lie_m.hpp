#pragma once
// The Lie algebra m(J) of pairs (φ, μ) scaling the cubic norm, its subalgebra a(J),
// the operators Φ_{γ,x}, the invariant pairing B_m and the Cartan involution Θ_m.
// J∨ is identified with J through the trace pairing, so γ is stored as a JordanElement.

#include <stdexcept>
#include <utility>
#include <vector>

#include "quatlie/jordan.hpp"

namespace quatlie {

template <class T>
struct MElement {
  Matrix<T> phi;
  T mu{0};

  bool is_zero() const { return quatlie::is_zero(mu) && phi.is_zero(); }
  MElement& operator+=(const MElement& o) {
    phi += o.phi;
    mu += o.mu;
    return *this;
  }
  MElement& operator-=(const MElement& o) {
    phi -= o.phi;
    mu -= o.mu;
    return *this;
  }
  MElement& operator*=(const T& s) {
    phi *= s;
    mu *= s;
    return *this;
  }
  void axpy(const T& s, const MElement& o) {
    if (quatlie::is_zero(s)) return;
    phi.axpy(s, o.phi);
    mu += s * o.mu;
  }
  friend MElement operator+(MElement x, const MElement& y) { return x += y; }
  friend MElement operator-(MElement x, const MElement& y) { return x -= y; }
  friend MElement operator*(const T& s, MElement x) { return x *= s; }
  MElement operator-() const { return {-phi, -mu}; }
  friend bool operator==(const MElement& x, const MElement& y) { return x.mu == y.mu && x.phi == y.phi; }
  friend bool operator!=(const MElement& x, const MElement& y) { return !(x == y); }

  template <class U>
  MElement<U> cast() const {
    return {mat_cast<U>(phi), scalar_cast<U>(mu)};
  }
};

// m(J) = a(J) ⊕ J, with X ∈ J acting as {X,•} = Φ_{ι(1),X}. The a(J) basis is a maximal
// independent subset of {Φ_{Eα∧Eβ} : α < β}, chosen greedily by exact elimination.
class MAlgebra {
 public:
  explicit MAlgebra(CubicNormStructure j) : J_(std::move(j)) { build(); }

  const CubicNormStructure& jordan() const { return J_; }
  std::size_t jdim() const { return J_.size(); }
  std::size_t a_dim() const { return a_basis_.size(); }
  std::size_t dim() const { return a_dim() + jdim(); }
  // (α, β) with a(J) basis element k equal to Φ_{Eα∧Eβ}.
  const std::vector<std::pair<std::size_t, std::size_t>>& a_pairs() const { return a_pairs_; }

  template <class T>
  MElement<T> zero() const {
    return {Matrix<T>(jdim(), jdim()), T(0)};
  }
  // Id_J, with multiplier 3.
  template <class T>
  MElement<T> identity() const {
    return {Matrix<T>::identity(jdim()), T(3)};
  }
  template <class T>
  MElement<T> from_map(const Matrix<T>& phi, const T& mu) const {
    if (phi.rows() != jdim() || phi.cols() != jdim()) throw std::invalid_argument("MElement: map of wrong size");
    return {phi, mu};
  }

  // Φ_{γ,x}(z) = −γ×(x×z) + (γ,z)x + (γ,x)z, multiplier 2(γ,x).
  template <class T>
  MElement<T> phi(const JordanElement<T>& g, const JordanElement<T>& x) const {
    const std::size_t n = jdim();
    Matrix<T> m(n, n);
    T gx = J_.pair(g, x);
    for (std::size_t k = 0; k < n; ++k) {
      JordanElement<T> z = J_.basis<T>(static_cast<int>(k));
      JordanElement<T> col = -J_.cross(g, J_.cross(x, z));
      col.axpy(J_.pair(g, z), x);
      col[k] += gx;
      m.set_column(k, col);
    }
    return {m, T(2) * gx};
  }
  // Φ′_{γ,x} = Φ_{γ,x} − (2/3)(γ,x)·Id, in m(J)⁰.
  template <class T>
  MElement<T> phi_primed(const JordanElement<T>& g, const JordanElement<T>& x) const {
    MElement<T> p = phi(g, x);
    T s = sc<T>(2, 3) * J_.pair(g, x);
    for (std::size_t k = 0; k < jdim(); ++k) p.phi.at(k, k) -= s;
    p.mu = T(0);
    return p;
  }
  // Φ_{X∧Y} = Φ_{ι(X),Y} − Φ_{ι(Y),X}, in a(J).
  template <class T>
  MElement<T> phi_wedge(const JordanElement<T>& x, const JordanElement<T>& y) const {
    return phi(x, y) - phi(y, x);
  }
  // {X,•} = Φ_{ι(1),X}
  template <class T>
  MElement<T> jordan_mult(const JordanElement<T>& x) const {
    MElement<T> r = zero<T>();
    for (std::size_t k = 0; k < jdim(); ++k)
      if (!is_zero(x[k])) r.axpy(x[k], jmult_basis_[k].cast<T>());
    return r;
  }

  template <class T>
  JordanElement<T> apply(const MElement<T>& p, const JordanElement<T>& z) const {
    return p.phi.apply(z);
  }
  // φ̃ on J∨ ≅ J: (φz, γ) + (z, φ̃γ) = 0, so φ̃ = −P⁻¹φᵀP for the diagonal Gram P.
  template <class T>
  Matrix<T> dual_matrix(const Matrix<T>& phi) const {
    const std::size_t n = jdim();
    const auto& p = J_.pairing_diag();
    Matrix<T> r(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const T& x = phi(j, i);
        if (is_zero(x)) continue;
        if (p[i] == p[j])
          r.set(i, j, -x);
        else
          r.set(i, j, -(from_rational<T>(p[j] / p[i]) * x));
      }
    return r;
  }
  template <class T>
  JordanElement<T> apply_dual(const MElement<T>& p, const JordanElement<T>& g) const {
    return dual_matrix(p.phi).apply(g);
  }

  template <class T>
  MElement<T> bracket(const MElement<T>& p, const MElement<T>& q) const {
    return {commutator(p.phi, q.phi), T(0)};
  }
  // Θ_m(φ) = ι⁻¹∘φ̃∘ι; the multiplier changes sign.
  template <class T>
  MElement<T> cartan(const MElement<T>& p) const {
    return {dual_matrix(p.phi), -p.mu};
  }

  // Multiplier identity on all basis triples.
  template <class T>
  bool satisfies_multiplier(const MElement<T>& p) const {
    const std::size_t n = jdim();
    std::vector<JordanElement<T>> e, pe;
    for (std::size_t k = 0; k < n; ++k) {
      e.push_back(J_.basis<T>(static_cast<int>(k)));
      pe.push_back(p.phi.column(k));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        JordanElement<T> cij = J_.cross(e[i], e[j]);
        JordanElement<T> cpij = J_.cross(pe[i], e[j]) + J_.cross(e[i], pe[j]);
        for (std::size_t k = j; k < n; ++k) {
          T lhs = J_.pair(cpij, e[k]) + J_.pair(cij, pe[k]);
          if (lhs != p.mu * J_.pair(cij, e[k])) return false;
        }
      }
    return true;
  }

  // p = a + {X,•} with a ∈ a(J): returns (coordinates of a, X). Throws when p ∉ m(J).
  template <class T>
  std::pair<Vec<T>, JordanElement<T>> split(const MElement<T>& p, bool check = true) const {
    JordanElement<T> x = p.phi.apply(J_.one<T>());
    x *= sc<T>(1, 2);
    if (p.mu != T(2) * J_.trace(x)) throw std::domain_error("MAlgebra: multiplier inconsistent with m(J)");
    Matrix<T> a = p.phi - jordan_mult(x).phi;
    const std::size_t k = a_dim(), n = jdim();
    Vec<T> rhs(k);
    for (std::size_t r = 0; r < k; ++r) rhs[r] = a(pivots_[r] / n, pivots_[r] % n);
    Vec<T> c = mat_cast<T>(pivot_inverse_).apply(rhs);
    if (check) {
      Matrix<T> back(n, n);
      for (std::size_t r = 0; r < k; ++r)
        if (!is_zero(c[r])) back.axpy(c[r], a_basis_[r].cast<T>().phi);
      if (back != a) throw std::domain_error("MAlgebra: element outside m(J)");
    }
    return {c, x};
  }

  // Coordinates on the basis (a(J) basis, then {E_k,•}).
  template <class T>
  Vec<T> coords(const MElement<T>& p, bool check = true) const {
    auto [c, x] = split(p, check);
    Vec<T> r(dim());
    for (std::size_t k = 0; k < a_dim(); ++k) r[k] = c[k];
    for (std::size_t k = 0; k < jdim(); ++k) r[a_dim() + k] = x[k];
    return r;
  }
  template <class T>
  MElement<T> basis(std::size_t k) const {
    if (k < a_dim()) return a_basis_[k].cast<T>();
    return jmult_basis_.at(k - a_dim()).cast<T>();
  }
  template <class T>
  MElement<T> from_coords(const Vec<T>& c) const {
    MElement<T> r = zero<T>();
    for (std::size_t k = 0; k < dim(); ++k)
      if (!is_zero(c[k])) r.axpy(c[k], basis<T>(k));
    return r;
  }

  // B_m through m(J) = a(J) ⊕ J: B_m(φ, Φ_{Eα∧Eβ}) = (φEβ,Eα) − (φEα,Eβ) on a(J),
  // B_m({X,•},{Y,•}) = tr{X,Y} = 2(X,Y) on J, and the two summands orthogonal.
  template <class T>
  T killing(const MElement<T>& p, const MElement<T>& q) const {
    auto [cp, xp] = split(p, false);
    auto [cq, xq] = split(q, false);
    Matrix<T> ap = p.phi - jordan_mult(xp).phi;
    T s = T(2) * J_.pair(xp, xq);
    for (std::size_t k = 0; k < a_dim(); ++k) {
      if (is_zero(cq[k])) continue;
      auto [al, be] = a_pairs_[k];
      // (φ Eβ, Eα) = P_α φ(α, β)
      T w = from_rational<T>(J_.pairing_diag()[al]) * ap(al, be) - from_rational<T>(J_.pairing_diag()[be]) * ap(be, al);
      s += cq[k] * w;
    }
    return s;
  }

 private:
  void build() {
    const std::size_t n = jdim();
    for (std::size_t k = 0; k < n; ++k)
      jmult_basis_.push_back(phi(J_.one<Rational>(), J_.basis<Rational>(static_cast<int>(k))));
    EchelonBasis<Rational> eb(n * n);
    for (std::size_t al = 0; al < n; ++al)
      for (std::size_t be = al + 1; be < n; ++be) {
        MElement<Rational> w = phi_wedge(J_.basis<Rational>(static_cast<int>(al)), J_.basis<Rational>(static_cast<int>(be)));
        if (w.phi.is_zero()) continue;
        if (eb.insert(flatten(w.phi))) {
          a_basis_.push_back(w);
          a_pairs_.emplace_back(al, be);
        }
      }
    pivots_ = eb.pivots();
    const std::size_t k = a_basis_.size();
    Matrix<Rational> a(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t s = 0; s < k; ++s) a.set(r, s, a_basis_[s].phi(pivots_[r] / n, pivots_[r] % n));
    auto inv = inverse(a);
    if (!inv) throw std::logic_error("MAlgebra: pivot block singular");
    pivot_inverse_ = *inv;
  }
  static Vec<Rational> flatten(const Matrix<Rational>& m) {
    Vec<Rational> v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
    return v;
  }

  CubicNormStructure J_;
  std::vector<MElement<Rational>> a_basis_;
  std::vector<std::pair<std::size_t, std::size_t>> a_pairs_;
  std::vector<MElement<Rational>> jmult_basis_;
  std::vector<std::size_t> pivots_;
  Matrix<Rational> pivot_inverse_;
};

}  // namespace quatlie
