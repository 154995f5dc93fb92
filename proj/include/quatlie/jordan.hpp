#pragma once
// Cubic norm structures: J = F, J = F × S for a quadratic space S, and J = H₃(C).

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "quatlie/composition.hpp"

namespace quatlie {

enum class JordanKind { Unit, QuadraticPair, Hermitian3 };

template <class T>
using JordanElement = Vec<T>;

// Coordinates:
//   Unit           [x]
//   QuadraticPair  [β, t₀, t₁, …, t_r]   with q_S(t) = Σ g_k t_k², g₀ = 1, g_k < 0
//   Hermitian3     [c₁, c₂, c₃, a₁, a₂, a₃] with a_i ∈ C in the (i+1, i+2) slot
class CubicNormStructure {
 public:
  static CubicNormStructure unit() { return CubicNormStructure(JordanKind::Unit, 1, {}, 0); }

  // S of signature (1, r) with Gram diag(1, −1, …, −1).
  static CubicNormStructure quadratic_pair(int r) {
    if (r < 0) throw std::invalid_argument("quadratic_pair: r must be non-negative");
    std::vector<Rational> g(static_cast<std::size_t>(r + 1), Rational(-1));
    g[0] = 1;
    return quadratic_pair_diag(g);
  }
  // q_S(t) = Σ g_k t_k²; requires g₀ = 1 and g_k < 0 for k ≥ 1.
  static CubicNormStructure quadratic_pair_diag(std::vector<Rational> g) {
    if (g.empty() || g[0] != Rational(1)) throw std::invalid_argument("quadratic_pair: q_S(1_S) must be 1");
    for (std::size_t k = 1; k < g.size(); ++k)
      if (g[k].sign() >= 0) throw std::invalid_argument("quadratic_pair: S must have signature (1, r)");
    const int n = static_cast<int>(g.size()) + 1;
    return CubicNormStructure(JordanKind::QuadraticPair, n, std::move(g), 0);
  }
  // General symmetric Gram matrix of q_S (q_S(t) = tᵀGt) with 1_S the first basis vector;
  // diagonalized by congruence over Q while keeping 1_S fixed.
  static CubicNormStructure quadratic_pair_gram(const Matrix<Rational>& gram) {
    const std::size_t n = gram.rows();
    if (n == 0 || gram.cols() != n || gram != gram.transpose())
      throw std::invalid_argument("quadratic_pair: Gram matrix must be square and symmetric");
    std::vector<Vec<Rational>> basis;
    std::vector<Rational> diag;
    auto form = [&](const Vec<Rational>& x, const Vec<Rational>& y) { return dot(x, gram.apply(y)); };
    for (std::size_t k = 0; k < n; ++k) {
      Vec<Rational> v = unit_vec<Rational>(n, k);
      for (std::size_t j = 0; j < basis.size(); ++j) v.axpy(-(form(v, basis[j]) / diag[j]), basis[j]);
      Rational d = form(v, v);
      if (d.is_zero()) throw std::invalid_argument("quadratic_pair: degenerate or isotropic Gram matrix");
      basis.push_back(v);
      diag.push_back(d);
    }
    return quadratic_pair_diag(diag);
  }

  static CubicNormStructure hermitian3(int comp_dim) {
    auto c = std::make_shared<const CompositionAlgebra>(comp_dim);
    return CubicNormStructure(JordanKind::Hermitian3, 3 + 3 * comp_dim, {}, comp_dim, std::move(c));
  }

  JordanKind kind() const { return kind_; }
  int dim() const { return dim_; }
  std::size_t size() const { return static_cast<std::size_t>(dim_); }
  const CompositionAlgebra& composition() const { return *comp_; }
  int composition_dim() const { return comp_dim_; }
  const std::vector<Rational>& s_gram() const { return g_; }

  std::string name() const {
    switch (kind_) {
      case JordanKind::Unit:
        return "unit";
      case JordanKind::QuadraticPair:
        return "quadratic_pair(r=" + std::to_string(dim_ - 2) + ")";
      case JordanKind::Hermitian3:
        return "hermitian3(C" + std::to_string(comp_dim_) + ")";
    }
    return "?";
  }

  // Diagonal of the trace-pairing Gram matrix in the coordinate basis.
  const std::vector<Rational>& pairing_diag() const { return pair_diag_; }

  template <class T>
  JordanElement<T> zero() const {
    return JordanElement<T>(size());
  }
  template <class T>
  JordanElement<T> basis(int k) const {
    return unit_vec<T>(size(), static_cast<std::size_t>(k));
  }
  template <class T>
  JordanElement<T> one() const {
    JordanElement<T> e(size());
    switch (kind_) {
      case JordanKind::Unit:
        e[0] = T(1);
        break;
      case JordanKind::QuadraticPair:
        e[0] = T(1);
        e[1] = T(1);
        break;
      case JordanKind::Hermitian3:
        e[0] = e[1] = e[2] = T(1);
        break;
    }
    return e;
  }
  // Diagonal element diag(c₁, c₂, c₃) of H₃(C).
  template <class T>
  JordanElement<T> diag(const T& c1, const T& c2, const T& c3) const {
    if (kind_ != JordanKind::Hermitian3) throw std::logic_error("diag: Hermitian3 kind only");
    JordanElement<T> e(size());
    e[0] = c1;
    e[1] = c2;
    e[2] = c3;
    return e;
  }

  template <class T>
  T pair(const JordanElement<T>& x, const JordanElement<T>& y) const {
    check(x);
    check(y);
    T s(0);
    for (std::size_t k = 0; k < size(); ++k) {
      if (is_zero(x[k]) || is_zero(y[k])) continue;
      if (pair_diag_[k].is_one())
        s += x[k] * y[k];
      else
        s += from_rational<T>(pair_diag_[k]) * (x[k] * y[k]);
    }
    return s;
  }
  template <class T>
  T trace(const JordanElement<T>& x) const {
    return pair(one<T>(), x);
  }

  template <class T>
  T norm(const JordanElement<T>& x) const {
    check(x);
    switch (kind_) {
      case JordanKind::Unit:
        return x[0] * x[0] * x[0];
      case JordanKind::QuadraticPair:
        return x[0] * qs(x);
      case JordanKind::Hermitian3: {
        const CompositionAlgebra& C = *comp_;
        const std::size_t m = static_cast<std::size_t>(comp_dim_);
        T r = x[0] * x[1] * x[2];
        for (std::size_t i = 0; i < 3; ++i) r -= x[i] * cnorm(x, i);
        Vec<T> a12(m);
        C.mul_acc(&x[3], &x[3 + m], &a12[0]);
        Vec<T> a123(m);
        C.mul_acc(&a12[0], &x[3 + 2 * m], &a123[0]);
        return r + T(2) * a123[0];
      }
    }
    return T(0);
  }

  template <class T>
  JordanElement<T> sharp(const JordanElement<T>& x) const {
    check(x);
    JordanElement<T> r(size());
    switch (kind_) {
      case JordanKind::Unit:
        r[0] = x[0] * x[0];
        break;
      case JordanKind::QuadraticPair:
        r[0] = qs(x);
        for (std::size_t k = 1; k < size(); ++k) r[k] = k == 1 ? x[0] * x[k] : -(x[0] * x[k]);
        break;
      case JordanKind::Hermitian3: {
        const std::size_t m = static_cast<std::size_t>(comp_dim_);
        for (std::size_t i = 0; i < 3; ++i) {
          const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
          r[i] = x[j] * x[k] - cnorm(x, i);
          // a_i# = conj(a_j a_k) − c_i a_i
          Vec<T> p(m);
          comp_->mul_acc(&x[3 + j * m], &x[3 + k * m], &p[0]);
          for (std::size_t t = 0; t < m; ++t) {
            T v = t == 0 ? p[t] : -p[t];
            if (!is_zero(x[i]) && !is_zero(x[3 + i * m + t])) v -= x[i] * x[3 + i * m + t];
            r[3 + i * m + t] = v;
          }
        }
        break;
      }
    }
    return r;
  }

  // x × y = (x+y)# − x# − y#, expanded bilinearly.
  template <class T>
  JordanElement<T> cross(const JordanElement<T>& x, const JordanElement<T>& y) const {
    check(x);
    check(y);
    JordanElement<T> r(size());
    switch (kind_) {
      case JordanKind::Unit:
        r[0] = T(2) * x[0] * y[0];
        break;
      case JordanKind::QuadraticPair: {
        T s(0);
        for (std::size_t k = 1; k < size(); ++k)
          if (!is_zero(x[k]) && !is_zero(y[k])) s += from_rational<T>(g_[k - 1]) * (x[k] * y[k]);
        r[0] = T(2) * s;
        for (std::size_t k = 1; k < size(); ++k) {
          T v = x[0] * y[k] + y[0] * x[k];
          r[k] = k == 1 ? v : -v;
        }
        break;
      }
      case JordanKind::Hermitian3: {
        const std::size_t m = static_cast<std::size_t>(comp_dim_);
        for (std::size_t i = 0; i < 3; ++i) {
          const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
          T d = x[j] * y[k] + x[k] * y[j];
          for (std::size_t t = 0; t < m; ++t) {
            const T &xa = x[3 + i * m + t], &ya = y[3 + i * m + t];
            if (!is_zero(xa) && !is_zero(ya)) d -= T(2) * (xa * ya);
          }
          r[i] = d;
          Vec<T> p(m);
          comp_->mul_acc(&x[3 + j * m], &y[3 + k * m], &p[0]);
          comp_->mul_acc(&y[3 + j * m], &x[3 + k * m], &p[0]);
          for (std::size_t t = 0; t < m; ++t) {
            T v = t == 0 ? p[t] : -p[t];
            const T &xa = x[3 + i * m + t], &ya = y[3 + i * m + t];
            if (!is_zero(x[i]) && !is_zero(ya)) v -= x[i] * ya;
            if (!is_zero(y[i]) && !is_zero(xa)) v -= y[i] * xa;
            r[3 + i * m + t] = v;
          }
        }
        break;
      }
    }
    return r;
  }

  template <class T>
  T trilinear(const JordanElement<T>& x, const JordanElement<T>& y, const JordanElement<T>& z) const {
    return pair(x, cross(y, z));
  }

  // U_x(y) = −x# × y + (x,y)x
  template <class T>
  JordanElement<T> U(const JordanElement<T>& x, const JordanElement<T>& y) const {
    JordanElement<T> r = -cross(sharp(x), y);
    r.axpy(pair(x, y), x);
    return r;
  }

  // {X,Y} = X×Y + tr(X)Y + tr(Y)X − tr(X×Y)·1
  template <class T>
  JordanElement<T> jordan_product(const JordanElement<T>& x, const JordanElement<T>& y) const {
    JordanElement<T> xy = cross(x, y);
    JordanElement<T> r = xy;
    r.axpy(trace(x), y);
    r.axpy(trace(y), x);
    r.axpy(-trace(xy), one<T>());
    return r;
  }

  // x# / N(x)
  template <class T>
  JordanElement<T> jordan_inverse(const JordanElement<T>& x) const {
    T n = norm(x);
    if (is_zero(n)) throw std::domain_error("jordan_inverse: N(x) = 0");
    return sharp(x) * inverse(n);
  }

  // 0 iff x = 0; ≤1 iff x# = 0; ≤2 iff N(x) = 0; else 3 (exact scalar types).
  template <class T>
  int rank(const JordanElement<T>& x) const {
    if (x.is_zero()) return 0;
    if (sharp(x).is_zero()) return 1;
    if (is_zero(norm(x))) return 2;
    return 3;
  }

  // Im Z positive definite: tr(Y) > 0, tr(Y#) > 0, N(Y) > 0 (real Y).
  template <class T>
  bool positive_definite(const JordanElement<T>& y) const {
    return trace(y) > T(0) && trace(sharp(y)) > T(0) && norm(y) > T(0);
  }

  friend bool operator==(const CubicNormStructure& a, const CubicNormStructure& b) {
    return a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.comp_dim_ == b.comp_dim_ && a.g_ == b.g_;
  }

 private:
  CubicNormStructure(JordanKind kind, int dim, std::vector<Rational> g, int comp_dim,
                     std::shared_ptr<const CompositionAlgebra> comp = nullptr)
      : kind_(kind), dim_(dim), comp_dim_(comp_dim), g_(std::move(g)), comp_(std::move(comp)) {
    pair_diag_.assign(size(), Rational(1));
    switch (kind_) {
      case JordanKind::Unit:
        pair_diag_[0] = 3;
        break;
      case JordanKind::QuadraticPair:
        // (β,t)·(β',t') = ββ' + (t, ι_S t')_S with (x,y)_S = 2Σ g_k x_k y_k
        for (std::size_t k = 1; k < size(); ++k) pair_diag_[k] = 2 * abs(g_[k - 1]);
        break;
      case JordanKind::Hermitian3:
        for (std::size_t k = 3; k < size(); ++k) pair_diag_[k] = 2;
        break;
    }
  }

  template <class T>
  void check(const JordanElement<T>& x) const {
    if (x.size() != size()) throw std::invalid_argument("CubicNormStructure: element of wrong dimension");
  }
  template <class T>
  T qs(const JordanElement<T>& x) const {
    T s(0);
    for (std::size_t k = 1; k < size(); ++k)
      if (!is_zero(x[k])) s += from_rational<T>(g_[k - 1]) * (x[k] * x[k]);
    return s;
  }
  template <class T>
  T cnorm(const JordanElement<T>& x, std::size_t i) const {
    const std::size_t m = static_cast<std::size_t>(comp_dim_);
    T s(0);
    for (std::size_t t = 0; t < m; ++t)
      if (!is_zero(x[3 + i * m + t])) s += x[3 + i * m + t] * x[3 + i * m + t];
    return s;
  }

  JordanKind kind_;
  int dim_;
  int comp_dim_;
  std::vector<Rational> g_;
  std::shared_ptr<const CompositionAlgebra> comp_;
  std::vector<Rational> pair_diag_;
};

// Standard descriptors: G₂, F₄, E₆, E₇, E₈ rows and the orthogonal family so:r.
inline CubicNormStructure descriptor_for(const std::string& token) {
  if (token == "g2") return CubicNormStructure::unit();
  if (token == "f4") return CubicNormStructure::hermitian3(1);
  if (token == "e6") return CubicNormStructure::hermitian3(2);
  if (token == "e7") return CubicNormStructure::hermitian3(4);
  if (token == "e8") return CubicNormStructure::hermitian3(8);
  if (token.rfind("so:", 0) == 0) {
    std::size_t pos = 0;
    int r = std::stoi(token.substr(3), &pos);
    if (pos != token.size() - 3 || r < 0) throw std::invalid_argument("bad so:R token: " + token);
    return CubicNormStructure::quadratic_pair(r);
  }
  throw std::invalid_argument("unknown algebra token: " + token);
}

}  // namespace quatlie
