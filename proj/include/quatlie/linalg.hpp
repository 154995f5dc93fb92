#pragma once
// Dense vectors and matrices over any scalar type, plus exact elimination routines.

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "quatlie/scalars.hpp"

namespace quatlie {

template <class T>
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : v_(n, T(0)) {}
  Vec(std::initializer_list<T> init) : v_(init) {}
  explicit Vec(std::vector<T> v) : v_(std::move(v)) {}

  std::size_t size() const { return v_.size(); }
  T& operator[](std::size_t i) { return v_[i]; }
  const T& operator[](std::size_t i) const { return v_[i]; }
  const std::vector<T>& data() const { return v_; }
  std::vector<T>& data() { return v_; }
  auto begin() { return v_.begin(); }
  auto end() { return v_.end(); }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool is_zero() const {
    for (const auto& x : v_)
      if (!quatlie::is_zero(x)) return false;
    return true;
  }

  Vec& operator+=(const Vec& o) {
    check(o);
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (!quatlie::is_zero(o.v_[i])) v_[i] += o.v_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    check(o);
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (!quatlie::is_zero(o.v_[i])) v_[i] -= o.v_[i];
    return *this;
  }
  Vec& operator*=(const T& s) {
    for (auto& x : v_)
      if (!quatlie::is_zero(x)) x *= s;
    return *this;
  }
  // this += s·o
  void axpy(const T& s, const Vec& o) {
    check(o);
    if (quatlie::is_zero(s)) return;
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (!quatlie::is_zero(o.v_[i])) v_[i] += s * o.v_[i];
  }
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const T& s, Vec a) { return a *= s; }
  friend Vec operator*(Vec a, const T& s) { return a *= s; }
  Vec operator-() const {
    Vec r(*this);
    for (auto& x : r.v_) x = -x;
    return r;
  }
  friend bool operator==(const Vec& a, const Vec& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

 private:
  void check(const Vec& o) const {
    if (o.v_.size() != v_.size()) throw std::invalid_argument("Vec: size mismatch");
  }
  std::vector<T> v_;
};

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  return s;
}

template <class T>
Vec<T> unit_vec(std::size_t n, std::size_t k) {
  Vec<T> v(n);
  v[k] = T(1);
  return v;
}

template <class U, class T>
Vec<U> vec_cast(const Vec<T>& v) {
  Vec<U> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = scalar_cast<U>(v[i]);
  return r;
}

// Row-major dense matrix. An empty data buffer denotes the zero matrix, which keeps
// sparse Lie-algebra elements cheap to copy.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, T(1));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_zero() const {
    for (const auto& x : a_)
      if (!quatlie::is_zero(x)) return false;
    return true;
  }

  const T& operator()(std::size_t i, std::size_t j) const {
    static const T zero(0);
    return a_.empty() ? zero : a_[i * cols_ + j];
  }
  T& at(std::size_t i, std::size_t j) {
    materialize();
    return a_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, const T& x) {
    if (a_.empty() && quatlie::is_zero(x)) return;
    at(i, j) = x;
  }

  Vec<T> column(std::size_t j) const {
    Vec<T> v(rows_);
    if (!a_.empty())
      for (std::size_t i = 0; i < rows_; ++i) v[i] = a_[i * cols_ + j];
    return v;
  }
  void set_column(std::size_t j, const Vec<T>& v) {
    for (std::size_t i = 0; i < rows_; ++i) set(i, j, v[i]);
  }
  Vec<T> row(std::size_t i) const {
    Vec<T> v(cols_);
    if (!a_.empty())
      for (std::size_t j = 0; j < cols_; ++j) v[j] = a_[i * cols_ + j];
    return v;
  }

  Vec<T> apply(const Vec<T>& x) const {
    Vec<T> y(rows_);
    if (a_.empty()) return y;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (quatlie::is_zero(x[j])) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const T& m = a_[i * cols_ + j];
        if (!quatlie::is_zero(m)) y[i] += m * x[j];
      }
    }
    return y;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    if (a_.empty()) return t;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, a_[i * cols_ + j]);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check(o);
    if (o.a_.empty()) return *this;
    materialize();
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!quatlie::is_zero(o.a_[k])) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check(o);
    if (o.a_.empty()) return *this;
    materialize();
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!quatlie::is_zero(o.a_[k])) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : a_)
      if (!quatlie::is_zero(x)) x *= s;
    return *this;
  }
  void axpy(const T& s, const Matrix& o) {
    check(o);
    if (o.a_.empty() || quatlie::is_zero(s)) return;
    materialize();
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!quatlie::is_zero(o.a_[k])) a_[k] += s * o.a_[k];
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix r(*this);
    for (auto& x : r.a_) x = -x;
    return r;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(x.rows_, y.cols_);
    if (x.a_.empty() || y.a_.empty()) return r;
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x.a_[i * x.cols_ + k];
        if (quatlie::is_zero(xik)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) {
          const T& ykj = y.a_[k * y.cols_ + j];
          if (!quatlie::is_zero(ykj)) r.at(i, j) += xik * ykj;
        }
      }
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t j = 0; j < x.cols_; ++j)
        if (x(i, j) != y(i, j)) return false;
    return true;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

 private:
  void materialize() {
    if (a_.empty()) a_.assign(rows_ * cols_, T(0));
  }
  void check(const Matrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

template <class U, class T>
Matrix<U> mat_cast(const Matrix<T>& m) {
  Matrix<U> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) r.set(i, j, scalar_cast<U>(m(i, j)));
  return r;
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.is_zero() || b.is_zero()) return Matrix<T>(a.rows(), a.cols());
  return a * b - b * a;
}

// ---- elimination -------------------------------------------------------------------

namespace detail {
template <class T>
double magnitude(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return std::abs(x);
  } else if constexpr (std::is_same_v<T, MachineComplex>) {
    return std::abs(x);
  } else {
    return is_zero(x) ? 0.0 : 1.0;
  }
}
}  // namespace detail

// Inverse by Gauss–Jordan elimination; std::nullopt when singular.
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: matrix not square");
  std::vector<std::vector<T>> a(n, std::vector<T>(2 * n, T(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = T(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    double best = 0.0;
    for (std::size_t r = col; r < n; ++r) {
      double mag = detail::magnitude(a[r][col]);
      if (mag > best) {
        best = mag;
        piv = r;
        if constexpr (is_exact_v<T>) break;
      }
    }
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    T inv = quatlie::inverse(a[col][col]);
    for (auto& x : a[col])
      if (!is_zero(x)) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      T f = a[r][col];
      for (std::size_t j = col; j < 2 * n; ++j)
        if (!is_zero(a[col][j])) a[r][j] -= f * a[col][j];
    }
  }
  Matrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, a[i][n + j]);
  return out;
}

// Incremental row-echelon basis: tracks pivot columns for exact rank and membership tests.
template <class T>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t n) : n_(n) {}
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Reduces v against the basis; returns true and stores it if independent.
  bool insert(Vec<T> v) {
    reduce(v);
    for (std::size_t j = 0; j < n_; ++j) {
      if (!is_zero(v[j])) {
        T inv = quatlie::inverse(v[j]);
        v *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(j);
        return true;
      }
    }
    return false;
  }
  bool contains(Vec<T> v) const {
    reduce(v);
    return v.is_zero();
  }

 private:
  void reduce(Vec<T>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const T& c = v[pivots_[k]];
      if (!is_zero(c)) v.axpy(-T(c), rows_[k]);
    }
  }
  std::size_t n_;
  std::vector<Vec<T>> rows_;
  std::vector<std::size_t> pivots_;
};

// Exact positive-definiteness of a symmetric rational matrix via LDLᵀ pivots.
// Returns the index of the first non-positive pivot, or -1 when positive definite.
inline long first_nonpositive_pivot(const Matrix<Rational>& g) {
  const std::size_t n = g.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g(i, j);
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].sign() <= 0) return static_cast<long>(k);
    Rational inv = a[k][k].inv();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      Rational f = a[i][k] * inv;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!a[k][j].is_zero()) a[i][j] -= f * a[k][j];
    }
  }
  return -1;
}

}  // namespace quatlie
