#pragma once
// Definite composition algebras of dimension 1, 2, 4, 8 built by Cayley–Dickson doubling.

#include <stdexcept>
#include <utility>
#include <vector>

#include "quatlie/linalg.hpp"

namespace quatlie {

class CompositionAlgebra {
 public:
  struct Term {
    int index;
    int sign;
  };

  explicit CompositionAlgebra(int dim) : dim_(dim), table_(static_cast<std::size_t>(dim * dim)) {
    if (dim != 1 && dim != 2 && dim != 4 && dim != 8)
      throw std::invalid_argument("CompositionAlgebra: dimension must be 1, 2, 4 or 8");
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) table_[static_cast<std::size_t>(i * dim + j)] = basis_product(dim, i, j);
  }

  int dim() const { return dim_; }
  // e_i · e_j = sign · e_index
  Term product(int i, int j) const { return table_[static_cast<std::size_t>(i * dim_ + j)]; }

  // out += s · (x · y), on raw coordinate blocks of length dim().
  template <class T>
  void mul_acc(const T* x, const T* y, T* out, const T& s = T(1)) const {
    for (int i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      T xs = x[i] * s;
      for (int j = 0; j < dim_; ++j) {
        if (is_zero(y[j])) continue;
        const Term& t = table_[static_cast<std::size_t>(i * dim_ + j)];
        if (t.sign > 0)
          out[t.index] += xs * y[j];
        else
          out[t.index] -= xs * y[j];
      }
    }
  }

  template <class T>
  Vec<T> mul(const Vec<T>& x, const Vec<T>& y) const {
    check(x);
    check(y);
    Vec<T> r(static_cast<std::size_t>(dim_));
    mul_acc(&x[0], &y[0], &r[0]);
    return r;
  }
  template <class T>
  Vec<T> conj(const Vec<T>& x) const {
    check(x);
    Vec<T> r(x);
    for (int k = 1; k < dim_; ++k) r[static_cast<std::size_t>(k)] = -r[static_cast<std::size_t>(k)];
    return r;
  }
  template <class T>
  T norm(const Vec<T>& x) const {
    check(x);
    return dot(x, x);
  }
  template <class T>
  T trace(const Vec<T>& x) const {
    check(x);
    return T(2) * x[0];
  }
  // Polar form ⟨x,y⟩ = ½ tr(x·conj(y)); the basis is orthonormal for it.
  template <class T>
  T pair(const Vec<T>& x, const Vec<T>& y) const {
    check(x);
    check(y);
    return dot(x, y);
  }
  template <class T>
  Vec<T> one() const {
    return unit_vec<T>(static_cast<std::size_t>(dim_), 0);
  }

 private:
  template <class T>
  void check(const Vec<T>& x) const {
    if (x.size() != static_cast<std::size_t>(dim_))
      throw std::invalid_argument("CompositionAlgebra: element from a different algebra");
  }

  // (a,b)(c,d) = (ac − conj(d)b, da + b·conj(c)) on basis elements.
  static Term basis_product(int dim, int i, int j) {
    if (dim == 1) return {0, 1};
    const int m = dim / 2;
    auto conj_sign = [](int k) { return k == 0 ? 1 : -1; };
    if (i < m && j < m) return basis_product(m, i, j);
    if (i < m && j >= m) {
      Term t = basis_product(m, j - m, i);  // d·a
      return {m + t.index, t.sign};
    }
    if (i >= m && j < m) {
      Term t = basis_product(m, i - m, j);  // b·conj(c)
      return {m + t.index, t.sign * conj_sign(j)};
    }
    Term t = basis_product(m, j - m, i - m);  // −conj(d)·b
    return {t.index, -t.sign * conj_sign(j - m)};
  }

  int dim_;
  std::vector<Term> table_;
};

}  // namespace quatlie
