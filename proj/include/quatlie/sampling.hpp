#pragma once
// Seeded random inputs for property checks.

#include <random>
#include <vector>

#include "quatlie/freudenthal.hpp"

namespace quatlie {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational(int span = 5, int max_den = 3) {
    std::uniform_int_distribution<int> num(-span, span), den(1, max_den);
    return Rational(num(rng_), den(rng_));
  }
  CayleyScalar cayley() { return {rational(), rational(), rational(), rational()}; }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64& engine() { return rng_; }

  template <class T>
  Vec<T> vec(std::size_t n) {
    Vec<T> v(n);
    for (auto& x : v) x = draw<T>();
    return v;
  }
  template <class T>
  JordanElement<T> jordan(const CubicNormStructure& J) {
    return vec<T>(J.size());
  }

  template <class T>
  FreudenthalVector<T> wvec(const FreudenthalSpace& W) {
    return W.from_vec(vec<T>(W.dim()));
  }
  // Vector with at most k nonzero coordinates.
  template <class T>
  Vec<T> sparse(std::size_t n, int k) {
    Vec<T> v(n);
    for (int t = 0; t < k; ++t) v[static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1))] = draw<T>();
    return v;
  }

  template <class T>
  T draw() {
    if constexpr (std::is_same_v<T, Rational>) {
      return rational();
    } else if constexpr (std::is_same_v<T, CayleyScalar>) {
      return cayley();
    } else if constexpr (std::is_same_v<T, double>) {
      return uniform(-1.0, 1.0);
    } else {
      return T(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
    }
  }

 private:
  std::mt19937_64 rng_;
};

// One descriptor of each kind: Unit, QuadraticPair r = 0..3, H₃ over R, C, H, O.
inline std::vector<CubicNormStructure> all_descriptor_kinds() {
  std::vector<CubicNormStructure> v{CubicNormStructure::unit()};
  for (int r = 0; r <= 3; ++r) v.push_back(CubicNormStructure::quadratic_pair(r));
  for (int d : {1, 2, 4, 8}) v.push_back(CubicNormStructure::hermitian3(d));
  return v;
}

}  // namespace quatlie
