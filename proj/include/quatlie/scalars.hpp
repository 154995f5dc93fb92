#pragma once
// The exact tower Q ⊂ Q(i) ⊂ Q(i,√2) and the scalar helpers shared by all templates.

#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "quatlie/rational.hpp"

namespace quatlie {

using MachineComplex = std::complex<double>;

// c0 + c1·i + c2·√2 + c3·i√2.
class CayleyScalar {
 public:
  CayleyScalar() = default;
  CayleyScalar(int n) : c_{Rational(n), {}, {}, {}} {}
  CayleyScalar(long long n) : c_{Rational(n), {}, {}, {}} {}
  CayleyScalar(const Rational& q) : c_{q, {}, {}, {}} {}
  CayleyScalar(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static CayleyScalar i() { return {0, 1, 0, 0}; }
  static CayleyScalar sqrt2() { return {0, 0, 1, 0}; }

  const Rational& operator[](int k) const { return c_[k]; }

  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  CayleyScalar conj() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }

  CayleyScalar inv() const {
    if (is_zero()) throw std::domain_error("CayleyScalar: inverse of zero");
    // x = A + B√2 with A, B ∈ Q(i); x⁻¹ = (A − B√2)/(A² − 2B²), then invert in Q(i).
    const Rational &a0 = c_[0], &a1 = c_[1], &b0 = c_[2], &b1 = c_[3];
    Rational n0 = a0 * a0 - a1 * a1 - 2 * (b0 * b0 - b1 * b1);
    Rational n1 = 2 * a0 * a1 - 4 * b0 * b1;
    Rational m = n0 * n0 + n1 * n1;
    Rational r0 = n0 / m, r1 = -n1 / m;  // (n0 + n1 i)⁻¹
    return CayleyScalar{a0, a1, -b0, -b1} * CayleyScalar{r0, r1, 0, 0};
  }

  MachineComplex to_machine() const {
    constexpr double kSqrt2 = 1.41421356237309504880168872420969808;
    return {c_[0].to_double() + kSqrt2 * c_[2].to_double(), c_[1].to_double() + kSqrt2 * c_[3].to_double()};
  }

  std::string str() const {
    static const char* names[4] = {"", "i", "√2", "i√2"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
      if (c_[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += c_[k].str();
      if (k) out += std::string("·") + names[k];
    }
    return out.empty() ? "0" : out;
  }

  CayleyScalar operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  friend CayleyScalar operator+(const CayleyScalar& x, const CayleyScalar& y) {
    return {x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2], x.c_[3] + y.c_[3]};
  }
  friend CayleyScalar operator-(const CayleyScalar& x, const CayleyScalar& y) {
    return {x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2], x.c_[3] - y.c_[3]};
  }
  friend CayleyScalar operator*(const CayleyScalar& x, const CayleyScalar& y) {
    if (x.is_rational()) return y.scaled(x.c_[0]);
    if (y.is_rational()) return x.scaled(y.c_[0]);
    // (A + B√2)(C + D√2) = (AC + 2BD) + (AD + BC)√2 over Q(i).
    auto gmul = [](const Rational& p, const Rational& q, const Rational& r, const Rational& s, Rational& re,
                   Rational& im) {
      re = p * r - q * s;
      im = p * s + q * r;
    };
    Rational acr, aci, bdr, bdi, adr, adi, bcr, bci;
    gmul(x.c_[0], x.c_[1], y.c_[0], y.c_[1], acr, aci);
    gmul(x.c_[2], x.c_[3], y.c_[2], y.c_[3], bdr, bdi);
    gmul(x.c_[0], x.c_[1], y.c_[2], y.c_[3], adr, adi);
    gmul(x.c_[2], x.c_[3], y.c_[0], y.c_[1], bcr, bci);
    return {acr + 2 * bdr, aci + 2 * bdi, adr + bcr, adi + bci};
  }
  friend CayleyScalar operator/(const CayleyScalar& x, const CayleyScalar& y) { return x * y.inv(); }
  CayleyScalar& operator+=(const CayleyScalar& y) { return *this = *this + y; }
  CayleyScalar& operator-=(const CayleyScalar& y) { return *this = *this - y; }
  CayleyScalar& operator*=(const CayleyScalar& y) { return *this = *this * y; }

  friend bool operator==(const CayleyScalar& x, const CayleyScalar& y) {
    return x.c_[0] == y.c_[0] && x.c_[1] == y.c_[1] && x.c_[2] == y.c_[2] && x.c_[3] == y.c_[3];
  }
  friend bool operator!=(const CayleyScalar& x, const CayleyScalar& y) { return !(x == y); }
  friend std::ostream& operator<<(std::ostream& os, const CayleyScalar& x) { return os << x.str(); }

 private:
  CayleyScalar scaled(const Rational& q) const { return {c_[0] * q, c_[1] * q, c_[2] * q, c_[3] * q}; }
  Rational c_[4];
};

// ---- generic scalar helpers ----------------------------------------------------------

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational> || std::is_same_v<T, CayleyScalar>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const CayleyScalar& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const MachineComplex& x) { return x == 0.0; }

inline Rational conj(const Rational& x) { return x; }
inline CayleyScalar conj(const CayleyScalar& x) { return x.conj(); }
inline double conj(double x) { return x; }
inline MachineComplex conj(const MachineComplex& x) { return std::conj(x); }

inline Rational inverse(const Rational& x) { return x.inv(); }
inline CayleyScalar inverse(const CayleyScalar& x) { return x.inv(); }
inline double inverse(double x) { return 1.0 / x; }
inline MachineComplex inverse(const MachineComplex& x) { return 1.0 / x; }

// The rational n/d embedded in T.
template <class T>
T sc(long long n, long long d = 1) {
  if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, CayleyScalar>) {
    return T(Rational(n, d));
  } else {
    return T(static_cast<double>(n) / static_cast<double>(d));
  }
}

template <class T>
T from_rational(const Rational& q) {
  if constexpr (is_exact_v<T>) {
    return T(q);
  } else {
    return T(q.to_double());
  }
}

// Embedding between scalar types along Q ⊂ Q(i,√2) → C and Q → R → C.
template <class U, class T>
U scalar_cast(const T& x) {
  if constexpr (std::is_same_v<U, T>) {
    return x;
  } else if constexpr (std::is_same_v<T, Rational>) {
    return from_rational<U>(x);
  } else if constexpr (std::is_same_v<T, CayleyScalar> && std::is_same_v<U, MachineComplex>) {
    return x.to_machine();
  } else {
    return U(x);
  }
}

inline MachineComplex to_machine(const Rational& x) { return {x.to_double(), 0.0}; }
inline MachineComplex to_machine(const CayleyScalar& x) { return x.to_machine(); }
inline MachineComplex to_machine(double x) { return {x, 0.0}; }
inline MachineComplex to_machine(const MachineComplex& x) { return x; }

// Imaginary unit in T (CayleyScalar and complex types only).
template <class T>
T imag_unit() {
  if constexpr (std::is_same_v<T, CayleyScalar>) {
    return CayleyScalar::i();
  } else {
    return T(0.0, 1.0);
  }
}

inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const CayleyScalar& x) { return x.str(); }

}  // namespace quatlie
