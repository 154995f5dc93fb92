#pragma once
// Modified Bessel functions K_v(z), integer order, from the integral
//   K_v(z) = ∫₀^∞ e^{−z cosh t} cosh(vt) dt
// evaluated by composite Gauss–Legendre on panels sized to the peak of the integrand.

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

namespace quatlie {

enum class BesselStatus { Ok = 0, Underflow = -1, Overflow = 1 };

struct BesselResult {
  double value;
  BesselStatus status;
};

// e^z K_v(z). The integrand is e^{−z(cosh t − 1)} cosh(vt), whose log peaks at sinh t* = |v|/z.
inline double bessel_k_scaled(int v, double z) {
  if (!(z > 0.0)) throw std::domain_error("bessel_k: z must be positive");
  const double av = std::abs(static_cast<double>(v));
  const double tpk = av == 0.0 ? 0.0 : std::asinh(av / z);
  auto logf = [&](double t) { return -z * (std::cosh(t) - 1.0) + av * t; };
  const double fpk = logf(tpk);
  // Truncate where the integrand has dropped below e^{−46} ≈ 1e−20 of its peak.
  double T = tpk + 0.25;
  while (logf(T) > fpk - 46.0) T += 0.25;
  // Width of the peak is about (z cosh t*)^{−1/2}.
  const double width = std::min(0.25, 0.5 / std::sqrt(z * std::cosh(tpk)));
  const int panels = static_cast<int>(std::ceil(T / width));
  const double h = T / panels;
  auto f = [&](double t) { return std::exp(logf(t) - fpk) * 0.5 * (1.0 + std::exp(-2.0 * av * t)); };
  double s = 0.0;
  for (int k = 0; k < panels; ++k) s += boost::math::quadrature::gauss<double, 20>::integrate(f, k * h, (k + 1) * h);
  return s * std::exp(fpk);
}

inline BesselResult bessel_k_checked(int v, double z) {
  const double s = bessel_k_scaled(v, z);
  if (std::isinf(s)) return {std::numeric_limits<double>::infinity(), BesselStatus::Overflow};
  const double k = s * std::exp(-z);
  if (k == 0.0 || !std::isnormal(k)) return {k, BesselStatus::Underflow};
  return {k, BesselStatus::Ok};
}

inline double bessel_k(int v, double z) { return bessel_k_checked(v, z).value; }

// Forward recurrence K_{m+1} = K_{m−1} + (2m/z)K_m from K₀, K₁; stable for increasing order.
inline double bessel_k_recurrence(int v, double z) {
  if (!(z > 0.0)) throw std::domain_error("bessel_k: z must be positive");
  const int av = std::abs(v);
  double km = bessel_k(0, z);
  if (av == 0) return km;
  double k = bessel_k(1, z);
  for (int m = 1; m < av; ++m) {
    const double next = km + (2.0 * m / z) * k;
    km = k;
    k = next;
  }
  return k;
}

}  // namespace quatlie
