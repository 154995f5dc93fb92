#pragma once
// Numeric layer for generalized Whittaker functions on H_J(R):
// Jordan square roots, the points (w, X, Y) of the Levi chart, p_ω, the Whittaker vector,
// admissibility of characters, positivity scans and the constant-term shape.
//
// Conventions. A character is the real vector ω ∈ W_J with p_ω(Z) = ⟨ω, r₀(Z)⟩, so that
// ω = −(a,b,c,d) gives p_ω(Z) = aN(Z) + (b,Z#) + (c,Z) + d and Wh(exp(x)g) = e^{i⟨ω,x⟩}Wh(g).
// A point (w, X, Y) stands for g = w·n(−X)·M_Y with M_Y = M(N(Y)^{1/2}, U_{Y^{1/2}}); then
//   g·r₀(i) = w N(Y)^{−1/2} r₀(Z),  Z = X + iY,  ν(g) = w²,  j(g,i) = w N(Y)^{−1/2}.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

#include "quatlie/bessel.hpp"
#include "quatlie/freudenthal.hpp"

namespace quatlie {

using RealJordan = JordanElement<double>;
using ComplexJordan = JordanElement<MachineComplex>;
using RealW = FreudenthalVector<double>;
using ComplexW = FreudenthalVector<MachineComplex>;

// ---- Jordan helpers over the reals ----

// x² = ½{x,x}
inline RealJordan jordan_square(const CubicNormStructure& J, const RealJordan& x) {
  return 0.5 * J.jordan_product(x, x);
}

// Roots of λ³ − t₁λ² + t₂λ − t₃, all real for positive definite Y.
inline std::array<double, 3> characteristic_roots(double t1, double t2, double t3) {
  const double p = t2 - t1 * t1 / 3.0;
  const double q = -2.0 * t1 * t1 * t1 / 27.0 + t1 * t2 / 3.0 - t3;
  std::array<double, 3> r{};
  if (p >= 0.0) {
    r.fill(std::cbrt(-q) + t1 / 3.0);
  } else {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double th = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) r[k] = m * std::cos(th - 2.0 * std::numbers::pi * k / 3.0) + t1 / 3.0;
  }
  for (auto& l : r) {
    for (int it = 0; it < 3; ++it) {
      const double f = ((l - t1) * l + t2) * l - t3;
      const double df = (3.0 * l - 2.0 * t1) * l + t2;
      if (df == 0.0) break;
      l -= f / df;
    }
  }
  return r;
}

// Positive definite R with ½{R,R} = Y. R = p(Y) for the quadratic p interpolating √λ at the
// characteristic roots; the divided differences of √ are written in closed form, so clustered
// roots need no special treatment.
inline RealJordan jordan_sqrt(const CubicNormStructure& J, const RealJordan& Y) {
  if (!J.positive_definite(Y)) throw std::domain_error("jordan_sqrt: Y not positive definite");
  auto lam = characteristic_roots(J.trace(Y), J.trace(J.sharp(Y)), J.norm(Y));
  double s[3];
  for (int k = 0; k < 3; ++k) s[k] = std::sqrt(std::max(lam[k], 0.0));
  const double d12 = 1.0 / (s[0] + s[1]);
  const double d123 = -1.0 / ((s[0] + s[1]) * (s[0] + s[2]) * (s[1] + s[2]));
  const double c2 = d123;
  const double c1 = d12 - d123 * (lam[0] + lam[1]);
  const double c0 = s[0] - d12 * lam[0] + d123 * lam[0] * lam[1];
  RealJordan R = c0 * J.one<double>();
  R.axpy(c1, Y);
  R.axpy(c2, jordan_square(J, Y));
  // A near-triple root is only located to about ε^{1/3}, which Newton steps repair. The step is
  // unstable off the subalgebra generated by Y for ill-conditioned Y, so it is kept only while
  // the residual ½{R,R} − Y shrinks.
  auto residual = [&](const RealJordan& r) {
    double m = 0;
    RealJordan d = jordan_square(J, r) - Y;
    for (double x : d) m = std::max(m, std::abs(x));
    return m;
  };
  double res = residual(R);
  for (int it = 0; it < 20 && res > 0; ++it) {
    RealJordan next = 0.5 * (R + 0.5 * J.jordan_product(Y, J.jordan_inverse(R)));
    const double nres = residual(next);
    if (!(nres < res)) break;
    R = std::move(next);
    res = nres;
  }
  return R;
}

// Matrix of U_x on J in coordinates.
inline Matrix<double> u_matrix(const CubicNormStructure& J, const RealJordan& x) {
  const std::size_t n = J.size();
  Matrix<double> m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.set_column(k, J.U(x, unit_vec<double>(n, k)));
  return m;
}

inline ComplexJordan complexify(const RealJordan& x, const RealJordan& y) {
  ComplexJordan z(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) z[k] = MachineComplex(x[k], y[k]);
  return z;
}

inline ComplexW complexify(const RealW& v) { return fv_cast<MachineComplex>(v); }

// ---- points of the Levi chart ----

enum class ComponentSign { Plus, W0 };

struct LeviPoint {
  double w = 1.0;
  RealJordan X;
  RealJordan Y;
  ComponentSign sign = ComponentSign::Plus;

  ComplexJordan Z() const { return complexify(X, Y); }
};

inline void check_point(const CubicNormStructure& J, const LeviPoint& p) {
  if (!(p.w > 0.0)) throw std::domain_error("LeviPoint: w must be positive");
  if (p.X.size() != J.size() || p.Y.size() != J.size()) throw std::invalid_argument("LeviPoint: wrong dimension");
  if (!J.positive_definite(p.Y)) throw std::domain_error("LeviPoint: Y not positive definite");
}

// M_Y = M(N(Y)^{1/2}, U_{Y^{1/2}}), so that M_Y·r₀(i) = N(Y)^{−1/2} r₀(iY).
inline HSimilitude<double> levi_m(const FreudenthalSpace& W, const RealJordan& Y) {
  const auto& J = W.jordan();
  RealJordan R = jordan_sqrt(J, Y);
  return W.M<double>(std::sqrt(J.norm(Y)), u_matrix(J, R));
}

// g = w·n(−X)·M_Y as a similitude with ν = w².
inline HSimilitude<double> levi_element(const FreudenthalSpace& W, const LeviPoint& p) {
  check_point(W.jordan(), p);
  return W.scalar<double>(p.w) * W.n<double>(-p.X) * levi_m(W, p.Y);
}

// p_ω(Z) = ⟨ω, r₀(Z)⟩
inline MachineComplex p_chi(const FreudenthalSpace& W, const RealW& omega, const ComplexJordan& Z) {
  return W.symplectic(complexify(omega), W.r0(Z));
}

// Z̃ = g·r₀(i) = w N(Y)^{−1/2} r₀(Z)
inline ComplexW z_tilde(const FreudenthalSpace& W, const LeviPoint& p) {
  check_point(W.jordan(), p);
  ComplexW v = W.r0(p.Z());
  v *= MachineComplex(p.w / std::sqrt(W.jordan().norm(p.Y)));
  return v;
}

inline MachineComplex omega_z_tilde(const FreudenthalSpace& W, const RealW& omega, const LeviPoint& p) {
  check_point(W.jordan(), p);
  return p.w / std::sqrt(W.jordan().norm(p.Y)) * p_chi(W, omega, p.Z());
}

// g·V(E) = (tr E/2) Z̃ + i·g·n(−i)(0,E,0,0)
//        = w N(Y)^{−1/2}((tr E/2) r₀(Z) + i(0, E_Y, −Z×E_Y, (Z#,E_Y))),  E_Y = U_{Y^{1/2}}E.
inline ComplexW mv_e(const FreudenthalSpace& W, const LeviPoint& p, const RealJordan& E) {
  check_point(W.jordan(), p);
  const auto& J = W.jordan();
  const ComplexJordan Z = p.Z();
  const ComplexJordan ey = vec_cast<MachineComplex>(J.U(jordan_sqrt(J, p.Y), E));
  ComplexW t{MachineComplex(0), ey, -J.cross(Z, ey), J.pair(J.sharp(Z), ey)};
  ComplexW v = W.r0(Z);
  v *= MachineComplex(0.5 * J.trace(E));
  v.axpy(MachineComplex(0, 1), t);
  v *= MachineComplex(p.w / std::sqrt(J.norm(p.Y)));
  return v;
}

// ---- the Whittaker function ----

// (|P|/P)^v K_v(|P|) times ν^n|ν|, the common shape of both formulas.
inline MachineComplex whittaker_shape(int n, int v, double nu, MachineComplex P) {
  if (P == 0.0) throw std::domain_error("whittaker: ⟨ω, Z̃⟩ = 0 at this point");
  const double u = std::abs(P);
  const MachineComplex phase = std::pow(u / P, v);
  return phase * std::pow(nu, n) * std::abs(nu) * bessel_k(v, u);
}

// Wh_v(w,Z) = w^{2n+2}(|⟨ω,Z̃⟩|/⟨ω,Z̃⟩)^v K_v(|⟨ω,Z̃⟩|) on the identity component.
// On H⁰·w₀ the value in slot v is (−1)ⁿ times the slot −v value at the same (w,X,Y).
inline MachineComplex whittaker_value(const FreudenthalSpace& W, int n, const RealW& omega, int v, const LeviPoint& p) {
  if (n < 0 || std::abs(v) > n) throw std::invalid_argument("whittaker_value: need |v| ≤ n");
  if (p.sign == ComponentSign::W0) {
    LeviPoint q = p;
    q.sign = ComponentSign::Plus;
    return (n % 2 ? -1.0 : 1.0) * whittaker_value(W, n, omega, -v, q);
  }
  return whittaker_shape(n, v, p.w * p.w, omega_z_tilde(W, omega, p));
}

// Slots v = −n..n at index v + n.
inline std::vector<MachineComplex> whittaker_vector(const FreudenthalSpace& W, int n, const RealW& omega,
                                                    const LeviPoint& p) {
  std::vector<MachineComplex> r(2 * n + 1);
  for (int v = -n; v <= n; ++v) r[v + n] = whittaker_value(W, n, omega, v, p);
  return r;
}

// The same value from a group element g with ν(g) > 0: g·r₀(i) = j(g,i) r₀(gi) and
// Wh_v(g) = (|j p_ω(gi)|/(j p_ω(gi)))^v ν(g)ⁿ|ν(g)| K_v(|j p_ω(gi)|).
inline MachineComplex whittaker_value_group(const FreudenthalSpace& W, int n, const RealW& omega, int v,
                                            const HSimilitude<double>& g) {
  if (!(g.nu > 0.0)) throw std::domain_error("whittaker_value_group: needs ν(g) > 0");
  ComplexJordan i1 = MachineComplex(0, 1) * W.jordan().one<MachineComplex>();
  auto [j, gz] = W.r0_and_action(g.cast<MachineComplex>(), i1);
  return whittaker_shape(n, v, g.nu, j * p_chi(W, omega, gz));
}

// ---- admissibility ----

enum class CharacterClass { Positive, Vanishing, DegenerateRank, Trivial };

inline const char* to_string(CharacterClass c) {
  switch (c) {
    case CharacterClass::Positive:
      return "positive";
    case CharacterClass::Vanishing:
      return "vanishing";
    case CharacterClass::DegenerateRank:
      return "degenerate-rank";
    case CharacterClass::Trivial:
      return "trivial";
  }
  return "?";
}

inline CharacterClass admissible(const FreudenthalSpace& W, const FreudenthalVector<Rational>& omega) {
  const int r = W.rank(omega);
  if (r == 0) return CharacterClass::Trivial;
  if (r < 4) return CharacterClass::DegenerateRank;
  return W.quartic(omega).sign() < 0 ? CharacterClass::Positive : CharacterClass::Vanishing;
}

// Machine reals are dyadic rationals, so the classification is exact.
inline FreudenthalVector<Rational> exact_vector(const RealW& v) {
  auto cv = [](const RealJordan& x) {
    JordanElement<Rational> r(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) r[k] = Rational::from_double(x[k]);
    return r;
  };
  return {Rational::from_double(v.a), cv(v.b), cv(v.c), Rational::from_double(v.d)};
}

inline CharacterClass admissible(const FreudenthalSpace& W, const RealW& omega) {
  return admissible(W, exact_vector(omega));
}

// A zero of p_ω on the line Z = z·1_J with Im z > 0, if p_ω has one there:
// p_ω(z·1) = −ω_a z³ − tr(ω_b) z² − tr(ω_c) z − ω_d.
inline std::optional<ComplexJordan> zero_witness(const FreudenthalSpace& W, const RealW& omega) {
  const auto& J = W.jordan();
  Eigen::Vector4d coef(-omega.d, -J.trace(omega.c), -J.trace(omega.b), -omega.a);
  int deg = 3;
  while (deg > 0 && coef[deg] == 0.0) --deg;
  if (deg == 0) return std::nullopt;
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
  solver.compute(Eigen::VectorXd(coef.head(deg + 1)));
  std::optional<ComplexJordan> best;
  for (Eigen::Index k = 0; k < solver.roots().size(); ++k) {
    const MachineComplex z = solver.roots()[k];
    if (z.imag() <= 1e-9 * (1.0 + std::abs(z))) continue;
    best = z * J.one<MachineComplex>();
    break;
  }
  return best;
}

// ---- sampling and positivity scans ----

// Y = U_a(1) + 0.1·1 with a uniform in [−1,1]ⁿ, X uniform in [−2,2]ⁿ, w uniform in [w_lo, w_hi].
inline LeviPoint sample_point(const CubicNormStructure& J, std::mt19937_64& rng, double w_lo = 1.0, double w_hi = 1.0) {
  std::uniform_real_distribution<double> ua(-1.0, 1.0), ux(-2.0, 2.0), uw(w_lo, w_hi);
  const std::size_t n = J.size();
  LeviPoint p;
  p.w = w_lo == w_hi ? w_lo : uw(rng);
  p.X = RealJordan(n);
  for (auto& x : p.X) x = ux(rng);
  do {
    RealJordan a(n);
    for (auto& x : a) x = ua(rng);
    p.Y = J.U(a, J.one<double>());
    p.Y.axpy(0.1, J.one<double>());
  } while (!J.positive_definite(p.Y));
  return p;
}

enum class ScanMode { Random, EtaDirected };

struct ScanResult {
  double min_statistic = INFINITY;
  ComplexJordan witness;
  // |N(Z+i)|/N(Y)^{1/2} − |N(Z−i)|/N(Y)^{1/2}, reported for multiples of (0,−1,0,1).
  std::optional<double> min_difference;
  std::size_t samples = 0;
};

inline bool is_tr_sharp_class(const CubicNormStructure& J, const RealW& omega) {
  if (omega.a != 0.0 || !omega.c.is_zero() || omega.d == 0.0) return false;
  return omega.b == (-omega.d) * J.one<double>();
}

// Minimum of |p_ω(Z)|/N(Y)^{1/2} = |⟨ω, g·r₀(i)⟩| over g = n(−X)M_Y.
// EtaDirected follows η(t)·Z₀ = t^{−2}Z₀ for t from 1 to t_max on a geometric grid.
inline ScanResult positivity_scan(const FreudenthalSpace& W, const RealW& omega, std::size_t samples,
                                  std::uint64_t seed, ScanMode mode = ScanMode::Random, double t_max = 1e3) {
  const auto& J = W.jordan();
  std::mt19937_64 rng(seed);
  ScanResult res;
  res.samples = samples;
  const bool diff = is_tr_sharp_class(J, omega);
  if (diff) res.min_difference = INFINITY;
  const ComplexJordan i1 = MachineComplex(0, 1) * J.one<MachineComplex>();
  LeviPoint p0 = sample_point(J, rng);
  for (std::size_t s = 0; s < samples; ++s) {
    LeviPoint p;
    if (mode == ScanMode::Random) {
      p = s == 0 ? p0 : sample_point(J, rng);
    } else {
      const double frac = samples > 1 ? double(s) / double(samples - 1) : 1.0;
      const double t = std::pow(t_max, frac);
      p = p0;
      p.X = (1.0 / (t * t)) * p0.X;
      p.Y = (1.0 / (t * t)) * p0.Y;
    }
    const ComplexJordan Z = p.Z();
    const double sq = std::sqrt(J.norm(p.Y));
    const double stat = std::abs(p_chi(W, omega, Z)) / sq;
    if (stat < res.min_statistic) {
      res.min_statistic = stat;
      res.witness = Z;
    }
    if (diff) {
      const double d = (std::abs(J.norm(ComplexJordan(Z + i1))) - std::abs(J.norm(ComplexJordan(Z - i1)))) / sq;
      res.min_difference = std::min(*res.min_difference, d);
    }
  }
  return res;
}

// ---- constant term ----

using HolomorphicFn = std::function<MachineComplex(const ComplexJordan&)>;

// ν(g)ⁿ|ν(g)|(Φ(g)[x^{2n}] + β[xⁿ][yⁿ] + Φ′(g)[y^{2n}]) with Φ(g) = j(g,i)^{−n}H(Z).
// Φ′(g) = Φ(g·w₀): g·w₀ carries i to Z̄ with j(g·w₀,i) = −j(g,i), and H is carried to the
// lower half-space by reflection, giving Φ′(g) = (−j)^{−n} conj(H(Z)).
inline std::vector<MachineComplex> constant_term_eval(const FreudenthalSpace& W, int n, const HolomorphicFn& H,
                                                      MachineComplex beta, const LeviPoint& p) {
  if (n < 1) throw std::invalid_argument("constant_term_eval: n ≥ 1");
  check_point(W.jordan(), p);
  const double j = p.w / std::sqrt(W.jordan().norm(p.Y));
  const double scale = std::pow(p.w, 2 * n + 2);
  std::vector<MachineComplex> r(2 * n + 1, 0.0);
  const MachineComplex h = H ? H(p.Z()) : MachineComplex(0.0);
  r[2 * n] = scale * std::pow(j, -n) * h;
  r[0] = scale * std::pow(-j, -n) * std::conj(h);
  r[n] += scale * beta;
  if (p.sign == ComponentSign::W0) {
    std::vector<MachineComplex> f(r.size());
    for (int v = -n; v <= n; ++v) f[v + n] = (n % 2 ? -1.0 : 1.0) * r[n - v];
    return f;
  }
  return r;
}

// ---- Fourier expansions ----

struct FourierTerm {
  RealW omega;
  MachineComplex coeff;
  bool override_admissible = false;
};

struct FourierDatum {
  int n = 1;
  std::vector<FourierTerm> terms;
  MachineComplex beta = 0.0;
  HolomorphicFn H;  // empty means no Φ part
  bool has_constant = false;
};

// F(exp(x)g) = constant term + Σ aᵢ e^{i⟨ωᵢ,x⟩} Wh^{ωᵢ}(g).
inline std::vector<MachineComplex> fourier_eval(const FreudenthalSpace& W, const FourierDatum& fd, const RealW& x,
                                                const LeviPoint& p) {
  std::vector<MachineComplex> r(2 * fd.n + 1, 0.0);
  if (fd.has_constant) r = constant_term_eval(W, fd.n, fd.H, fd.beta, p);
  for (const auto& t : fd.terms) {
    if (!t.override_admissible && admissible(W, t.omega) != CharacterClass::Positive)
      throw std::invalid_argument(std::string("fourier_eval: term is ") + to_string(admissible(W, t.omega)));
    const MachineComplex ph = t.coeff * std::exp(MachineComplex(0, W.symplectic(t.omega, x)));
    auto wv = whittaker_vector(W, fd.n, t.omega, p);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += ph * wv[k];
  }
  return r;
}

}  // namespace quatlie
