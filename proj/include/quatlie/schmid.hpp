#pragma once
// The Schmid operator system on H_J(R) in the Levi chart (w, X, Y):
// the symbolic coefficient table of the operator, its character and constant-term
// specializations, and numeric residuals for component bundles φ_{−n}, …, φ_n.

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "quatlie/scalars.hpp"
#include "quatlie/whittaker.hpp"

namespace quatlie {

// φ_v at index v + n.
struct ComponentBundle {
  int n = 1;
  std::function<std::vector<MachineComplex>(const LeviPoint&)> eval;
};

using PointFn = std::function<MachineComplex(const LeviPoint&)>;

inline ComponentBundle whittaker_bundle(const FreudenthalSpace& W, int n, const RealW& omega) {
  return {n, [&W, n, omega](const LeviPoint& p) { return whittaker_vector(W, n, omega, p); }};
}

// ---- finite differences ----

namespace detail {

// d/dt F(t) at 0 for vector-valued F: 5-point central stencil at h and h/2, one Richardson level.
template <class F>
std::vector<MachineComplex> derivative(F f, double h) {
  auto stencil = [&](double s) {
    auto a = f(-2 * s), b = f(-s), c = f(s), d = f(2 * s);
    std::vector<MachineComplex> r(a.size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = (8.0 * (c[k] - b[k]) - (d[k] - a[k])) / (12.0 * s);
    return r;
  };
  auto d1 = stencil(h), d2 = stencil(h / 2);
  for (std::size_t k = 0; k < d1.size(); ++k) d1[k] = (16.0 * d2[k] - d1[k]) / 15.0;
  return d1;
}

inline double sup_norm(const RealJordan& x) {
  double m = 0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace detail

// D_{Z(E)}F = ∂_Y F[E_Y] + i ∂_X F[E_Y];  D_{Z*(E)}F = ∂_Y F[E_Y] − i ∂_X F[E_Y];  E_Y = U_{Y^{1/2}}E.
// rate is the decay rate of F (|⟨ω,Z̃⟩| for a Whittaker vector); the step shrinks with it.
template <class F>
std::vector<MachineComplex> dz_derivative_vec(const CubicNormStructure& J, const RealJordan& E, F f,
                                              const LeviPoint& p, bool starred, double rate = 0.0) {
  check_point(J, p);
  const RealJordan ey = J.U(jordan_sqrt(J, p.Y), E);
  const double en = detail::sup_norm(ey);
  if (en == 0.0) return std::vector<MachineComplex>(f(p).size(), 0.0);
  const double h = 1e-4 * (1.0 + detail::sup_norm(p.Y)) / en / (1.0 + 0.01 * rate);
  auto dy = detail::derivative(
      [&](double t) {
        LeviPoint q = p;
        q.Y.axpy(t, ey);
        return f(q);
      },
      h);
  auto dx = detail::derivative(
      [&](double t) {
        LeviPoint q = p;
        q.X.axpy(t, ey);
        return f(q);
      },
      h);
  const MachineComplex i(0, starred ? -1 : 1);
  for (std::size_t k = 0; k < dy.size(); ++k) dy[k] += i * dx[k];
  return dy;
}

inline MachineComplex dz_derivative(const CubicNormStructure& J, const RealJordan& E, const PointFn& f,
                                    const LeviPoint& p, bool starred) {
  auto g = [&](const LeviPoint& q) { return std::vector<MachineComplex>{f(q)}; };
  return dz_derivative_vec(J, E, g, p, starred)[0];
}

// w∂_w F
template <class F>
std::vector<MachineComplex> euler_derivative(F f, const LeviPoint& p, double rate = 0.0) {
  auto d = detail::derivative(
      [&](double t) {
        LeviPoint q = p;
        q.w += t;
        return f(q);
      },
      1e-4 * (1.0 + p.w) / (1.0 + 0.01 * rate));
  for (auto& x : d) x *= p.w;
  return d;
}

// ---- character residuals ----

enum class SchmidFamily { EulerStar = 1, Euler = 2, DZ = 3, DZStar = 4 };

struct Residual {
  SchmidFamily family;
  int k;
  int e_index;  // −1 for the w∂_w families
  double abs;
  double scale;  // Σ|terms| + |φ_k|

  double relative() const { return scale > 0 ? abs / scale : abs; }
};

inline double max_relative(const std::vector<Residual>& rs) {
  double m = 0;
  for (const auto& r : rs) m = std::max(m, r.relative());
  return m;
}

inline std::vector<RealJordan> coordinate_basis(const CubicNormStructure& J) {
  std::vector<RealJordan> b;
  for (std::size_t k = 0; k < J.size(); ++k) b.push_back(unit_vec<double>(J.size(), k));
  return b;
}

// For each k and each E:
//   (1) (w∂_w − 2(n+1) + k)φ_k + ⟨ω,Z̃*⟩φ_{k−1} = 0            k > −n
//   (2) (w∂_w − 2(n+1) − k)φ_k + ⟨ω,Z̃⟩φ_{k+1} = 0             k < n
//   (3) (D_{Z(E)} + (k/2)tr E)φ_k − ⟨ω,MV(E)⟩φ_{k+1} = 0      k < n
//   (4) (D_{Z*(E)} − (k/2)tr E)φ_k − ⟨ω,MV(E)*⟩φ_{k−1} = 0    k > −n
// Each residual is reported against Σ|terms| + |φ_k|, so an equation whose terms all vanish
// analytically (tr E = 0 on a holomorphic slot) measures the difference noise against φ_k.
inline std::vector<Residual> char_residuals(const FreudenthalSpace& W, int n, const RealW& omega,
                                            const ComponentBundle& B, const LeviPoint& p,
                                            const std::vector<RealJordan>& E_basis) {
  const auto& J = W.jordan();
  check_point(J, p);
  if (p.sign != ComponentSign::Plus) throw std::invalid_argument("char_residuals: identity component only");
  if (B.n != n) throw std::invalid_argument("char_residuals: bundle weight mismatch");
  const auto phi = B.eval(p);
  const MachineComplex zt = omega_z_tilde(W, omega, p);
  const auto ephi = euler_derivative(B.eval, p, std::abs(zt));
  const MachineComplex zts = std::conj(zt);
  const double c = 2.0 * (n + 1);
  auto at = [&](const std::vector<MachineComplex>& v, int k) { return v[k + n]; };
  std::vector<Residual> out;
  for (int k = -n; k <= n; ++k) {
    if (k > -n) {
      MachineComplex t1 = at(ephi, k), t2 = (k - c) * at(phi, k), t3 = zts * at(phi, k - 1);
      out.push_back({SchmidFamily::EulerStar, k, -1, std::abs(t1 + t2 + t3),
                     std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(at(phi, k))});
    }
    if (k < n) {
      MachineComplex t1 = at(ephi, k), t2 = (-k - c) * at(phi, k), t3 = zt * at(phi, k + 1);
      out.push_back({SchmidFamily::Euler, k, -1, std::abs(t1 + t2 + t3),
                     std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(at(phi, k))});
    }
  }
  const ComplexW om = complexify(omega);
  for (std::size_t e = 0; e < E_basis.size(); ++e) {
    const RealJordan& E = E_basis[e];
    const double tr = J.trace(E);
    const MachineComplex mv = W.symplectic(om, mv_e(W, p, E));
    const auto dz = dz_derivative_vec(J, E, B.eval, p, false, std::abs(zt));
    const auto dzs = dz_derivative_vec(J, E, B.eval, p, true, std::abs(zt));
    for (int k = -n; k <= n; ++k) {
      if (k < n) {
        MachineComplex t1 = at(dz, k), t2 = 0.5 * k * tr * at(phi, k), t3 = -mv * at(phi, k + 1);
        out.push_back({SchmidFamily::DZ, k, int(e), std::abs(t1 + t2 + t3),
                       std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(at(phi, k))});
      }
      if (k > -n) {
        MachineComplex t1 = at(dzs, k), t2 = -0.5 * k * tr * at(phi, k), t3 = -std::conj(mv) * at(phi, k - 1);
        out.push_back({SchmidFamily::DZStar, k, int(e), std::abs(t1 + t2 + t3),
                       std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(at(phi, k))});
      }
    }
  }
  return out;
}

// ---- constant term ----

// The ω = 0 system, plus the vanishing φ_k = 0 for 0 < |k| < n that it forces.
inline std::vector<Residual> const_term_residuals(const FreudenthalSpace& W, int n, const ComponentBundle& B,
                                                  const LeviPoint& p, const std::vector<RealJordan>& E_basis) {
  RealW zero{0.0, RealJordan(W.jdim()), RealJordan(W.jdim()), 0.0};
  auto out = char_residuals(W, n, zero, B, p, E_basis);
  const auto phi = B.eval(p);
  double big = 0;
  for (const auto& x : phi) big = std::max(big, std::abs(x));
  for (int k = -n + 1; k < n; ++k) {
    if (k == 0) continue;
    out.push_back({SchmidFamily::Euler, k, -2, std::abs(phi[k + n]), big});
  }
  return out;
}

inline ComponentBundle constant_term_bundle(const FreudenthalSpace& W, int n, HolomorphicFn H, MachineComplex beta) {
  return {n, [&W, n, H, beta](const LeviPoint& p) { return constant_term_eval(W, n, H, beta, p); }};
}

// ---- the symbolic operator table ----

// Operators acting on a single component F_{v+shift}:
//   Euler = ε = w∂_w, One = identity, Heis = ∂_Heis = w²∂_μ, DW = ∂^W_{vec} = ½⟨x, M·vec⟩∂_μ + D^x_{M·vec},
//   DZ / DZStar = D_{Z(E)} / D_{Z*(E)}, TrE = multiplication by tr(E).
enum class SchmidOp { Euler, One, Heis, DW, DZ, DZStar, TrE };
enum class WVector { None, R0MinusI, R0I, VE, VEStar };

struct SchmidTerm {
  CayleyScalar coeff;
  SchmidOp op;
  WVector vec;
  int shift;

  friend bool operator==(const SchmidTerm&, const SchmidTerm&) = default;
};

struct SchmidRow {
  int family;  // 1..4
  int v;
  std::string slot;  // basis vector of Sym^{2n}(V₂) ⊠ W the row is the coefficient of
  std::vector<SchmidTerm> terms;
};

inline std::string to_string(SchmidOp op) {
  switch (op) {
    case SchmidOp::Euler:
      return "ε";
    case SchmidOp::One:
      return "1";
    case SchmidOp::Heis:
      return "∂_Heis";
    case SchmidOp::DW:
      return "∂^W";
    case SchmidOp::DZ:
      return "D_{Z(E)}";
    case SchmidOp::DZStar:
      return "D_{Z*(E)}";
    case SchmidOp::TrE:
      return "tr(E)";
  }
  return "?";
}

inline std::string to_string(WVector w) {
  switch (w) {
    case WVector::None:
      return "";
    case WVector::R0MinusI:
      return "r₀(−i)";
    case WVector::R0I:
      return "r₀(i)";
    case WVector::VE:
      return "V(E)";
    case WVector::VEStar:
      return "V(E)*";
  }
  return "?";
}

inline std::string to_string(const SchmidRow& row) {
  std::string s = "(" + std::to_string(row.family) + ") v=" + std::to_string(row.v) + " " + row.slot + ":";
  for (const auto& t : row.terms) {
    s += " + (" + t.coeff.str() + ")" + to_string(t.op);
    if (t.vec != WVector::None) s += "_{" + to_string(t.vec) + "}";
    s += "F_{v" + (t.shift == 0 ? std::string() : (t.shift > 0 ? "+1" : "-1")) + "}";
  }
  return s;
}

// Rows of the Schmid operator D_n F, up to one overall constant, for F = Σ F_v [x^{n+v}][y^{n−v}]:
//   (1) [x^{n+v−1}][y^{n−v}] ⊠ (0,0,0,1):  −½(ε − 2(n+1) + v)F_v + (i/2)∂^W_{r₀(−i)}F_{v−1} + i∂_Heis F_v
//   (2) [x^{n+v}][y^{n−v−1}] ⊠ (0,0,0,1):   ½(ε − 2(n+1) − v)F_v − (i/2)∂^W_{r₀(i)}F_{v+1} − i∂_Heis F_v
//   (3) [x^{n+v}][y^{n−v−1}] ⊠ E_α:        −(D_{Z(E)} + (v/2)tr E)F_v − i∂^W_{V(E)}F_{v+1}
//   (4) [x^{n+v−1}][y^{n−v}] ⊠ E_α:         (D_{Z*(E)} − (v/2)tr E)F_v + i∂^W_{V(E)*}F_{v−1}
inline std::vector<SchmidRow> schmid_coefficient_table(int n) {
  if (n < 1) throw std::invalid_argument("schmid_coefficient_table: n ≥ 1");
  using CS = CayleyScalar;
  const CS i = CS::i(), half{Rational(1, 2)};
  const auto xy = [](int a, int b) { return "[x^" + std::to_string(a) + "][y^" + std::to_string(b) + "]"; };
  std::vector<SchmidRow> rows;
  for (int v = -n; v <= n; ++v) {
    const CS c{Rational(-2 * (n + 1))};
    const CS vv{Rational(v)};
    if (v > -n) {
      rows.push_back({1, v, xy(n + v - 1, n - v) + "⊠(0,0,0,1)",
                      {{-half, SchmidOp::Euler, WVector::None, 0},
                       {-half * (c + vv), SchmidOp::One, WVector::None, 0},
                       {half * i, SchmidOp::DW, WVector::R0MinusI, -1},
                       {i, SchmidOp::Heis, WVector::None, 0}}});
      rows.push_back({4, v, xy(n + v - 1, n - v) + "⊠E_α",
                      {{CS(1), SchmidOp::DZStar, WVector::None, 0},
                       {-half * vv, SchmidOp::TrE, WVector::None, 0},
                       {i, SchmidOp::DW, WVector::VEStar, -1}}});
    }
    if (v < n) {
      rows.push_back({2, v, xy(n + v, n - v - 1) + "⊠(0,0,0,1)",
                      {{half, SchmidOp::Euler, WVector::None, 0},
                       {half * (c - vv), SchmidOp::One, WVector::None, 0},
                       {-half * i, SchmidOp::DW, WVector::R0I, 1},
                       {-i, SchmidOp::Heis, WVector::None, 0}}});
      rows.push_back({3, v, xy(n + v, n - v - 1) + "⊠E_α",
                      {{CS(-1), SchmidOp::DZ, WVector::None, 0},
                       {-half * vv, SchmidOp::TrE, WVector::None, 0},
                       {-i, SchmidOp::DW, WVector::VE, 1}}});
    }
  }
  return rows;
}

// A row after the character substitution ∂_μ = 0, D^x_{M·vec} = i⟨ω, M·vec⟩.
// Pairing terms are recorded as coefficient·⟨ω, M·vec⟩F_{v+shift}; M·r₀(i) = Z̃, M·r₀(−i) = Z̃*.
struct CharacterRow {
  int family;
  int v;
  std::vector<SchmidTerm> terms;  // DW entries now mean the pairing ⟨ω, M·vec⟩
};

inline CharacterRow character_specialize(const SchmidRow& row) {
  CharacterRow out{row.family, row.v, {}};
  for (const auto& t : row.terms) {
    if (t.op == SchmidOp::Heis) continue;
    if (t.op == SchmidOp::DW) {
      out.terms.push_back({t.coeff * CayleyScalar::i(), SchmidOp::DW, t.vec, t.shift});
    } else {
      out.terms.push_back(t);
    }
  }
  return out;
}

}  // namespace quatlie
