#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "foldmap/folding.hpp"

namespace foldmap {

using IMat2 = std::array<std::array<long, 2>, 2>;
using IVec2 = std::array<long, 2>;

inline IMat2 operator*(const IMat2& p, const IMat2& q) {
  IMat2 r{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r[i][j] = p[i][0] * q[0][j] + p[i][1] * q[1][j];
  }
  return r;
}

inline IVec2 operator*(const IMat2& p, const IVec2& v) {
  return {p[0][0] * v[0] + p[0][1] * v[1], p[1][0] * v[0] + p[1][1] * v[1]};
}

/**
 * Rank-two root system in weight coordinates: a weight is written in the
 * basis of fundamental weights, and a torus point t in the dual (coroot)
 * basis, so that the pairing is lambda(t) = lambda_0 t_0 + lambda_1 t_1.
 */
struct RootSystemData {
  Family family;
  IMat2 cartan;                                    // a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)
  std::array<std::array<double, 2>, 2> simple_roots;  // planar realization
  std::vector<IMat2> weyl;                         // group elements acting on weight coordinates
  std::array<std::vector<IVec2>, 2> orbits;        // W.w_1 and W.w_2
};

namespace detail {

inline IMat2 cartan_of(Family f) {
  switch (f) {
    case Family::A2: return {{{2, -1}, {-1, 2}}};
    case Family::B2: return {{{2, -1}, {-2, 2}}};
    case Family::G2: return {{{2, -1}, {-3, 2}}};
  }
  return {};
}

// Planar simple roots with |alpha_0| >= |alpha_1| at the angle forced by the Cartan matrix.
inline std::array<std::array<double, 2>, 2> realize(const IMat2& a) {
  const double prod = static_cast<double>(a[0][1] * a[1][0]);  // 4 cos^2(theta)
  const double ratio = static_cast<double>(a[1][0]) / static_cast<double>(a[0][1]);  // |alpha_0|^2 / |alpha_1|^2
  const double theta = std::acos(-std::sqrt(prod) / 2.0);
  const double r1 = 1.0 / std::sqrt(ratio);
  return {{{1.0, 0.0}, {r1 * std::cos(theta), r1 * std::sin(theta)}}};
}

inline double dot(const std::array<double, 2>& u, const std::array<double, 2>& v) { return u[0] * v[0] + u[1] * v[1]; }

}  // namespace detail

/// Cartan matrix recomputed from the planar realization (rounded).
inline IMat2 cartan_from_realization(const RootSystemData& r) {
  IMat2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double v = 2.0 * detail::dot(r.simple_roots[i], r.simple_roots[j]) /
                       detail::dot(r.simple_roots[i], r.simple_roots[i]);
      out[i][j] = std::lround(v);
    }
  }
  return out;
}

inline RootSystemData root_system(Family f) {
  RootSystemData r{f, detail::cartan_of(f), {}, {}, {}};
  r.simple_roots = detail::realize(r.cartan);
  // alpha_i = sum_j a_ji w_j, and s_i(lambda) = lambda - lambda_i alpha_i.
  std::array<IMat2, 2> gens{};
  for (int i = 0; i < 2; ++i) {
    IMat2 s{{{1, 0}, {0, 1}}};
    for (int j = 0; j < 2; ++j) s[j][i] -= r.cartan[j][i];
    gens[static_cast<std::size_t>(i)] = s;
  }
  std::set<IMat2> seen{{{{1, 0}, {0, 1}}}};
  std::vector<IMat2> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<IMat2> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        IMat2 h = s * g;
        if (seen.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  r.weyl.assign(seen.begin(), seen.end());
  for (int k = 0; k < 2; ++k) {
    IVec2 w{k == 0 ? 1L : 0L, k == 1 ? 1L : 0L};
    std::set<IVec2> orbit;
    for (const auto& g : r.weyl) orbit.insert(g * w);
    r.orbits[static_cast<std::size_t>(k)].assign(orbit.begin(), orbit.end());
  }
  return r;
}

inline std::size_t expected_weyl_order(Family f) { return f == Family::A2 ? 6 : f == Family::B2 ? 8 : 12; }

/// Closure of the stored elements under multiplication.
inline bool weyl_closed(const RootSystemData& r) {
  std::set<IMat2> s(r.weyl.begin(), r.weyl.end());
  for (const auto& g : r.weyl) {
    for (const auto& h : r.weyl) {
      if (!s.count(g * h)) return false;
    }
  }
  return true;
}

using TorusPoint = std::array<double, 2>;
using CPair = std::array<std::complex<double>, 2>;

/// Orbit exponential sums (phi_1, phi_2) at t, in the order of the fundamental weights.
inline CPair raw_phi(const RootSystemData& r, const TorusPoint& t) {
  CPair out{};
  for (std::size_t k = 0; k < 2; ++k) {
    for (const auto& mu : r.orbits[k]) {
      const double arg = 2.0 * std::numbers::pi * (static_cast<double>(mu[0]) * t[0] + static_cast<double>(mu[1]) * t[1]);
      out[k] += std::polar(1.0, arg);
    }
  }
  return out;
}

/// Dual action of a Weyl element on torus points: mu(g* t) = (g^-1 mu)(t).
inline TorusPoint dual_action(const IMat2& g, const TorusPoint& t) {
  // g has determinant +-1, so g^-1 = adj(g) / det(g); the dual map is its transpose.
  const long det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  const IMat2 inv{{{g[1][1] * det, -g[0][1] * det}, {-g[1][0] * det, g[0][0] * det}}};
  return {static_cast<double>(inv[0][0]) * t[0] + static_cast<double>(inv[1][0]) * t[1],
          static_cast<double>(inv[0][1]) * t[0] + static_cast<double>(inv[1][1]) * t[1]};
}

inline std::complex<double> eval_complex(const Poly& p, const CPair& v) {
  return p.evaluate(std::span<const std::complex<double>>(v));
}

struct Calibration {
  Family family;
  bool swapped = false;  // coordinates are (phi_2, phi_1) instead of (phi_1, phi_2)
  double residual = 0;   // max residual of F_2 at the chosen ordering
};

/// Phi in the coordinates of the folding maps.
inline CPair phi(const RootSystemData& r, const Calibration& cal, const TorusPoint& t) {
  CPair v = raw_phi(r, t);
  if (cal.swapped) std::swap(v[0], v[1]);
  return v;
}

inline double scaling_residual(const RootSystemData& r, bool swapped, const PolyMap2& fn, unsigned n,
                               const TorusPoint& t) {
  Calibration cal{r.family, swapped, 0};
  CPair at = phi(r, cal, t);
  CPair scaled = phi(r, cal, {static_cast<double>(n) * t[0], static_cast<double>(n) * t[1]});
  return std::max(std::abs(eval_complex(fn.first, at) - scaled[0]), std::abs(eval_complex(fn.second, at) - scaled[1]));
}

/// Chooses the coordinate ordering under which Phi(2t) = F_2(Phi(t)).
inline Calibration calibrate(const RootSystemData& r, std::uint64_t seed = 1, int points = 24, double tol = 1e-9) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<TorusPoint> pts;
  for (int k = 0; k < points; ++k) pts.push_back({u(rng), u(rng)});
  const PolyMap2 f2 = fold(r.family, 2);
  for (bool swapped : {false, true}) {
    double worst = 0;
    for (const auto& t : pts) worst = std::max(worst, scaling_residual(r, swapped, f2, 2, t));
    if (worst < tol) return {r.family, swapped, worst};
  }
  throw math_error("calibration failed for " + family_name(r.family) + ": no coordinate ordering matches F_2");
}

struct ScalingReport {
  Family family;
  unsigned n = 0;
  int trials = 0;
  double tol = 0;
  double max_residual = 0;
  TorusPoint worst_point{};

  bool pass() const { return max_residual < tol; }
};

/// max over seeded random torus points of |Phi(n t) - F_n(Phi(t))|.
inline ScalingReport check_scaling(Family f, unsigned n, int trials = 100, double tol = 1e-7, std::uint64_t seed = 1) {
  const RootSystemData r = root_system(f);
  const Calibration cal = calibrate(r, seed);
  const PolyMap2 fn = fold(f, n);
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (n + 1)));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ScalingReport rep{f, n, trials, tol, 0, {}};
  for (int k = 0; k < trials; ++k) {
    TorusPoint t{u(rng), u(rng)};
    double res = scaling_residual(r, cal.swapped, fn, n, t);
    if (res > rep.max_residual) {
      rep.max_residual = res;
      rep.worst_point = t;
    }
  }
  return rep;
}

/// Normalized Chebyshev polynomial in t: T_0 = 2, T_1 = t, T_{k+1} = t T_k - T_{k-1}.
inline Poly chebyshev(unsigned n, const VarList& vars = {"t"}, const std::string& var = "t") {
  Poly t = Poly::variable(vars, var);
  Poly prev = Poly::constant(vars, CycloElem(2L)), cur = t;
  if (n == 0) return prev;
  for (unsigned k = 1; k < n; ++k) {
    Poly next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

struct FunctionalReport {
  unsigned n = 0;
  bool pass = false;
  std::string witness;
};

/// F_n[B2](u + v, uv) = (T_n(u) + T_n(v), T_n(u) T_n(v)) as polynomials in u, v.
inline FunctionalReport verify_B_functional(unsigned n) {
  const VarList uv{"u", "v"};
  Poly u = Poly::variable(uv, "u"), v = Poly::variable(uv, "v");
  PolyMap2 b = fold(Family::B2, n);
  std::vector<Poly> images{u + v, u * v};
  Poly lhs1 = b.first.substitute(images), lhs2 = b.second.substitute(images);
  Poly tu = chebyshev(n, uv, "u"), tv = chebyshev(n, uv, "v");
  FunctionalReport r{n, true, ""};
  if (auto d = first_difference(lhs1, tu + tv)) {
    r.pass = false;
    r.witness = "first component, " + *d;
  } else if (auto d2 = first_difference(lhs2, tu * tv)) {
    r.pass = false;
    r.witness = "second component, " + *d2;
  }
  return r;
}

}  // namespace foldmap
