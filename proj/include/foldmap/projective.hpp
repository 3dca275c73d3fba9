#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "foldmap/folding.hpp"
#include "foldmap/upoly.hpp"

namespace foldmap {

inline const VarList& xyz_vars() {
  static const VarList v{"X", "Y", "Z"};
  return v;
}

/// A self-map of the projective plane: three forms of one common degree in X, Y, Z.
struct HomogMap3 {
  std::array<Poly, 3> comp;
  int d = 0;
  std::string label;

  int degree() const { return d; }
};

using ProjPoint = std::array<CycloElem, 3>;

inline std::string point_string(const ProjPoint& p) {
  return "[" + p[0].to_string() + ":" + p[1].to_string() + ":" + p[2].to_string() + "]";
}

/// Z^(d - deg p) times the homogenization of p, as a form of degree d.
inline Poly homogenize(const Poly& p, int d) {
  if (p.nvars() != 2) throw context_error("homogenize expects a polynomial in two variables");
  std::vector<Term> terms;
  for (const auto& [m, c] : p.terms()) {
    terms.emplace_back(Monomial{m[0], m[1], static_cast<unsigned>(d) - m.total_degree()}, c);
  }
  return Poly(std::make_shared<const VarList>(xyz_vars()), std::move(terms));
}

inline HomogMap3 homogenize_map(const PolyMap2& f) {
  if (f.model != Model::XY) throw context_error("homogenize_map expects an (x, y)-model map; convert with zw_to_xy");
  const int d = f.degree();
  if (d < 1) throw math_error("cannot homogenize a constant map");
  Poly zd = Poly::monomial(xyz_vars(), Monomial{0, 0, static_cast<unsigned>(d)}, CycloElem(1L));
  HomogMap3 h{{homogenize(f.first, d), homogenize(f.second, d), zd}, d, f.label};
  // A common monomial factor would have to be a power of Z, which is impossible at d = max degree.
  return h;
}

/// Homogenization of F_n, passing through real coordinates for A2.
inline HomogMap3 homogenize_fold(Family f, unsigned n) {
  PolyMap2 m = fold(f, n);
  return homogenize_map(f == Family::A2 ? zw_to_xy(m) : m);
}

struct IndeterminacyReport {
  std::vector<ProjPoint> points;
  std::optional<Poly> unresolved_factor;  // binary form in X, Y with no monomial factor

  int unresolved_degree() const { return unresolved_factor ? unresolved_factor->total_degree() : 0; }
  bool empty() const { return points.empty() && !unresolved_factor; }
};

namespace detail {

// Restriction of a form in X, Y, Z to the line Z = 0.
inline Poly at_infinity(const Poly& p) {
  std::vector<Term> terms;
  for (const auto& [m, c] : p.terms()) {
    if (m[2] == 0) terms.emplace_back(m, c);
  }
  return Poly(p.vars_ptr(), std::move(terms));
}

inline std::array<unsigned, 2> monomial_content(const Poly& p) {
  std::array<unsigned, 2> low{~0U, ~0U};
  for (const auto& [m, c] : p.terms()) {
    low[0] = std::min(low[0], m[0]);
    low[1] = std::min(low[1], m[1]);
  }
  return low;
}

// Dehomogenize at Y = 1 after removing monomial content: a polynomial in X.
inline UPoly dehomogenized_core(const Poly& p, const std::array<unsigned, 2>& low) {
  std::vector<CycloElem> c;
  for (const auto& [m, coef] : p.terms()) {
    const unsigned e = m[0] - low[0];
    if (c.size() <= e) c.resize(e + 1);
    c[e] += coef;
  }
  return UPoly(std::move(c));
}

}  // namespace detail

/**
 * Base points of a homogenized affine map. Every base point lies on Z = 0,
 * so the locus is the common zero set of two binary forms, read off from
 * their gcd.
 */
inline IndeterminacyReport indeterminacy(const HomogMap3& h) {
  Poly zd = Poly::monomial(xyz_vars(), Monomial{0, 0, static_cast<unsigned>(h.d)}, CycloElem(1L));
  if (h.comp[2] != zd) throw math_error("indeterminacy expects a third component equal to Z^d");
  std::vector<Poly> forms;
  for (std::size_t k = 0; k < 2; ++k) {
    Poly r = detail::at_infinity(h.comp[k]);
    if (!r.is_zero()) forms.push_back(std::move(r));
  }
  IndeterminacyReport out;
  if (forms.empty()) {
    // Both components vanish on the whole line at infinity.
    out.unresolved_factor = Poly::variable(xyz_vars(), "Z");
    return out;
  }
  std::array<unsigned, 2> low{~0U, ~0U};
  std::optional<UPoly> core;
  for (const auto& p : forms) {
    auto l = detail::monomial_content(p);
    low[0] = std::min(low[0], l[0]);
    low[1] = std::min(low[1], l[1]);
    UPoly u = detail::dehomogenized_core(p, l);
    core = core ? gcd(*core, u) : u.monic();
  }
  if (low[0] > 0) out.points.push_back({CycloElem(0L), CycloElem(1L), CycloElem(0L)});
  if (low[1] > 0) out.points.push_back({CycloElem(1L), CycloElem(0L), CycloElem(0L)});
  if (core->degree() > 0) {
    std::vector<Term> terms;
    const unsigned deg = static_cast<unsigned>(core->degree());
    for (unsigned e = 0; e <= deg; ++e) {
      if (!core->coeffs()[e].is_zero()) terms.emplace_back(Monomial{e, deg - e, 0}, core->coeffs()[e]);
    }
    out.unresolved_factor = Poly(std::make_shared<const VarList>(xyz_vars()), std::move(terms));
  }
  return out;
}

inline bool is_morphism(const HomogMap3& h) { return indeterminacy(h).empty(); }

/// True iff all three components vanish at p.
inline bool vanishes_at(const HomogMap3& h, const ProjPoint& p) {
  return std::all_of(h.comp.begin(), h.comp.end(),
                     [&](const Poly& c) { return c.evaluate(std::span<const CycloElem>(p)).is_zero(); });
}

inline constexpr unsigned kMaxGrowthIndex = 100;

/// Degree of the homogenized m-fold composite of F_n.
inline int degree_growth(Family f, unsigned n, unsigned m) {
  if (m == 0) throw std::invalid_argument("degree_growth needs m >= 1");
  unsigned long nm = 1;
  for (unsigned k = 0; k < m; ++k) {
    nm *= n;
    if (nm > kMaxGrowthIndex) throw std::invalid_argument("n^m exceeds the supported bound " + std::to_string(kMaxGrowthIndex));
  }
  PolyMap2 base = fold(f, n);
  PolyMap2 it = base;
  for (unsigned k = 1; k < m; ++k) it = compose(it, base);
  return homogenize_map(f == Family::A2 ? zw_to_xy(it) : it).degree();
}

/// Degree stated for the homogenized F_n.
inline int expected_degree(Family f, unsigned n) { return f == Family::G2 ? static_cast<int>(3 * n / 2) : static_cast<int>(n); }

}  // namespace foldmap
