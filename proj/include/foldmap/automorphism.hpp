#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <span>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foldmap/folding.hpp"
#include "foldmap/upoly.hpp"

namespace foldmap {

/**
 * Affine map (u, v) -> (a u + b v + c, d u + e v + f) in either coordinate
 * model. In the (z, w) model the six entries are independent, so the map
 * z -> alpha z + beta conj(z) + gamma is (alpha, beta, gamma, conj(beta),
 * conj(alpha), conj(gamma)).
 */
struct AffineMap2 {
  std::array<CycloElem, 6> coef;
  Model model = Model::XY;

  static AffineMap2 identity(Model m) { return {{1L, 0L, 0L, 0L, 1L, 0L}, m}; }

  const CycloElem& a() const { return coef[0]; }
  const CycloElem& b() const { return coef[1]; }
  const CycloElem& c() const { return coef[2]; }
  const CycloElem& d() const { return coef[3]; }
  const CycloElem& e() const { return coef[4]; }
  const CycloElem& f() const { return coef[5]; }

  CycloElem det() const { return a() * e() - b() * d(); }
  bool invertible() const { return !det().is_zero(); }

  PolyMap2 as_map() const {
    const auto& v = model_vars(model);
    Poly u = Poly::variable(v, v[0]), w = Poly::variable(v, v[1]);
    Poly one = Poly::constant(v, CycloElem(1L));
    return {u * a() + w * b() + one * c(), u * d() + w * e() + one * f(), model, to_string()};
  }

  /// Inverse map; throws math_error when the linear part is singular.
  AffineMap2 inverse() const {
    CycloElem inv = det().inverse();
    CycloElem na = e() * inv, nb = -b() * inv, nd = -d() * inv, ne = a() * inv;
    return {{na, nb, -(na * c() + nb * f()), nd, ne, -(nd * c() + ne * f())}, model};
  }

  friend bool operator==(const AffineMap2& p, const AffineMap2& q) {
    return p.model == q.model && p.coef == q.coef;
  }

  std::string to_string() const {
    const auto& v = model_vars(model);
    auto lin = [&](const CycloElem& p, const CycloElem& q, const CycloElem& r) {
      Poly u = Poly::variable(v, v[0]), w = Poly::variable(v, v[1]);
      Poly one = Poly::constant(v, CycloElem(1L));
      return (u * p + w * q + one * r).to_string();
    };
    return "(" + v[0] + ", " + v[1] + ") -> (" + lin(a(), b(), c()) + ", " + lin(d(), e(), f()) + ")";
  }
};

/// p o q
inline AffineMap2 compose(const AffineMap2& p, const AffineMap2& q) {
  if (p.model != q.model) throw context_error("cannot compose affine maps from different models");
  return {{p.a() * q.a() + p.b() * q.d(), p.a() * q.b() + p.b() * q.e(), p.a() * q.c() + p.b() * q.f() + p.c(),
           p.d() * q.a() + p.e() * q.d(), p.d() * q.b() + p.e() * q.e(), p.d() * q.c() + p.e() * q.f() + p.f()},
          p.model};
}

inline bool canonical_less(const AffineMap2& p, const AffineMap2& q) {
  for (std::size_t k = 0; k < 6; ++k) {
    if (canonical_less(p.coef[k], q.coef[k])) return true;
    if (canonical_less(q.coef[k], p.coef[k])) return false;
  }
  return false;
}

/// phi o F == F o phi, for invertible phi.
inline bool is_member(const AffineMap2& phi, const PolyMap2& f) {
  if (!phi.invertible()) throw math_error("automorphism candidate is not invertible");
  if (phi.model != f.model) throw context_error("automorphism and map use different coordinate models");
  PolyMap2 p = phi.as_map();
  return compose(p, f) == compose(f, p);
}

/// A finite set of affine maps with its composition table.
struct SolutionSet {
  std::vector<AffineMap2> elements;  // canonical order
  std::vector<std::vector<int>> table;  // table[i][j] = index of elements[i] o elements[j], -1 if absent
  bool closed = false;  // under composition and inversion, and contains the identity
  std::string label;    // "trivial", "mu2", "S3", or "order-k"

  std::size_t order() const { return elements.size(); }
};

inline SolutionSet make_solution_set(std::vector<AffineMap2> maps) {
  std::sort(maps.begin(), maps.end(), [](const auto& p, const auto& q) { return canonical_less(p, q); });
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  SolutionSet s;
  s.elements = std::move(maps);
  const std::size_t n = s.elements.size();
  auto index_of = [&](const AffineMap2& m) -> int {
    auto it = std::find(s.elements.begin(), s.elements.end(), m);
    return it == s.elements.end() ? -1 : static_cast<int>(it - s.elements.begin());
  };
  s.closed = n > 0;
  s.table.assign(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      s.table[i][j] = index_of(compose(s.elements[i], s.elements[j]));
      if (s.table[i][j] < 0) s.closed = false;
    }
    if (!s.elements[i].invertible() || index_of(s.elements[i].inverse()) < 0) s.closed = false;
  }
  if (n > 0 && index_of(AffineMap2::identity(s.elements.front().model)) < 0) s.closed = false;
  bool abelian = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) abelian = abelian && s.table[i][j] == s.table[j][i];
  }
  if (!s.closed) {
    s.label = "not-a-group";
  } else if (n == 1) {
    s.label = "trivial";
  } else if (n == 2) {
    s.label = "mu2";
  } else if (n == 6 && !abelian) {
    s.label = "S3";
  } else {
    s.label = "order-" + std::to_string(n);
  }
  return s;
}

/// Group label expected from the automorphism theorems (B2 clause read as odd/even).
inline std::string expected_group_label(Family f, unsigned n) {
  switch (f) {
    case Family::A2: return n % 3 == 1 ? "S3" : "mu2";
    case Family::B2: return n % 2 == 1 ? "mu2" : "trivial";
    case Family::G2: return "trivial";
  }
  return "";
}

/// The automorphism group stated for F_n, as explicit maps.
inline SolutionSet claimed_group(Family f, unsigned n) {
  if (n < 2) throw std::invalid_argument("claimed automorphism groups are stated for n >= 2");
  std::vector<AffineMap2> maps{AffineMap2::identity(family_model(f))};
  switch (f) {
    case Family::A2: {
      // z -> zeta z and z -> zeta conj(z) for cube roots zeta; only zeta = 1 unless n = 1 mod 3.
      const long steps = n % 3 == 1 ? 3 : 1;
      for (long k = 0; k < steps; ++k) {
        CycloElem r = CycloElem::zeta_pow(4 * k), rbar = r.conj();
        maps.push_back({{r, 0L, 0L, 0L, rbar, 0L}, Model::ZW});
        maps.push_back({{0L, r, 0L, rbar, 0L, 0L}, Model::ZW});
      }
      break;
    }
    case Family::B2:
      if (n % 2 == 1) maps.push_back({{-1L, 0L, 0L, 0L, 1L, 0L}, Model::XY});
      break;
    case Family::G2:
      break;
  }
  return make_solution_set(std::move(maps));
}

/// Vertices 1, omega, omega^2 of the unit triangle as exact (x, y) points.
inline std::array<std::array<CycloElem, 2>, 3> unit_triangle() {
  const CycloElem sqrt3 = CycloElem::zeta() * CycloElem(2L) - CycloElem::i();
  const CycloElem half(Rational(-1, 2));
  return {{{CycloElem(1L), CycloElem(0L)}, {half, sqrt3 * CycloElem(Rational(1, 2))}, {half, sqrt3 * half}}};
}

/// For a (z, w)-model map: does its real (x, y) form permute the unit triangle?
inline bool permutes_unit_triangle(const AffineMap2& phi) {
  if (phi.model != Model::ZW) throw context_error("triangle check expects a (z, w)-model map");
  PolyMap2 real = zw_to_xy(phi.as_map());
  const auto tri = unit_triangle();
  std::array<bool, 3> hit{};
  for (const auto& p : tri) {
    std::array<CycloElem, 2> img{real.first.evaluate(std::span<const CycloElem>(p)),
                                 real.second.evaluate(std::span<const CycloElem>(p))};
    auto it = std::find(tri.begin(), tri.end(), img);
    if (it == tri.end()) return false;
    hit[static_cast<std::size_t>(it - tri.begin())] = true;
  }
  return hit[0] && hit[1] && hit[2];
}

// ---------------------------------------------------------------------------
// Elimination engine
// ---------------------------------------------------------------------------

struct SolveOptions {
  unsigned max_depth = 32;
};

struct SolveResult {
  Family family;
  unsigned n = 0;
  SolutionSet solutions;
  std::vector<std::string> unresolved;  // residual state of every stalled branch
  std::size_t branches = 0;             // branches opened, including dead ones
  std::size_t constraints = 0;          // initial coefficient constraints

  bool complete() const { return unresolved.empty(); }
};

namespace detail {

inline const VarList& unknown_vars() {
  static const VarList v{"a", "b", "c", "d", "e", "f"};
  return v;
}
inline constexpr std::size_t kUnknowns = 6;

struct Constraint {
  Poly p;
  int rank = 0;  // position in the family priority list; larger = later
  std::string origin;
};

/**
 * One branch of the case split: remaining constraint polynomials in the six
 * unknowns, the substitutions made so far, and root-of-unity records
 * (order[v] = k > 0 means v^k = 1 has been derived).
 */
struct ConstraintState {
  std::vector<Constraint> constraints;
  std::array<std::optional<Poly>, kUnknowns> value;
  std::array<long, kUnknowns> order{};
  unsigned depth = 0;
  std::string trail;

  bool is_unit(std::size_t v) const { return order[v] > 0 && !value[v]; }
};

inline std::size_t variables_used(const Poly& p, std::array<bool, kUnknowns>& used) {
  used.fill(false);
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t k = 0; k < kUnknowns; ++k) used[k] = used[k] || m[k] != 0;
  }
  return static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
}

// Reduces exponents of recorded units modulo their order and removes unit
// monomial content; both are exact consequences of v^k = 1.
inline Poly reduce(const Poly& p, const ConstraintState& st) {
  bool any_unit = false;
  for (std::size_t v = 0; v < kUnknowns; ++v) any_unit = any_unit || st.is_unit(v);
  if (!any_unit || p.is_zero()) return p;
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Monomial r = m;
    for (std::size_t v = 0; v < kUnknowns; ++v) {
      if (st.is_unit(v)) r.set(v, static_cast<unsigned>(m[v] % st.order[v]));
    }
    terms.emplace_back(r, c);
  }
  Poly out(p.vars_ptr(), std::move(terms));
  if (out.is_zero()) return out;
  std::array<unsigned, kUnknowns> low;
  low.fill(~0U);
  for (const auto& [m, c] : out.terms()) {
    for (std::size_t v = 0; v < kUnknowns; ++v) low[v] = std::min(low[v], m[v]);
  }
  bool strip = false;
  for (std::size_t v = 0; v < kUnknowns; ++v) strip = strip || (st.is_unit(v) && low[v] > 0);
  if (!strip) return out;
  terms.clear();
  for (const auto& [m, c] : out.terms()) {
    Monomial r = m;
    for (std::size_t v = 0; v < kUnknowns; ++v) {
      if (st.is_unit(v)) r.set(v, m[v] - low[v]);
    }
    terms.emplace_back(r, c);
  }
  return Poly(out.vars_ptr(), std::move(terms));
}

// p with unknown v replaced by expr (expr free of v).
inline Poly substitute_unknown(const Poly& p, std::size_t v, const Poly& expr) {
  if (p.degree_in(v) <= 0) return p;
  std::vector<Poly> images;
  images.reserve(kUnknowns);
  for (std::size_t k = 0; k < kUnknowns; ++k) {
    images.push_back(k == v ? expr : Poly::variable(unknown_vars(), unknown_vars()[k]));
  }
  return p.substitute(images);
}

class Engine {
public:
  Engine(const PolyMap2& f, std::vector<std::pair<int, Monomial>> first_priority,
         std::vector<std::pair<int, Monomial>> second_priority, SolveOptions opts)
      : model_(f.model), opts_(opts) {
    build_constraints(f, first_priority, second_priority);
  }

  SolveResult run(Family fam, unsigned n) {
    SolveResult r{fam, n, {}, {}, 0, root_.constraints.size()};
    explore(root_, r);
    r.solutions = make_solution_set(std::move(found_));
    return r;
  }

private:
  void build_constraints(const PolyMap2& f, const std::vector<std::pair<int, Monomial>>& p1,
                         const std::vector<std::pair<int, Monomial>>& p2) {
    const auto& mv = model_vars(model_);
    VarList ring{mv[0], mv[1]};
    for (const auto& u : unknown_vars()) ring.push_back(u);
    auto var = [&](const std::string& s) { return Poly::variable(ring, s); };
    Poly one = Poly::constant(ring, CycloElem(1L));
    Poly u = var(mv[0]), w = var(mv[1]);
    Poly phi1 = var("a") * u + var("b") * w + var("c");
    Poly phi2 = var("d") * u + var("e") * w + var("f");
    Poly f1 = f.first.in_context(ring), f2 = f.second.in_context(ring);
    std::vector<Poly> images{phi1, phi2};
    for (std::size_t k = 0; k < kUnknowns; ++k) images.push_back(var(unknown_vars()[k]));
    // D = phi o F - F o phi, one component at a time.
    Poly d1 = var("a") * f1 + var("b") * f2 + var("c") - f1.substitute(images);
    Poly d2 = var("d") * f1 + var("e") * f2 + var("f") - f2.substitute(images);
    add_component(d1, "first", p1);
    add_component(d2, "second", p2);
  }

  void add_component(const Poly& d, const std::string& which, const std::vector<std::pair<int, Monomial>>& prio) {
    constexpr int kUnranked = 1000;
    for (auto& [m, coef] : d.collect({0, 1})) {
      int rank = kUnranked;
      for (const auto& [r, pm] : prio) {
        if (pm == m) rank = std::min(rank, r);
      }
      Poly mono = Poly::monomial(model_vars(model_), m, CycloElem(1L));
      // Re-home the coefficient in the canonical unknown context.
      root_.constraints.push_back({coef.in_context(unknown_vars()), rank, which + ":" + mono.to_string()});
    }
  }

  // Linear part identically singular under the current substitutions.
  static bool singular(const ConstraintState& st) {
    auto val = [&](std::size_t k) {
      return st.value[k] ? *st.value[k] : Poly::variable(unknown_vars(), unknown_vars()[k]);
    };
    Poly det = val(0) * val(4) - val(1) * val(3);
    return reduce(det, st).is_zero();
  }

  void fail_unresolved(const ConstraintState& st, const std::string& why, SolveResult& r) {
    std::string desc = why + " [" + st.trail + "]";
    for (std::size_t v = 0; v < kUnknowns; ++v) {
      if (st.value[v]) {
        desc += " " + unknown_vars()[v] + "=" + st.value[v]->to_string();
      } else if (st.order[v] > 0) {
        desc += " " + unknown_vars()[v] + "^" + std::to_string(st.order[v]) + "=1";
      }
    }
    std::size_t shown = 0;
    for (const auto& c : st.constraints) {
      if (shown++ == 3) break;
      desc += " | " + c.origin + ": " + c.p.to_string();
    }
    r.unresolved.push_back(desc);
  }

  // Applies v := expr everywhere; returns false if the branch dies.
  static bool assign(ConstraintState& st, std::size_t v, const Poly& expr) {
    st.order[v] = 0;
    for (auto& val : st.value) {
      if (val) val = reduce(substitute_unknown(*val, v, expr), st);
    }
    st.value[v] = expr;
    return renormalize(st, v);
  }

  static bool renormalize(ConstraintState& st, std::optional<std::size_t> v) {
    std::vector<Constraint> kept;
    kept.reserve(st.constraints.size());
    for (auto& c : st.constraints) {
      Poly p = v ? substitute_unknown(c.p, *v, *st.value[*v]) : c.p;
      p = reduce(p, st);
      if (p.is_zero()) continue;
      if (p.is_constant()) return false;
      kept.push_back({std::move(p), c.rank, c.origin});
    }
    st.constraints = std::move(kept);
    std::stable_sort(st.constraints.begin(), st.constraints.end(), [](const Constraint& x, const Constraint& y) {
      if (x.rank != y.rank) return x.rank < y.rank;
      return x.p.size() < y.p.size();
    });
    return !singular(st);
  }

  void record_solution(const ConstraintState& st) {
    AffineMap2 m{{}, model_};
    for (std::size_t k = 0; k < kUnknowns; ++k) m.coef[k] = st.value[k]->constant_term();
    if (m.invertible()) found_.push_back(m);
  }

  void branch_assign(const ConstraintState& st, std::size_t v, const Poly& expr, const std::string& note,
                     SolveResult& r) {
    ConstraintState child = st;
    child.depth = st.depth + 1;
    child.trail += (child.trail.empty() ? "" : ", ") + note;
    ++r.branches;
    if (assign(child, v, expr)) explore(child, r);
  }

  // Combines v^k = 1 with an existing record and resolves it when possible.
  void record_order(ConstraintState& st, std::size_t v, long k, SolveResult& r) {
    long g = st.order[v] > 0 ? std::gcd(st.order[v], k) : k;
    const Poly one = Poly::constant(unknown_vars(), CycloElem(1L));
    if (g == 1) {
      if (assign(st, v, one)) explore(st, r);
      return;
    }
    if (12 % g == 0) {
      for (const auto& root : roots_of_unity(g)) {
        branch_assign(st, v, Poly::constant(unknown_vars(), root),
                      unknown_vars()[v] + "=" + root.to_string(), r);
      }
      return;
    }
    st.order[v] = g;
    if (renormalize(st, std::nullopt)) explore(st, r);
  }

  // Splits on a squarefree univariate factor of v: v^k - 1 becomes an order
  // record, a linear factor a substitution, and otherwise every root must be
  // a root of unity in Q(zeta12). Returns false when none of these applies.
  bool split_on_factor(const ConstraintState& st, std::size_t v, const UPoly& s, bool dry_run, SolveResult& r) {
    const std::string name = unknown_vars()[v];
    if (s.degree() >= 2 && s == UPoly::cyclic(static_cast<unsigned>(s.degree()))) {
      if (dry_run) return true;
      ConstraintState child = st;
      child.trail += (child.trail.empty() ? "" : ", ") + name + "^" + std::to_string(s.degree()) + "=1";
      record_order(child, v, s.degree(), r);
      return true;
    }
    std::vector<CycloElem> roots;
    if (s.degree() == 1) {
      roots.push_back(-s.coeffs()[0] / s.lead());
    } else {
      for (const auto& z : roots_of_unity(12)) {
        if (s.evaluate(z).is_zero()) roots.push_back(z);
      }
      if (static_cast<int>(roots.size()) != s.degree()) return false;
    }
    if (dry_run) return true;
    for (const auto& z : roots) branch_assign(st, v, Poly::constant(unknown_vars(), z), name + "=" + z.to_string(), r);
    return true;
  }

  // R2: linear in v with a constant (or unit-monomial) coefficient.
  bool try_linear(ConstraintState& st, const Constraint& c, SolveResult& r) {
    std::optional<std::pair<std::size_t, Poly>> best;
    for (std::size_t v = 0; v < kUnknowns; ++v) {
      if (st.value[v] || st.order[v] > 0 || c.p.degree_in(v) != 1) continue;
      std::vector<Term> lin, rest;
      for (const auto& t : c.p.terms()) (t.first[v] == 1 ? lin : rest).push_back(t);
      if (lin.size() != 1) continue;
      Monomial cm = lin[0].first;
      cm.set(v, 0);
      bool unit_coef = true;
      for (std::size_t k = 0; k < kUnknowns; ++k) unit_coef = unit_coef && (cm[k] == 0 || st.is_unit(k));
      if (!unit_coef) continue;
      // v = -(rest) / (coef * cm), with cm^-1 = prod u^(order-e).
      Monomial inv(kUnknowns);
      for (std::size_t k = 0; k < kUnknowns; ++k) {
        if (cm[k] != 0) inv.set(k, static_cast<unsigned>(st.order[k] - cm[k] % st.order[k]));
      }
      Poly rhs = Poly(c.p.vars_ptr(), rest) * Poly::monomial(unknown_vars(), inv, -lin[0].second.inverse());
      rhs = reduce(rhs, st);
      if (!best || rhs.size() < best->second.size()) best = std::make_pair(v, rhs);
    }
    if (!best) return false;
    st.trail += (st.trail.empty() ? "" : ", ") + unknown_vars()[best->first] + ":=" + best->second.to_string();
    if (assign(st, best->first, best->second)) explore(st, r);
    return true;
  }

  // R3: a constraint in a single unknown.
  bool try_univariate(ConstraintState& st, const Constraint& c, SolveResult& r) {
    std::array<bool, kUnknowns> used{};
    if (variables_used(c.p, used) != 1) return false;
    std::size_t v = static_cast<std::size_t>(std::find(used.begin(), used.end(), true) - used.begin());
    UPoly up = UPoly::from_poly(c.p, v);
    if (st.is_unit(v)) {
      UPoly g = gcd(up, UPoly::cyclic(static_cast<unsigned>(st.order[v])));
      if (g.degree() == 0) return true;  // no admissible value: branch dies
      return split_on_factor(st, v, g, false, r);
    }
    // c = v^low * rest(v) with rest(0) != 0.
    int low = 0;
    while (up.coeffs()[static_cast<std::size_t>(low)].is_zero()) ++low;
    UPoly rest(std::vector<CycloElem>(up.coeffs().begin() + low, up.coeffs().end()));
    UPoly s = squarefree_part(rest);
    if (s.degree() > 0 && !split_on_factor(st, v, s, true, r)) return false;
    if (low > 0) branch_assign(st, v, Poly(unknown_vars()), unknown_vars()[v] + "=0", r);
    if (s.degree() > 0) {
      ConstraintState child = st;
      child.depth = st.depth + 1;
      split_on_factor(child, v, s, false, r);
    }
    return true;
  }

  // R1 and R4: monomial content in non-unit unknowns.
  bool try_monomial_split(ConstraintState& st, const Constraint& c, SolveResult& r) {
    std::array<unsigned, kUnknowns> low;
    low.fill(~0U);
    for (const auto& [m, coef] : c.p.terms()) {
      for (std::size_t v = 0; v < kUnknowns; ++v) low[v] = std::min(low[v], m[v]);
    }
    bool any = false;
    for (std::size_t v = 0; v < kUnknowns; ++v) any = any || low[v] > 0;
    if (!any) return false;
    for (std::size_t v = 0; v < kUnknowns; ++v) {
      if (low[v] > 0) branch_assign(st, v, Poly(unknown_vars()), unknown_vars()[v] + "=0", r);
    }
    if (c.p.size() == 1) return true;
    // Remaining factor.
    std::vector<Term> terms;
    for (const auto& [m, coef] : c.p.terms()) {
      Monomial q = m;
      for (std::size_t v = 0; v < kUnknowns; ++v) q.set(v, m[v] - low[v]);
      terms.emplace_back(q, coef);
    }
    ConstraintState child = st;
    child.depth = st.depth + 1;
    ++r.branches;
    for (auto& k : child.constraints) {
      if (k.origin == c.origin) k.p = Poly(c.p.vars_ptr(), terms);
    }
    child.trail += (child.trail.empty() ? "" : ", ") + std::string("cofactor of ") + c.origin;
    if (renormalize(child, std::nullopt)) explore(child, r);
    return true;
  }

  void explore(ConstraintState st, SolveResult& r) {
    if (st.depth > opts_.max_depth) {
      fail_unresolved(st, "branch depth exhausted", r);
      return;
    }
    if (st.constraints.empty()) {
      bool all_known = true;
      for (std::size_t v = 0; v < kUnknowns; ++v) {
        all_known = all_known && st.value[v] && st.value[v]->is_constant();
      }
      if (all_known) {
        record_solution(st);
      } else {
        fail_unresolved(st, "unknowns left undetermined", r);
      }
      return;
    }
    const std::vector<Constraint> cs = st.constraints;
    for (const auto& c : cs) {
      if (try_linear(st, c, r) || try_univariate(st, c, r)) return;
    }
    for (const auto& c : cs) {
      if (try_monomial_split(st, c, r)) return;
    }
    fail_unresolved(st, "no rule applies", r);
  }

  Model model_;
  SolveOptions opts_;
  ConstraintState root_;
  std::vector<AffineMap2> found_;
};

// Monomials of the two components examined first, mirroring the order in
// which the hand proofs equate coefficients.
inline std::pair<std::vector<std::pair<int, Monomial>>, std::vector<std::pair<int, Monomial>>> priority_lists(
    Family f, unsigned n) {
  std::vector<std::pair<int, Monomial>> p1, p2;
  auto add = [](std::vector<std::pair<int, Monomial>>& list, long i, long j) {
    if (i < 0 || j < 0) return;
    list.emplace_back(static_cast<int>(list.size()), Monomial{static_cast<unsigned>(i), static_cast<unsigned>(j)});
  };
  const long N = n;
  switch (f) {
    case Family::A2:
      add(p1, N, 0);
      add(p1, 0, N);
      for (long i = 1; i < N; ++i) add(p1, i, N - i);
      add(p1, N - 1, 0);
      add(p1, N - 2, 1);
      add(p2, 0, N);
      add(p2, N, 0);
      for (long i = 1; i < N; ++i) add(p2, N - i, i);
      add(p2, 0, N - 1);
      add(p2, 1, N - 2);
      break;
    case Family::B2:
      add(p1, 1, N - 1);
      add(p1, 2, N - 2);
      add(p1, N, 0);
      add(p1, N - 1, 0);
      add(p1, N - 2, 1);
      add(p1, N - 3, 1);
      add(p1, N - 2, 0);
      add(p2, 2, N - 2);
      break;
    case Family::G2: {
      const long k = N / 2;
      if (N % 2 == 0) {
        add(p1, 3 * k, 0);
      } else {
        add(p1, 3 * k, 1);
      }
      add(p1, N, 0);
      add(p1, N - 1, 0);
      add(p1, N - 2, 1);
      add(p1, N - 3, 1);
      add(p1, N - 2, 0);
      if (N % 2 == 0) {
        add(p2, 3 * k, 0);
      } else {
        add(p2, 3 * k + 1, 0);
        add(p2, 3 * k, 1);
      }
      break;
    }
  }
  return {p1, p2};
}

}  // namespace detail

/**
 * Solves phi o F_n = F_n o phi for an affine phi with six symbolic
 * coefficients by case-splitting elimination on the coefficient equations.
 */
inline SolveResult solve_aut(Family f, unsigned n, SolveOptions opts = {}) {
  if (n < 2) throw std::invalid_argument("solve_aut needs n >= 2");
  auto [p1, p2] = detail::priority_lists(f, n);
  detail::Engine engine(fold(f, n), std::move(p1), std::move(p2), opts);
  return engine.run(f, n);
}

}  // namespace foldmap
