#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "foldmap/cyclo.hpp"

namespace foldmap {

/// Raised when polynomials from incompatible variable contexts are combined.
class context_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector with inline storage; its length is the size of the
/// ambient variable context.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVars) throw context_error("too many variables");
  }
  Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
    std::size_t k = 0;
    for (unsigned e : exps) set(k++, e);
  }
  static Monomial from(std::span<const unsigned> exps) {
    Monomial m(exps.size());
    for (std::size_t k = 0; k < exps.size(); ++k) m.set(k, exps[k]);
    return m;
  }

  std::size_t size() const { return n_; }
  unsigned operator[](std::size_t k) const { return e_[k]; }
  void set(std::size_t k, unsigned v) {
    if (v > 0xFFFFU) throw math_error("exponent overflow");
    e_[k] = static_cast<std::uint16_t>(v);
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (std::size_t k = 0; k < n_; ++k) d += e_[k];
    return d;
  }
  bool is_one() const { return total_degree() == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t k = 0; k < a.n_; ++k) r.set(k, static_cast<unsigned>(a.e_[k]) + b.e_[k]);
    return r;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t k = 0; k < n_; ++k) {
      if (e_[k] > o.e_[k]) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

  /// Graded lexicographic order, first variable most significant.
  friend bool grlex_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a.e_[k] != b.e_[k]) return a.e_[k] < b.e_[k];
    }
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t k = 0; k < n_; ++k) {
      h ^= e_[k];
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

using VarList = std::vector<std::string>;
using Term = std::pair<Monomial, CycloElem>;

/**
 * Sparse multivariate polynomial over Q(zeta12) in a named variable context.
 *
 * Terms are kept sorted in descending graded-lex order with no zero
 * coefficients, so structural equality is polynomial equality.
 */
class Poly {
public:
  Poly() : Poly(VarList{}) {}
  explicit Poly(VarList vars) : vars_(std::make_shared<const VarList>(std::move(vars))) {
    if (vars_->size() > kMaxVars) throw context_error("too many variables");
  }
  Poly(std::shared_ptr<const VarList> vars, std::vector<Term> terms)
      : vars_(std::move(vars)), terms_(std::move(terms)) {
    normalize();
  }

  static Poly constant(const VarList& vars, const CycloElem& c) {
    return Poly(std::make_shared<const VarList>(vars), {{Monomial(vars.size()), c}});
  }
  static Poly variable(const VarList& vars, const std::string& name) {
    Poly p(vars);
    Monomial m(vars.size());
    m.set(p.index_of(name), 1);
    p.terms_.push_back({m, CycloElem(1L)});
    return p;
  }
  static Poly monomial(const VarList& vars, const Monomial& m, const CycloElem& c) {
    return Poly(std::make_shared<const VarList>(vars), {{m, c}});
  }

  const VarList& vars() const { return *vars_; }
  const std::shared_ptr<const VarList>& vars_ptr() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(vars_->begin(), vars_->end(), name);
    if (it == vars_->end()) throw context_error("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_->begin());
  }

  bool same_context(const Poly& o) const { return vars_ == o.vars_ || *vars_ == *o.vars_; }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.total_degree());
  }
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
    return d;
  }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  CycloElem constant_term() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return {};
  }

  CycloElem coeff(const Monomial& m) const {
    if (m.size() != nvars()) throw context_error("monomial length does not match context");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
      return grlex_less(key, t.first);
    });
    if (it != terms_.end() && it->first == m) return it->second;
    return {};
  }

  /// Sum of the terms of total degree exactly k.
  Poly degree_slice(unsigned k) const {
    Poly out(vars_, {});
    for (const auto& t : terms_) {
      if (t.first.total_degree() == k) out.terms_.push_back(t);
    }
    return out;
  }

  Poly operator-() const {
    Poly out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_context(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.vars_, {});
    if (b.is_constant()) return a * b.terms_[0].second;
    if (a.is_constant()) return b * a.terms_[0].second;
    std::unordered_map<Monomial, CycloElem, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1U << 22U));
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) acc[ma * mb].add_product(ca, cb);
    }
    return from_accumulator(a.vars_, acc);
  }
  friend Poly operator*(const Poly& a, const CycloElem& s) {
    if (s.is_zero()) return Poly(a.vars_, {});
    Poly out = a;
    for (auto& t : out.terms_) t.second *= s;
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned e) const {
    Poly result = constant(vars(), CycloElem(1L));
    Poly base = *this;
    while (e != 0) {
      if ((e & 1U) != 0) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (!a.same_context(b) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
      if (!(a.terms_[k].first == b.terms_[k].first) || a.terms_[k].second != b.terms_[k].second) return false;
    }
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /**
   * Exact composition: replaces variable k by images[k]. All images must
   * share one context, which becomes the context of the result.
   */
  Poly substitute(const std::vector<Poly>& images) const {
    if (images.size() != nvars()) throw context_error("substitute needs one image per variable");
    if (images.empty()) return *this;
    for (const auto& img : images) images.front().check_context(img);
    std::vector<std::vector<Poly>> power_cache(images.size());
    std::vector<Term> work(terms_.begin(), terms_.end());
    return substitute_rec(work, 0, images, power_cache);
  }

  /// Named substitution; every variable of this polynomial needs an image.
  Poly substitute(const std::map<std::string, Poly>& images) const {
    std::vector<Poly> ordered;
    for (const auto& v : vars()) {
      auto it = images.find(v);
      if (it == images.end()) throw context_error("no image given for variable '" + v + "'");
      ordered.push_back(it->second);
    }
    return substitute(ordered);
  }

  /// Re-expresses this polynomial in a larger context that names all its variables.
  Poly in_context(const VarList& target) const {
    if (target == vars()) return *this;
    auto tp = std::make_shared<const VarList>(target);
    std::vector<std::size_t> where;
    for (const auto& v : vars()) {
      auto it = std::find(target.begin(), target.end(), v);
      if (it == target.end()) throw context_error("variable '" + v + "' missing from target context");
      where.push_back(static_cast<std::size_t>(it - target.begin()));
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Monomial nm(target.size());
      for (std::size_t k = 0; k < where.size(); ++k) nm.set(where[k], m[k]);
      out.emplace_back(nm, c);
    }
    return Poly(tp, std::move(out));
  }

  /// Applies f to every coefficient.
  template <typename F>
  Poly map_coefficients(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.emplace_back(m, f(c));
    return Poly(vars_, std::move(out));
  }

  /**
   * Splits into coefficients with respect to the variables in `keep`:
   * returns (monomial in keep-vars, coefficient polynomial in the rest).
   * The result is sorted by descending grlex order of the keep-monomial.
   */
  std::vector<std::pair<Monomial, Poly>> collect(const std::vector<std::size_t>& keep) const {
    VarList rest_names;
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < nvars(); ++k) {
      if (std::find(keep.begin(), keep.end(), k) == keep.end()) {
        rest.push_back(k);
        rest_names.push_back(vars()[k]);
      }
    }
    auto rp = std::make_shared<const VarList>(rest_names);
    std::unordered_map<Monomial, std::vector<Term>, MonomialHash> groups;
    for (const auto& [m, c] : terms_) {
      Monomial km(keep.size()), rm(rest.size());
      for (std::size_t k = 0; k < keep.size(); ++k) km.set(k, m[keep[k]]);
      for (std::size_t k = 0; k < rest.size(); ++k) rm.set(k, m[rest[k]]);
      groups[km].emplace_back(rm, c);
    }
    std::vector<std::pair<Monomial, Poly>> out;
    out.reserve(groups.size());
    for (auto& [km, ts] : groups) out.emplace_back(km, Poly(rp, std::move(ts)));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
    return out;
  }

  std::complex<double> evaluate(std::span<const std::complex<double>> point) const {
    if (point.size() != nvars()) throw context_error("evaluation point has wrong dimension");
    std::complex<double> sum;
    for (const auto& [m, c] : terms_) {
      std::complex<double> t = c.to_complex();
      for (std::size_t k = 0; k < nvars(); ++k) {
        for (unsigned e = 0; e < m[k]; ++e) t *= point[k];
      }
      sum += t;
    }
    return sum;
  }

  CycloElem evaluate(std::span<const CycloElem> point) const {
    if (point.size() != nvars()) throw context_error("evaluation point has wrong dimension");
    CycloElem sum;
    for (const auto& [m, c] : terms_) {
      CycloElem t = c;
      for (std::size_t k = 0; k < nvars(); ++k) {
        if (m[k] != 0) t *= point[k].pow(m[k]);
      }
      sum += t;
    }
    return sum;
  }

  /// Plain-text rendering, e.g. "x^2 - 2*y - 4".
  std::string to_string() const { return render(false); }
  /// LaTeX rendering, e.g. "x^{2} - 2 y - 4".
  std::string to_latex() const { return render(true); }

  void check_context(const Poly& o) const {
    if (!same_context(o)) throw context_error("polynomials live in different variable contexts");
  }

private:
  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    a.check_context(b);
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && grlex_less(b.terms_[j].first, a.terms_[i].first))) {
        out.push_back(a.terms_[i++]);
      } else if (i == a.size() || grlex_less(a.terms_[i].first, b.terms_[j].first)) {
        out.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
        ++j;
      } else {
        CycloElem c = a.terms_[i].second;
        if (subtract) {
          c -= b.terms_[j].second;
        } else {
          c += b.terms_[j].second;
        }
        if (!c.is_zero()) out.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    Poly r(a.vars_, {});
    r.terms_ = std::move(out);
    return r;
  }

  static Poly from_accumulator(const std::shared_ptr<const VarList>& vars,
                               std::unordered_map<Monomial, CycloElem, MonomialHash>& acc) {
    Poly r(vars, {});
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
    }
    r.sort_terms();
    return r;
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return grlex_less(b.first, a.first); });
  }

  void normalize() {
    for (const auto& t : terms_) {
      if (t.first.size() != vars_->size()) throw context_error("monomial length does not match context");
    }
    sort_terms();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
    terms_ = std::move(out);
  }

  static const Poly& cached_power(std::size_t var, unsigned e, const std::vector<Poly>& images,
                                  std::vector<std::vector<Poly>>& cache) {
    auto& pw = cache[var];
    if (pw.empty()) pw.push_back(constant(images[var].vars(), CycloElem(1L)));
    while (pw.size() <= e) pw.push_back(pw.back() * images[var]);
    return pw[e];
  }

  // Horner-style grouping on variable `var`: sum_i image^i * (rest_i substituted).
  Poly substitute_rec(std::vector<Term>& terms, std::size_t var, const std::vector<Poly>& images,
                      std::vector<std::vector<Poly>>& cache) const {
    const auto& target = images.front().vars_;
    if (terms.empty()) return Poly(target, {});
    if (var == nvars()) {
      CycloElem c;
      for (const auto& t : terms) c += t.second;
      return Poly(target, {{Monomial(target->size()), c}});
    }
    std::map<unsigned, std::vector<Term>> by_exp;
    for (auto& t : terms) by_exp[t.first[var]].push_back(std::move(t));
    std::unordered_map<Monomial, CycloElem, MonomialHash> acc;
    for (auto& [e, group] : by_exp) {
      Poly inner = substitute_rec(group, var + 1, images, cache);
      if (inner.is_zero()) continue;
      if (e == 0) {
        for (const auto& [m, c] : inner.terms_) acc[m] += c;
        continue;
      }
      const Poly& pw = cached_power(var, e, images, cache);
      for (const auto& [ma, ca] : inner.terms_) {
        for (const auto& [mb, cb] : pw.terms_) acc[ma * mb].add_product(ca, cb);
      }
    }
    return from_accumulator(target, acc);
  }

  std::string render(bool latex) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      bool neg = c.is_rational() && sgn(c[0]) < 0;
      CycloElem mag = neg ? -c : c;
      std::string coef = mag.to_string();
      if (latex && mag.is_rational() && mag[0].get_den() != 1) {
        coef = "\\frac{" + mag[0].get_num().get_str() + "}{" + mag[0].get_den().get_str() + "}";
      }
      std::string mono;
      for (std::size_t k = 0; k < nvars(); ++k) {
        if (m[k] == 0) continue;
        if (!mono.empty()) mono += latex ? " " : "*";
        mono += vars()[k];
        if (m[k] > 1) mono += latex ? "^{" + std::to_string(m[k]) + "}" : "^" + std::to_string(m[k]);
      }
      std::string piece;
      if (mono.empty()) {
        piece = coef;
      } else if (mag.is_one()) {
        piece = mono;
      } else {
        piece = coef + (latex ? " " : "*") + mono;
      }
      if (out.empty()) {
        out = (neg ? "-" : "") + piece;
      } else {
        out += (neg ? " - " : " + ") + piece;
      }
    }
    return out;
  }

  std::shared_ptr<const VarList> vars_;
  std::vector<Term> terms_;
};

inline const VarList& xy_vars() {
  static const VarList v{"x", "y"};
  return v;
}
inline const VarList& zw_vars() {
  static const VarList v{"z", "w"};
  return v;
}

/// Complex conjugation in the (z, w) model: swap the two variables and
/// conjugate every coefficient.
inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

inline Poly swap_conjugate(const Poly& p) {
  if (p.nvars() != 2) throw context_error("swap_conjugate needs a two-variable context");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) out.emplace_back(Monomial{m[1], m[0]}, c.conj());
  return Poly(p.vars_ptr(), std::move(out));
}

/// Coordinate model of a planar map.
enum class Model { XY, ZW };

inline const char* model_name(Model m) { return m == Model::XY ? "xy" : "zw"; }

/// Polynomial self-map of the affine plane.
struct PolyMap2 {
  Poly first;
  Poly second;
  Model model = Model::XY;
  std::string label;

  const VarList& vars() const { return first.vars(); }
  int degree() const { return std::max(first.total_degree(), second.total_degree()); }

  friend bool operator==(const PolyMap2& a, const PolyMap2& b) {
    return a.model == b.model && a.first == b.first && a.second == b.second;
  }
};

inline const VarList& model_vars(Model m) { return m == Model::XY ? xy_vars() : zw_vars(); }

inline PolyMap2 identity_map(Model m) {
  const auto& v = model_vars(m);
  return {Poly::variable(v, v[0]), Poly::variable(v, v[1]), m, "identity"};
}

/// outer o inner, i.e. (x, y) -> outer(inner(x, y)).
inline PolyMap2 compose(const PolyMap2& outer, const PolyMap2& inner) {
  if (outer.model != inner.model) throw context_error("cannot compose maps from different coordinate models");
  std::vector<Poly> images{inner.first, inner.second};
  return {outer.first.substitute(images), outer.second.substitute(images), outer.model,
          outer.label + " o " + inner.label};
}

/**
 * Rewrites a (z, w)-model map whose second component is the conjugate of the
 * first as a real map (Re, Im) in x, y via z = x + i y, w = x - i y.
 */
inline PolyMap2 zw_to_xy(const PolyMap2& map) {
  if (map.model != Model::ZW) throw context_error("zw_to_xy expects a map in the (z, w) model");
  if (swap_conjugate(map.first) != map.second) {
    throw math_error("map has no real form: second component is not the conjugate of the first");
  }
  const auto& v = xy_vars();
  Poly x = Poly::variable(v, "x"), y = Poly::variable(v, "y");
  Poly iy = y * CycloElem::i();
  Poly p = map.first.substitute(std::vector<Poly>{x + iy, x - iy});
  const CycloElem half = Rational(1, 2);
  const CycloElem inv_2i = (CycloElem(2L) * CycloElem::i()).inverse();
  Poly re = p.map_coefficients([&](const CycloElem& c) { return (c + c.conj()) * half; });
  Poly im = p.map_coefficients([&](const CycloElem& c) { return (c - c.conj()) * inv_2i; });
  for (const Poly* part : {&re, &im}) {
    for (const auto& [m, c] : part->terms()) {
      if (c.conj() != c) throw math_error("non-real coefficient after conversion to (x, y)");
    }
  }
  return {re, im, Model::XY, map.label};
}

/// Inverse of zw_to_xy: x = (z + w)/2, y = (z - w)/(2i).
inline PolyMap2 xy_to_zw(const PolyMap2& map) {
  if (map.model != Model::XY) throw context_error("xy_to_zw expects a map in the (x, y) model");
  const auto& v = zw_vars();
  Poly z = Poly::variable(v, "z"), w = Poly::variable(v, "w");
  const CycloElem half = Rational(1, 2);
  const CycloElem inv_2i = (CycloElem(2L) * CycloElem::i()).inverse();
  std::vector<Poly> images{(z + w) * half, (z - w) * inv_2i};
  Poly re = map.first.substitute(images), im = map.second.substitute(images);
  Poly iim = im * CycloElem::i();
  return {re + iim, re - iim, Model::ZW, map.label};
}

}  // namespace foldmap
