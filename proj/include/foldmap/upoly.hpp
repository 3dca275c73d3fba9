#pragma once

#include <utility>
#include <vector>

#include "foldmap/poly.hpp"

namespace foldmap {

/// Dense univariate polynomial over Q(zeta12); coefficient k multiplies t^k.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<CycloElem> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// Reads p as a polynomial in variable `var`; every other exponent must be 0.
  static UPoly from_poly(const Poly& p, std::size_t var) {
    std::vector<CycloElem> c;
    for (const auto& [m, coef] : p.terms()) {
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (k != var && m[k] != 0) throw context_error("polynomial is not univariate in the requested variable");
      }
      if (c.size() <= m[var]) c.resize(m[var] + 1);
      c[m[var]] += coef;
    }
    return UPoly(std::move(c));
  }

  /// t^k - 1
  static UPoly cyclic(unsigned k) {
    std::vector<CycloElem> c(k + 1);
    c[0] = CycloElem(-1L);
    c[k] = CycloElem(1L);
    return UPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<CycloElem>& coeffs() const { return c_; }
  const CycloElem& lead() const { return c_.back(); }

  CycloElem evaluate(const CycloElem& t) const {
    CycloElem acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= t;
      acc += *it;
    }
    return acc;
  }

  UPoly monic() const {
    if (c_.empty()) return {};
    CycloElem inv = lead().inverse();
    std::vector<CycloElem> out = c_;
    for (auto& x : out) x *= inv;
    return UPoly(std::move(out));
  }

  UPoly derivative() const {
    std::vector<CycloElem> out;
    for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * CycloElem(static_cast<long>(k)));
    return UPoly(std::move(out));
  }

  /// Quotient and remainder of division by a nonzero divisor.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw math_error("polynomial division by zero");
    std::vector<CycloElem> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<CycloElem> q(r.size() > db ? r.size() - db : 0);
    CycloElem inv = b.lead().inverse();
    while (r.size() > db && !r.empty()) {
      CycloElem lead = r.back() * inv;
      const std::size_t shift = r.size() - 1 - db;
      q[shift] = lead;
      for (std::size_t k = 0; k <= db; ++k) r[shift + k] -= lead * b.c_[k];
      while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<CycloElem> c_;
};

/// Monic greatest common divisor (zero only if both inputs are zero).
inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Product of the distinct monic irreducible factors.
inline UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

}  // namespace foldmap
