#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "foldmap/folding.hpp"

namespace foldmap {

enum class Coordinate { First, Second };

inline const char* coordinate_name(Coordinate c) { return c == Coordinate::First ? "first" : "second"; }

/**
 * Predicted top-degree part of one coordinate of F_n.
 *
 * The claim is "coordinate - predicted has total degree <= slack". When
 * `x_cubed_clause` is set (the B2 second coordinate), a residual term may
 * instead be divisible by x^3 with cofactor degree <= n - 3.
 */
struct LeadingSpec {
  Family family;
  unsigned n = 0;
  Coordinate coordinate = Coordinate::First;
  Poly predicted;
  int slack = 0;
  bool x_cubed_clause = false;
};

namespace detail {

// Accumulates displayed terms. A term whose displayed coefficient is 0 is
// dropped even if an exponent is negative; a nonzero coefficient with a
// negative exponent means the formula was misread.
class TermBuilder {
public:
  explicit TermBuilder(const VarList& vars) : poly_(vars) {}

  void add(const Rational& coef, long e0, long e1) {
    if (sgn(coef) == 0) return;
    if (e0 < 0 || e1 < 0) {
      throw std::logic_error("displayed term with nonzero coefficient " + rational_string(coef) +
                             " has a negative exponent");
    }
    Monomial m{static_cast<unsigned>(e0), static_cast<unsigned>(e1)};
    poly_ = poly_ + Poly::monomial(poly_.vars(), m, CycloElem(coef));
  }
  Poly take() { return std::move(poly_); }

private:
  Poly poly_;
};

inline long sign_pow(long k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace detail

/// Smallest n for which the expansion of the given coordinate is claimed.
inline unsigned leading_min_n(Family f, Coordinate c) {
  switch (f) {
    case Family::A2: return 2;
    case Family::B2: return 3;
    case Family::G2: return c == Coordinate::First ? 5 : 1;
  }
  return 0;
}

inline LeadingSpec predicted(Family f, unsigned n, Coordinate c) {
  if (n < leading_min_n(f, c)) {
    throw std::invalid_argument("leading-term expansion for " + family_name(f) + " " + coordinate_name(c) +
                                " coordinate is only claimed for n >= " + std::to_string(leading_min_n(f, c)));
  }
  const long N = n;
  const Rational half_n2_3n(N * N - 3 * N, 2);
  LeadingSpec s{f, n, c, Poly(model_vars(family_model(f))), 0, false};
  detail::TermBuilder tb(model_vars(family_model(f)));
  switch (f) {
    case Family::A2: {
      // z^n - n z^(n-2) w + (n^2-3n)/2 z^(n-4) w^2 + O(n-3)
      tb.add(1, N, 0);
      tb.add(-N, N - 2, 1);
      // At n = 2 the third displayed term is the Laurent monomial z^-2 w^2
      // and is not part of any polynomial identity.
      if (n >= 3) tb.add(half_n2_3n, N - 4, 2);
      s.slack = static_cast<int>(N) - 3;
      s.predicted = tb.take();
      if (c == Coordinate::Second) s.predicted = swap_conjugate(s.predicted);
      break;
    }
    case Family::B2:
      if (c == Coordinate::First) {
        // x^n - n x^(n-2) y - n x^(n-2) + n(n-3)/2 x^(n-4) y^2 + O(n-3)
        tb.add(1, N, 0);
        tb.add(-N, N - 2, 1);
        tb.add(-N, N - 2, 0);
        tb.add(Rational(N * (N - 3), 2), N - 4, 2);
        s.slack = static_cast<int>(N) - 3;
      } else {
        // y^n - n x^2 y^(n-2) + x^3 O(n-3) + O(n-1)
        tb.add(1, 0, N);
        tb.add(-N, 2, N - 2);
        s.slack = static_cast<int>(N) - 1;
        s.x_cubed_clause = true;
      }
      s.predicted = tb.take();
      break;
    case Family::G2:
      if (c == Coordinate::First) {
        tb.add(1, N, 0);                    // degree n
        tb.add(-N, N - 2, 1);               // degree n-1
        tb.add(half_n2_3n, N - 4, 2);       // degree n-2
        tb.add(-N, N - 3, 1);
        tb.add(-3 * N, N - 2, 0);
        s.slack = static_cast<int>(N) - 3;
      } else if (n % 2 == 0) {
        tb.add(detail::sign_pow(N / 2) * 2, 3 * N / 2, 0);
        s.slack = static_cast<int>((3 * N - 2) / 2);
      } else {
        tb.add(detail::sign_pow((N - 1) / 2) * N, (3 * N - 3) / 2, 1);
        s.slack = static_cast<int>((3 * N - 3) / 2);
      }
      s.predicted = tb.take();
      break;
  }
  return s;
}

/// Coordinates whose expansion is claimed at this n.
inline std::vector<Coordinate> leading_coordinates(Family f, unsigned n) {
  std::vector<Coordinate> out;
  for (Coordinate c : {Coordinate::First, Coordinate::Second}) {
    if (n >= leading_min_n(f, c)) out.push_back(c);
  }
  return out;
}

struct LeadingCheck {
  Coordinate coordinate = Coordinate::First;
  bool pass = false;
  int slack = 0;
  int residual_degree = -1;       // total degree of (actual - predicted)
  std::string offending_term;     // first residual term breaking the bound
};

struct LeadingReport {
  Family family;
  unsigned n = 0;
  std::vector<LeadingCheck> checks;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return !checks.empty();
  }
};

/// Checks one coordinate of F_n against its predicted expansion.
inline LeadingCheck check_leading(const LeadingSpec& spec, const Poly& actual) {
  LeadingCheck out{spec.coordinate, true, spec.slack, -1, ""};
  Poly residual = actual - spec.predicted;
  out.residual_degree = residual.total_degree();
  for (const auto& [m, c] : residual.terms()) {
    int deg = static_cast<int>(m.total_degree());
    bool ok = deg <= spec.slack;
    if (!ok && spec.x_cubed_clause) {
      ok = m[0] >= 3 && deg - 3 <= static_cast<int>(spec.n) - 3;
    }
    if (!ok) {
      out.pass = false;
      out.offending_term = Poly::monomial(residual.vars(), m, c).to_string();
      break;
    }
  }
  return out;
}

inline LeadingReport verify_leading(Family f, unsigned n) {
  auto coords = leading_coordinates(f, n);
  if (coords.empty()) {
    throw std::invalid_argument("no leading-term claim for " + family_name(f) + " at n = " + std::to_string(n));
  }
  PolyMap2 fn = fold(f, n);
  LeadingReport r{f, n, {}};
  for (Coordinate c : coords) {
    r.checks.push_back(check_leading(predicted(f, n, c), c == Coordinate::First ? fn.first : fn.second));
  }
  return r;
}

}  // namespace foldmap
