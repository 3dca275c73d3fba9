#pragma once

#include <array>
#include <cctype>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "foldmap/poly.hpp"
#include "foldmap/poly_parse.hpp"

namespace foldmap {

enum class Family { A2, B2, G2 };

inline constexpr std::array<Family, 3> kAllFamilies{Family::A2, Family::B2, Family::G2};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A2: return "A2";
    case Family::B2: return "B2";
    case Family::G2: return "G2";
  }
  return "?";
}

inline Family parse_family(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (s == "a2" || s == "a") return Family::A2;
  if (s == "b2" || s == "b") return Family::B2;
  if (s == "g2" || s == "g") return Family::G2;
  throw std::invalid_argument("unknown family '" + s + "' (expected a2, b2 or g2)");
}

inline Model family_model(Family f) { return f == Family::A2 ? Model::ZW : Model::XY; }

enum class HalfFold { B_sqrt2, G_sqrt3 };

/**
 * Generator for the n-th folding map of one rank-two family.
 *
 * The A2 maps live in the (z, w) model with w standing for the conjugate of
 * z; B2 and G2 live in (x, y). Results are memoized: the cache only grows,
 * and each entry is immutable once published.
 */
class FoldingFamily {
public:
  explicit FoldingFamily(Family tag) : tag_(tag) {
    const auto& v = model_vars(family_model(tag));
    auto P = [&](const char* s) { return parse_poly(s, v); };
    switch (tag) {
      case Family::A2:
        // Second coordinate is the conjugate of the first.
        for (const char* s : {"3", "z", "z^2 - 2w"}) {
          Poly a = P(s);
          base_.push_back({a, swap_conjugate(a), Model::ZW, ""});
        }
        break;
      case Family::B2:
        base_.push_back({P("4"), P("4"), Model::XY, ""});
        base_.push_back({P("x"), P("y"), Model::XY, ""});
        base_.push_back({P("x^2 - 2y - 4"), P("y^2 - 2x^2 + 4y + 4"), Model::XY, ""});
        base_.push_back({P("x^3 - 3xy - 3x"), P("y^3 - 3x^2y + 6y^2 + 9y"), Model::XY, ""});
        x_rec_ = {P("x"), P("2 + y")};
        y_rec_ = {P("y"), P("x^2 - 2y - 2")};
        break;
      case Family::G2:
        base_.push_back({P("6"), P("6"), Model::XY, ""});
        base_.push_back({P("x"), P("y"), Model::XY, ""});
        base_.push_back({P("x^2 - 2x - 2y - 6"), P("-2x^3 + 6xy + y^2 + 18x + 10y + 18"), Model::XY, ""});
        base_.push_back({P("x^3 - 3xy - 9x - 6y - 12"),
                         P("-3x^3y - 6x^3 + 9xy^2 + y^3 + 45xy + 18y^2 + 54x + 63y + 60"), Model::XY, ""});
        base_.push_back({P("x^4 - 4x^2y - 10x^2 - 4xy + 2y^2 - 8x + 8y + 6"),
                         P("2x^6 - 12x^4y - 4x^3y^2 - 36x^4 - 28x^3y + 18x^2y^2 + 12xy^3 + y^4 - 40x^3"
                           " + 108x^2y + 120xy^2 + 24y^3 + 162x^2 + 372xy + 134y^2 + 360x + 280y + 198"),
                         Model::XY, ""});
        base_.push_back({P("x^5 - 5x^3y - 15x^3 - 5x^2y + 5xy^2 - 10x^2 + 35xy + 10y^2 + 55x + 50y + 60"),
                         P("5x^6y + 10x^6 - 30x^4y^2 - 5x^3y^3 - 150x^4y - 65x^3y^2 + 45x^2y^3 + 15xy^4"
                           " + y^5 - 180x^4 - 205x^3y + 360x^2y^2 + 240xy^3 + 30y^4 - 190x^3 + 945x^2y"
                           " + 1200xy^2 + 255y^3 + 810x^2 + 2415xy + 920y^2 + 1710x + 1495y + 900"),
                         Model::XY, ""});
        // Elementary symmetric functions of the six orbit exponentials; they
        // are the coefficients of the palindromic order-6 recurrences. The
        // Y constant is 20: Newton's identities on rows 0..3 force it, and
        // only that value makes G_m o G_n = G_mn hold past the table.
        x_rec_ = {P("x"), P("x + y + 3"), P("x^2 - 2y - 4")};
        y_rec_ = {P("y"), P("x^3 - 3xy - 9x - 5y - 9"), P("y^2 - 2x^3 + 6xy + 18x + 12y + 20")};
        break;
    }
    for (std::size_t k = 0; k < base_.size(); ++k) {
      base_[k].label = label_for(k);
      cache_.push_back(std::make_shared<const PolyMap2>(base_[k]));
    }
  }

  Family tag() const { return tag_; }
  Model model() const { return family_model(tag_); }
  /// Number of earlier maps each recursion step consumes.
  std::size_t arity() const { return tag_ == Family::A2 ? 3 : tag_ == Family::B2 ? 4 : 6; }
  const std::vector<PolyMap2>& base_cases() const { return base_; }

  std::shared_ptr<const PolyMap2> get(unsigned n) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (cache_.size() <= n) cache_.push_back(std::make_shared<const PolyMap2>(step(cache_.size())));
    return cache_[n];
  }

private:
  std::string label_for(std::size_t n) const { return family_name(tag_) + "_" + std::to_string(n); }

  const Poly& X(std::size_t k) const { return cache_[k]->first; }
  const Poly& Y(std::size_t k) const { return cache_[k]->second; }

  // Computes F_n from the cached F_{n-arity} .. F_{n-1}.
  PolyMap2 step(std::size_t n) const {
    const auto& v = model_vars(model());
    switch (tag_) {
      case Family::A2: {
        Poly z = Poly::variable(v, "z"), w = Poly::variable(v, "w");
        Poly a = z * X(n - 1) - w * X(n - 2) + X(n - 3);
        return {a, swap_conjugate(a), Model::ZW, label_for(n)};
      }
      case Family::B2: {
        // X_{n} = x(X_{n-1} + X_{n-3}) - (2 + y) X_{n-2} - X_{n-4}, likewise Y.
        Poly xn = x_rec_[0] * (X(n - 1) + X(n - 3)) - x_rec_[1] * X(n - 2) - X(n - 4);
        Poly yn = y_rec_[0] * (Y(n - 1) + Y(n - 3)) - y_rec_[1] * Y(n - 2) - Y(n - 4);
        return {xn, yn, Model::XY, label_for(n)};
      }
      case Family::G2: {
        Poly xn = x_rec_[0] * (X(n - 1) + X(n - 5)) - x_rec_[1] * (X(n - 2) + X(n - 4)) + x_rec_[2] * X(n - 3) -
                  X(n - 6);
        Poly yn = y_rec_[0] * (Y(n - 1) + Y(n - 5)) - y_rec_[1] * (Y(n - 2) + Y(n - 4)) + y_rec_[2] * Y(n - 3) -
                  Y(n - 6);
        return {xn, yn, Model::XY, label_for(n)};
      }
    }
    return {};
  }

  Family tag_;
  std::vector<PolyMap2> base_;
  std::vector<Poly> x_rec_, y_rec_;
  mutable std::mutex mutex_;
  std::vector<std::shared_ptr<const PolyMap2>> cache_;
};

inline FoldingFamily& folding_family(Family f) {
  static FoldingFamily a(Family::A2), b(Family::B2), g(Family::G2);
  switch (f) {
    case Family::A2: return a;
    case Family::B2: return b;
    case Family::G2: return g;
  }
  return a;
}

/// The n-th folding map of a family (memoized).
inline PolyMap2 fold(Family f, unsigned n) { return *folding_family(f).get(n); }

/// The extra "half" folding maps B_sqrt2 and G_sqrt3, whose squares are B_2 and G_3.
inline PolyMap2 half_fold(HalfFold kind) {
  const auto& v = xy_vars();
  if (kind == HalfFold::B_sqrt2) {
    return {parse_poly("y", v), parse_poly("x^2 - 2y - 4", v), Model::XY, "B_sqrt2"};
  }
  return {parse_poly("y", v), parse_poly("x^3 - 3xy - 9x - 6y - 12", v), Model::XY, "G_sqrt3"};
}

/// First monomial at which two polynomials differ, rendered for reports.
inline std::optional<std::string> first_difference(const Poly& a, const Poly& b) {
  Poly d = a - b;
  if (d.is_zero()) return std::nullopt;
  const auto& [m, c] = d.terms().front();
  Poly mono = Poly::monomial(d.vars(), m, CycloElem(1L));
  return "coefficient of " + mono.to_string() + ": " + a.coeff(m).to_string() + " vs " + b.coeff(m).to_string();
}

inline std::optional<std::string> first_difference(const PolyMap2& f, const PolyMap2& g) {
  if (auto d = first_difference(f.first, g.first)) return "first component, " + *d;
  if (auto d = first_difference(f.second, g.second)) return "second component, " + *d;
  return std::nullopt;
}

struct CommuteReport {
  Family family;
  unsigned m = 0, n = 0;
  bool mn_equals_fmn = false;  // F_m o F_n == F_{mn}
  bool nm_equals_fmn = false;  // F_n o F_m == F_{mn}
  std::string witness;

  bool pass() const { return mn_equals_fmn && nm_equals_fmn; }
};

/// Checks F_m o F_n = F_{mn} = F_n o F_m exactly.
inline CommuteReport verify_commute(Family f, unsigned m, unsigned n) {
  CommuteReport r{f, m, n, false, false, ""};
  PolyMap2 fm = fold(f, m), fn = fold(f, n), fmn = fold(f, m * n);
  PolyMap2 left = compose(fm, fn);
  auto d1 = first_difference(left, fmn);
  r.mn_equals_fmn = !d1;
  if (d1) r.witness = "F_m o F_n vs F_mn: " + *d1;
  if (m == n) {
    r.nm_equals_fmn = r.mn_equals_fmn;
  } else {
    PolyMap2 right = compose(fn, fm);
    auto d2 = first_difference(right, fmn);
    r.nm_equals_fmn = !d2;
    if (d2 && r.witness.empty()) r.witness = "F_n o F_m vs F_mn: " + *d2;
  }
  return r;
}

}  // namespace foldmap
