#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace foldmap {

/// Raised on division by zero and on malformed numeric input.
class math_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

using Rational = mpq_class;

/// Parse "p" or "p/q" into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  Rational r;
  std::string s(text);
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw math_error("malformed rational: '" + s + "'");
  }
  if (r.get_den() == 0) {
    throw math_error("zero denominator in rational: '" + s + "'");
  }
  r.canonicalize();
  return r;
}

inline std::string rational_string(const Rational& r) { return r.get_str(10); }

/**
 * Exact element of the cyclotomic field Q(zeta), zeta a primitive 12th root
 * of unity, stored as c0 + c1*zeta + c2*zeta^2 + c3*zeta^3 with the reduction
 * zeta^4 = zeta^2 - 1.
 *
 * The complex embedding used throughout is zeta = exp(i*pi/6), so that
 * zeta^3 = i and zeta^4 = exp(2*pi*i/3) is a primitive cube root of unity.
 */
class CycloElem {
public:
  CycloElem() = default;
  CycloElem(long v) : c_{Rational(v), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  CycloElem(const Rational& v) : c_{v, 0, 0, 0} { c_[0].canonicalize(); }  // NOLINT(google-explicit-constructor)
  CycloElem(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
    for (auto& c : c_) c.canonicalize();
  }

  /// zeta^k for any integer k.
  static CycloElem zeta_pow(long k) {
    long r = ((k % 12) + 12) % 12;
    // zeta^6 = -1, so zeta^r = -zeta^(r-6) for r >= 6.
    bool neg = r >= 6;
    if (neg) r -= 6;
    CycloElem out;
    switch (r) {
      case 0: out.c_[0] = 1; break;
      case 1: out.c_[1] = 1; break;
      case 2: out.c_[2] = 1; break;
      case 3: out.c_[3] = 1; break;
      case 4: out.c_[0] = -1; out.c_[2] = 1; break;  // zeta^2 - 1
      case 5: out.c_[1] = -1; out.c_[3] = 1; break;  // zeta^3 - zeta
      default: break;
    }
    return neg ? -out : out;
  }
  static CycloElem zeta() { return zeta_pow(1); }
  static CycloElem i() { return zeta_pow(3); }
  /// Primitive cube root of unity exp(2*pi*i/3).
  static CycloElem omega() { return zeta_pow(4); }

  const Rational& operator[](std::size_t k) const { return c_[k]; }
  const std::array<Rational, 4>& components() const { return c_; }

  bool is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
  }
  bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  bool is_one() const { return is_rational() && c_[0] == 1; }
  bool is_integer() const { return is_rational() && c_[0].get_den() == 1; }

  CycloElem operator-() const {
    CycloElem r;
    for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
  }

  CycloElem& operator+=(const CycloElem& o) {
    if (o.is_rational()) {
      c_[0] += o.c_[0];
    } else {
      for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    }
    return *this;
  }
  CycloElem& operator-=(const CycloElem& o) {
    if (o.is_rational()) {
      c_[0] -= o.c_[0];
    } else {
      for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    }
    return *this;
  }

  CycloElem& operator*=(const CycloElem& o) {
    if (o.is_rational()) {
      if (sgn(o.c_[0]) == 0) return *this = CycloElem{};
      for (auto& c : c_) {
        if (sgn(c) != 0) c *= o.c_[0];
      }
      return *this;
    }
    if (is_rational()) {
      Rational s = c_[0];
      *this = o;
      return *this *= CycloElem(s);
    }
    // Schoolbook product of two cubics in zeta, then fold degrees 4..6.
    std::array<Rational, 7> t;
    for (int a = 0; a < 4; ++a) {
      if (sgn(c_[a]) == 0) continue;
      for (int b = 0; b < 4; ++b) {
        if (sgn(o.c_[b]) == 0) continue;
        t[a + b] += c_[a] * o.c_[b];
      }
    }
    // zeta^6 = -1, zeta^5 = zeta^3 - zeta, zeta^4 = zeta^2 - 1
    t[0] -= t[6];
    t[3] += t[5];
    t[1] -= t[5];
    t[2] += t[4];
    t[0] -= t[4];
    for (int k = 0; k < 4; ++k) c_[k] = std::move(t[k]);
    return *this;
  }

  /// Image under the Galois automorphism zeta -> zeta^k, k coprime to 12.
  CycloElem galois(long k) const {
    CycloElem out;
    for (int j = 0; j < 4; ++j) {
      if (sgn(c_[j]) == 0) continue;
      CycloElem term = zeta_pow(k * j);
      term *= CycloElem(c_[j]);
      out += term;
    }
    return out;
  }

  /// Complex conjugation, zeta -> zeta^11.
  CycloElem conj() const {
    // zeta^-1 = zeta - zeta^3, zeta^-2 = 1 - zeta^2, zeta^-3 = -zeta^3
    CycloElem r;
    r.c_[0] = c_[0] + c_[2];
    r.c_[1] = c_[1];
    r.c_[2] = -c_[2];
    r.c_[3] = -c_[1] - c_[3];
    return r;
  }

  /// Field norm down to Q.
  Rational norm() const {
    CycloElem p = *this;
    p *= galois(5);
    p *= galois(7);
    p *= galois(11);
    return p.c_[0];
  }

  CycloElem inverse() const {
    if (is_zero()) throw math_error("division by zero in Q(zeta12)");
    if (is_rational()) return CycloElem(Rational(1) / c_[0]);
    CycloElem adj = galois(5);
    adj *= galois(7);
    adj *= galois(11);
    CycloElem p = adj;
    p *= *this;
    return adj *= CycloElem(Rational(1) / p.c_[0]);
  }

  CycloElem& operator/=(const CycloElem& o) { return *this *= o.inverse(); }

  /// *this += a * b without materializing the product when both are rational.
  void add_product(const CycloElem& a, const CycloElem& b) {
    if (a.is_rational() && b.is_rational()) {
      thread_local Rational tmp;
      mpq_mul(tmp.get_mpq_t(), a.c_[0].get_mpq_t(), b.c_[0].get_mpq_t());
      c_[0] += tmp;
      return;
    }
    *this += a * b;
  }

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend CycloElem operator/(CycloElem a, const CycloElem& b) { return a /= b; }

  friend bool operator==(const CycloElem& a, const CycloElem& b) {
    return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] && a.c_[3] == b.c_[3];
  }
  friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

  /// Total order used only for canonical sorting of solution sets.
  friend bool canonical_less(const CycloElem& a, const CycloElem& b) {
    for (int k = 0; k < 4; ++k) {
      int c = cmp(a.c_[k], b.c_[k]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  CycloElem pow(unsigned long e) const {
    CycloElem result(1L), base = *this;
    while (e != 0) {
      if ((e & 1U) != 0) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  std::complex<double> to_complex() const {
    static const std::array<std::complex<double>, 4> powers = {
        std::complex<double>(1.0, 0.0),
        std::polar(1.0, M_PI / 6.0),
        std::polar(1.0, M_PI / 3.0),
        std::complex<double>(0.0, 1.0),
    };
    std::complex<double> v;
    for (int k = 0; k < 4; ++k) v += c_[k].get_d() * powers[k];
    return v;
  }

  /// Human-readable form, e.g. "3", "-1/2", "(1 + 2*z^3)" where z is zeta12.
  std::string to_string() const {
    if (is_rational()) return rational_string(c_[0]);
    std::string out;
    for (int k = 0; k < 4; ++k) {
      if (sgn(c_[k]) == 0) continue;
      std::string mag = rational_string(abs(c_[k]));
      bool neg = sgn(c_[k]) < 0;
      if (out.empty()) {
        out += neg ? "-" : "";
      } else {
        out += neg ? " - " : " + ";
      }
      if (k == 0) {
        out += mag;
      } else {
        if (mag != "1") out += mag + "*";
        out += k == 1 ? "z12" : "z12^" + std::to_string(k);
      }
    }
    return "(" + out + ")";
  }

private:
  std::array<Rational, 4> c_;
};

inline std::ostream& operator<<(std::ostream& os, const CycloElem& v) { return os << v.to_string(); }

/// All roots of unity of order dividing g; g must divide 12.
inline std::vector<CycloElem> roots_of_unity(long g) {
  if (g <= 0 || 12 % g != 0) {
    throw math_error("roots of unity of order " + std::to_string(g) + " do not all lie in Q(zeta12)");
  }
  std::vector<CycloElem> out;
  for (long j = 0; j < g; ++j) out.push_back(CycloElem::zeta_pow(j * (12 / g)));
  return out;
}

}  // namespace foldmap
