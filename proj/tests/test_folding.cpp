#include <gtest/gtest.h>

#include "foldmap/folding.hpp"

using namespace foldmap;

namespace {

Poly XY(const char* s) { return parse_poly(s, xy_vars()); }
Poly ZW(const char* s) { return parse_poly(s, zw_vars()); }

// Elementary symmetric function e_k from power sums p_1..p_k (Newton's identities).
std::vector<Poly> elementary_from_power_sums(const std::vector<Poly>& p, std::size_t k_max) {
  std::vector<Poly> e{Poly::constant(p[0].vars(), CycloElem(1L))};
  for (std::size_t k = 1; k <= k_max; ++k) {
    Poly acc(p[0].vars());
    for (std::size_t i = 1; i <= k; ++i) {
      Poly term = e[k - i] * p[i];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    e.push_back(acc * CycloElem(Rational(1, static_cast<long>(k))));
  }
  return e;
}

// Y_n for G2 from the six base rows and an order-6 recurrence with the given e3.
std::vector<Poly> g2_y_sequence(const Poly& e1, const Poly& e2, const Poly& e3, unsigned upto) {
  std::vector<Poly> y;
  for (unsigned n = 0; n <= 5; ++n) y.push_back(fold(Family::G2, n).second);
  for (unsigned n = 6; n <= upto; ++n) {
    y.push_back(e1 * (y[n - 1] + y[n - 5]) - e2 * (y[n - 2] + y[n - 4]) + e3 * y[n - 3] - y[n - 6]);
  }
  return y;
}

}  // namespace

TEST(Folding, A2BaseCasesMatchTheDisplayedFormulas) {
  EXPECT_EQ(fold(Family::A2, 0).first, ZW("3"));
  EXPECT_EQ(fold(Family::A2, 1).first, ZW("z"));
  EXPECT_EQ(fold(Family::A2, 2).first, ZW("z^2 - 2w"));
  EXPECT_EQ(fold(Family::A2, 3).first, ZW("z^3 - 3 z w + 3"));
  EXPECT_EQ(fold(Family::A2, 4).first, ZW("z^4 - 4 z^2 w + 4 z + 2 w^2"));
  EXPECT_EQ(fold(Family::A2, 5).first, ZW("z^5 - 5 z^3 w + 5 z^2 + 5 z w^2 - 5 w"));
  for (unsigned n = 0; n <= 12; ++n) {
    PolyMap2 a = fold(Family::A2, n);
    EXPECT_EQ(a.second, swap_conjugate(a.first));
    EXPECT_EQ(a.model, Model::ZW);
  }
}

TEST(Folding, B2BaseCasesMatchTheDisplayedFormulas) {
  EXPECT_EQ(fold(Family::B2, 0), (PolyMap2{XY("4"), XY("4"), Model::XY, ""}));
  EXPECT_EQ(fold(Family::B2, 1), (PolyMap2{XY("x"), XY("y"), Model::XY, ""}));
  EXPECT_EQ(fold(Family::B2, 2), (PolyMap2{XY("x^2 -2y - 4"), XY("y^2 - 2x^2 + 4y + 4"), Model::XY, ""}));
  EXPECT_EQ(fold(Family::B2, 3), (PolyMap2{XY("x^3 - 3xy - 3x"), XY("y^3- 3x^2y + 6y^2 + 9y"), Model::XY, ""}));
}

TEST(Folding, G2TableRowsThreeToFive) {
  EXPECT_EQ(fold(Family::G2, 3).first, XY("x^3 - 3 x y - 9 x - 6 y - 12"));
  EXPECT_EQ(fold(Family::G2, 4).first, XY("x^4 - 4 x^2 y - 10 x^2 - 4 x y + 2 y^2 - 8 x + 8 y + 6"));
  EXPECT_EQ(fold(Family::G2, 5).first,
            XY("x^5 - 5 x^3 y - 15 x^3 - 5 x^2 y + 5 x y^2 - 10 x^2 + 35 x y + 10 y^2 + 55 x + 50 y + 60"));
}

TEST(Folding, LabelsAndCaching) {
  EXPECT_EQ(fold(Family::G2, 7).label, "G2_7");
  auto p = folding_family(Family::B2).get(9);
  EXPECT_EQ(p.get(), folding_family(Family::B2).get(9).get());
  EXPECT_EQ(folding_family(Family::G2).arity(), 6U);
}

TEST(Folding, ParseFamily) {
  EXPECT_EQ(parse_family("g2"), Family::G2);
  EXPECT_EQ(parse_family("B2"), Family::B2);
  EXPECT_THROW(parse_family("c2"), std::invalid_argument);
}

// The X recurrence coefficients are the elementary symmetric functions of the
// six orbit exponentials, whose power sums are X_1, X_2, X_3. The Y recurrence
// is derived the same way from Y_1, Y_2, Y_3.
TEST(Folding, G2RecurrenceCoefficientsFollowFromTheTableRows) {
  std::vector<Poly> px, py;
  for (unsigned n = 0; n <= 3; ++n) {
    px.push_back(fold(Family::G2, n).first);
    py.push_back(fold(Family::G2, n).second);
  }
  auto ex = elementary_from_power_sums(px, 3);
  EXPECT_EQ(ex[1], XY("x"));
  EXPECT_EQ(ex[2], XY("x + y + 3"));
  EXPECT_EQ(ex[3], XY("x^2 - 2y - 4"));
  auto ey = elementary_from_power_sums(py, 3);
  EXPECT_EQ(ey[1], XY("y"));
  EXPECT_EQ(ey[2], XY("x^3 - 3xy - 9x - 5y - 9"));
  EXPECT_EQ(ey[3], XY("y^2 - 2x^3 + 6xy + 18x + 12y + 20"));
}

TEST(Folding, G2RecurrencePalindromeReproducesRowsFourAndFive) {
  // With the derived coefficients the power sums p_4, p_5 from Newton's
  // identities for a palindromic sextic agree with the table.
  Poly e1 = XY("y"), e2 = XY("x^3 - 3xy - 9x - 5y - 9"), e3 = XY("y^2 - 2x^3 + 6xy + 18x + 12y + 20");
  std::vector<Poly> p;
  for (unsigned n = 0; n <= 3; ++n) p.push_back(fold(Family::G2, n).second);
  // Palindromic: e4 = e2, e5 = e1, e6 = 1.
  std::vector<Poly> e{XY("1"), e1, e2, e3, e2, e1, XY("1")};
  for (std::size_t k = 4; k <= 5; ++k) {
    Poly acc = e[k] * CycloElem(static_cast<long>(k)) * CycloElem(k % 2 == 1 ? 1L : -1L);
    for (std::size_t i = 1; i < k; ++i) {
      Poly term = e[i] * p[k - i];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    p.push_back(acc);
  }
  EXPECT_EQ(p[4], fold(Family::G2, 4).second);
  EXPECT_EQ(p[5], fold(Family::G2, 5).second);
}

TEST(Folding, G2RecurrenceWithConstantEightBreaksCommutation) {
  Poly e1 = XY("y"), e2 = XY("x^3 - 3xy - 9x - 5y - 9");
  auto eight = g2_y_sequence(e1, e2, XY("y^2 - 2x^3 + 6xy + 18x + 12y + 8"), 6);
  auto twenty = g2_y_sequence(e1, e2, XY("y^2 - 2x^3 + 6xy + 18x + 12y + 20"), 6);
  Poly y6 = compose(fold(Family::G2, 2), fold(Family::G2, 3)).second;
  EXPECT_NE(eight[6], y6);
  EXPECT_EQ(twenty[6], y6);
  EXPECT_EQ(fold(Family::G2, 6).second, y6);
}

TEST(Folding, HalfFoldsSquareToFolds) {
  PolyMap2 b = half_fold(HalfFold::B_sqrt2), g = half_fold(HalfFold::G_sqrt3);
  EXPECT_EQ(compose(b, b), fold(Family::B2, 2));
  EXPECT_EQ(compose(g, g), fold(Family::G2, 3));
}

TEST(Folding, HalfFoldsCommuteWithFolds) {
  PolyMap2 b = half_fold(HalfFold::B_sqrt2), g = half_fold(HalfFold::G_sqrt3);
  for (unsigned n = 1; n <= 5; ++n) {
    EXPECT_EQ(compose(b, fold(Family::B2, n)), compose(fold(Family::B2, n), b)) << n;
    EXPECT_EQ(compose(g, fold(Family::G2, n)), compose(fold(Family::G2, n), g)) << n;
  }
}

TEST(Folding, CommutationSmallIndices) {
  for (Family f : kAllFamilies) {
    for (unsigned m = 0; m <= 4; ++m) {
      for (unsigned n = 0; n <= 4; ++n) {
        CommuteReport r = verify_commute(f, m, n);
        EXPECT_TRUE(r.pass()) << family_name(f) << " " << m << " " << n << ": " << r.witness;
      }
    }
  }
}

TEST(Folding, CommutationFailureCarriesAWitness) {
  PolyMap2 b2 = fold(Family::B2, 2);
  PolyMap2 wrong = b2;
  wrong.first = wrong.first + XY("x");
  auto d = first_difference(wrong, b2);
  ASSERT_TRUE(d.has_value());
  EXPECT_NE(d->find("first component"), std::string::npos);
}

TEST(Folding, B2ParityIdentity) {
  std::vector<Poly> flip{XY("-x"), XY("y")};
  for (unsigned n = 0; n <= 20; ++n) {
    PolyMap2 b = fold(Family::B2, n);
    Poly sign = XY(n % 2 == 0 ? "1" : "-1");
    EXPECT_EQ(b.first.substitute(flip), b.first * sign) << n;
    EXPECT_EQ(b.second.substitute(flip), b.second) << n;
  }
}

TEST(Folding, A2SparsityModThree) {
  for (unsigned n = 0; n <= 30; ++n) {
    const Poly a = fold(Family::A2, n).first;
    for (const auto& [m, c] : a.terms()) {
      EXPECT_EQ(((static_cast<long>(m[0]) - static_cast<long>(m[1]) - static_cast<long>(n)) % 3 + 3) % 3, 0)
          << "n=" << n;
    }
  }
}

TEST(Folding, A2CubeRootEquivariance) {
  const CycloElem w = CycloElem::omega();
  std::vector<Poly> img{ZW("z") * w, ZW("w") * w.pow(2)};
  for (unsigned n = 0; n <= 25; ++n) {
    Poly a = fold(Family::A2, n).first;
    EXPECT_EQ(a.substitute(img), a * w.pow(n)) << n;
  }
}

TEST(Folding, IntegerCoefficients) {
  for (Family f : kAllFamilies) {
    for (unsigned n = 0; n <= 12; ++n) {
      const PolyMap2 m = fold(f, n);
      for (const Poly* p : {&m.first, &m.second}) {
        for (const auto& t : p->terms()) EXPECT_TRUE(t.second.is_integer());
      }
    }
  }
}
