#include <random>

#include <gtest/gtest.h>

#include "foldmap/folding.hpp"
#include "foldmap/poly_json.hpp"
#include "foldmap/poly_parse.hpp"

using namespace foldmap;

namespace {

Poly P(const char* s, const VarList& v = xy_vars()) { return parse_poly(s, v); }

Poly random_poly(std::mt19937& rng, const VarList& vars, int terms, unsigned max_exp) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<unsigned> ex(0, max_exp);
  Poly p(vars);
  for (int t = 0; t < terms; ++t) {
    Monomial m(vars.size());
    for (std::size_t k = 0; k < vars.size(); ++k) m.set(k, ex(rng));
    CycloElem c(Rational(coef(rng)), Rational(coef(rng)), 0, 0);
    p = p + Poly::monomial(vars, m, c);
  }
  return p;
}

}  // namespace

TEST(Poly, ParseAndPrint) {
  EXPECT_EQ(P("x^2 - 2y - 4").to_string(), "x^2 - 2*y - 4");
  EXPECT_EQ(P("(x + y)^2"), P("x^2 + 2xy + y^2"));
  EXPECT_EQ(P("3*x*y - x y"), P("2xy"));
  EXPECT_EQ(P("1/2 x"), P("x") * CycloElem(Rational(1, 2)));
  EXPECT_THROW(P("x +"), math_error);
  EXPECT_THROW(P("q"), context_error);
}

TEST(Poly, StorageIsDescendingGrlex) {
  Poly p = P("1 + y + x + y^2 + x*y + x^2 + x^3");
  ASSERT_EQ(p.size(), 7U);
  for (std::size_t k = 1; k < p.size(); ++k) EXPECT_TRUE(grlex_less(p.terms()[k].first, p.terms()[k - 1].first));
  EXPECT_EQ(p.terms().front().first, (Monomial{3, 0}));
  EXPECT_EQ(p.terms()[1].first, (Monomial{2, 0}));
}

TEST(Poly, CoefficientsSlicesAndDegrees) {
  Poly p = P("x^3 - 3xy - 9x - 6y - 12");
  EXPECT_EQ(p.coeff(Monomial{1, 1}), CycloElem(-3L));
  EXPECT_EQ(p.coeff(Monomial{2, 2}), CycloElem());
  EXPECT_EQ(p.total_degree(), 3);
  EXPECT_EQ(p.degree_in(1), 1);
  EXPECT_EQ(p.degree_slice(1), P("-9x - 6y"));
  EXPECT_EQ(Poly(xy_vars()).total_degree(), -1);
}

TEST(Poly, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    Poly a = random_poly(rng, xy_vars(), 6, 4), b = random_poly(rng, xy_vars(), 6, 4), c = random_poly(rng, xy_vars(), 6, 4);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(Poly, SubstitutionIsARingHomomorphism) {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    Poly a = random_poly(rng, xy_vars(), 5, 3), b = random_poly(rng, xy_vars(), 5, 3);
    std::vector<Poly> img{random_poly(rng, xy_vars(), 3, 2), random_poly(rng, xy_vars(), 3, 2)};
    EXPECT_EQ((a * b).substitute(img), a.substitute(img) * b.substitute(img));
    EXPECT_EQ((a + b).substitute(img), a.substitute(img) + b.substitute(img));
  }
}

TEST(Poly, SubstitutionAgreesWithEvaluation) {
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    Poly a = random_poly(rng, xy_vars(), 6, 4);
    std::vector<Poly> img{random_poly(rng, xy_vars(), 3, 2), random_poly(rng, xy_vars(), 3, 2)};
    std::array<CycloElem, 2> pt{CycloElem(Rational(2, 3)), CycloElem::zeta() + CycloElem(1L)};
    std::array<CycloElem, 2> inner{img[0].evaluate(std::span<const CycloElem>(pt)),
                                   img[1].evaluate(std::span<const CycloElem>(pt))};
    EXPECT_EQ(a.substitute(img).evaluate(std::span<const CycloElem>(pt)),
              a.evaluate(std::span<const CycloElem>(inner)));
  }
}

TEST(Poly, NamedSubstitutionNeedsEveryImage) {
  Poly p = P("x + y");
  std::map<std::string, Poly> img{{"x", P("y")}};
  EXPECT_THROW(p.substitute(img), context_error);
  img.emplace("y", P("x"));
  EXPECT_EQ(p.substitute(img), p);
}

TEST(Poly, MixingContextsIsAnError) {
  EXPECT_THROW(P("x") + P("z", zw_vars()), context_error);
  EXPECT_THROW(compose(fold(Family::A2, 2), fold(Family::B2, 2)), context_error);
}

TEST(Poly, CollectSplitsByKeptVariables) {
  VarList v{"x", "y", "a"};
  Poly p = parse_poly("a x^2 + 3 x^2 + a^2 y - 1", v);
  auto parts = p.collect({0, 1});
  ASSERT_EQ(parts.size(), 3U);
  EXPECT_EQ(parts[0].first, (Monomial{2, 0}));
  EXPECT_EQ(parts[0].second, parse_poly("a + 3", {"a"}));
  EXPECT_EQ(parts[1].second, parse_poly("a^2", {"a"}));
  EXPECT_EQ(parts[2].second, parse_poly("-1", {"a"}));
}

TEST(Poly, SwapConjugate) {
  Poly p = parse_poly("z^2 - 2w", zw_vars()) * CycloElem::i();
  Poly q = swap_conjugate(p);
  EXPECT_EQ(q, parse_poly("w^2 - 2z", zw_vars()) * (-CycloElem::i()));
  EXPECT_EQ(swap_conjugate(q), p);
}

TEST(Poly, RealFormOfTheA2Maps) {
  PolyMap2 a2 = zw_to_xy(fold(Family::A2, 2));
  EXPECT_EQ(a2.first, P("x^2 - y^2 - 2x"));
  EXPECT_EQ(a2.second, P("2xy + 2y"));
  PolyMap2 a0 = zw_to_xy(fold(Family::A2, 0));
  EXPECT_EQ(a0.first, P("3"));
  EXPECT_TRUE(a0.second.is_zero());
  for (unsigned n = 0; n <= 8; ++n) EXPECT_EQ(xy_to_zw(zw_to_xy(fold(Family::A2, n))), fold(Family::A2, n));
}

TEST(Poly, RealFormFollowsTheXYRecursion) {
  // X_n = x(X_{n-1} - X_{n-2}) - y(Y_{n-1} + Y_{n-2}) + X_{n-3}, likewise Y_n.
  Poly x = P("x"), y = P("y");
  std::vector<PolyMap2> r;
  for (unsigned n = 0; n <= 10; ++n) r.push_back(zw_to_xy(fold(Family::A2, n)));
  for (unsigned n = 3; n <= 10; ++n) {
    EXPECT_EQ(r[n].first, x * (r[n - 1].first - r[n - 2].first) - y * (r[n - 1].second + r[n - 2].second) + r[n - 3].first);
    EXPECT_EQ(r[n].second, x * (r[n - 1].second - r[n - 2].second) + y * (r[n - 1].first + r[n - 2].first) + r[n - 3].second);
  }
}

TEST(Poly, ZwToXyRejectsNonConjugatePairs) {
  PolyMap2 bad{parse_poly("z", zw_vars()), parse_poly("z", zw_vars()), Model::ZW, ""};
  EXPECT_THROW(zw_to_xy(bad), math_error);
}

TEST(PolyJson, RoundTrip) {
  std::mt19937 rng(13);
  for (int t = 0; t < 20; ++t) {
    Poly p = random_poly(rng, zw_vars(), 8, 5) * CycloElem(Rational(1, 3), 0, Rational(-2, 7), 1);
    EXPECT_EQ(poly_from_json(json::parse(to_json(p).dump())), p);
  }
  PolyMap2 g = fold(Family::G2, 7);
  PolyMap2 back = map_from_json(json::parse(to_json(g).dump()));
  EXPECT_EQ(back, g);
  EXPECT_EQ(back.label, g.label);
}

TEST(PolyJson, MalformedInputIsRejected) {
  EXPECT_THROW(poly_from_json(json::parse(R"({"vars":["x"]})")), math_error);
  EXPECT_THROW(poly_from_json(json::parse(R"({"vars":["x"],"terms":[{"e":[1,2],"c":["1","0","0","0"]}]})")),
               context_error);
  EXPECT_THROW(cyclo_from_json(json::parse(R"(["1","0"])")), math_error);
}
