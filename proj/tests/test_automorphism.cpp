#include <gtest/gtest.h>

#include "foldmap/automorphism.hpp"

using namespace foldmap;

namespace {

AffineMap2 xy_map(long a, long b, long c, long d, long e, long f) { return {{a, b, c, d, e, f}, Model::XY}; }

}  // namespace

TEST(Automorphism, MembershipExamples) {
  AffineMap2 flip = xy_map(-1, 0, 0, 0, 1, 0);
  EXPECT_TRUE(is_member(flip, fold(Family::B2, 3)));
  EXPECT_FALSE(is_member(flip, fold(Family::B2, 4)));
  const CycloElem w = CycloElem::omega();
  AffineMap2 rot{{w, 0L, 0L, 0L, w.pow(2), 0L}, Model::ZW};
  EXPECT_TRUE(is_member(rot, fold(Family::A2, 4)));
  EXPECT_FALSE(is_member(rot, fold(Family::A2, 5)));
  AffineMap2 swap{{0L, 1L, 0L, 1L, 0L, 0L}, Model::ZW};
  for (unsigned n = 0; n <= 12; ++n) EXPECT_TRUE(is_member(swap, fold(Family::A2, n)));
}

TEST(Automorphism, MembershipPreconditions) {
  EXPECT_THROW(is_member(xy_map(1, 1, 0, 1, 1, 0), fold(Family::B2, 3)), math_error);
  EXPECT_THROW(is_member(AffineMap2::identity(Model::ZW), fold(Family::B2, 3)), context_error);
}

TEST(Automorphism, AffineAlgebra) {
  AffineMap2 p = xy_map(2, 1, 3, 1, 1, -1), q = xy_map(0, 1, 0, -1, 0, 5);
  EXPECT_EQ(compose(p, p.inverse()), AffineMap2::identity(Model::XY));
  EXPECT_EQ(compose(p.inverse(), p), AffineMap2::identity(Model::XY));
  // Composition of affine maps agrees with composition of the polynomial maps.
  EXPECT_EQ(compose(p, q).as_map(), compose(p.as_map(), q.as_map()));
  EXPECT_EQ(p.to_string(), "(x, y) -> (2*x + y + 3, x + y - 1)");
}

TEST(Automorphism, ClaimedGroups) {
  SolutionSet a7 = claimed_group(Family::A2, 7);
  EXPECT_EQ(a7.order(), 6U);
  EXPECT_EQ(a7.label, "S3");
  SolutionSet a5 = claimed_group(Family::A2, 5);
  EXPECT_EQ(a5.order(), 2U);
  EXPECT_EQ(a5.label, "mu2");
  EXPECT_EQ(claimed_group(Family::G2, 9).label, "trivial");
  EXPECT_EQ(claimed_group(Family::B2, 9).label, "mu2");
  EXPECT_EQ(claimed_group(Family::B2, 8).label, "trivial");
  EXPECT_THROW(claimed_group(Family::B2, 1), std::invalid_argument);
}

TEST(Automorphism, GroupTablesMatchTheAbstractGroups) {
  for (unsigned n = 2; n <= 12; ++n) {
    for (Family f : kAllFamilies) {
      SolutionSet s = claimed_group(f, n);
      EXPECT_TRUE(s.closed);
      EXPECT_EQ(s.label, expected_group_label(f, n));
      // Each row of the table is a permutation (Latin square).
      for (const auto& row : s.table) {
        std::vector<int> sorted = row;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k) EXPECT_EQ(sorted[k], static_cast<int>(k));
      }
    }
  }
}

TEST(Automorphism, SolutionSetLabels) {
  EXPECT_EQ(make_solution_set({AffineMap2::identity(Model::XY)}).label, "trivial");
  EXPECT_EQ(make_solution_set({xy_map(-1, 0, 0, 0, 1, 0)}).label, "not-a-group");
  const CycloElem i = CycloElem::i();
  std::vector<AffineMap2> c4;
  for (long k = 0; k < 4; ++k) c4.push_back({{i.pow(static_cast<unsigned long>(k)), 0L, 0L, 0L, 1L, 0L}, Model::XY});
  SolutionSet s = make_solution_set(c4);
  EXPECT_TRUE(s.closed);
  EXPECT_EQ(s.label, "order-4");
}

TEST(Automorphism, S3ElementsPermuteTheTriangle) {
  for (unsigned n : {4U, 7U, 10U}) {
    for (const auto& e : claimed_group(Family::A2, n).elements) EXPECT_TRUE(permutes_unit_triangle(e));
  }
  AffineMap2 scale{{CycloElem(2L), 0L, 0L, 0L, CycloElem(2L), 0L}, Model::ZW};
  EXPECT_FALSE(permutes_unit_triangle(scale));
}

TEST(Automorphism, SolverExamples) {
  EXPECT_EQ(solve_aut(Family::B2, 5).solutions.elements, claimed_group(Family::B2, 5).elements);
  EXPECT_EQ(solve_aut(Family::B2, 6).solutions.elements, claimed_group(Family::B2, 6).elements);
  EXPECT_EQ(solve_aut(Family::A2, 4).solutions.elements, claimed_group(Family::A2, 4).elements);
  EXPECT_EQ(solve_aut(Family::G2, 3).solutions.elements, claimed_group(Family::G2, 3).elements);
}

TEST(Automorphism, SolverIsSoundAndComplete) {
  for (Family f : kAllFamilies) {
    for (unsigned n = 2; n <= 6; ++n) {
      SolveResult r = solve_aut(f, n);
      EXPECT_TRUE(r.complete()) << family_name(f) << " " << n;
      for (const auto& e : r.solutions.elements) EXPECT_TRUE(is_member(e, fold(f, n)));
      EXPECT_EQ(r.solutions.elements, claimed_group(f, n).elements) << family_name(f) << " " << n;
    }
  }
}

TEST(Automorphism, DepthCapReportsUnresolved) {
  SolveOptions opts;
  opts.max_depth = 0;
  SolveResult r = solve_aut(Family::A2, 4, opts);
  EXPECT_FALSE(r.complete());
  EXPECT_NE(r.unresolved.front().find("depth"), std::string::npos);
}

TEST(Automorphism, UnitPolynomialToolsForTheSolver) {
  // gcd(t^6 - 1, t^4 - 1) = t^2 - 1
  EXPECT_EQ(gcd(UPoly::cyclic(6), UPoly::cyclic(4)), UPoly::cyclic(2));
  // squarefree part of (t^3 - 1)^2 t is (t^3 - 1) t
  UPoly p = UPoly::from_poly(parse_poly("(a^3 - 1)^2 a", {"a"}), 0);
  EXPECT_EQ(squarefree_part(p), UPoly::from_poly(parse_poly("a^4 - a", {"a"}), 0));
}
