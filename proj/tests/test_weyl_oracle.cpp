#include <random>

#include <gtest/gtest.h>

#include "foldmap/weyl_oracle.hpp"

using namespace foldmap;

TEST(WeylOracle, GroupOrdersAndOrbits) {
  for (Family f : kAllFamilies) {
    RootSystemData r = root_system(f);
    EXPECT_EQ(r.weyl.size(), expected_weyl_order(f));
    EXPECT_TRUE(weyl_closed(r));
    EXPECT_EQ(cartan_from_realization(r), r.cartan);
    const std::size_t orbit = f == Family::A2 ? 3 : f == Family::B2 ? 4 : 6;
    EXPECT_EQ(r.orbits[0].size(), orbit);
    EXPECT_EQ(r.orbits[1].size(), orbit);
  }
}

TEST(WeylOracle, PhiAtOriginGivesTheConstantMaps) {
  for (Family f : kAllFamilies) {
    RootSystemData r = root_system(f);
    CPair v = phi(r, calibrate(r), {0.0, 0.0});
    PolyMap2 f0 = fold(f, 0);
    std::array<std::complex<double>, 2> pt{};
    EXPECT_NEAR(std::abs(v[0] - f0.first.evaluate(std::span<const std::complex<double>>(pt))), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(v[1] - f0.second.evaluate(std::span<const std::complex<double>>(pt))), 0.0, 1e-12);
  }
}

TEST(WeylOracle, A2CoordinatesAreConjugate) {
  RootSystemData r = root_system(Family::A2);
  CPair v = raw_phi(r, {0.123, 0.456});
  EXPECT_NEAR(std::abs(v[1] - std::conj(v[0])), 0.0, 1e-12);
}

TEST(WeylOracle, PhiIsWeylInvariant) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (Family f : kAllFamilies) {
    RootSystemData r = root_system(f);
    for (int k = 0; k < 20; ++k) {
      TorusPoint t{u(rng), u(rng)};
      CPair base = raw_phi(r, t);
      for (const auto& g : r.weyl) {
        CPair moved = raw_phi(r, dual_action(g, t));
        EXPECT_NEAR(std::abs(moved[0] - base[0]) + std::abs(moved[1] - base[1]), 0.0, 1e-9);
      }
    }
  }
}

TEST(WeylOracle, ScalingIdentity) {
  EXPECT_TRUE(check_scaling(Family::A2, 2, 100, 1e-8).pass());
  EXPECT_TRUE(check_scaling(Family::G2, 3, 100, 1e-7).pass());
  EXPECT_EQ(check_scaling(Family::B2, 1, 50, 1e-12).max_residual, 0.0);
}

TEST(WeylOracle, ScalingDetectsAWrongMap) {
  // F_3 is not the multiplication-by-2 map.
  RootSystemData r = root_system(Family::B2);
  Calibration cal = calibrate(r);
  EXPECT_GT(scaling_residual(r, cal.swapped, fold(Family::B2, 3), 2, {0.1, 0.37}), 1e-3);
}

TEST(WeylOracle, ScalingIsSeedDeterministic) {
  EXPECT_EQ(check_scaling(Family::G2, 4, 30, 1e-7, 5).max_residual, check_scaling(Family::G2, 4, 30, 1e-7, 5).max_residual);
}

TEST(WeylOracle, Chebyshev) {
  const VarList t{"t"};
  EXPECT_EQ(chebyshev(0), parse_poly("2", t));
  EXPECT_EQ(chebyshev(1), parse_poly("t", t));
  EXPECT_EQ(chebyshev(2), parse_poly("t^2 - 2", t));
  EXPECT_EQ(chebyshev(3), parse_poly("t^3 - 3t", t));
  // T_n(s + 1/s) = s^n + s^-n, checked numerically at s = 1.7.
  for (unsigned n = 0; n <= 10; ++n) {
    std::array<std::complex<double>, 1> pt{1.7 + 1 / 1.7};
    EXPECT_NEAR(chebyshev(n).evaluate(std::span<const std::complex<double>>(pt)).real(),
                std::pow(1.7, n) + std::pow(1.7, -static_cast<double>(n)), 1e-8);
  }
}

TEST(WeylOracle, BFunctionalEquation) {
  for (unsigned n = 0; n <= 15; ++n) EXPECT_TRUE(verify_B_functional(n).pass) << n;
}
