#include <gtest/gtest.h>

#include "gen.hpp"
#include "kf/smith.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace kf;
using kf::test::C;
using kf::test::M;
using kf::test::P;

TEST(Oracle, LaplaceMatchesBareiss) {
  gen::Gen g(11);
  for (int t = 0; t < 30; ++t) {
    size_t n = static_cast<size_t>(g.integer(1, 4));
    MatPoly A = g.matpoly(n, n, 2);
    EXPECT_EQ(oracle::laplace_det(A), det(A));
  }
  EXPECT_EQ(oracle::laplace_det(M({{"1", "z"}, {"z", "1"}})), P("1 - z^2"));
}

TEST(Oracle, MinorsGcd) {
  MatPoly B = MatPoly::diag({P("z"), P("z^2 - z"), P("1")});
  EXPECT_EQ(oracle::minors_gcd(B, 1), P("1"));
  EXPECT_EQ(oracle::minors_gcd(B, 2), P("z"));
  EXPECT_EQ(oracle::minors_gcd(B, 3), P("z^3 - z^2"));
}

TEST(Oracle, CharpolyAndSignVariations) {
  EXPECT_EQ(oracle::charpoly(C({{"2", "0"}, {"0", "-3"}})), P("z^2 + z - 6"));
  EXPECT_EQ(oracle::sign_variations({1, -1, 0, 2}), 2u);
  EXPECT_EQ(oracle::sign_variations({0, 0, 1}), 0u);
  EXPECT_EQ(oracle::descartes_inertia(C({{"0", "i"}, {"-i", "0"}})), (Inertia{1, 1, 0}));
  EXPECT_EQ(oracle::descartes_inertia(C({{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "-5"}})), (Inertia{1, 1, 1}));
}

TEST(Oracle, DescartesAgreesWithCongruence) {
  gen::Gen g(5);
  for (int t = 0; t < 40; ++t) {
    auto s = g.signs(static_cast<size_t>(g.integer(1, 6)), true);
    CMat H = g.hermitian(s);
    EXPECT_EQ(oracle::descartes_inertia(H), inertia(H));
  }
}

TEST(Oracle, TwoSquaresBruteForce) {
  EXPECT_TRUE(oracle::is_sum_of_two_squares(mpq_class(5, 4)));
  EXPECT_TRUE(oracle::is_sum_of_two_squares(mpq_class(2)));
  EXPECT_FALSE(oracle::is_sum_of_two_squares(mpq_class(3)));
  EXPECT_FALSE(oracle::is_sum_of_two_squares(mpq_class(1, 3)));
  for (int num = 1; num <= 30; ++num)
    for (int den = 1; den <= 6; ++den) {
      mpq_class r(num, den);
      r.canonicalize();
      EXPECT_EQ(two_squares(r).has_value(), oracle::is_sum_of_two_squares(r)) << r;
    }
}
