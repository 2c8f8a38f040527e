#include <gtest/gtest.h>

#include "support.hpp"

using namespace kf;
using kf::test::P;
using kf::test::S;

TEST(Poly, DegreeConvention) {
  EXPECT_EQ(Poly().degree(), Poly::kMinusInf);
  EXPECT_EQ(P("3").degree(), 0);
  EXPECT_EQ(P("z^3 + 1").degree(), 3);
  EXPECT_EQ((P("z^2 + i") * P("2z - 1")).degree(), 3);
}

TEST(Poly, Rendering) {
  EXPECT_EQ(P("(1/2+i)z^2 - 3").str(), "(1/2+i)z^2 - 3");
  EXPECT_EQ(P("-z + i").str(), "-z + i");
  EXPECT_EQ(P("-i z^2").str(), "-iz^2");
  EXPECT_EQ(Poly().str(), "0");
}

TEST(Poly, Evaluation) {
  EXPECT_EQ(P("z^2 + 1")(GaussianRational::i()), GaussianRational());
  EXPECT_EQ(P("2z - 1")(GaussianRational::make(1, 2)), GaussianRational());
}

TEST(Poly, DivisionAndGcd) {
  auto [q, r] = divmod(P("z^3 - 1"), P("z - 1"));
  EXPECT_EQ(q, P("z^2 + z + 1"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(P("z^2 - 1"), P("2z^2 + 2z")), P("z + 1"));
  EXPECT_EQ(gcd(Poly(), Poly()), Poly());
  EXPECT_EQ(gcd(Poly(), P("3z")), P("z"));
  EXPECT_EQ(lcm(P("z"), P("z - 1")), P("z^2 - z"));
  EXPECT_KF_ERROR(exact_div(P("z"), P("z - 1")), Errc::NotDivisible);
  EXPECT_KF_ERROR(divmod(P("z"), Poly()), Errc::DivisionByZero);
}

TEST(Poly, ParaConjugateOfScalar) {
  Poly p = P("(1+i)z + i");
  EXPECT_EQ(p.conj(), P("(1-i)z - i"));
  GaussianRational a = S("2 - 3i");
  EXPECT_EQ(p.conj()(a), p(a.conj()).conj());
}

TEST(RatFunc, NormalFormAndArithmetic) {
  RatFunc f(P("2z - 2"), P("2z^2 - 2"));
  EXPECT_EQ(f.num(), P("1"));
  EXPECT_EQ(f.den(), P("z + 1"));
  RatFunc g = f + RatFunc(P("1"), P("z - 1"));
  EXPECT_EQ(g.den(), P("z^2 - 1"));
  EXPECT_EQ(g.num(), P("2z"));
  EXPECT_EQ(RatFunc(P("1"), P("z")).str(), "1/z");
  EXPECT_EQ(RatFunc(P("z^2 + 1"), P("z^2")).str(), "(z^2 + 1)/z^2");
}
