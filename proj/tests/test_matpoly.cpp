#include <gtest/gtest.h>

#include "kf/kernel.hpp"
#include "support.hpp"

using namespace kf;
using kf::test::C;
using kf::test::load;
using kf::test::M;
using kf::test::P;
using kf::test::S;

namespace {

MatPoly xy(const std::string& ex) {
  return hcat(load(ex + "-X.json").matpoly(), load(ex + "-Y.json").matpoly());
}

MatPoly T65() {
  return M({{"0", "0", "z", "0", "0", "1"}, {"0", "0", "0", "0", "1", "0"}, {"1", "0", "0", "0", "0", "0"}});
}

}  // namespace

TEST(MatPoly, ParaConjugate) {
  EXPECT_EQ(para_conjugate(M({{"z", "i"}})), M({{"z"}, {"-i"}}));
  EXPECT_EQ(para_conjugate(MatPoly::identity(3)), MatPoly::identity(3));
  MatPoly N = M({{"0", "-iz", "0"}, {"0", "0", "-1"}, {"-iz", "0", "0"}});
  EXPECT_EQ(para_conjugate(N), M({{"0", "0", "iz"}, {"iz", "0", "0"}, {"0", "-1", "0"}}));
  MatPoly A = M({{"(1+i)z^2 - 3", "z"}, {"2i", "z - i"}});
  EXPECT_EQ(para_conjugate(para_conjugate(A)), A);
  MatPoly B = M({{"z", "1"}, {"iz^2", "3"}});
  EXPECT_EQ(para_conjugate(A * B), para_conjugate(B) * para_conjugate(A));
}

TEST(MatPoly, Eval) {
  EXPECT_EQ(eval(M({{"1", "z"}, {"0", "1"}}), GaussianRational::i()), C({{"1", "i"}, {"0", "1"}}));
  EXPECT_EQ(eval(T65(), GaussianRational()),
            C({{"0", "0", "0", "0", "0", "1"}, {"0", "0", "0", "0", "1", "0"}, {"1", "0", "0", "0", "0", "0"}}));
  CMat P0 = eval(xy("example65"), GaussianRational());
  EXPECT_EQ(P0, CMat(3, 6));
  MatPoly A = M({{"z^2", "i"}, {"1", "z - 1"}});
  MatPoly B = M({{"z", "2"}, {"3i", "z^3"}});
  for (const char* a : {"0", "1", "i", "2 - i", "1/3"})
    EXPECT_EQ(eval(A * B, S(a)), eval(A, S(a)) * eval(B, S(a)));
}

TEST(MatPoly, GenericRank) {
  EXPECT_EQ(generic_rank(MatPoly(2, 3)), 0u);
  EXPECT_EQ(generic_rank(M({{"1", "z"}, {"z", "z^2"}})), 1u);
  EXPECT_EQ(generic_rank(xy("example65")), 3u);
  EXPECT_EQ(generic_rank(xy("example64")), 3u);
}

TEST(MatPoly, RowData) {
  RowData id = row_data(hcat(MatPoly::identity(2), MatPoly(2, 2)));
  EXPECT_EQ(id.sigma, (std::vector<int>{0, 0}));
  EXPECT_EQ(id.leading, hcat(CMat::identity(2), CMat(2, 2)));
  EXPECT_EQ(id.extdeg, 0);
  EXPECT_EQ(id.intdeg, 0);

  RowData t = row_data(T65());
  EXPECT_EQ(t.sigma, (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(t.extdeg, 1);

  RowData x = row_data(xy("example64"));
  EXPECT_EQ(x.sigma, (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(x.extdeg, 4);
  EXPECT_EQ(x.intdeg, 4);
}

TEST(MatPoly, RowDataZeroRow) {
  RowData r = row_data(M({{"z", "1"}, {"0", "0"}}));
  EXPECT_EQ(r.sigma, (std::vector<int>{1, 0}));
  EXPECT_EQ(r.leading, C({{"1", "0"}, {"0", "0"}}));
  EXPECT_EQ(r.intdeg, Poly::kMinusInf);
}

TEST(MatPoly, Determinant) {
  EXPECT_EQ(det(M({{"0", "0", "1"}, {"0", "1", "0"}, {"z", "0", "0"}})), P("-z"));
  EXPECT_EQ(det(M({{"1", "z"}, {"z", "z^2"}})), Poly());
  EXPECT_EQ(det(MatPoly::identity(4)), P("1"));
}

TEST(MatPoly, ClearDenominators) {
  MatPoly poly = M({{"z", "1"}, {"i", "z^2"}});
  ClearedColumns a = clear_denominators(RatMat(poly));
  EXPECT_EQ(a.q, P("1"));
  EXPECT_EQ(a.B, poly);

  Matrix<RatFunc> col(2, 1);
  col(0, 0) = RatFunc(P("1"), P("z"));
  col(1, 0) = RatFunc(P("1"));
  ClearedColumns b = clear_denominators(col);
  EXPECT_EQ(b.q, P("z"));
  EXPECT_EQ(b.B, M({{"1"}, {"z"}}));

  Matrix<RatFunc> row(1, 2);
  row(0, 0) = RatFunc(P("1"), P("z - 1"));
  row(0, 1) = RatFunc(P("1"), P("z^2 - z"));
  ClearedColumns c = clear_denominators(row);
  EXPECT_EQ(c.q, P("z^2 - z"));
  EXPECT_EQ(c.B, M({{"z", "1"}}));
}

TEST(RatMat, NormalFormAndInverse) {
  RatMat r(M({{"2z", "0"}, {"0", "2z"}}), P("z^2"));
  EXPECT_EQ(r.den(), P("z"));
  EXPECT_EQ(r.num(), M({{"2", "0"}, {"0", "2"}}));

  MatPoly W = M({{"0", "0", "1"}, {"0", "1", "0"}, {"z", "0", "0"}});
  RatMat Wi = inverse(W);
  EXPECT_EQ(Wi.den(), P("z"));
  EXPECT_EQ(Wi * RatMat(W), RatMat(MatPoly::identity(3)));
  EXPECT_KF_ERROR(inverse(M({{"1", "z"}, {"z", "z^2"}})), Errc::Singular);
  EXPECT_KF_ERROR(Wi.eval(GaussianRational()), Errc::DivisionByZero);
  EXPECT_EQ(Wi.eval(S("2")), *inverse(eval(W, S("2"))));
}

TEST(RatMat, ParaConjugate) {
  RatMat r(M({{"i", "z"}}), P("z - i"));
  RatMat c = para_conjugate(r);
  EXPECT_EQ(c.den(), P("z + i"));
  EXPECT_EQ(c.num(), M({{"-i"}, {"z"}}));
  EXPECT_EQ(para_conjugate(c), r);
}

TEST(Kernel, DivideByZMinusWstar) {
  BiPoly n(1, 1);
  n.add(1, 0, C({{"1"}}));
  n.add(0, 1, C({{"-1"}}));
  BivariateKernel k = divide_by_z_minus_wstar(n);
  EXPECT_EQ(k.p(), 1u);
  EXPECT_EQ(k.block(0, 0), C({{"1"}}));

  BiPoly sq(1, 1);
  sq.add(2, 0, C({{"1"}}));
  sq.add(0, 2, C({{"-1"}}));
  BivariateKernel s = divide_by_z_minus_wstar(sq);
  EXPECT_EQ(s.p(), 2u);
  EXPECT_EQ(s.block(0, 0), C({{"0"}}));
  EXPECT_EQ(s.block(1, 0), C({{"1"}}));
  EXPECT_EQ(s.block(0, 1), C({{"1"}}));
  EXPECT_EQ(s.block(1, 1), C({{"0"}}));

  BiPoly bad(1, 1);
  bad.add(1, 0, C({{"1"}}));
  EXPECT_KF_ERROR(divide_by_z_minus_wstar(bad), Errc::NotDivisible);
}

TEST(Kernel, DivideExample65Numerator) {
  MatPoly Mm = load("example65-M.json").matpoly();
  MatPoly N = load("example65-N.json").matpoly();
  BivariateKernel k = divide_by_z_minus_wstar(outer(Mm, N) - outer(N, Mm));
  EXPECT_EQ(k, load("example65-kernel.json").kernel());
  CMat v = k.eval(S("2"), S("3i"));
  EXPECT_EQ(v(2, 2), S("2") * S("-3i"));
}

TEST(Kernel, HermitianValidation) {
  std::vector<std::vector<CMat>> blocks{{C({{"0"}}), C({{"1"}})}, {C({{"2"}}), C({{"0"}})}};
  EXPECT_KF_ERROR(BivariateKernel(1, blocks), Errc::NotHermitian);
  std::vector<std::vector<CMat>> trimmed{{C({{"1"}}), C({{"0"}})}, {C({{"0"}}), C({{"0"}})}};
  EXPECT_EQ(BivariateKernel(1, trimmed).p(), 1u);
}
