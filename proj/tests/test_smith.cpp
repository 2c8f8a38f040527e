#include <gtest/gtest.h>

#include "kf/smith.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace kf;
using kf::test::C;
using kf::test::load;
using kf::test::M;
using kf::test::P;

namespace {

MatPoly xy(const std::string& ex) {
  return hcat(load(ex + "-X.json").matpoly(), load(ex + "-Y.json").matpoly());
}

void expect_smith_identity(const MatPoly& B, const SmithForm& s) {
  EXPECT_EQ(s.U * s.middle(B.rows(), B.cols()) * s.V, B);
  EXPECT_EQ(s.U * s.U_inv, MatPoly::identity(B.rows()));
  EXPECT_EQ(s.V * s.V_inv, MatPoly::identity(B.cols()));
  EXPECT_TRUE(is_unimodular(s.U));
  EXPECT_TRUE(is_unimodular(s.V));
  for (size_t i = 0; i + 1 < s.factors.size(); ++i)
    EXPECT_TRUE(divmod(s.factors[i], s.factors[i + 1]).second.is_zero());
  EXPECT_EQ(s.l, generic_rank(B));
}

}  // namespace

TEST(Smith, Identity) {
  SmithForm s = smith(MatPoly::identity(2));
  EXPECT_EQ(s.U, MatPoly::identity(2));
  EXPECT_EQ(s.V, MatPoly::identity(2));
  EXPECT_EQ(s.factors, (std::vector<Poly>{P("1"), P("1")}));
  EXPECT_EQ(s.l, 2u);
}

TEST(Smith, AntidiagonalExample65) {
  MatPoly G = M({{"0", "0", "z"}, {"0", "z", "0"}, {"z", "0", "0"}});
  SmithForm s = smith(G);
  EXPECT_EQ(s.factors, (std::vector<Poly>{P("z"), P("z"), P("z")}));
  EXPECT_EQ(s.l, 3u);
  expect_smith_identity(G, s);
}

TEST(Smith, RankOneAgainstMinorsOracle) {
  MatPoly B = M({{"1", "z"}, {"z", "z^2"}});
  SmithForm s = smith(B);
  EXPECT_EQ(s.factors, (std::vector<Poly>{P("1")}));
  EXPECT_EQ(s.l, 1u);
  EXPECT_EQ(oracle::minors_gcd(B, 1), P("1"));
  EXPECT_TRUE(oracle::minors_gcd(B, 2).is_zero());
  expect_smith_identity(B, s);
}

TEST(Smith, PaperOrderingPutsZerosFirst) {
  MatPoly B = MatPoly::diag({P("z - 1"), P("z^2 - 1"), P("1")});
  SmithForm s = smith(B);
  EXPECT_EQ(s.factors, (std::vector<Poly>{P("z^2 - 1"), P("z - 1"), P("1")}));
  expect_smith_identity(B, s);
}

TEST(Smith, ZeroMatrix) { EXPECT_KF_ERROR(smith(MatPoly(2, 2)), Errc::ZeroMatrix); }

TEST(Smith, RectangularPairs) {
  for (const char* ex : {"example64", "example65"}) {
    MatPoly B = xy(ex);
    expect_smith_identity(B, smith(B));
  }
}

TEST(RowReduce, AlreadyReducedExample65) {
  MatPoly T = M({{"0", "0", "z", "0", "0", "1"}, {"0", "0", "0", "0", "1", "0"}, {"1", "0", "0", "0", "0", "0"}});
  RowReducedForm r = row_reduce(T);
  EXPECT_EQ(r.U, MatPoly::identity(3));
  EXPECT_EQ(r.S, T);
  EXPECT_EQ(r.sigma, (std::vector<int>{1, 0, 0}));
}

TEST(RowReduce, Example64) {
  MatPoly B = xy("example64");
  RowReducedForm r = row_reduce(B);
  std::vector<int> sigma = r.sigma;
  std::sort(sigma.begin(), sigma.end());
  EXPECT_EQ(sigma, (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(r.U * B, r.S);
  EXPECT_EQ(rank(r.S_inf), 3u);
}

TEST(RowReduce, DoubledIdentity) {
  MatPoly B = hcat(MatPoly::identity(2), MatPoly::identity(2));
  RowReducedForm r = row_reduce(B);
  EXPECT_EQ(r.sigma, (std::vector<int>{0, 0}));
  EXPECT_EQ(r.U, MatPoly::identity(2));
}

TEST(RowReduce, ReducesHighDegreeRows) {
  MatPoly B = M({{"z^3 + 1", "z"}, {"z^2", "1"}});
  ASSERT_TRUE(is_unimodular(B));
  RowReducedForm r = row_reduce(B);
  EXPECT_EQ(r.U * B, r.S);
  EXPECT_TRUE(is_unimodular(r.U));
  EXPECT_EQ(r.sigma, (std::vector<int>{0, 0}));
  RowData d = row_data(r.S);
  EXPECT_EQ(d.extdeg, d.intdeg);
}

TEST(RowReduce, RejectsRankDrop) {
  EXPECT_KF_ERROR(row_reduce(xy("example65")), Errc::NotFullRank);
}

TEST(Forney, Examples) {
  EXPECT_EQ(forney_indices(xy("example65")), (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(forney_indices(xy("example64")), (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(forney_indices(hcat(MatPoly::identity(3), MatPoly(3, 3))), (std::vector<int>{0, 0, 0}));
  EXPECT_KF_ERROR(forney_indices(M({{"1", "z"}, {"z", "z^2"}})), Errc::RankDeficient);
}

TEST(FullRank, Example65EssentialUniqueness) {
  MatPoly B = xy("example65");
  FullRankFactorization f = full_rank_factorize(B);
  EXPECT_EQ(f.G * f.T, B);
  for (const Poly& b : smith(f.T).factors) EXPECT_EQ(b.degree(), 0);
  EXPECT_EQ(smith(f.G).factors, (std::vector<Poly>{P("z"), P("z"), P("z")}));

  MatPoly Gp = M({{"0", "0", "z"}, {"0", "z", "0"}, {"z", "0", "0"}});
  MatPoly Tp = M({{"0", "0", "z", "0", "0", "1"}, {"0", "0", "0", "0", "1", "0"}, {"1", "0", "0", "0", "0", "0"}});
  ASSERT_EQ(Gp * Tp, B);
  RatMat E = inverse(f.G) * RatMat(Gp);
  ASSERT_TRUE(E.is_polynomial());
  EXPECT_TRUE(is_unimodular(E.num()));
  EXPECT_EQ(E.num() * Tp, f.T);
}

TEST(FullRank, DegenerateAndRowVector) {
  MatPoly B = xy("example64");
  FullRankFactorization f = full_rank_factorize(B);
  EXPECT_TRUE(is_unimodular(f.G));
  EXPECT_EQ(f.G * f.T, B);

  FullRankFactorization r = full_rank_factorize(M({{"z", "z^2"}}));
  EXPECT_EQ(r.G, M({{"z"}}));
  EXPECT_EQ(r.T, M({{"1", "z"}}));
}

TEST(Unimodular, Examples) {
  EXPECT_TRUE(is_unimodular(M({{"1", "z"}, {"0", "1"}})));
  EXPECT_FALSE(is_unimodular(MatPoly::diag({P("z"), P("1")})));
  EXPECT_FALSE(is_unimodular(M({{"0", "0", "1"}, {"0", "1", "0"}, {"z", "0", "0"}})));
  EXPECT_KF_ERROR(is_unimodular(M({{"1", "z"}})), Errc::NotSquare);
}
