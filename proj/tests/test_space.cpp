#include <gtest/gtest.h>

#include "kf/space.hpp"
#include "support.hpp"

using namespace kf;
using kf::test::C;
using kf::test::load;
using kf::test::M;
using kf::test::P;
using kf::test::S;

namespace {

PontryaginSpace sp(const std::string& name) { return load(name + ".json").space(); }

PontryaginSpace constants(size_t d) { return make_space(MatPoly::identity(d), CMat::identity(d)); }

// [f, K(., w) x] = x^* f(w) for every basis column f.
void expect_reproducing(const PontryaginSpace& s) {
  BivariateKernel K = reproducing_kernel(s);
  const std::vector<GaussianRational> ws{S("0"), S("1"), S("i"), S("2 - i"), S("-1/2 + 3i")};
  for (const auto& w : ws) {
    CMat x(s.d, 1);
    for (size_t k = 0; k < s.d; ++k) x(k, 0) = GaussianRational::make(static_cast<long>(k) + 1, 1, 1, 2);
    // K(z, w) x as a vector polynomial in z.
    MatPoly g(s.d, 1);
    for (size_t j = 0; j < K.p(); ++j) {
      CMat col(s.d, 1);
      for (size_t k = 0; k < K.p(); ++k) {
        GaussianRational wk(1);
        for (size_t t = 0; t < k; ++t) wk *= w.conj();
        col += K.block(j, k) * x * wk;
      }
      g = g + MatPoly::constant(col).shift(static_cast<int>(j));
    }
    auto e = coordinates(s.basis, g);
    ASSERT_TRUE(e.has_value());
    for (size_t c = 0; c < s.n; ++c) {
      CMat ec(s.n, 1);
      ec(c, 0) = GaussianRational(1);
      CMat fw = eval(s.basis.col(c), w);
      EXPECT_EQ(inner(s, ec, *e), (adjoint(x) * fw)(0, 0));
    }
  }
}

}  // namespace

TEST(MakeSpace, Validation) {
  PontryaginSpace c = constants(3);
  EXPECT_EQ(c.n, 3u);
  EXPECT_EQ(c.d, 3u);
  PontryaginSpace e63 = sp("example63");
  EXPECT_EQ(inertia(e63.gram), (Inertia{3, 1, 0}));
  EXPECT_KF_ERROR(make_space(M({{"1", "2"}}), CMat::identity(2)), Errc::DependentBasis);
  EXPECT_KF_ERROR(make_space(MatPoly::identity(2), C({{"1", "1"}, {"1", "1"}})), Errc::SingularGram);
  EXPECT_KF_ERROR(make_space(MatPoly::identity(2), C({{"1", "i"}, {"i", "1"}})), Errc::NotHermitian);
}

TEST(ReproducingKernel, Example64) {
  BivariateKernel K = reproducing_kernel(sp("example64"));
  EXPECT_EQ(K, load("example64-kernel.json").kernel());
  EXPECT_EQ(K.p(), 2u);
  EXPECT_EQ(K.block(0, 0), C({{"0", "0", "-1"}, {"0", "0", "0"}, {"-1", "0", "0"}}));
  EXPECT_EQ(K.block(0, 1), C({{"0", "0", "0"}, {"0", "0", "-1"}, {"0", "0", "0"}}));
  EXPECT_EQ(K.block(1, 0), C({{"0", "0", "0"}, {"0", "0", "0"}, {"0", "-1", "0"}}));
  EXPECT_EQ(K.block(1, 1), CMat(3, 3));
}

TEST(ReproducingKernel, ConstantsAndB0) {
  BivariateKernel I = reproducing_kernel(constants(2));
  EXPECT_EQ(I.p(), 1u);
  EXPECT_EQ(I.block(0, 0), CMat::identity(2));
  BivariateKernel K0 = reproducing_kernel(sp("example62-b0"));
  EXPECT_EQ(K0, load("example62-b0-kernel.json").kernel());
  EXPECT_EQ(K0.eval(S("2"), S("i")), C({{"-3", "0"}, {"0", "0"}}));
}

TEST(ReproducingKernel, ReproducingProperty) {
  for (const char* f : {"example63", "example64", "example65", "counterexample", "example62-b0"})
    expect_reproducing(sp(f));
}

TEST(KernelFactor, RoundTrips) {
  for (const char* f : {"example63", "example64", "example65", "example62-b0", "counterexample"}) {
    BivariateKernel K = reproducing_kernel(sp(f));
    PontryaginSpace s = kernel_factor(K);
    EXPECT_EQ(reproducing_kernel(s), K) << f;
  }
  PontryaginSpace c = kernel_factor(reproducing_kernel(constants(2)));
  EXPECT_EQ(c.n, 2u);
  EXPECT_EQ(c.basis.degree(), 0);
}

TEST(KernelFactor, Example64Indices) {
  PontryaginSpace s = kernel_factor(load("example64-kernel.json").kernel());
  EXPECT_EQ(s.n, 4u);
  EXPECT_EQ(inertia(s.gram), (Inertia{2, 2, 0}));
}

TEST(KernelFactor, Example65) {
  PontryaginSpace s = kernel_factor(load("example65-kernel.json").kernel());
  EXPECT_EQ(s.n, 1u);
  EXPECT_EQ(inertia(s.gram), (Inertia{1, 0, 0}));
  // Spanned by (0, 0, z) up to scaling; the Gram absorbs the scale.
  EXPECT_TRUE(coordinates(s.basis, M({{"0"}, {"0"}, {"z"}})).has_value());
}

TEST(Operator, Example64) {
  PontryaginSpace s = sp("example64");
  OperatorData op = multiplication_operator(s);
  ASSERT_EQ(op.m(), 1u);
  EXPECT_TRUE(op.C(0, 0).is_zero() && op.C(1, 0).is_zero() && op.C(3, 0).is_zero());
  EXPECT_TRUE(op.Z(0, 0).is_zero() && op.Z(1, 0).is_zero() && op.Z(2, 0).is_zero());
  EXPECT_EQ(s.basis * MatPoly::constant(op.C) * Poly::z(), s.basis * MatPoly::constant(op.Z));
}

TEST(Operator, ConstantsAndCounterexample) {
  EXPECT_EQ(multiplication_operator(constants(3)).m(), 0u);
  OperatorData op = multiplication_operator(sp("counterexample"));
  ASSERT_EQ(op.m(), 1u);
  EXPECT_TRUE(op.C(0, 0).is_zero() && op.C(1, 0).is_zero() && op.C(3, 0).is_zero());
  EXPECT_FALSE(op.C(2, 0).is_zero());
}

TEST(Symmetric, Examples) {
  EXPECT_TRUE(is_symmetric(sp("example63")));
  EXPECT_FALSE(is_symmetric(sp("example63-identity")));
  EXPECT_TRUE(is_symmetric(constants(2)));
}

TEST(Defect, Examples) {
  EXPECT_EQ(defect_numbers(sp("example64")), 3u);
  EXPECT_EQ(defect_numbers(sp("example65")), 1u);
  EXPECT_EQ(defect_numbers(constants(3)), 3u);
  EXPECT_KF_ERROR(defect_numbers(sp("example63-identity")), Errc::NotSymmetric);
}

TEST(RangeCondition, AtPoint) {
  EXPECT_FALSE(range_condition_at(sp("counterexample"), S("0")));
  EXPECT_TRUE(range_condition_at(sp("example64"), S("5")));
  EXPECT_FALSE(range_condition_at(sp("example65"), S("0")));
  EXPECT_TRUE(range_condition_at(sp("example65"), S("1")));
}

TEST(RangeCondition, Classify) {
  EXPECT_EQ(range_condition_classify(sp("counterexample")).kind, RangeKind::FailsEverywhere);
  EXPECT_EQ(range_condition_classify(sp("example62-b0")).kind, RangeKind::FailsEverywhere);
  RangeCondition e63 = range_condition_classify(sp("example63"));
  EXPECT_EQ(e63.kind, RangeKind::HoldsEverywhere);
  EXPECT_EQ(e63.excluded, P("1"));
  RangeCondition e65 = range_condition_classify(sp("example65"));
  EXPECT_EQ(e65.kind, RangeKind::HoldsGenerically);
  EXPECT_EQ(e65.excluded, P("z"));
  EXPECT_FALSE(e65.witness.is_zero());
  EXPECT_TRUE(range_condition_at(sp("example65"), e65.witness));
}

TEST(RangeCondition, AgreesWithExcludedSet) {
  for (const char* f : {"example63", "example64", "example65"}) {
    PontryaginSpace s = sp(f);
    RangeCondition rc = range_condition_classify(s);
    for (const char* a : {"0", "1", "-1", "i", "2 + i", "1/2"})
      EXPECT_EQ(range_condition_at(s, S(a)), !rc.excluded(S(a)).is_zero()) << f << " at " << a;
  }
}

TEST(NegativeSquares, Examples) {
  BivariateKernel I = reproducing_kernel(constants(2));
  EXPECT_EQ(negative_squares(I), (Inertia{2, 0, 0}));
  BivariateKernel k64 = load("example64-kernel.json").kernel();
  EXPECT_EQ(negative_squares(k64), (Inertia{2, 2, 2}));
  EXPECT_EQ(inertia(block_diag(k64.stack(), CMat(6, 6))), (Inertia{2, 2, 8}));
  EXPECT_EQ(negative_squares(load("example65-kernel.json").kernel()), (Inertia{1, 0, 5}));
}

TEST(DoubledKernel, Examples) {
  BivariateKernel one(1, {{C({{"1"}})}});
  EXPECT_EQ(doubled_kernel_indices(one, 1), (Inertia{1, 1, 0}));
  Inertia k64 = doubled_kernel_indices(load("example64-kernel.json").kernel(), 2);
  EXPECT_EQ(k64.plus, 4u);
  EXPECT_EQ(k64.minus, 4u);
  Inertia k65 = doubled_kernel_indices(load("example65-kernel.json").kernel(), 2);
  EXPECT_EQ(k65.plus, 1u);
  EXPECT_EQ(k65.minus, 1u);
  EXPECT_KF_ERROR(doubled_kernel_indices(load("example64-kernel.json").kernel(), 1), Errc::QTooSmall);
}

TEST(DegreeFiltration, Examples) {
  DegreeFiltration f64 = degree_filtration(sp("example64"));
  EXPECT_EQ(f64.deltas, (std::vector<size_t>{3, 1}));
  EXPECT_EQ(f64.mus, (std::vector<int>{2, 1, 1}));
  DegreeFiltration fc = degree_filtration(constants(3));
  EXPECT_EQ(fc.deltas, (std::vector<size_t>{3}));
  EXPECT_EQ(fc.mus, (std::vector<int>{1, 1, 1}));
  DegreeFiltration f65 = degree_filtration(sp("example65"));
  EXPECT_EQ(f65.deltas, (std::vector<size_t>{1}));
  EXPECT_EQ(f65.mus, (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(degree_filtration(sp("example63")).mus, (std::vector<int>{3, 1}));
}

TEST(Analyze, Example64) {
  AnalysisReport r = analyze(sp("example64"));
  EXPECT_TRUE(r.cond_a);
  EXPECT_EQ(r.cond_b.kind, RangeKind::HoldsEverywhere);
  ASSERT_TRUE(r.defect.has_value());
  EXPECT_EQ(*r.defect, 3u);
  EXPECT_EQ(r.plus, 2u);
  EXPECT_EQ(r.minus, 2u);
  EXPECT_EQ(r.degrees, (std::vector<int>{2, 1, 1}));
  EXPECT_TRUE(r.is_nevanlinna);
  EXPECT_TRUE(r.is_full);
}

TEST(Analyze, NegativeCases) {
  AnalysisReport b0 = analyze(sp("example62-b0"));
  EXPECT_EQ(b0.cond_b.kind, RangeKind::FailsEverywhere);
  EXPECT_FALSE(b0.is_nevanlinna);
  EXPECT_TRUE(b0.degrees.empty());
  AnalysisReport id = analyze(sp("example63-identity"));
  EXPECT_FALSE(id.cond_a);
  EXPECT_FALSE(id.is_nevanlinna);
  EXPECT_FALSE(id.defect.has_value());
}

TEST(Analyze, Example65IsNotFull) {
  AnalysisReport r = analyze(sp("example65"));
  EXPECT_TRUE(r.is_nevanlinna);
  EXPECT_FALSE(r.is_full);
  EXPECT_EQ(r.degrees, (std::vector<int>{1, 0, 0}));
}

TEST(Analyze, CorollaryDenominatorClearing) {
  PontryaginSpace s = sp("example61-cleared");
  EXPECT_EQ(s.basis, load("example61-columns.json").matpoly());
  AnalysisReport r = analyze(s);
  EXPECT_TRUE(r.is_nevanlinna);
  EXPECT_TRUE(r.is_full);
  EXPECT_EQ(r.degrees, (std::vector<int>{1, 0}));
}
