#pragma once

#include <optional>
#include <vector>

#include "kf/hermitian.hpp"
#include "kf/kernel.hpp"
#include "kf/matpoly.hpp"

namespace kf {

// Span of the columns of basis (d x n) with [Bc, Be] = e^* gram c.
struct PontryaginSpace {
  size_t d = 0;
  size_t n = 0;
  MatPoly basis;
  CMat gram;
};

// z B C = B Z; C spans dom S.
struct OperatorData {
  CMat C;
  CMat Z;
  size_t m() const { return C.cols(); }
};

enum class RangeKind { FailsEverywhere, HoldsGenerically, HoldsEverywhere };

struct RangeCondition {
  RangeKind kind = RangeKind::FailsEverywhere;
  GaussianRational witness;  // a point where it holds (not FailsEverywhere)
  Poly excluded;             // b_1: the condition fails exactly at its zeros
};

struct DegreeFiltration {
  size_t m_max = 0;
  std::vector<size_t> deltas;
  std::vector<int> mus;
};

struct AnalysisReport {
  bool cond_a = false;
  RangeCondition cond_b;
  std::optional<size_t> defect;  // codim of dom S, when S is symmetric
  size_t smith_rank = 0;
  size_t dom_dim = 0;
  size_t n = 0;
  size_t plus = 0;
  size_t minus = 0;
  std::vector<int> degrees;  // empty when the range condition fails everywhere
  bool is_nevanlinna = false;
  bool is_full = false;
};

const char* range_kind_name(RangeKind k);

PontryaginSpace make_space(const MatPoly& B, const CMat& G);
BivariateKernel reproducing_kernel(const PontryaginSpace& s);
PontryaginSpace kernel_factor(const BivariateKernel& K);
OperatorData multiplication_operator(const PontryaginSpace& s);
bool is_symmetric(const PontryaginSpace& s);
size_t defect_numbers(const PontryaginSpace& s);
bool range_condition_at(const PontryaginSpace& s, const GaussianRational& alpha);
RangeCondition range_condition_classify(const PontryaginSpace& s);
Inertia negative_squares(const BivariateKernel& K);
Inertia doubled_kernel_indices(const BivariateKernel& K, size_t q);
DegreeFiltration degree_filtration(const PontryaginSpace& s);
AnalysisReport analyze(const PontryaginSpace& s);

// Coefficients of B stacked blockwise: row block s holds the z^s coefficient.
CMat coeff_stack(const MatPoly& B, size_t blocks);
// c with basis * c = f, if f lies in the span.
std::optional<CMat> coordinates(const MatPoly& basis, const MatPoly& f);
// dim of {c : z^j B c in span B}.
size_t power_domain_dim(const MatPoly& basis, int j);
// The inner product e^* G c of f = B c and g = B e.
GaussianRational inner(const PontryaginSpace& s, const CMat& c, const CMat& e);

}  // namespace kf
