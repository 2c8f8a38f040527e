#pragma once

#include <vector>

#include "kf/matpoly.hpp"

namespace kf {

// B = U * diag(b_1..b_l, 0) * V with b_{i+1} | b_i: b_1 carries every zero of
// the rank drop, so rank B(a) = l iff b_1(a) != 0. Most texts order the other way.
struct SmithForm {
  MatPoly U;
  MatPoly V;
  MatPoly U_inv;
  MatPoly V_inv;
  std::vector<Poly> factors;
  size_t l = 0;

  // diag(b_1..b_l) padded with zeros to the input shape.
  MatPoly middle(size_t rows, size_t cols) const;
  bool all_factors_constant() const;
};

struct RowReducedForm {
  MatPoly U;
  MatPoly S;
  std::vector<int> sigma;
  CMat S_inf;
};

struct FullRankFactorization {
  MatPoly G;
  MatPoly T;
};

// Pivot: nonzero entry of minimal degree, ties by lowest (row, col).
SmithForm smith(const MatPoly& B);
RowReducedForm row_reduce(const MatPoly& P);
// Sorted nonincreasing.
std::vector<int> forney_indices(const MatPoly& P);
FullRankFactorization full_rank_factorize(const MatPoly& P);
bool is_unimodular(const MatPoly& P);

}  // namespace kf
