#pragma once

#include <vector>

#include "kf/matpoly.hpp"
#include "kf/space.hpp"

namespace kf {

// B = W * [P_0 P_1 z ... P_m z^m] * T.
struct CanonicalDecomposition {
  MatPoly W;
  std::vector<int> degrees;  // nonincreasing
  CMat T;
  bool unimodular = false;
};

// Columns z^j e_i for j = 0.. and i with degrees[i] > j; degrees nonincreasing.
MatPoly canonical_basis(const std::vector<int>& degrees);
CanonicalDecomposition decompose(const MatPoly& basis);
inline CanonicalDecomposition decompose(const PontryaginSpace& s) { return decompose(s.basis); }
bool membership(const CanonicalDecomposition& dec, const MatPoly& f);

}  // namespace kf
