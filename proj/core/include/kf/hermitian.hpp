#pragma once

#include <gmpxx.h>

#include <vector>

#include "kf/matrix.hpp"

namespace kf {

struct Inertia {
  size_t plus = 0;
  size_t minus = 0;
  size_t zero = 0;

  friend bool operator==(const Inertia& a, const Inertia& b) {
    return a.plus == b.plus && a.minus == b.minus && a.zero == b.zero;
  }
};

struct CongruenceDiagonal {
  CMat L;
  std::vector<mpq_class> D;
};

Inertia inertia(const CMat& H);
// H = L diag(D) L^*. Pivot: first nonzero diagonal entry, else the first
// nonzero off-diagonal entry in row-major order folded in by a hyperbolic step.
CongruenceDiagonal congruence_diagonalize(const CMat& H);
// X with H X = rhs; Singular when H is not invertible.
CMat herm_solve(const CMat& H, const CMat& rhs);

}  // namespace kf
