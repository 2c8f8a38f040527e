#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kf/matpoly.hpp"
#include "kf/pairsynth.hpp"
#include "kf/space.hpp"

namespace kf::gen {

class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi);
  bool coin(double p = 0.5);
  GaussianRational scalar(int bound = 3);
  GaussianRational nonzero_scalar(int bound = 3);
  mpq_class rational(int bound = 3);
  Poly poly(int max_deg, int bound = 3);
  MatPoly matpoly(size_t r, size_t c, int max_deg, double zero_prob = 0.3);
  CMat matrix(size_t r, size_t c, int bound = 3);
  CMat invertible(size_t n);
  // Product of elementary row operations; degree grows with steps.
  MatPoly unimodular(size_t n, int max_deg, int steps = 3);
  // L diag(signs) L^* for a random invertible L; returns the matrix, signs are +1/-1/0.
  CMat hermitian(const std::vector<int>& signs);
  CMat hermitian_invertible(size_t n);
  std::vector<int> signs(size_t n, bool allow_zero);
  // Nonincreasing degrees in [0, max_deg].
  std::vector<int> degrees(size_t d, int max_deg);
  // Polynomial matrix with Hermitian coefficients, so H~ = H.
  MatPoly selfadjoint_poly(size_t d, int max_deg);
  // U with U J U^* = J.
  CMat j_unitary(size_t d);
  // Nevanlinna pair with nonzero kernel: W [H, I] mixed by a J-unitary factor.
  // Unless full, W picks up a factor z - c, so [M N] drops rank at c.
  NevanlinnaPair pair(size_t d, int max_deg, bool full = true);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace kf::gen
