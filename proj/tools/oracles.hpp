#pragma once

#include <vector>

#include "kf/hermitian.hpp"
#include "kf/matpoly.hpp"

// Slow reference computations that share no code path with the library's
// elimination routines. Sizes are expected to stay tiny.
namespace kf::oracle {

Poly laplace_det(const MatPoly& A);
// Monic gcd of all k x k minors; zero when every minor vanishes.
Poly minors_gcd(const MatPoly& A, size_t k);
Poly charpoly(const CMat& H);
// Counts sign changes of the real coefficient sequence, skipping zeros.
size_t sign_variations(const std::vector<mpq_class>& coeffs);
// Inertia from Descartes' rule on det(zI - H); exact because every root is real.
Inertia descartes_inertia(const CMat& H);
// Brute force over integer a with num*den - a^2 a perfect square.
bool is_sum_of_two_squares(const mpq_class& r);

}  // namespace kf::oracle
