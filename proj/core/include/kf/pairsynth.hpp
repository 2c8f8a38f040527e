#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "kf/kernel.hpp"
#include "kf/matpoly.hpp"
#include "kf/space.hpp"

namespace kf {

// P Q^{-1} P(w)^* = i (z - w*) K
struct NevanlinnaForm {
  MatPoly P;
  CMat Q;
  bool full = false;
};

// M N~ - N M~ = 0; packs as P = [M N] with Q = J.
struct NevanlinnaPair {
  MatPoly M;
  MatPoly N;
};

struct FormCheck {
  bool ok = false;
  std::string reason;
};

struct Extraction {
  std::optional<NevanlinnaPair> pair;
  mpq_class ratio;  // obstructing q/p when no pair was found
  std::string reason;
};

struct LagrangeDims {
  size_t dim_L = 0;
  size_t dim_perp = 0;
};

// [[0, iI], [-iI, 0]]
CMat j_matrix(size_t d);

NevanlinnaForm synthesize(const PontryaginSpace& s);
FormCheck verify_form(const NevanlinnaForm& form, const BivariateKernel& K);
BivariateKernel form_kernel(const NevanlinnaForm& form);
BivariateKernel kernel_of_pair(const NevanlinnaPair& pair);
Extraction extract_pair(const NevanlinnaForm& form);
NevanlinnaPair j_unitary_transform(const NevanlinnaPair& pair, const CMat& U);
LagrangeDims lagrange_dims(const MatPoly& P, const CMat& Q);

// x, y, den with x^2 + y^2 = r * den^2; nullopt if none exists or the search bound is hit.
struct TwoSquares {
  mpz_class x, y, den;
};
std::optional<TwoSquares> two_squares(const mpq_class& r);

}  // namespace kf
