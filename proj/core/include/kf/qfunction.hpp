#pragma once

#include "kf/canonical.hpp"
#include "kf/matpoly.hpp"
#include "kf/pairsynth.hpp"
#include "kf/space.hpp"

namespace kf {

// Subspace of B + B: columns (f; g) in basis coordinates, linearly independent.
struct LinearRelation {
  size_t n = 0;
  CMat pairs;  // 2n x m
  size_t dim() const { return pairs.cols(); }
  CMat dom_part() const { return pairs.block(0, 0, n, pairs.cols()); }
  CMat ran_part() const { return pairs.block(n, 0, n, pairs.cols()); }
};

struct QFunctionResult {
  GaussianRational mu;
  CMat gamma_mu;
  RatMat Q;
  RatMat gamma;
};

// Keeps a basis of the column span.
LinearRelation make_relation(size_t n, const CMat& spanning);
LinearRelation graph_relation(const PontryaginSpace& s);  // S as a relation
// -i([g,p] - [f,q]) in coordinates.
CMat lagrange_form(const PontryaginSpace& s);

LinearRelation lagrange_adjoint(const PontryaginSpace& s, const LinearRelation& R);
bool is_selfadjoint_extension(const PontryaginSpace& s, const LinearRelation& A);
RatMat resolvent(const PontryaginSpace& s, const LinearRelation& A);
CMat defect_basis(const PontryaginSpace& s, const GaussianRational& z0);
RatMat gamma_field(const PontryaginSpace& s, const LinearRelation& A, const GaussianRational& mu,
                   const CMat& gamma_mu);
QFunctionResult q_function(const PontryaginSpace& s, const LinearRelation& A,
                           const GaussianRational& mu, const CMat& gamma_mu, const CMat& Q0);
NevanlinnaPair pair_from_q(const PontryaginSpace& s, const CanonicalDecomposition& dec,
                           const LinearRelation& A, const GaussianRational& mu,
                           const CMat& gamma_mu, const CMat& Q0);

// Graph of G^{-1}H, H Hermitian with H C = G Z and zero block on a complement of dom S.
LinearRelation operator_extension(const PontryaginSpace& s);
// i, i+1, i+2, ... : the first point where the pencil of A is invertible.
GaussianRational default_mu(const PontryaginSpace& s, const LinearRelation& A);

}  // namespace kf
