#include "gen.hpp"

#include <algorithm>

namespace kf::gen {

int Gen::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Gen::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

mpq_class Gen::rational(int bound) {
  mpq_class q(integer(-bound, bound), coin(0.2) ? integer(1, 3) : 1);
  q.canonicalize();
  return q;
}

GaussianRational Gen::scalar(int bound) {
  return {rational(bound), coin(0.5) ? rational(bound) : mpq_class(0)};
}

GaussianRational Gen::nonzero_scalar(int bound) {
  for (;;) {
    GaussianRational x = scalar(bound);
    if (!x.is_zero()) return x;
  }
}

Poly Gen::poly(int max_deg, int bound) {
  std::vector<GaussianRational> c;
  int deg = integer(0, max_deg);
  for (int k = 0; k <= deg; ++k) c.push_back(scalar(bound));
  return Poly(std::move(c));
}

MatPoly Gen::matpoly(size_t r, size_t c, int max_deg, double zero_prob) {
  MatPoly m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      if (!coin(zero_prob)) m(i, j) = poly(max_deg);
  return m;
}

CMat Gen::matrix(size_t r, size_t c, int bound) {
  CMat m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = scalar(bound);
  return m;
}

MatPoly Gen::unimodular(size_t n, int max_deg, int steps) {
  MatPoly U = MatPoly::identity(n);
  if (n == 0) return U;
  for (int s = 0; s < steps; ++s) {
    size_t i = integer(0, static_cast<int>(n) - 1);
    size_t j = integer(0, static_cast<int>(n) - 1);
    MatPoly E = MatPoly::identity(n);
    if (i != j && coin(0.8)) {
      E(i, j) = poly(max_deg, 2);
    } else if (i != j) {
      E(i, i) = Poly();
      E(j, j) = Poly();
      E(i, j) = Poly(1);
      E(j, i) = Poly(1);
    } else {
      E(i, i) = Poly(nonzero_scalar(2));
    }
    U = E * U;
  }
  return U;
}

CMat Gen::invertible(size_t n) { return unimodular(n, 0, static_cast<int>(2 * n + 2)).coeff(0); }

std::vector<int> Gen::signs(size_t n, bool allow_zero) {
  std::vector<int> s(n);
  for (auto& x : s) x = allow_zero && coin(0.2) ? 0 : (coin() ? 1 : -1);
  return s;
}

CMat Gen::hermitian(const std::vector<int>& signs) {
  size_t n = signs.size();
  CMat L = invertible(n);
  CMat D(n, n);
  for (size_t k = 0; k < n; ++k) D(k, k) = GaussianRational(mpq_class(signs[k] * integer(1, 3)));
  return L * D * adjoint(L);
}

CMat Gen::hermitian_invertible(size_t n) { return hermitian(signs(n, false)); }

std::vector<int> Gen::degrees(size_t d, int max_deg) {
  std::vector<int> m(d);
  for (auto& x : m) x = integer(0, max_deg);
  std::sort(m.rbegin(), m.rend());
  return m;
}

MatPoly Gen::selfadjoint_poly(size_t d, int max_deg) {
  MatPoly H(d, d);
  for (int k = 0; k <= max_deg; ++k) {
    CMat A = matrix(d, d, 2);
    CMat Hk = A + adjoint(A);
    H = H + MatPoly::constant(Hk).shift(k);
  }
  return H;
}

CMat Gen::j_unitary(size_t d) {
  CMat U = CMat::identity(2 * d);
  for (int s = 0; s < 3; ++s) {
    CMat E = CMat::identity(2 * d);
    switch (integer(0, 2)) {
      case 0: {
        CMat A = matrix(d, d, 2);
        E.set_block(0, d, A + adjoint(A));
        break;
      }
      case 1: {
        CMat A = matrix(d, d, 2);
        E.set_block(d, 0, A + adjoint(A));
        break;
      }
      default: {
        CMat X = invertible(d);
        E.set_block(0, 0, X);
        E.set_block(d, d, adjoint(*inverse(X)));
        break;
      }
    }
    U = U * E;
  }
  return U;
}

NevanlinnaPair Gen::pair(size_t d, int max_deg, bool full) {
  MatPoly H;
  do {
    H = selfadjoint_poly(d, max_deg);
  } while (H.degree() < 1);
  MatPoly W = unimodular(d, 1, 2);
  if (!full) {
    MatPoly D = MatPoly::identity(d);
    D(0, 0) = Poly::z() - Poly(scalar(2));
    W = W * D;
  }
  NevanlinnaPair p{W * H, W};
  return j_unitary_transform(p, j_unitary(d));
}

}  // namespace kf::gen
