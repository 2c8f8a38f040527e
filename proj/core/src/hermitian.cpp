#include "kf/hermitian.hpp"

#include "kf/error.hpp"

namespace kf {

CongruenceDiagonal congruence_diagonalize(const CMat& H) {
  if (!is_hermitian(H)) fail(Errc::NotHermitian, "matrix is not Hermitian");
  size_t n = H.rows();
  CMat A = H;
  CMat X = CMat::identity(n);  // X H X^* = A throughout
  auto add_row_col = [&](size_t t, size_t s, const GaussianRational& c) {
    // A <- E A E^* with E = I + c e_t e_s^T
    GaussianRational cc = c.conj();
    for (size_t j = 0; j < n; ++j) A(t, j) += c * A(s, j);
    for (size_t i = 0; i < n; ++i) A(i, t) += cc * A(i, s);
    for (size_t j = 0; j < n; ++j) X(t, j) += c * X(s, j);
  };
  auto swap_both = [&](size_t a, size_t b) {
    if (a == b) return;
    A.swap_rows(a, b);
    for (size_t i = 0; i < n; ++i) std::swap(A(i, a), A(i, b));
    X.swap_rows(a, b);
  };
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && A(p, p).is_zero()) ++p;
    if (p == n) {
      bool found = false;
      for (size_t i = k; i < n && !found; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (!A(i, j).is_zero()) {
            add_row_col(i, j, A(i, j));
            p = i;
            found = true;
            break;
          }
      if (!found) break;
    }
    swap_both(k, p);
    GaussianRational inv = A(k, k).inv();
    for (size_t i = k + 1; i < n; ++i)
      if (!A(i, k).is_zero()) add_row_col(i, k, -(A(i, k) * inv));
  }
  CongruenceDiagonal cd;
  for (size_t k = 0; k < n; ++k) {
    if (!A(k, k).is_real()) fail(Errc::InternalVerificationFailed, "non-real pivot");
    cd.D.push_back(A(k, k).re());
  }
  cd.L = *inverse(X);
  return cd;
}

Inertia inertia(const CMat& H) {
  Inertia in;
  for (const auto& d : congruence_diagonalize(H).D) {
    int s = sgn(d);
    if (s > 0) ++in.plus;
    else if (s < 0) ++in.minus;
    else ++in.zero;
  }
  return in;
}

CMat herm_solve(const CMat& H, const CMat& rhs) {
  if (!H.is_square()) fail(Errc::NotSquare, "solve with a non-square matrix");
  if (rank(H) != H.rows()) fail(Errc::Singular, "matrix is singular");
  return *solve(H, rhs);
}

}  // namespace kf
