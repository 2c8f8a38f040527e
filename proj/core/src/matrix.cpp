#include "kf/matrix.hpp"

namespace kf {

CMat adjoint(const CMat& m) {
  CMat a(m.cols(), m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) a(j, i) = m(i, j).conj();
  return a;
}

CMat conj(const CMat& m) {
  CMat a(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).conj();
  return a;
}

bool is_hermitian(const CMat& m) {
  if (!m.is_square()) return false;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != m(j, i).conj()) return false;
  return true;
}

}  // namespace kf
