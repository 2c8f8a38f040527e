#include "oracles.hpp"

#include "kf/error.hpp"

namespace kf::oracle {

namespace {

Poly laplace(const MatPoly& A, std::vector<size_t>& rows, std::vector<size_t>& cols) {
  if (rows.empty()) return Poly(1);
  size_t r = rows.front();
  rows.erase(rows.begin());
  Poly total;
  for (size_t k = 0; k < cols.size(); ++k) {
    const Poly& a = A(r, cols[k]);
    if (a.is_zero()) continue;
    size_t c = cols[k];
    cols.erase(cols.begin() + k);
    Poly minor = laplace(A, rows, cols);
    cols.insert(cols.begin() + k, c);
    total = (k % 2 == 0) ? total + a * minor : total - a * minor;
  }
  rows.insert(rows.begin(), r);
  return total;
}

void subsets(size_t n, size_t k, size_t start, std::vector<size_t>& cur,
             std::vector<std::vector<size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<size_t>> subsets(size_t n, size_t k) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

bool is_square(const mpz_class& v, mpz_class& root) {
  if (v < 0) return false;
  root = sqrt(v);
  return root * root == v;
}

}  // namespace

Poly laplace_det(const MatPoly& A) {
  if (A.rows() != A.cols()) fail(Errc::NotSquare, "determinant of a non-square matrix");
  std::vector<size_t> rows, cols;
  for (size_t i = 0; i < A.rows(); ++i) rows.push_back(i), cols.push_back(i);
  return laplace(A, rows, cols);
}

Poly minors_gcd(const MatPoly& A, size_t k) {
  Poly g;
  for (auto& rs : subsets(A.rows(), k))
    for (auto& cs : subsets(A.cols(), k)) {
      Poly m = laplace_det(A.select_rows(rs).select_cols(cs));
      g = gcd(g, m);
    }
  return g;
}

Poly charpoly(const CMat& H) {
  MatPoly zI = MatPoly::identity(H.rows()).shift(1);
  return laplace_det(zI - MatPoly::constant(H));
}

size_t sign_variations(const std::vector<mpq_class>& coeffs) {
  size_t v = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Inertia descartes_inertia(const CMat& H) {
  Poly p = charpoly(H);
  std::vector<mpq_class> pos, neg;
  size_t zero = 0;
  while (zero <= static_cast<size_t>(p.degree()) && p.coeff(static_cast<int>(zero)).is_zero()) ++zero;
  for (int k = 0; k <= p.degree(); ++k) {
    const auto& c = p.coeff(k);
    if (!c.is_real()) fail(Errc::NotHermitian, "characteristic polynomial is not real");
    pos.push_back(c.re());
    neg.push_back(k % 2 == 0 ? c.re() : mpq_class(-c.re()));
  }
  return {sign_variations(pos), sign_variations(neg), zero};
}

bool is_sum_of_two_squares(const mpq_class& r) {
  if (r < 0) return false;
  // r = a^2 + b^2 with rationals iff num*den is an integer sum of two squares.
  mpz_class v = r.get_num() * r.get_den();
  mpz_class root;
  for (mpz_class a = 0; a * a <= v; ++a)
    if (is_square(v - a * a, root)) return true;
  return false;
}

}  // namespace kf::oracle
