#include "qflag/matrix.hpp"

namespace qflag {

ScalarMatrix gauss_jordan_inverse(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows();
  Matrix<Fraction> a(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = Fraction(m(i, j));
    a(i, n + i) = Fraction(Laurent::one());
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix");
    if (piv != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(a(piv, j), a(col, j));
    Fraction p = a(col, col);
    for (int j = 0; j < 2 * n; ++j) a(col, j) = a(col, j) / p;
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Fraction f = a(r, col);
      for (int j = 0; j < 2 * n; ++j) a(r, j) = a(r, j) - f * a(col, j);
    }
  }
  ScalarMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = a(i, n + j).to_laurent();
  return inv;
}

int laurent_rank(Matrix<Fraction> m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
    Fraction p = m(rank, col);
    for (int r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      Fraction f = m(r, col) / p;
      for (int j = col; j < m.cols(); ++j) m(r, j) = m(r, j) - f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace qflag
