#pragma once

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "qflag/fraction.hpp"
#include "qflag/laurent.hpp"

namespace qflag {

/// Dense rectangular matrix over an exact scalar.  T needs default
/// construction (= zero), +, -, *, ==.  Entry products preserve operand
/// order, so T may be noncommutative.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix identity(int n, const T& one) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (bkj == T()) continue;
          r(i, j) = r(i, j) + aik * bkj;
        }
      }
    return r;
  }
  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T())) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  /// Finds the first entry (row-major) where the two matrices differ.
  static bool first_difference(const Matrix& a, const Matrix& b, int& i, int& j) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      i = j = -1;
      return true;
    }
    for (int r = 0; r < a.rows_; ++r)
      for (int c = 0; c < a.cols_; ++c)
        if (!(a(r, c) == b(r, c))) {
          i = r;
          j = c;
          return true;
        }
    return false;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Laurent>;

/// Kronecker product composing along tensor legs: (A (x) B)_{(i,j),(k,l)} =
/// A_{ik} * B_{jl}, entry product taken in that order.
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == T()) continue;
      for (int j = 0; j < b.rows(); ++j)
        for (int l = 0; l < b.cols(); ++l) {
          if (b(j, l) == T()) continue;
          r(i * b.rows() + j, k * b.cols() + l) = a(i, k) * b(j, l);
        }
    }
  return r;
}

/// Same index bookkeeping, but each entry is B_{jl} * A_{ik}.  Needed when
/// entries do not commute (for leg-ordered products like Z_2 Z_1).
template <typename T>
Matrix<T> kron_swapped(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == T()) continue;
      for (int j = 0; j < b.rows(); ++j)
        for (int l = 0; l < b.cols(); ++l) {
          if (b(j, l) == T()) continue;
          r(i * b.rows() + j, k * b.cols() + l) = b(j, l) * a(i, k);
        }
    }
  return r;
}

/// Placement of an operator on chosen legs of a k-fold tensor power of C^dim,
/// lexicographic basis.  Legs are 1-based.
struct LegEmbedding {
  int total_legs;
  int dim;
  int leg_i;
  int leg_j;  // 0 for one-leg operators
};

template <typename T>
Matrix<T> embed(const Matrix<T>& op, const LegEmbedding& e) {
  const int k = e.total_legs, n = e.dim;
  int size = 1;
  for (int t = 0; t < k; ++t) size *= n;
  const bool two_leg = e.leg_j != 0;
  if (e.leg_i < 1 || e.leg_i > k || (two_leg && (e.leg_j < 1 || e.leg_j > k || e.leg_j == e.leg_i)))
    throw std::invalid_argument("bad legs");
  if (op.rows() != op.cols() || op.rows() != (two_leg ? n * n : n))
    throw std::invalid_argument("operator size does not match leg dimension");

  std::vector<int> digits(k), other(k);
  Matrix<T> r(size, size);
  for (int row = 0; row < size; ++row) {
    int tmp = row;
    for (int t = k - 1; t >= 0; --t) {
      digits[t] = tmp % n;
      tmp /= n;
    }
    const int ai = digits[e.leg_i - 1];
    const int aj = two_leg ? digits[e.leg_j - 1] : 0;
    // run over the operator column indices on the active legs
    const int span = two_leg ? n * n : n;
    for (int c = 0; c < span; ++c) {
      const int bi = two_leg ? c / n : c;
      const int bj = two_leg ? c % n : 0;
      const T& entry = op(two_leg ? ai * n + aj : ai, c);
      if (entry == T()) continue;
      other = digits;
      other[e.leg_i - 1] = bi;
      if (two_leg) other[e.leg_j - 1] = bj;
      int col = 0;
      for (int t = 0; t < k; ++t) col = col * n + other[t];
      r(row, col) = entry;
    }
  }
  return r;
}

inline ScalarMatrix embed(const ScalarMatrix& op, int total_legs, int dim, int leg_i, int leg_j = 0) {
  return embed(op, LegEmbedding{total_legs, dim, leg_i, leg_j});
}

/// Exact Gauss-Jordan inverse over the fraction field of Q[v,v^-1].
/// Throws if the matrix is singular or the inverse is not Laurent.
ScalarMatrix gauss_jordan_inverse(const ScalarMatrix& m);

/// Rank over the fraction field.
int laurent_rank(Matrix<Fraction> m);

}  // namespace qflag
