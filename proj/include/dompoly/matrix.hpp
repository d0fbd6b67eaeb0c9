// Small dense matrices over exact coefficient types.
//
// Used for the 3x3 interface matrices of single shared vertices and their
// Kronecker powers (9x9, 27x27, ...) for larger vertex separators.  Matrix
// inversion and rank are computed by exact Gauss-Jordan elimination over the
// rational-function field; nothing is ever approximated.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dompoly/polynomial.hpp"
#include "dompoly/rational_function.hpp"

namespace dompoly {

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T()) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> row_major)
      : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows_ * cols_) {
      throw std::invalid_argument("matrix data size does not match dimensions");
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
  }

  bool operator==(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i) {
      if (!(data_[i] == other.data_[i])) return false;
    }
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& av = a.at(r, k);
        for (std::size_t c = 0; c < b.cols_; ++c) {
          m.at(r, c) += av * b.at(k, c);
        }
      }
    }
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw std::invalid_argument("matrix sum shape mismatch");
    }
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
    return m;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(rows_, T());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<Polynomial>;
using RationalMatrix = Matrix<RationalFunction>;

// Kronecker product: (A (x) B)[ia*rowsB + ib][ja*colsB + jb] = A[ia][ja] * B[ib][jb].
// The LEFT factor owns the most-significant block index.
template <typename T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja)
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          m.at(ia * b.rows() + ib, ja * b.cols() + jb) = a.at(ia, ja) * b.at(ib, jb);
  return m;
}

inline RationalMatrix to_rational(const PolyMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = RationalFunction(m.at(i, j));
  return r;
}

inline std::vector<RationalFunction> to_rational(const std::vector<Polynomial>& v) {
  std::vector<RationalFunction> r;
  r.reserve(v.size());
  for (const Polynomial& p : v) r.emplace_back(p);
  return r;
}

// Exact inverse by Gauss-Jordan elimination; throws std::domain_error if the
// matrix is singular.
RationalMatrix invert(const RationalMatrix& m);

// Rank over the rational-function field.
std::size_t rank(RationalMatrix m);

// Exact dot product.
inline RationalFunction dot(const std::vector<RationalFunction>& a,
                            const std::vector<RationalFunction>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product shape mismatch");
  RationalFunction s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Polynomial dot(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product shape mismatch");
  Polynomial s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace dompoly
