#include "dompoly/matrix.hpp"

namespace dompoly {

RationalMatrix invert(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("only square matrices can be inverted");
  const std::size_t n = m.rows();
  RationalMatrix work = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    // Find a row with a nonzero pivot in this column.
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const RationalFunction scale = work.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) /= scale;
      inv.at(col, j) /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work.at(r, col).is_zero()) continue;
      const RationalFunction factor = work.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(r, j) -= factor * work.at(col, j);
        inv.at(r, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    }
    const RationalFunction scale = m.at(r, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) /= scale;
    for (std::size_t row = 0; row < m.rows(); ++row) {
      if (row == r || m.at(row, col).is_zero()) continue;
      const RationalFunction factor = m.at(row, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) -= factor * m.at(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace dompoly
