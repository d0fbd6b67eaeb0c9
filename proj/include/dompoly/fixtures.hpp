#pragma once

#include <string>
#include <vector>

#include "dompoly/matrix.hpp"

namespace dompoly::fixtures {

// Stored matrix files for the two-vertex interface.
inline constexpr const char* kStateMatrixFile = "state_matrix_2.txt";
inline constexpr const char* kScaledInverseFile = "state_matrix_2_inverse_scaled.txt";

// The 9x9 gluing matrix over the pair states of a two-vertex interface.
// Entry (i, j) is the polynomial of the path with m(i, j) vertices, where m
// follows the Kronecker square of the single-vertex pattern.
PolyMatrix generate_state_matrix();

// The inverse of the gluing matrix, scaled by x^2 (1 + x)^4 so that every
// entry is a polynomial.
PolyMatrix generate_scaled_inverse();

// File format: '#' comment lines, then one line per entry in row-major
// order, "row col c0 c1 c2 ..." with ascending coefficients (a zero entry is
// written as a single 0).  Every entry must appear exactly once.
PolyMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const PolyMatrix& matrix,
                       const std::string& comment);

struct Comparison {
  bool ok = false;
  std::vector<std::string> differences;  // "(row, col): expected E, found F"
};
Comparison compare(const PolyMatrix& expected, const PolyMatrix& actual);

struct CheckResult {
  bool ok = false;
  std::vector<std::string> messages;  // one per fixture file
};

// Regenerates both matrices and compares them with the stored files in
// `dir`, entry by entry.
CheckResult check_directory(const std::string& dir);

// Writes freshly generated matrices into `dir`, replacing existing files.
void write_all(const std::string& dir);

}  // namespace dompoly::fixtures
