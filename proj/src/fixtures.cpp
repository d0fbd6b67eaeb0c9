#include "dompoly/fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dompoly/rational_function.hpp"
#include "dompoly/splitting.hpp"

namespace dompoly::fixtures {

namespace {

constexpr VertexSet kTwoVertexInterface = 0b11;  // vertices {0, 1}

std::string entry_line(size_t row, size_t col, const Polynomial& p) {
  std::ostringstream out;
  out << row << ' ' << col;
  if (p.is_zero()) {
    out << " 0";
  } else {
    for (int i = 0; i <= p.degree(); ++i) out << ' ' << p.coeff(i).str();
  }
  return out.str();
}

}  // namespace

PolyMatrix generate_state_matrix() { return splitting::d_matrix(kTwoVertexInterface); }

PolyMatrix generate_scaled_inverse() {
  const RationalMatrix inverse = splitting::d_matrix_inverse(kTwoVertexInterface);
  // x^2 (1 + x)^4: the determinant-clearing factor for the 9x9 interface.
  const RationalFunction scale(Polynomial{0, 0, 1} * Polynomial{1, 1}.pow(4));
  PolyMatrix out(inverse.rows(), inverse.cols());
  for (size_t r = 0; r < inverse.rows(); ++r) {
    for (size_t c = 0; c < inverse.cols(); ++c) {
      out.at(r, c) = (scale * inverse.at(r, c)).as_polynomial();
    }
  }
  return out;
}

PolyMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  std::map<std::pair<size_t, size_t>, Polynomial> entries;
  size_t rows = 0;
  size_t cols = 0;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream parts(line);
    long long row = -1;
    long long col = -1;
    if (!(parts >> row >> col)) {
      std::string leftover;
      if (parts.clear(), parts >> leftover) {
        throw std::runtime_error(path + ": malformed line " + std::to_string(number));
      }
      continue;  // blank or comment-only line
    }
    if (row < 0 || col < 0) {
      throw std::runtime_error(path + ": negative index on line " + std::to_string(number));
    }
    std::vector<BigInt> coeffs;
    std::string token;
    while (parts >> token) coeffs.emplace_back(token);
    if (coeffs.empty()) {
      throw std::runtime_error(path + ": missing coefficients on line " + std::to_string(number));
    }
    const auto key = std::make_pair(static_cast<size_t>(row), static_cast<size_t>(col));
    if (!entries.emplace(key, Polynomial(std::move(coeffs))).second) {
      throw std::runtime_error(path + ": duplicate entry on line " + std::to_string(number));
    }
    rows = std::max(rows, key.first + 1);
    cols = std::max(cols, key.second + 1);
  }
  if (entries.size() != rows * cols) {
    throw std::runtime_error(path + ": incomplete matrix (" + std::to_string(entries.size()) +
                             " of " + std::to_string(rows * cols) + " entries)");
  }
  PolyMatrix out(rows, cols);
  for (const auto& [key, value] : entries) out.at(key.first, key.second) = value;
  return out;
}

void write_matrix_file(const std::string& path, const PolyMatrix& matrix,
                       const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write fixture file: " + path);
  out << "# " << comment << "\n";
  out << "# row col c0 c1 c2 ...  (ascending coefficients)\n";
  for (size_t r = 0; r < matrix.rows(); ++r) {
    for (size_t c = 0; c < matrix.cols(); ++c) {
      out << entry_line(r, c, matrix.at(r, c)) << "\n";
    }
  }
}

Comparison compare(const PolyMatrix& expected, const PolyMatrix& actual) {
  Comparison result;
  if (expected.rows() != actual.rows() || expected.cols() != actual.cols()) {
    std::ostringstream out;
    out << "shape mismatch: expected " << expected.rows() << "x" << expected.cols() << ", found "
        << actual.rows() << "x" << actual.cols();
    result.differences.push_back(out.str());
    return result;
  }
  for (size_t r = 0; r < expected.rows(); ++r) {
    for (size_t c = 0; c < expected.cols(); ++c) {
      if (expected.at(r, c) != actual.at(r, c)) {
        std::ostringstream out;
        out << "(" << r << ", " << c << "): expected " << expected.at(r, c).to_string()
            << ", found " << actual.at(r, c).to_string();
        result.differences.push_back(out.str());
      }
    }
  }
  result.ok = result.differences.empty();
  return result;
}

CheckResult check_directory(const std::string& dir) {
  CheckResult result;
  result.ok = true;
  const std::pair<const char*, PolyMatrix> files[] = {
      {kStateMatrixFile, generate_state_matrix()},
      {kScaledInverseFile, generate_scaled_inverse()},
  };
  for (const auto& [name, generated] : files) {
    const std::string path = (std::filesystem::path(dir) / name).string();
    std::ostringstream message;
    try {
      const PolyMatrix stored = read_matrix_file(path);
      const Comparison cmp = compare(stored, generated);
      if (cmp.ok) {
        message << name << ": all " << stored.rows() * stored.cols() << " entries match";
      } else {
        result.ok = false;
        message << name << ": " << cmp.differences.size() << " differing entries";
        for (const std::string& diff : cmp.differences) message << "\n  " << diff;
      }
    } catch (const std::exception& e) {
      result.ok = false;
      message << name << ": " << e.what();
    }
    result.messages.push_back(message.str());
  }
  return result;
}

void write_all(const std::string& dir) {
  std::filesystem::create_directories(dir);
  write_matrix_file((std::filesystem::path(dir) / kStateMatrixFile).string(),
                    generate_state_matrix(),
                    "9x9 gluing matrix over the pair states of a two-vertex interface");
  write_matrix_file((std::filesystem::path(dir) / kScaledInverseFile).string(),
                    generate_scaled_inverse(),
                    "inverse of the gluing matrix, scaled by x^2 (1+x)^4");
}

}  // namespace dompoly::fixtures
