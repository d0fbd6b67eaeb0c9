// Dense univariate polynomials over the arbitrary-precision integers.
//
// The coefficient vector is stored in ascending degree order: coeff(i) is
// the coefficient of x^i.  The representation is always normalized (no
// trailing zero coefficients); the zero polynomial is the empty vector and
// reports degree() == -1.
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "dompoly/bigint.hpp"

namespace dompoly {

class Polynomial {
 public:
  // The zero polynomial.
  Polynomial() = default;

  // Constant polynomial.
  Polynomial(long long constant);          // NOLINT: implicit by design
  Polynomial(const BigInt& constant);      // NOLINT: implicit by design

  // Polynomial from an ascending coefficient list; trailing zeros are
  // stripped.  Polynomial{0, 2, 1} is 2x + x^2.
  Polynomial(std::initializer_list<long long> ascending_coeffs);
  explicit Polynomial(std::vector<BigInt> ascending_coeffs);

  // The monomial x.
  static Polynomial x();
  // coefficient * x^degree
  static Polynomial monomial(const BigInt& coefficient, int degree);

  // Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of x^i (zero outside the stored range).
  BigInt coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  // Leading coefficient; zero for the zero polynomial.
  BigInt leading() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& other) const = default;

  // This polynomial multiplied by x^shift (shift >= 0).
  Polynomial shifted(int shift) const;
  Polynomial pow(unsigned exponent) const;
  Polynomial derivative() const;
  // Exact evaluation at a rational point.
  BigRational evaluate(const BigRational& point) const;

  // Human-readable rendering in ascending degree order, e.g.
  // "3*x + 3*x^2 + x^3"; unit coefficients are omitted ("x^2", "-x^2") and
  // the zero polynomial renders as "0".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

// Exact quotient numerator / denominator.  Throws std::domain_error if the
// denominator is zero, if the division leaves a remainder, or if the
// quotient is not an integer polynomial.
Polynomial divide_exact(const Polynomial& numerator, const Polynomial& denominator);

// Exact scalar quotient; throws std::domain_error unless every coefficient
// is divisible by the scalar.
Polynomial divide_exact(const Polynomial& numerator, const BigInt& scalar);

}  // namespace dompoly
