// Exact rational functions (quotients of integer polynomials).
//
// Rational functions appear only transiently: several recurrences divide by
// polynomials such as 1+x or x-1 before the result collapses back to an
// integer polynomial, and the interface matrices are inverted exactly over
// this field.  Every value is kept fully reduced: numerator and denominator
// share no polynomial factor (computed via a primitive-remainder-sequence
// gcd) and the denominator has positive leading coefficient.
#pragma once

#include "dompoly/polynomial.hpp"

namespace dompoly {

// Greatest common divisor in Z[x] (primitive Euclidean algorithm with
// pseudo-division); the result has positive leading coefficient.
// gcd(0, 0) is 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Integer content of a polynomial (gcd of coefficients, non-negative).
BigInt poly_content(const Polynomial& p);

class RationalFunction {
 public:
  // Zero.
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long long constant) : num_(constant), den_(1) {}  // NOLINT
  RationalFunction(Polynomial numerator)                             // NOLINT
      : num_(std::move(numerator)), den_(1) {}
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  // True when the reduced denominator is the constant 1.
  bool is_polynomial() const;
  // Extract the polynomial value; throws std::domain_error if the value is
  // not a polynomial.
  Polynomial as_polynomial() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  // Throws std::domain_error on division by zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  // Exact equality (cross-multiplication; independent of representation).
  bool operator==(const RationalFunction& other) const;
  bool operator!=(const RationalFunction& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  void reduce();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace dompoly
