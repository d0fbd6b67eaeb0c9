#include "dompoly/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace dompoly {

Polynomial::Polynomial(long long constant) {
  if (constant != 0) coeffs_.push_back(BigInt(constant));
}

Polynomial::Polynomial(const BigInt& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::initializer_list<long long> ascending_coeffs) {
  coeffs_.reserve(ascending_coeffs.size());
  for (long long c : ascending_coeffs) coeffs_.push_back(BigInt(c));
  normalize();
}

Polynomial::Polynomial(std::vector<BigInt> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  normalize();
}

Polynomial Polynomial::x() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const BigInt& coefficient, int degree) {
  if (degree < 0) throw std::domain_error("monomial degree must be >= 0");
  Polynomial result;
  if (coefficient != 0) {
    result.coeffs_.assign(static_cast<size_t>(degree) + 1, BigInt(0));
    result.coeffs_.back() = coefficient;
  }
  return result;
}

BigInt Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigInt(0);
  return coeffs_[static_cast<size_t>(i)];
}

BigInt Polynomial::leading() const {
  return coeffs_.empty() ? BigInt(0) : coeffs_.back();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
  Polynomial result(*this);
  for (BigInt& c : result.coeffs_) c = -c;
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  Polynomial result;
  result.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      result.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  result.normalize();
  return result;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::shifted(int shift) const {
  if (shift < 0) throw std::domain_error("shift must be >= 0");
  if (is_zero()) return Polynomial();
  Polynomial result;
  result.coeffs_.assign(static_cast<size_t>(shift), BigInt(0));
  result.coeffs_.insert(result.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return result;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base(*this);
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative() const {
  Polynomial result;
  if (coeffs_.size() <= 1) return result;
  result.coeffs_.reserve(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    result.coeffs_.push_back(coeffs_[i] * BigInt(i));
  }
  result.normalize();
  return result;
}

BigRational Polynomial::evaluate(const BigRational& point) const {
  BigRational value(0);
  for (size_t i = coeffs_.size(); i-- > 0;) {
    value = value * point + BigRational(coeffs_[i]);
  }
  return value;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << magnitude;
    } else {
      if (magnitude != 1) out << magnitude << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

Polynomial divide_exact(const Polynomial& numerator, const Polynomial& denominator) {
  if (denominator.is_zero()) throw std::domain_error("polynomial division by zero");
  if (numerator.is_zero()) return Polynomial();
  if (numerator.degree() < denominator.degree()) {
    throw std::domain_error("inexact polynomial division: degree too small");
  }
  // Long division over the rationals, then check that the remainder vanishes
  // and that all quotient coefficients are integral.
  std::vector<BigRational> rem(numerator.coeffs().size());
  for (size_t i = 0; i < rem.size(); ++i) rem[i] = BigRational(numerator.coeff(static_cast<int>(i)));
  const int dn = numerator.degree();
  const int dd = denominator.degree();
  const BigRational lead_den(denominator.leading());
  std::vector<BigRational> quot(static_cast<size_t>(dn - dd) + 1);
  for (int k = dn - dd; k >= 0; --k) {
    BigRational q = rem[static_cast<size_t>(k + dd)] / lead_den;
    quot[static_cast<size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<size_t>(k + j)] -= q * BigRational(denominator.coeff(j));
    }
  }
  for (const BigRational& r : rem) {
    if (r != 0) throw std::domain_error("inexact polynomial division: nonzero remainder");
  }
  std::vector<BigInt> coeffs(quot.size());
  for (size_t i = 0; i < quot.size(); ++i) {
    if (boost::multiprecision::denominator(quot[i]) != 1) {
      throw std::domain_error("inexact polynomial division: non-integer quotient");
    }
    coeffs[i] = boost::multiprecision::numerator(quot[i]);
  }
  return Polynomial(std::move(coeffs));
}

Polynomial divide_exact(const Polynomial& numerator, const BigInt& scalar) {
  if (scalar == 0) throw std::domain_error("polynomial division by zero scalar");
  std::vector<BigInt> coeffs(numerator.coeffs());
  for (BigInt& c : coeffs) {
    if (c % scalar != 0) throw std::domain_error("inexact scalar division of polynomial");
    c /= scalar;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace dompoly
