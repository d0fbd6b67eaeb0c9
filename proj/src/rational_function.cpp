#include "dompoly/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace dompoly {

namespace {

// Pseudo-remainder: the remainder of lc(b)^(deg a - deg b + 1) * a divided
// by b, which is guaranteed to stay in Z[x].  Requires deg a >= deg b >= 0.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  const int db = b.degree();
  const BigInt lead_b = b.leading();
  int steps = a.degree() - db + 1;
  while (!r.is_zero() && r.degree() >= db) {
    Polynomial t = Polynomial::monomial(r.leading(), r.degree() - db);
    r = r * Polynomial(lead_b) - t * b;
    --steps;
  }
  // Scale by the unused factors so the total scaling is lc(b)^(da-db+1).
  while (steps-- > 0) r = r * Polynomial(lead_b);
  return r;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  BigInt content = poly_content(p);
  if (p.leading() < 0) content = -content;
  return divide_exact(p, content);
}

}  // namespace

BigInt poly_content(const Polynomial& p) {
  BigInt content(0);
  for (const BigInt& c : p.coeffs()) {
    content = boost::multiprecision::gcd(content, c);
    if (content == 1) break;
  }
  return content;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return primitive_part(b) * Polynomial(poly_content(b));
  if (b.is_zero()) return primitive_part(a) * Polynomial(poly_content(a));
  const BigInt content = boost::multiprecision::gcd(poly_content(a), poly_content(b));
  Polynomial u = primitive_part(a);
  Polynomial v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    Polynomial r = pseudo_remainder(u, v);
    u = v;
    v = primitive_part(r);
  }
  return u * Polynomial(content);
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (!(g == Polynomial(1))) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool RationalFunction::is_polynomial() const { return den_ == Polynomial(1); }

Polynomial RationalFunction::as_polynomial() const {
  if (!is_polynomial()) {
    throw std::domain_error("rational function value is not a polynomial: (" +
                            num_.to_string() + ") / (" + den_.to_string() + ")");
  }
  return num_;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction result(*this);
  result.num_ = -result.num_;
  return result;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool RationalFunction::operator==(const RationalFunction& other) const {
  return num_ * other.den_ == other.num_ * den_;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace dompoly
