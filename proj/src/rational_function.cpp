#include "nchilb/rational_function.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace nchilb {

RationalFunction::RationalFunction(const LaurentPolynomial& p) : num_(p), den_(1) {
  normalize();
}

RationalFunction::RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.isZero()) throw std::domain_error("zero denominator");
  if (num_.isZero()) {
    den_ = LaurentPolynomial(1);
    return;
  }
  // shift into Z[q] and cancel the common q-power in one move
  long v = std::min(num_.minDegree(), den_.minDegree());
  num_ = num_.mulQPower(-v);
  den_ = den_.mulQPower(-v);
  LaurentPolynomial g = polyGcd(num_, den_);
  if (!g.isOne()) {
    num_ = divExact(num_, g);
    den_ = divExact(den_, g);
  }
  if (den_.leadingCoefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  LaurentPolynomial g = polyGcd(den_, rhs.den_);
  LaurentPolynomial da = divExact(den_, g);
  LaurentPolynomial db = divExact(rhs.den_, g);
  num_ = num_ * db + rhs.num_ * da;
  den_ = den_ * db;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  return *this += -rhs;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  // cross-reduce first to keep the gcd inputs small
  LaurentPolynomial g1 = polyGcd(num_, rhs.den_);
  LaurentPolynomial g2 = polyGcd(rhs.num_, den_);
  num_ = divExact(num_, g1) * divExact(rhs.num_, g2);
  den_ = divExact(den_, g2) * divExact(rhs.den_, g1);
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.isZero()) throw std::domain_error("division by zero rational function");
  return *this *= rhs.unitInverse();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

RationalFunction RationalFunction::mulQPower(long exponent) const {
  return RationalFunction(num_.mulQPower(exponent), den_);
}

RationalFunction RationalFunction::unitInverse() const {
  if (isZero()) throw std::domain_error("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

LaurentPolynomial RationalFunction::toPolynomial() const {
  if (den_.isOne()) return num_;
  LaurentDivision d = laurentDivMod(num_, den_);
  if (!d.exact)
    throw NonPolynomialError("rational function is not a Laurent polynomial: " + str(),
                             d.remainder);
  return d.quotient;
}

long RationalFunction::qValuation() const {
  if (isZero()) throw std::domain_error("q-valuation of zero");
  return num_.minDegree() - den_.minDegree();
}

std::string RationalFunction::str() const {
  if (den_.isOne()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction operator+(RationalFunction lhs, const RationalFunction& rhs) {
  lhs += rhs;
  return lhs;
}

RationalFunction operator-(RationalFunction lhs, const RationalFunction& rhs) {
  lhs -= rhs;
  return lhs;
}

RationalFunction operator*(RationalFunction lhs, const RationalFunction& rhs) {
  lhs *= rhs;
  return lhs;
}

RationalFunction operator/(RationalFunction lhs, const RationalFunction& rhs) {
  lhs /= rhs;
  return lhs;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

}  // namespace nchilb
