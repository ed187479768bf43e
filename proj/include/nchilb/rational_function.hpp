#pragma once

// Reduced fractions of integer polynomials in q. The canonical
// representative has coprime numerator and denominator (polynomial gcd and
// integer content both cleared), no common q-power, and a denominator with
// positive leading coefficient, so equality is structural.

#include <stdexcept>

#include "nchilb/laurent.hpp"

namespace nchilb {

class RationalFunction;

class NonPolynomialError : public std::domain_error {
 public:
  NonPolynomialError(const std::string& what, LaurentPolynomial remainder)
      : std::domain_error(what), remainder_(std::move(remainder)) {}
  const LaurentPolynomial& remainder() const noexcept { return remainder_; }

 private:
  LaurentPolynomial remainder_;
};

class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long value) : num_(value), den_(1) {}
  RationalFunction(const LaurentPolynomial& p);  // embeds, clearing q^-k
  RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator);

  static RationalFunction one() { return RationalFunction(1); }

  const LaurentPolynomial& num() const { return num_; }
  const LaurentPolynomial& den() const { return den_; }

  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }
  bool isUnit() const { return !isZero(); }

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);  // throws on zero divisor
  RationalFunction operator-() const;
  bool operator==(const RationalFunction& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }

  RationalFunction mulQPower(long exponent) const;
  RationalFunction unitInverse() const;  // 1/this, throws on zero

  // Exact conversion to Z[q, q^-1]; throws NonPolynomialError carrying the
  // division remainder when the denominator does not divide the numerator.
  LaurentPolynomial toPolynomial() const;

  // q-adic valuation (min exponent of the Laurent expansion at q = 0).
  long qValuation() const;  // throws on zero

  std::string str() const;

 private:
  void normalize();
  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

RationalFunction operator+(RationalFunction lhs, const RationalFunction& rhs);
RationalFunction operator-(RationalFunction lhs, const RationalFunction& rhs);
RationalFunction operator*(RationalFunction lhs, const RationalFunction& rhs);
RationalFunction operator/(RationalFunction lhs, const RationalFunction& rhs);
std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace nchilb
