#pragma once

// Exact Laurent polynomials in one variable q with arbitrary-precision
// integer coefficients. Values are kept in canonical form (no zero
// coefficient is ever stored), so equality is structural. The exponent
// range is machine integers; coefficient growth is unbounded.

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace nchilb {

class LaurentPolynomial {
 public:
  using TermMap = std::map<long, mpz_class>;

  LaurentPolynomial() = default;  // zero
  LaurentPolynomial(long value) : LaurentPolynomial(mpz_class(value)) {}
  explicit LaurentPolynomial(mpz_class value);

  static LaurentPolynomial q() { return monomial(1); }
  static LaurentPolynomial one() { return LaurentPolynomial(1); }
  static LaurentPolynomial monomial(long exponent, mpz_class coefficient = 1);
  // coefficients[i] multiplies q^(min_exponent + i).
  static LaurentPolynomial fromCoefficients(long min_exponent,
                                            const std::vector<long>& coefficients);

  bool isZero() const { return terms_.empty(); }
  bool isOne() const;
  bool isPolynomial() const;  // no negative exponents (zero counts)
  bool isUnit() const;        // +-q^k
  long degree() const;        // throws std::domain_error on zero
  long minDegree() const;     // throws std::domain_error on zero
  mpz_class coefficient(long exponent) const;
  const mpz_class& leadingCoefficient() const;
  const TermMap& terms() const { return terms_; }
  std::size_t termCount() const { return terms_.size(); }

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
  LaurentPolynomial operator-() const;
  bool operator==(const LaurentPolynomial& rhs) const { return terms_ == rhs.terms_; }

  LaurentPolynomial mulQPower(long exponent) const;  // * q^exponent
  LaurentPolynomial mulScalar(const mpz_class& c) const;
  LaurentPolynomial divScalarExact(const mpz_class& c) const;  // throws if inexact

  // q^s * p(q^-1): the term at exponent e moves to exponent s-e.
  LaurentPolynomial reciprocal(long s) const;

  // Exact rational evaluation. With allow_negative_exponents=false any
  // negative exponent is a domain error; otherwise x must be nonzero when
  // negative exponents are present.
  mpq_class evaluate(const mpq_class& x, bool allow_negative_exponents = true) const;
  mpz_class evaluateAtOne() const;

  mpz_class content() const;  // gcd of coefficients, non-negative
  LaurentPolynomial unitInverse() const;  // throws unless +-q^k

  std::string str() const;

 private:
  friend LaurentPolynomial operator*(const LaurentPolynomial&, const LaurentPolynomial&);
  void addTerm(long exponent, const mpz_class& c);
  TermMap terms_;
};

LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs);
LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs);
LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs);
std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

// True iff q^(deg p) * p(q^-1) = p. Requires a nonzero polynomial with
// minimum exponent 0 (domain error otherwise).
bool isPalindromic(const LaurentPolynomial& p);

struct LaurentDivision {
  LaurentPolynomial quotient;
  LaurentPolynomial remainder;
  bool exact = false;
};

// Division in Z[q, q^-1]; exact means b * quotient == a.
LaurentDivision laurentDivMod(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial divExact(const LaurentPolynomial& a, const LaurentPolynomial& b);

// gcd of two integer polynomials (min degree >= 0), content included,
// positive leading coefficient. gcd(0,0) = 0.
LaurentPolynomial polyGcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace nchilb
