#include "nchilb/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace nchilb {

LaurentPolynomial::LaurentPolynomial(mpz_class value) {
  if (value != 0) terms_.emplace(0, std::move(value));
}

LaurentPolynomial LaurentPolynomial::monomial(long exponent, mpz_class coefficient) {
  LaurentPolynomial p;
  if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
  return p;
}

LaurentPolynomial LaurentPolynomial::fromCoefficients(long min_exponent,
                                                      const std::vector<long>& coefficients) {
  LaurentPolynomial p;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] != 0)
      p.terms_.emplace(min_exponent + static_cast<long>(i), mpz_class(coefficients[i]));
  return p;
}

bool LaurentPolynomial::isOne() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPolynomial::isPolynomial() const {
  return terms_.empty() || terms_.begin()->first >= 0;
}

bool LaurentPolynomial::isUnit() const {
  if (terms_.size() != 1) return false;
  const mpz_class& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

long LaurentPolynomial::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  return terms_.rbegin()->first;
}

long LaurentPolynomial::minDegree() const {
  if (terms_.empty()) throw std::domain_error("min degree of zero polynomial");
  return terms_.begin()->first;
}

mpz_class LaurentPolynomial::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

const mpz_class& LaurentPolynomial::leadingCoefficient() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

void LaurentPolynomial::addTerm(long exponent, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) addTerm(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) addTerm(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
  lhs += rhs;
  return lhs;
}

LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
  lhs -= rhs;
  return lhs;
}

LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  LaurentPolynomial out;
  for (const auto& [e1, c1] : lhs.terms())
    for (const auto& [e2, c2] : rhs.terms()) out.addTerm(e1 + e2, c1 * c2);
  return out;
}

LaurentPolynomial LaurentPolynomial::mulQPower(long exponent) const {
  if (exponent == 0) return *this;
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + exponent, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::mulScalar(const mpz_class& c) const {
  LaurentPolynomial out;
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

LaurentPolynomial LaurentPolynomial::divScalarExact(const mpz_class& c) const {
  if (c == 0) throw std::domain_error("division by zero scalar");
  LaurentPolynomial out;
  for (const auto& [e, coeff] : terms_) {
    if (!mpz_divisible_p(coeff.get_mpz_t(), c.get_mpz_t()))
      throw std::domain_error("inexact scalar division");
    mpz_class d;
    mpz_divexact(d.get_mpz_t(), coeff.get_mpz_t(), c.get_mpz_t());
    out.terms_.emplace(e, std::move(d));
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::reciprocal(long s) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(s - e, c);
  return out;
}

mpq_class LaurentPolynomial::evaluate(const mpq_class& x, bool allow_negative_exponents) const {
  if (!allow_negative_exponents && !isPolynomial())
    throw std::domain_error("negative exponents not allowed in evaluation");
  if (x == 0 && !isPolynomial())
    throw std::domain_error("evaluation at 0 with negative exponents");
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class power;
    unsigned long n = static_cast<unsigned long>(e >= 0 ? e : -e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), n);
    if (e >= 0)
      power = mpq_class(num, den);
    else
      power = mpq_class(den, num);
    power.canonicalize();
    sum += mpq_class(c) * power;
  }
  sum.canonicalize();
  return sum;
}

mpz_class LaurentPolynomial::evaluateAtOne() const {
  mpz_class sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

mpz_class LaurentPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPolynomial LaurentPolynomial::unitInverse() const {
  if (!isUnit()) throw std::domain_error("not a unit: " + str());
  return monomial(-terms_.begin()->first, terms_.begin()->second);
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) {
      os << a.get_str();
      if (e != 0) os << "*";
    }
    if (e == 1)
      os << "q";
    else if (e != 0)
      os << "q^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.str(); }

bool isPalindromic(const LaurentPolynomial& p) {
  if (p.isZero() || p.minDegree() != 0)
    throw std::domain_error("palindromicity requires a nonzero polynomial with min exponent 0");
  return p.reciprocal(p.degree()) == p;
}

LaurentDivision laurentDivMod(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.isZero()) throw std::domain_error("division by zero polynomial");
  LaurentDivision out;
  if (a.isZero()) {
    out.exact = true;
    return out;
  }
  const long va = a.minDegree();
  const long vb = b.minDegree();
  LaurentPolynomial rem = a.mulQPower(-va);
  const LaurentPolynomial div = b.mulQPower(-vb);
  const long db = div.degree();
  const mpz_class& lcb = div.leadingCoefficient();
  LaurentPolynomial quot;
  bool exact = true;
  while (!rem.isZero() && rem.degree() >= db) {
    const mpz_class& lcr = rem.leadingCoefficient();
    if (!mpz_divisible_p(lcr.get_mpz_t(), lcb.get_mpz_t())) {
      exact = false;
      break;
    }
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), lcr.get_mpz_t(), lcb.get_mpz_t());
    LaurentPolynomial term = LaurentPolynomial::monomial(rem.degree() - db, c);
    quot += term;
    rem -= term * div;
  }
  if (!rem.isZero()) exact = false;
  out.quotient = quot.mulQPower(va - vb);
  out.remainder = rem.mulQPower(va);
  out.exact = exact;
  return out;
}

LaurentPolynomial divExact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentDivision d = laurentDivMod(a, b);
  if (!d.exact)
    throw std::domain_error("inexact polynomial division, remainder " + d.remainder.str());
  return d.quotient;
}

namespace {

// One pseudo-remainder: repeatedly scale by lc(b) and cancel the top term.
LaurentPolynomial pseudoRem(LaurentPolynomial r, const LaurentPolynomial& b) {
  const long db = b.degree();
  const LaurentPolynomial lcb(b.leadingCoefficient());
  while (!r.isZero() && r.degree() >= db) {
    LaurentPolynomial top = LaurentPolynomial::monomial(r.degree() - db, r.leadingCoefficient());
    r = r * lcb - top * b;
  }
  return r;
}

LaurentPolynomial makePrimitive(const LaurentPolynomial& p) {
  mpz_class c = p.content();
  if (c == 0 || c == 1) return p;
  return p.divScalarExact(c);
}

}  // namespace

LaurentPolynomial polyGcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  auto normalizeSign = [](LaurentPolynomial p) {
    if (!p.isZero() && p.leadingCoefficient() < 0) return -p;
    return p;
  };
  if (a.isZero()) return normalizeSign(b);
  if (b.isZero()) return normalizeSign(a);
  mpz_class cg;
  mpz_class ca = a.content(), cb = b.content();
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  LaurentPolynomial pa = a.divScalarExact(ca);
  LaurentPolynomial pb = b.divScalarExact(cb);
  // primitive remainder sequence; the common q-power factor survives it
  while (!pb.isZero()) {
    LaurentPolynomial r = pseudoRem(pa, pb);
    pa = std::move(pb);
    pb = makePrimitive(r);
  }
  return normalizeSign(pa).mulScalar(cg);
}

}  // namespace nchilb
