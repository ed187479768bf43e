#pragma once

// Truncated power series in t over an exact coefficient ring, with the
// twisted multiplication t^e * t^f = q^{w*e*f} t^{e+f}. Twist 0 is the
// ordinary series ring. The truncation order is explicit on every value;
// binary operations require equal twists and truncate to the smaller order.

#include <concepts>
#include <stdexcept>
#include <vector>

#include "nchilb/laurent.hpp"
#include "nchilb/rational_function.hpp"

namespace nchilb {

template <class R>
concept CoefficientRing = requires(const R a, const R b, long e) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a.mulQPower(e) } -> std::convertible_to<R>;
  { a.isZero() } -> std::convertible_to<bool>;
  { a.isUnit() } -> std::convertible_to<bool>;
  { a.unitInverse() } -> std::convertible_to<R>;
  { R::one() } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
};

template <CoefficientRing R>
class TwistedSeries {
 public:
  TwistedSeries(long twist, long order) : twist_(twist), coeffs_(order + 1) {
    if (twist < 0) throw std::invalid_argument("negative twist");
    if (order < 0) throw std::invalid_argument("negative truncation order");
  }

  static TwistedSeries unit(long twist, long order) {
    TwistedSeries s(twist, order);
    s.coeffs_[0] = R::one();
    return s;
  }

  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  long twist() const { return twist_; }

  const R& operator[](long d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
  void setCoefficient(long d, R value) { coeffs_.at(static_cast<std::size_t>(d)) = std::move(value); }

  bool operator==(const TwistedSeries& rhs) const {
    return twist_ == rhs.twist_ && coeffs_ == rhs.coeffs_;
  }

 private:
  long twist_;
  std::vector<R> coeffs_;
};

namespace detail {
inline void requireEqualTwist(long a, long b) {
  if (a != b) throw std::invalid_argument("twist mismatch");
}
}  // namespace detail

template <CoefficientRing R>
TwistedSeries<R> truncated(const TwistedSeries<R>& a, long order) {
  if (order > a.order()) throw std::invalid_argument("cannot extend truncation order");
  TwistedSeries<R> out(a.twist(), order);
  for (long d = 0; d <= order; ++d) out.setCoefficient(d, a[d]);
  return out;
}

template <CoefficientRing R>
TwistedSeries<R> operator+(const TwistedSeries<R>& a, const TwistedSeries<R>& b) {
  detail::requireEqualTwist(a.twist(), b.twist());
  const long n = std::min(a.order(), b.order());
  TwistedSeries<R> out(a.twist(), n);
  for (long d = 0; d <= n; ++d) out.setCoefficient(d, a[d] + b[d]);
  return out;
}

template <CoefficientRing R>
TwistedSeries<R> operator-(const TwistedSeries<R>& a, const TwistedSeries<R>& b) {
  detail::requireEqualTwist(a.twist(), b.twist());
  const long n = std::min(a.order(), b.order());
  TwistedSeries<R> out(a.twist(), n);
  for (long d = 0; d <= n; ++d) out.setCoefficient(d, a[d] - b[d]);
  return out;
}

// Coefficient of t^d is sum over e+f=d of q^{w*e*f} A_e B_f.
template <CoefficientRing R>
TwistedSeries<R> twistedMul(const TwistedSeries<R>& a, const TwistedSeries<R>& b) {
  detail::requireEqualTwist(a.twist(), b.twist());
  const long w = a.twist();
  const long n = std::min(a.order(), b.order());
  TwistedSeries<R> out(w, n);
  for (long d = 0; d <= n; ++d) {
    R sum{};
    for (long e = 0; e <= d; ++e) {
      const long f = d - e;
      R term = a[e] * b[f];
      if (w != 0 && e != 0 && f != 0) term = term.mulQPower(w * e * f);
      sum = sum + term;
    }
    out.setCoefficient(d, std::move(sum));
  }
  return out;
}

// Plain Cauchy product, regardless of the twist label (which must agree).
template <CoefficientRing R>
TwistedSeries<R> ordinaryMul(const TwistedSeries<R>& a, const TwistedSeries<R>& b) {
  detail::requireEqualTwist(a.twist(), b.twist());
  const long n = std::min(a.order(), b.order());
  TwistedSeries<R> out(a.twist(), n);
  for (long d = 0; d <= n; ++d) {
    R sum{};
    for (long e = 0; e <= d; ++e) sum = sum + a[e] * b[d - e];
    out.setCoefficient(d, std::move(sum));
  }
  return out;
}

// T(t^d) = q^{-w d(d-1)/2} t^d; turns twisted multiplication into the
// ordinary one, so the result carries twist 0.
template <CoefficientRing R>
TwistedSeries<R> twistTransform(const TwistedSeries<R>& a) {
  const long w = a.twist();
  TwistedSeries<R> out(0, a.order());
  for (long d = 0; d <= a.order(); ++d)
    out.setCoefficient(d, a[d].mulQPower(-w * d * (d - 1) / 2));
  return out;
}

// t -> q^e t: the coefficient of t^d picks up q^{e*d}.
template <CoefficientRing R>
TwistedSeries<R> substituteScale(const TwistedSeries<R>& a, long e) {
  TwistedSeries<R> out(a.twist(), a.order());
  for (long d = 0; d <= a.order(); ++d) out.setCoefficient(d, a[d].mulQPower(e * d));
  return out;
}

// Ordinary division: both series must carry twist 0 and the divisor's
// constant coefficient must be a unit of the coefficient ring.
template <CoefficientRing R>
TwistedSeries<R> seriesDiv(const TwistedSeries<R>& a, const TwistedSeries<R>& b) {
  if (a.twist() != 0 || b.twist() != 0)
    throw std::invalid_argument("series division requires twist 0");
  if (!b[0].isUnit()) throw std::domain_error("series division by a non-unit");
  const R inv = b[0].unitInverse();
  const long n = std::min(a.order(), b.order());
  TwistedSeries<R> out(0, n);
  for (long d = 0; d <= n; ++d) {
    R acc = a[d];
    for (long j = 0; j < d; ++j) acc = acc - out[j] * b[d - j];
    out.setCoefficient(d, acc * inv);
  }
  return out;
}

// The unique G in 1 + t R[[t]] with G = 1 + t * prod_k G(q^{shifts[k]} t),
// solved degree by degree: the explicit factor t makes the coefficient of
// t^d on the right depend only on coefficients of degree < d.
TwistedSeries<LaurentPolynomial> solveFunctionalEquation(long m, long order,
                                                         const std::vector<long>& shifts);

}  // namespace nchilb
