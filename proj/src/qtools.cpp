#include "nchilb/qtools.hpp"

#include <sstream>
#include <stdexcept>

namespace nchilb {

LaurentPolynomial qPochhammer(const QPochhammerSpec& spec) {
  if (spec.length < 0) throw std::domain_error("negative Pochhammer length");
  if (spec.base_exponent < 1) throw std::domain_error("base exponent must be >= 1");
  if (spec.a_sign != 1 && spec.a_sign != -1) throw std::domain_error("a_sign must be +-1");
  LaurentPolynomial out(1);
  for (long k = 0; k < spec.length; ++k) {
    LaurentPolynomial factor =
        LaurentPolynomial(1) -
        LaurentPolynomial::monomial(spec.a_exponent + spec.base_exponent * k, spec.a_sign);
    out *= factor;
  }
  return out;
}

LaurentPolynomial qInteger(long n, long w) {
  if (n < 0) throw std::domain_error("negative q-integer index");
  LaurentPolynomial out;
  for (long i = 0; i < n; ++i) out += LaurentPolynomial::monomial(w * i);
  return out;
}

LaurentPolynomial qBinomial(long d, long e, long w) {
  if (e < 0 || e > d) throw std::domain_error("q-binomial requires 0 <= e <= d");
  if (w < 1) throw std::domain_error("base exponent must be >= 1");
  // (q;q)_d / (q;q)_e = prod_{i=e+1}^{d} (1 - q^i), all at base q^w
  LaurentPolynomial num(1), den(1);
  for (long i = e + 1; i <= d; ++i)
    num *= LaurentPolynomial(1) - LaurentPolynomial::monomial(w * i);
  for (long i = 1; i <= d - e; ++i)
    den *= LaurentPolynomial(1) - LaurentPolynomial::monomial(w * i);
  return divExact(num, den);
}

LaurentPolynomial glMotive(long d) {
  if (d < 0) throw std::domain_error("negative dimension");
  LaurentPolynomial out(1);
  for (long i = 0; i < d; ++i)
    out *= LaurentPolynomial::monomial(d) - LaurentPolynomial::monomial(i);
  return out;
}

LaurentPolynomial borelMotive(long d) {
  if (d < 0) throw std::domain_error("negative dimension");
  LaurentPolynomial out = LaurentPolynomial::monomial(d * (d - 1) / 2);
  const LaurentPolynomial qm1 = LaurentPolynomial::q() - LaurentPolynomial(1);
  for (long i = 0; i < d; ++i) out *= qm1;
  return out;
}

LaurentPolynomial qFactorial(long d) {
  if (d < 0) throw std::domain_error("negative factorial index");
  LaurentPolynomial out(1);
  for (long i = 1; i <= d; ++i) out *= qInteger(i);
  return out;
}

namespace {

// 1/((1-q)...(1-q^d)) as a reduced fraction.
RationalFunction inversePochhammerQ(long d) {
  LaurentPolynomial den(1);
  for (long i = 1; i <= d; ++i) den *= LaurentPolynomial(1) - LaurentPolynomial::monomial(i);
  return RationalFunction(LaurentPolynomial(1), den);
}

}  // namespace

std::vector<LaurentPolynomial> nilconeMotive(long m, long dmax) {
  if (m < 1) throw std::domain_error("m must be positive");
  if (dmax < 0) throw std::domain_error("negative dmax");
  const long w = m - 1;
  std::vector<RationalFunction> e(dmax + 1);
  for (long d = 0; d <= dmax; ++d) e[d] = inversePochhammerQ(d);
  // u_d = [N_d]/[GL_d]: solve (u * e)_d = [d == 0] in the twisted ring
  std::vector<RationalFunction> u(dmax + 1);
  u[0] = RationalFunction::one();
  for (long d = 1; d <= dmax; ++d) {
    RationalFunction acc;
    for (long f = 1; f <= d; ++f)
      acc += (u[d - f] * e[f]).mulQPower(w * (d - f) * f);
    u[d] = -acc;
  }
  std::vector<LaurentPolynomial> out(dmax + 1);
  for (long d = 0; d <= dmax; ++d) {
    RationalFunction motive = u[d] * RationalFunction(glMotive(d));
    try {
      out[d] = motive.toPolynomial();
    } catch (const NonPolynomialError& err) {
      throw std::logic_error("nilcone motive failed polynomiality certification at m=" +
                             std::to_string(m) + " d=" + std::to_string(d) + ": " + err.what());
    }
  }
  return out;
}

TwistedSeries<RationalFunction> seriesH(long m, long order) {
  if (m < 1) throw std::domain_error("m must be positive");
  TwistedSeries<RationalFunction> h(0, order);
  RationalFunction c = RationalFunction::one();
  h.setCoefficient(0, c);
  for (long d = 1; d <= order; ++d) {
    RationalFunction step(LaurentPolynomial(1),
                          LaurentPolynomial(1) - LaurentPolynomial::monomial(d));
    c = (c * step).mulQPower(-(m - 1) * (d - 1));
    h.setCoefficient(d, c);
  }
  return h;
}

TwistedSeries<RationalFunction> seriesB(long w, long order) {
  if (w < 1) throw std::domain_error("base exponent must be >= 1");
  TwistedSeries<RationalFunction> b(0, order);
  for (long d = 0; d <= order; ++d) {
    QPochhammerSpec pq{1, w, w, d};  // (q^w; q^w)_d
    b.setCoefficient(d, RationalFunction(LaurentPolynomial::monomial(w * d * (d - 1) / 2),
                                         qPochhammer(pq)));
  }
  return b;
}

namespace {

// prod_{k=0}^{cutoff} (1 + t q^{wk}) as a series over Z[q].
TwistedSeries<LaurentPolynomial> pochhammerProductSeries(long w, long cutoff, long order) {
  TwistedSeries<LaurentPolynomial> prod = TwistedSeries<LaurentPolynomial>::unit(0, order);
  for (long k = 0; k <= cutoff; ++k) {
    TwistedSeries<LaurentPolynomial> factor = TwistedSeries<LaurentPolynomial>::unit(0, order);
    if (order >= 1) factor.setCoefficient(1, LaurentPolynomial::monomial(w * k));
    prod = ordinaryMul(prod, factor);
  }
  return prod;
}

}  // namespace

QIdentityReport qBinomialTheoremCheck(long order, const std::vector<long>& bases,
                                      long max_a_power) {
  QIdentityReport report;
  report.order = order;
  report.bases = bases;
  auto fail = [&report](const std::string& msg) { report.failures.push_back(msg); };

  for (long w : bases) {
    // --- identity 1, exact finite form: n = order+1 factors.
    const long n = order + 1;
    TwistedSeries<LaurentPolynomial> finiteProduct = pochhammerProductSeries(w, n - 1, n);
    for (long d = 0; d <= n; ++d) {
      LaurentPolynomial expected = qBinomial(n, d, w).mulQPower(w * d * (d - 1) / 2);
      ++report.checks_run;
      if (!(finiteProduct[d] == expected)) {
        std::ostringstream os;
        os << "finite q-binomial theorem failed: w=" << w << " n=" << n << " d=" << d
           << " product=" << finiteProduct[d] << " expected=" << expected;
        fail(os.str());
      }
    }
    // --- identity 1, q-adic convergence of the cutoff product to B(q^w,t):
    // the t^d coefficients agree to q-adic valuation w*(cutoff+2-d).
    const long cutoff = order;
    TwistedSeries<LaurentPolynomial> truncatedProduct =
        pochhammerProductSeries(w, cutoff, order);
    TwistedSeries<RationalFunction> b = seriesB(w, order);
    for (long d = 0; d <= order; ++d) {
      RationalFunction diff = b[d] - RationalFunction(truncatedProduct[d]);
      ++report.checks_run;
      if (!diff.isZero() && diff.qValuation() < w * (cutoff + 2 - d)) {
        std::ostringstream os;
        os << "B(q,t) = (-t;q)_inf convergence failed: w=" << w << " d=" << d
           << " valuation=" << diff.qValuation() << " required=" << w * (cutoff + 2 - d);
        fail(os.str());
      }
    }
    // --- identity 2 at a = Q^s: LHS_d = (Q^s;Q)_d/(Q;Q)_d, RHS the finite
    // product 1/prod_{k<s}(1 - Q^k z), both exact over Q(q).
    for (long s = 0; s <= max_a_power; ++s) {
      TwistedSeries<RationalFunction> rhs = TwistedSeries<RationalFunction>::unit(0, order);
      for (long k = 0; k < s; ++k) {
        TwistedSeries<RationalFunction> geometric(0, order);
        for (long j = 0; j <= order; ++j)
          geometric.setCoefficient(j, RationalFunction(LaurentPolynomial::monomial(w * k * j)));
        rhs = ordinaryMul(rhs, geometric);
      }
      for (long d = 0; d <= order; ++d) {
        QPochhammerSpec numSpec{1, w * s, w, d};
        QPochhammerSpec denSpec{1, w, w, d};
        RationalFunction lhs(qPochhammer(numSpec), qPochhammer(denSpec));
        ++report.checks_run;
        if (!(lhs == rhs[d])) {
          std::ostringstream os;
          os << "q-binomial theorem (ratio form) failed: w=" << w << " a=q^" << w * s
             << " d=" << d << " lhs=" << lhs.str() << " rhs=" << rhs[d].str();
          fail(os.str());
        }
      }
    }
  }
  return report;
}

}  // namespace nchilb
