#include "nchilb/series.hpp"

namespace nchilb {

TwistedSeries<LaurentPolynomial> solveFunctionalEquation(long m, long order,
                                                         const std::vector<long>& shifts) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (static_cast<long>(shifts.size()) != m)
    throw std::invalid_argument("expected one shift per factor");
  TwistedSeries<LaurentPolynomial> g = TwistedSeries<LaurentPolynomial>::unit(0, order);
  for (long d = 1; d <= order; ++d) {
    const TwistedSeries<LaurentPolynomial> known = truncated(g, d - 1);
    TwistedSeries<LaurentPolynomial> prod =
        TwistedSeries<LaurentPolynomial>::unit(0, d - 1);
    for (long k = 0; k < m; ++k)
      prod = ordinaryMul(prod, substituteScale(known, shifts[static_cast<std::size_t>(k)]));
    g.setCoefficient(d, prod[d - 1]);
  }
  return g;
}

}  // namespace nchilb
