#pragma once

// Classical q-machinery: Pochhammer symbols (a;q)_n with a = +-q^j and base
// q^w, Gaussian binomial coefficients, the motives of GL_d and of the Borel
// subgroup, the q-factorial, the H and B generating series, the twisted
// inversion that recovers nilpotent-cone motives, and an executable check
// of the two q-binomial-theorem identities.

#include <string>
#include <vector>

#include "nchilb/laurent.hpp"
#include "nchilb/rational_function.hpp"
#include "nchilb/series.hpp"

namespace nchilb {

// Encodes (a; q^w)_n with a = sign * q^{a_exponent}. Only finite lengths are
// representable; infinite products are handled per series degree by their
// consumers with an explicit truncation.
struct QPochhammerSpec {
  int a_sign = 1;        // +1 or -1
  long a_exponent = 0;   // a = a_sign * q^{a_exponent}
  long base_exponent = 1;  // base q^{base_exponent}, >= 1
  long length = 0;       // n >= 0
};

// (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k), evaluated exactly.
LaurentPolynomial qPochhammer(const QPochhammerSpec& spec);

// [n]_{q^w} = 1 + q^w + ... + q^{w(n-1)}.
LaurentPolynomial qInteger(long n, long w = 1);

// Gaussian binomial [d e] at base q^w, via (q;q)_d / ((q;q)_e (q;q)_{d-e})
// with exact division. Domain error unless 0 <= e <= d.
LaurentPolynomial qBinomial(long d, long e, long w = 1);

// [GL_d(C)] = prod_{i=0}^{d-1} (q^d - q^i), degree d^2.
LaurentPolynomial glMotive(long d);

// [B(C^d)] = q^{d(d-1)/2} (q-1)^d.
LaurentPolynomial borelMotive(long d);

// [d]_q! = prod_{i=1}^{d} (1 + q + ... + q^{i-1}); also the inversion
// generating function of S_d.
LaurentPolynomial qFactorial(long d);

// Motives [N^{(m)}(C^d)] of the simultaneous nilpotent cones for
// d = 0..dmax, recovered by inverting
//   sum_d ([N_d]/[GL_d]) t^d * sum_d t^d/((1-q)...(1-q^d)) = 1
// in the twist-(m-1) series ring and clearing the [GL_d] denominators.
// Each entry is certified to be an integer polynomial; certification
// failure is an implementation bug and throws std::logic_error.
std::vector<LaurentPolynomial> nilconeMotive(long m, long dmax);

// H^{(m)}(q,t) = sum_d q^{-(m-1)d(d-1)/2} t^d / ((1-q)...(1-q^d)),
// built by the coefficient recursion c_d = q^{-(m-1)(d-1)}/(1-q^d) c_{d-1}.
TwistedSeries<RationalFunction> seriesH(long m, long order);

// B(q,t) = sum_d q^{d(d-1)/2} t^d / (q;q)_d instantiated at base q^w, w >= 1.
TwistedSeries<RationalFunction> seriesB(long w, long order);

struct QIdentityReport {
  long order = 0;
  std::vector<long> bases;
  long checks_run = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Verifies, for each base exponent w:
//  (1) the finite q-binomial theorem
//        prod_{k=0}^{n-1} (1 + t q^{wk}) = sum_d q^{w d(d-1)/2} [n d]_{q^w} t^d
//      exactly (n = order+1), together with the q-adic convergence of the
//      cutoff-K product to B(q^w, t): val_q(B_d - P_K[d]) >= w (K+2-d);
//  (2) sum_d (a;Q)_d/(Q;Q)_d z^d = (az;Q)_infty/(z;Q)_infty at Q = q^w for
//      a = Q^s, where the right side collapses to the exact finite product
//      1/prod_{k<s}(1 - Q^k z).
QIdentityReport qBinomialTheoremCheck(long order, const std::vector<long>& bases,
                                      long max_a_power = 3);

}  // namespace nchilb
