#pragma once

// The headline quantities: motives of the full and punctual schemes by
// their independent routes, the resolution motive, intersection-cohomology
// Poincare polynomials, dimensions, Euler characteristics, and the tagged
// result table used for export and cross-route comparison.

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nchilb/laurent.hpp"
#include "nchilb/trees.hpp"

namespace nchilb {

enum class Kind { full, punctual, resolution, ih, nilcone };
enum class Route { functional, reciprocity, ratio, trees, product, bseries, inversion };

std::string kindName(Kind kind);
std::string routeName(Route route);
std::optional<Kind> parseKind(const std::string& name);
std::optional<Route> parseRoute(const std::string& name);
const std::vector<Route>& routesFor(Kind kind);

// [Hilb^(m)(C^d)] = q^{(m-1)d(d+1)/2 + d} times the t^d coefficient of the
// functional-equation solution with shifts k-1.
LaurentPolynomial hilbMotive(long m, long d);

// [0Hilb^(m)(C^d)] by four independent routes:
//   functional  - solve G = 1 + t prod_k G(q^{1-k} t) and rescale,
//   reciprocity - q^{(m-1)d^2+d} hilb(q^{-1}),
//   ratio       - coefficientwise solve of H(q,qt) X = H(q,t) over Q(q),
//                 rescaled and certified integral,
//   trees       - census sum_T q^{|D(T)|} over the punctual paving cells.
LaurentPolynomial punctualMotive(long m, long d, Route route = Route::functional,
                                 long tree_cap = kDefaultTreeCap);

// [Z^(m)(C^d)] by two routes:
//   product - prod_{i=0}^{d-1} (q^{(m-1)i+1} - 1)/(q - 1),
//   bseries - the generating-function identity
//             B(q^{m-1}, qt) = B(q^{m-1}, t) sum_d [Z_d] (q-1)^d t^d / (q^{m-1};q^{m-1})_d
//             solved by series division and certified integral. At m = 1 the
//             printed identity degenerates (base q^0), so the route uses its
//             denominator-cleared form q^d = sum_e C(d,e) (q-1)^e [Z_e].
LaurentPolynomial resolutionMotive(long m, long d, Route route = Route::product);

// Equals the resolution motive: the small resolution computes intersection
// homology. Always palindromic.
LaurentPolynomial ihPoincare(long m, long d);

// punctual: (m-1)d(d-1)/2; full: (m-1)d^2 + d.
long dimension(long m, long d, Kind kind);

// The motive evaluated at q = 1.
mpz_class eulerCharacteristic(long m, long d, Kind kind);

struct GrassmannianParams {
  mpz_class ambientSpaceDim;   // dim A^/(A^+)^d = sum_{s<d} m^s
  mpz_class grassmannianDim;   // d (ambient - d)
  bool operator==(const GrassmannianParams&) const = default;
};

GrassmannianParams grassmannianEmbeddingParams(long m, long d);

struct MotiveEntry {
  long m = 0;
  long d = 0;
  Kind kind = Kind::punctual;
  Route route = Route::functional;
  long dimension = 0;
  LaurentPolynomial poly;
  bool operator==(const MotiveEntry&) const = default;
};

struct MotiveTable {
  std::vector<MotiveEntry> entries;
  bool operator==(const MotiveTable&) const = default;
};

// One entry per (d, kind, route) cell, ordered by m, d, kind, route.
// Routes not applicable to a kind are ignored; an empty route filter means
// every route of the kind.
MotiveTable buildMotiveTable(long m, long dmax, const std::vector<Kind>& kinds,
                             const std::vector<Route>& routes,
                             long tree_cap = kDefaultTreeCap);

void sortTable(MotiveTable& table);

// CSV: header m,d,kind,route,dimension,min_exp,coeffs with the coefficients
// ;-joined densely by ascending exponent from min_exp.
void emitTableCsv(const MotiveTable& table, std::ostream& os);
void emitTableText(const MotiveTable& table, std::ostream& os);

}  // namespace nchilb
