#include "nchilb/motives.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#include "nchilb/qtools.hpp"
#include "nchilb/series.hpp"

namespace nchilb {

std::string kindName(Kind kind) {
  switch (kind) {
    case Kind::full: return "full";
    case Kind::punctual: return "punctual";
    case Kind::resolution: return "resolution";
    case Kind::ih: return "ih";
    case Kind::nilcone: return "nilcone";
  }
  throw std::logic_error("unknown kind");
}

std::string routeName(Route route) {
  switch (route) {
    case Route::functional: return "functional";
    case Route::reciprocity: return "reciprocity";
    case Route::ratio: return "ratio";
    case Route::trees: return "trees";
    case Route::product: return "product";
    case Route::bseries: return "bseries";
    case Route::inversion: return "inversion";
  }
  throw std::logic_error("unknown route");
}

std::optional<Kind> parseKind(const std::string& name) {
  for (Kind k : {Kind::full, Kind::punctual, Kind::resolution, Kind::ih, Kind::nilcone})
    if (kindName(k) == name) return k;
  return std::nullopt;
}

std::optional<Route> parseRoute(const std::string& name) {
  for (Route r : {Route::functional, Route::reciprocity, Route::ratio, Route::trees,
                  Route::product, Route::bseries, Route::inversion})
    if (routeName(r) == name) return r;
  return std::nullopt;
}

const std::vector<Route>& routesFor(Kind kind) {
  static const std::vector<Route> full = {Route::functional, Route::trees};
  static const std::vector<Route> punctual = {Route::functional, Route::reciprocity,
                                              Route::ratio, Route::trees};
  static const std::vector<Route> resolution = {Route::product, Route::bseries};
  static const std::vector<Route> ih = {Route::product};
  static const std::vector<Route> nilcone = {Route::inversion};
  switch (kind) {
    case Kind::full: return full;
    case Kind::punctual: return punctual;
    case Kind::resolution: return resolution;
    case Kind::ih: return ih;
    case Kind::nilcone: return nilcone;
  }
  throw std::logic_error("unknown kind");
}

namespace {

void requireParams(long m, long d) {
  if (m < 1) throw std::domain_error("m must be positive");
  if (d < 0) throw std::domain_error("d must be non-negative");
}

std::vector<long> fullShifts(long m) {
  std::vector<long> shifts(static_cast<std::size_t>(m));
  for (long k = 1; k <= m; ++k) shifts[static_cast<std::size_t>(k - 1)] = k - 1;
  return shifts;
}

std::vector<long> punctualShifts(long m) {
  std::vector<long> shifts(static_cast<std::size_t>(m));
  for (long k = 1; k <= m; ++k) shifts[static_cast<std::size_t>(k - 1)] = 1 - k;
  return shifts;
}

}  // namespace

LaurentPolynomial hilbMotive(long m, long d) {
  requireParams(m, d);
  auto g = solveFunctionalEquation(m, d, fullShifts(m));
  return g[d].mulQPower((m - 1) * d * (d + 1) / 2 + d);
}

LaurentPolynomial punctualMotive(long m, long d, Route route, long tree_cap) {
  requireParams(m, d);
  const long scale = (m - 1) * d * (d - 1) / 2;
  switch (route) {
    case Route::functional: {
      auto g = solveFunctionalEquation(m, d, punctualShifts(m));
      return g[d].mulQPower(scale);
    }
    case Route::reciprocity:
      return hilbMotive(m, d).reciprocal((m - 1) * d * d + d);
    case Route::ratio: {
      auto h = seriesH(m, d);
      auto x = seriesDiv(h, substituteScale(h, 1));
      return x[d].mulQPower(scale).toPolynomial();
    }
    case Route::trees: {
      LaurentPolynomial sum;
      for (const Tree& t : enumerateTrees(static_cast<int>(m), d, tree_cap))
        sum += LaurentPolynomial::monomial(cellDimPunctual(t));
      return sum;
    }
    default:
      throw std::invalid_argument("route " + routeName(route) +
                                  " is not a punctual-motive route");
  }
}

namespace {

// q^d = sum_e C(d,e) (q-1)^e [Z_e]: the base-q^0 limit of the bseries
// identity, solved by exact division.
LaurentPolynomial resolutionBSeriesDegenerate(long d) {
  const LaurentPolynomial qm1 = LaurentPolynomial::q() - LaurentPolynomial(1);
  std::vector<LaurentPolynomial> z(static_cast<std::size_t>(d) + 1);
  z[0] = LaurentPolynomial(1);
  for (long e = 1; e <= d; ++e) {
    LaurentPolynomial acc = LaurentPolynomial::monomial(e);
    LaurentPolynomial power(1);  // (q-1)^f during the loop, (q-1)^e after
    for (long f = 0; f < e; ++f) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e),
                   static_cast<unsigned long>(f));
      acc -= z[static_cast<std::size_t>(f)].mulScalar(binom) * power;
      power *= qm1;
    }
    z[static_cast<std::size_t>(e)] = divExact(acc, power);
  }
  return z[static_cast<std::size_t>(d)];
}

LaurentPolynomial resolutionBSeries(long m, long d) {
  if (m == 1) return resolutionBSeriesDegenerate(d);
  const long w = m - 1;
  auto b = seriesB(w, d);
  auto ratio = seriesDiv(substituteScale(b, 1), b);
  // [Z_d] = ratio_d (q^w;q^w)_d / (q-1)^d
  RationalFunction pochhammer(qPochhammer({1, w, w, d}));
  LaurentPolynomial qm1Power(1);
  const LaurentPolynomial qm1 = LaurentPolynomial::q() - LaurentPolynomial(1);
  for (long i = 0; i < d; ++i) qm1Power *= qm1;
  return (ratio[d] * pochhammer / RationalFunction(qm1Power)).toPolynomial();
}

}  // namespace

LaurentPolynomial resolutionMotive(long m, long d, Route route) {
  requireParams(m, d);
  switch (route) {
    case Route::product: {
      LaurentPolynomial out(1);
      for (long i = 0; i < d; ++i) out *= qInteger((m - 1) * i + 1);
      return out;
    }
    case Route::bseries:
      return resolutionBSeries(m, d);
    default:
      throw std::invalid_argument("route " + routeName(route) +
                                  " is not a resolution-motive route");
  }
}

LaurentPolynomial ihPoincare(long m, long d) { return resolutionMotive(m, d, Route::product); }

long dimension(long m, long d, Kind kind) {
  requireParams(m, d);
  switch (kind) {
    case Kind::punctual:
    case Kind::resolution:
    case Kind::ih:
      return (m - 1) * d * (d - 1) / 2;
    case Kind::full:
      return (m - 1) * d * d + d;
    default:
      throw std::invalid_argument("no closed-form dimension for kind " + kindName(kind));
  }
}

mpz_class eulerCharacteristic(long m, long d, Kind kind) {
  requireParams(m, d);
  switch (kind) {
    case Kind::punctual: return punctualMotive(m, d).evaluateAtOne();
    case Kind::full: return hilbMotive(m, d).evaluateAtOne();
    case Kind::resolution:
    case Kind::ih: return resolutionMotive(m, d).evaluateAtOne();
    case Kind::nilcone: return nilconeMotive(m, d)[static_cast<std::size_t>(d)].evaluateAtOne();
  }
  throw std::logic_error("unknown kind");
}

GrassmannianParams grassmannianEmbeddingParams(long m, long d) {
  requireParams(m, d);
  GrassmannianParams out;
  mpz_class power = 1;
  for (long s = 0; s < d; ++s) {
    out.ambientSpaceDim += power;
    power *= m;
  }
  out.grassmannianDim = d * (out.ambientSpaceDim - d);
  return out;
}

namespace {

long tableDimension(long m, long d, Kind kind, const LaurentPolynomial& poly) {
  if (kind == Kind::nilcone) return poly.isZero() ? 0 : poly.degree();
  return dimension(m, d, kind);
}

}  // namespace

MotiveTable buildMotiveTable(long m, long dmax, const std::vector<Kind>& kinds,
                             const std::vector<Route>& routes, long tree_cap) {
  requireParams(m, dmax);
  MotiveTable table;
  std::vector<LaurentPolynomial> nilcone;
  auto wantRoute = [&routes](Route r) {
    return routes.empty() || std::find(routes.begin(), routes.end(), r) != routes.end();
  };
  for (long d = 0; d <= dmax; ++d) {
    for (Kind kind : kinds) {
      for (Route route : routesFor(kind)) {
        if (!wantRoute(route)) continue;
        LaurentPolynomial poly;
        switch (kind) {
          case Kind::full:
            poly = route == Route::trees
                       ? [&] {
                           LaurentPolynomial sum;
                           for (const Tree& t :
                                enumerateTrees(static_cast<int>(m), d, tree_cap))
                             sum += LaurentPolynomial::monomial(cellDimFull(t));
                           return sum;
                         }()
                       : hilbMotive(m, d);
            break;
          case Kind::punctual:
            poly = punctualMotive(m, d, route, tree_cap);
            break;
          case Kind::resolution:
            poly = resolutionMotive(m, d, route);
            break;
          case Kind::ih:
            poly = ihPoincare(m, d);
            break;
          case Kind::nilcone:
            if (nilcone.empty()) nilcone = nilconeMotive(m, dmax);
            poly = nilcone[static_cast<std::size_t>(d)];
            break;
        }
        table.entries.push_back(
            {m, d, kind, route, tableDimension(m, d, kind, poly), std::move(poly)});
      }
    }
  }
  sortTable(table);
  return table;
}

void sortTable(MotiveTable& table) {
  std::stable_sort(table.entries.begin(), table.entries.end(),
                   [](const MotiveEntry& a, const MotiveEntry& b) {
                     auto key = [](const MotiveEntry& e) {
                       return std::tuple(e.m, e.d, static_cast<int>(e.kind),
                                         static_cast<int>(e.route));
                     };
                     return key(a) < key(b);
                   });
}

namespace {

std::string denseCoeffString(const LaurentPolynomial& poly, const char* sep) {
  if (poly.isZero()) return "";
  std::string out;
  for (long e = poly.minDegree(); e <= poly.degree(); ++e) {
    if (e != poly.minDegree()) out += sep;
    out += poly.coefficient(e).get_str();
  }
  return out;
}

}  // namespace

void emitTableCsv(const MotiveTable& table, std::ostream& os) {
  os << "m,d,kind,route,dimension,min_exp,coeffs\n";
  for (const MotiveEntry& e : table.entries) {
    const long minExp = e.poly.isZero() ? 0 : e.poly.minDegree();
    os << e.m << "," << e.d << "," << kindName(e.kind) << "," << routeName(e.route) << ","
       << e.dimension << "," << minExp << "," << denseCoeffString(e.poly, ";") << "\n";
  }
}

void emitTableText(const MotiveTable& table, std::ostream& os) {
  for (const MotiveEntry& e : table.entries)
    os << "m=" << e.m << " d=" << e.d << " " << kindName(e.kind) << "/" << routeName(e.route)
       << " dim=" << e.dimension << ": " << e.poly.str() << "\n";
}

}  // namespace nchilb
