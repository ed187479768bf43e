#include <doctest.h>

#include <sstream>

#include "nchilb/motives.hpp"
#include "nchilb/qtools.hpp"
#include "nchilb/serialize.hpp"

using namespace nchilb;

namespace {

LaurentPolynomial poly(long min_exp, std::initializer_list<long> coeffs) {
  return LaurentPolynomial::fromCoefficients(min_exp, std::vector<long>(coeffs));
}

}  // namespace

TEST_SUITE("motives") {

TEST_CASE("full scheme motives") {
  for (long d = 0; d <= 6; ++d) CHECK(hilbMotive(1, d) == LaurentPolynomial::monomial(d));
  CHECK(hilbMotive(2, 2) == poly(5, {1, 1}));
  CHECK(hilbMotive(2, 3) == poly(9, {1, 2, 1, 1}));
  CHECK(hilbMotive(2, 3).degree() == 12);
}

TEST_CASE("full scheme motive shape") {
  for (long m = 1; m <= 3; ++m) {
    for (long d = 1; d <= 5; ++d) {
      const LaurentPolynomial h = hilbMotive(m, d);
      CHECK(h.degree() == (m - 1) * d * d + d);
      CHECK(h.leadingCoefficient() == 1);
      for (const auto& [e, c] : h.terms()) CHECK(c > 0);
    }
  }
}

TEST_CASE("punctual motives: small closed forms") {
  for (long m = 1; m <= 4; ++m) {
    CHECK(punctualMotive(m, 0) == LaurentPolynomial(1));
    CHECK(punctualMotive(m, 1) == LaurentPolynomial(1));
    CHECK(punctualMotive(m, 2) == qInteger(m));  // projective space
  }
  CHECK(punctualMotive(3, 2) == poly(0, {1, 1, 1}));
  CHECK(punctualMotive(2, 3) == poly(0, {1, 1, 2, 1}));
  // the cone over the quartic scroll: vertex plus a line bundle over P1 x P1
  const LaurentPolynomial cone =
      LaurentPolynomial(1) + LaurentPolynomial::q() * poly(0, {1, 1}) * poly(0, {1, 1});
  CHECK(punctualMotive(2, 3) == cone);
  CHECK(punctualMotive(2, 4) == poly(0, {1, 1, 2, 3, 3, 3, 1}));
}

TEST_CASE("four routes agree") {
  for (long m = 1; m <= 3; ++m) {
    for (long d = 0; d <= 5; ++d) {
      const LaurentPolynomial functional = punctualMotive(m, d, Route::functional);
      CHECK(punctualMotive(m, d, Route::reciprocity) == functional);
      CHECK(punctualMotive(m, d, Route::ratio) == functional);
      CHECK(punctualMotive(m, d, Route::trees) == functional);
    }
  }
}

TEST_CASE("reciprocity both ways") {
  for (long m = 1; m <= 3; ++m) {
    for (long d = 0; d <= 5; ++d) {
      const long s = (m - 1) * d * d + d;
      CHECK(hilbMotive(m, d) == punctualMotive(m, d).reciprocal(s));
      CHECK(punctualMotive(m, d) == hilbMotive(m, d).reciprocal(s));
    }
  }
}

TEST_CASE("punctual motive shape") {
  for (long m = 1; m <= 4; ++m) {
    for (long d = 1; d <= 6; ++d) {
      const LaurentPolynomial p = punctualMotive(m, d);
      CHECK(p.degree() == (m - 1) * d * (d - 1) / 2);
      CHECK(p.leadingCoefficient() == 1);
      CHECK(p.coefficient(0) == 1);  // the unique zero-dimensional cell
      for (const auto& [e, c] : p.terms()) CHECK(c > 0);
    }
  }
}

TEST_CASE("resolution motives") {
  CHECK(resolutionMotive(2, 3) == poly(0, {1, 2, 2, 1}));
  CHECK(resolutionMotive(2, 3) == qFactorial(3));
  for (long d = 0; d <= 10; ++d) CHECK(resolutionMotive(1, d) == LaurentPolynomial(1));
  const LaurentPolynomial ternary = resolutionMotive(3, 3);
  CHECK(ternary == poly(0, {1, 1, 1}) * poly(0, {1, 1, 1, 1, 1}));
  CHECK(ternary.evaluateAtOne() == 15);
}

TEST_CASE("resolution routes agree and are palindromic") {
  for (long m = 1; m <= 4; ++m) {
    for (long d = 0; d <= 6; ++d) {
      const LaurentPolynomial product = resolutionMotive(m, d, Route::product);
      CHECK(resolutionMotive(m, d, Route::bseries) == product);
      CHECK(isPalindromic(product));
      CHECK(product.degree() == (m - 1) * d * (d - 1) / 2);
    }
  }
  for (long d = 0; d <= 10; ++d) CHECK(resolutionMotive(2, d) == qFactorial(d));
}

TEST_CASE("intersection cohomology polynomials") {
  CHECK(ihPoincare(2, 3) == poly(0, {1, 2, 2, 1}));
  CHECK(ihPoincare(3, 1) == LaurentPolynomial(1));
  CHECK(ihPoincare(2, 2) == poly(0, {1, 1}));
  CHECK(ihPoincare(2, 2) == punctualMotive(2, 2));  // P^1 is smooth
  for (long m = 1; m <= 3; ++m)
    for (long d = 0; d <= 5; ++d) CHECK(ihPoincare(m, d) == resolutionMotive(m, d));
}

TEST_CASE("dimensions") {
  CHECK(dimension(2, 3, Kind::punctual) == 3);
  for (long d = 0; d <= 5; ++d) CHECK(dimension(1, d, Kind::punctual) == 0);
  CHECK(dimension(2, 2, Kind::full) == 6);
}

TEST_CASE("euler characteristics") {
  CHECK(eulerCharacteristic(2, 4, Kind::punctual) == 14);
  CHECK(eulerCharacteristic(3, 3, Kind::resolution) == 15);
  CHECK(eulerCharacteristic(3, 0, Kind::ih) == 1);
  CHECK(eulerCharacteristic(2, 0, Kind::nilcone) == 1);
  for (long m = 1; m <= 3; ++m)
    for (long d = 0; d <= 5; ++d)
      CHECK(eulerCharacteristic(m, d, Kind::punctual) == fussCatalan(m, d));
}

TEST_CASE("grassmannian embedding parameters") {
  CHECK(grassmannianEmbeddingParams(2, 3) == GrassmannianParams{7, 12});
  for (long d = 1; d <= 5; ++d)
    CHECK(grassmannianEmbeddingParams(1, d) == GrassmannianParams{d, 0});
  CHECK(grassmannianEmbeddingParams(2, 2) == GrassmannianParams{3, 2});
}

TEST_CASE("motive table construction and invariants") {
  const MotiveTable table = buildMotiveTable(
      2, 4, {Kind::full, Kind::punctual, Kind::resolution, Kind::ih, Kind::nilcone}, {});
  CHECK_FALSE(table.entries.empty());
  for (const MotiveEntry& e : table.entries) {
    if (e.kind != Kind::nilcone) CHECK(e.dimension == dimension(e.m, e.d, e.kind));
    if (!e.poly.isZero()) CHECK(e.poly.degree() == e.dimension);
  }
  // all routes of a cell agree
  for (const MotiveEntry& a : table.entries)
    for (const MotiveEntry& b : table.entries)
      if (a.m == b.m && a.d == b.d && a.kind == b.kind) CHECK(a.poly == b.poly);
  // canonical ordering
  for (std::size_t i = 1; i < table.entries.size(); ++i) {
    const auto key = [](const MotiveEntry& e) {
      return std::tuple(e.m, e.d, static_cast<int>(e.kind), static_cast<int>(e.route));
    };
    CHECK(key(table.entries[i - 1]) < key(table.entries[i]));
  }
}

TEST_CASE("table CSV export") {
  MotiveTable table;
  std::ostringstream empty;
  emitTableCsv(table, empty);
  CHECK(empty.str() == "m,d,kind,route,dimension,min_exp,coeffs\n");

  table.entries.push_back({2, 2, Kind::punctual, Route::functional, 1, poly(0, {1, 1})});
  std::ostringstream one;
  emitTableCsv(table, one);
  CHECK(one.str() ==
        "m,d,kind,route,dimension,min_exp,coeffs\n"
        "2,2,punctual,functional,1,0,1;1\n");

  table.entries.clear();
  table.entries.push_back({2, 2, Kind::full, Route::functional, 6, poly(5, {1, 1})});
  std::ostringstream shifted;
  emitTableCsv(table, shifted);
  CHECK(shifted.str().find("2,2,full,functional,6,5,1;1") != std::string::npos);
}

TEST_CASE("table JSON round trip") {
  const MotiveTable table = buildMotiveTable(2, 3, {Kind::punctual, Kind::resolution}, {});
  const nlohmann::json j = table;
  const MotiveTable parsed = j.get<MotiveTable>();
  CHECK(parsed == table);
  // the d=3 punctual rows carry coeffs [1,1,2,1]
  bool found = false;
  for (const auto& entry : j.at("entries")) {
    if (entry.at("d") == 3 && entry.at("kind") == "punctual") {
      CHECK(entry.at("poly").at("coeffs") == nlohmann::json({1, 1, 2, 1}));
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("kind and route names") {
  CHECK(parseKind("punctual") == Kind::punctual);
  CHECK(parseRoute("bseries") == Route::bseries);
  CHECK_FALSE(parseKind("nonsense").has_value());
  CHECK(kindName(Kind::ih) == "ih");
  CHECK(routeName(Route::inversion) == "inversion");
}

TEST_CASE("route validity") {
  CHECK_THROWS_AS(punctualMotive(2, 2, Route::product), std::invalid_argument);
  CHECK_THROWS_AS(resolutionMotive(2, 2, Route::trees), std::invalid_argument);
}

}  // TEST_SUITE
