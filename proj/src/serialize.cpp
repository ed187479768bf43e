#include "nchilb/serialize.hpp"

#include <limits>
#include <stdexcept>

namespace nchilb {

nlohmann::json mpzToJson(const mpz_class& value) {
  if (!value.fits_slong_p()) {
    // long is 64-bit here; anything wider would be emitted inexactly
    throw std::domain_error("integer exceeds JSON number range: " + value.get_str());
  }
  return nlohmann::json(static_cast<std::int64_t>(value.get_si()));
}

mpz_class mpzFromJson(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return mpz_class(static_cast<unsigned long>(j.get<std::uint64_t>()));
  return mpz_class(static_cast<long>(j.get<std::int64_t>()));
}

void to_json(nlohmann::json& j, const LaurentPolynomial& p) {
  const long minExp = p.isZero() ? 0 : p.minDegree();
  nlohmann::json coeffs = nlohmann::json::array();
  if (!p.isZero())
    for (long e = minExp; e <= p.degree(); ++e) coeffs.push_back(mpzToJson(p.coefficient(e)));
  j = nlohmann::json{{"var", "q"}, {"min_exp", minExp}, {"coeffs", std::move(coeffs)}};
}

void from_json(const nlohmann::json& j, LaurentPolynomial& p) {
  p = LaurentPolynomial();
  const long minExp = j.at("min_exp").get<long>();
  const auto& coeffs = j.at("coeffs");
  long e = minExp;
  for (const auto& c : coeffs) {
    p += LaurentPolynomial::monomial(e, mpzFromJson(c));
    ++e;
  }
}

void to_json(nlohmann::json& j, const RationalFunction& f) {
  j = nlohmann::json{{"num", f.num()}, {"den", f.den()}};
}

void from_json(const nlohmann::json& j, RationalFunction& f) {
  f = RationalFunction(j.at("num").get<LaurentPolynomial>(),
                       j.at("den").get<LaurentPolynomial>());
}

void to_json(nlohmann::json& j, const Tree& t) {
  j = nlohmann::json::array();
  for (const Word& w : t.words()) j.push_back(w.letters());
}

void to_json(nlohmann::json& j, const MotiveEntry& e) {
  j = nlohmann::json{{"m", e.m},
                     {"d", e.d},
                     {"kind", kindName(e.kind)},
                     {"route", routeName(e.route)},
                     {"dimension", e.dimension},
                     {"poly", e.poly}};
}

void from_json(const nlohmann::json& j, MotiveEntry& e) {
  e.m = j.at("m").get<long>();
  e.d = j.at("d").get<long>();
  auto kind = parseKind(j.at("kind").get<std::string>());
  auto route = parseRoute(j.at("route").get<std::string>());
  if (!kind || !route) throw std::invalid_argument("unknown kind or route in table entry");
  e.kind = *kind;
  e.route = *route;
  e.dimension = j.at("dimension").get<long>();
  e.poly = j.at("poly").get<LaurentPolynomial>();
}

void to_json(nlohmann::json& j, const MotiveTable& table) {
  j = nlohmann::json{{"entries", table.entries}};
}

void from_json(const nlohmann::json& j, MotiveTable& table) {
  table.entries = j.at("entries").get<std::vector<MotiveEntry>>();
}

nlohmann::json auditToJson(const AuditReport& report) {
  nlohmann::json strata = nlohmann::json::array();
  for (const AuditStratum& s : report.strata)
    strata.push_back(nlohmann::json{
        {"length", s.length}, {"count", mpzToJson(s.count)}, {"quotient_dim", s.quotientDim}});
  return nlohmann::json{
      {"m", report.m},
      {"d", report.d},
      {"mode", report.mode == AuditMode::exhaustive ? "exhaustive" : "grouped"},
      {"strata", std::move(strata)},
      {"top_dim", report.topDim},
      {"unique_top", report.uniqueTop},
      {"small", report.small},
      {"stratum_formula_dim", report.stratumFormulaDim},
      {"printed_dim", report.printedDim},
      {"printed_dim_matches", report.printedDimMatches}};
}

nlohmann::json censusToJson(int m, long d, const std::vector<CensusRow>& rows) {
  nlohmann::json out = nlohmann::json{{"m", m}, {"d", d}};
  nlohmann::json jrows = nlohmann::json::array();
  for (const CensusRow& row : rows)
    jrows.push_back(nlohmann::json{{"tree_id", row.treeId},
                                   {"dim_full", row.dimFull},
                                   {"dim_punctual", row.dimPunctual},
                                   {"n_linear_extensions", mpzToJson(row.linearExtensions)}});
  out["rows"] = std::move(jrows);
  return out;
}

}  // namespace nchilb
