#pragma once

// JSON wire formats. Polynomials serialize densely:
//   { "var": "q", "min_exp": e, "coeffs": [c_e, c_{e+1}, ...] }
// rational functions as { "num": poly, "den": poly }, series as
// { "twist": w, "order": N, "coeffs": [...] }, trees as lists of
// letter lists, motive tables as { "entries": [...] }.

#include <json.hpp>

#include "nchilb/laurent.hpp"
#include "nchilb/motives.hpp"
#include "nchilb/rational_function.hpp"
#include "nchilb/series.hpp"
#include "nchilb/steinberg.hpp"
#include "nchilb/trees.hpp"

namespace nchilb {

// Refuses (throws std::domain_error) beyond int64 rather than rounding.
nlohmann::json mpzToJson(const mpz_class& value);
mpz_class mpzFromJson(const nlohmann::json& j);

void to_json(nlohmann::json& j, const LaurentPolynomial& p);
void from_json(const nlohmann::json& j, LaurentPolynomial& p);

void to_json(nlohmann::json& j, const RationalFunction& f);
void from_json(const nlohmann::json& j, RationalFunction& f);

template <CoefficientRing R>
void to_json(nlohmann::json& j, const TwistedSeries<R>& s) {
  j = nlohmann::json{{"twist", s.twist()}, {"order", s.order()}};
  nlohmann::json coeffs = nlohmann::json::array();
  for (long d = 0; d <= s.order(); ++d) coeffs.push_back(nlohmann::json(s[d]));
  j["coeffs"] = std::move(coeffs);
}

template <CoefficientRing R>
TwistedSeries<R> seriesFromJson(const nlohmann::json& j) {
  TwistedSeries<R> out(j.at("twist").get<long>(), j.at("order").get<long>());
  const auto& coeffs = j.at("coeffs");
  for (long d = 0; d <= out.order(); ++d)
    out.setCoefficient(d, coeffs.at(static_cast<std::size_t>(d)).get<R>());
  return out;
}

void to_json(nlohmann::json& j, const Tree& t);

void to_json(nlohmann::json& j, const MotiveEntry& e);
void from_json(const nlohmann::json& j, MotiveEntry& e);
void to_json(nlohmann::json& j, const MotiveTable& table);
void from_json(const nlohmann::json& j, MotiveTable& table);

nlohmann::json auditToJson(const AuditReport& report);

nlohmann::json censusToJson(int m, long d, const std::vector<CensusRow>& rows);

}  // namespace nchilb
