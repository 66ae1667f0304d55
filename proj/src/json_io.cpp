#include "drsocle/json_io.hpp"

#include <stdexcept>

namespace drsocle {

nlohmann::json rational_to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

nlohmann::json qseries_to_json(const QSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(rational_to_json(c));
  return {{"order", s.order()}, {"coeffs", std::move(coeffs)}, {"constant_known", s.constant_known()}};
}

QSeries qseries_from_json(const nlohmann::json& j) {
  const int order = j.at("order").get<int>();
  const auto& raw = j.at("coeffs");
  if (!raw.is_array() || static_cast<int>(raw.size()) != order + 1) {
    throw std::invalid_argument("q-series needs exactly order + 1 coefficients");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : raw) coeffs.push_back(rational_from_json(c));
  const bool known = j.value("constant_known", true);
  QSeries s(order, std::move(coeffs));
  if (!known) s.mark_constant_unknown();
  return s;
}

nlohmann::json poly_to_json(const QuasimodularPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exp", e}, {"coeff", rational_to_json(c)}});
  return out;
}

QuasimodularPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("quasimodular polynomial must be a JSON array");
  QuasimodularPoly p;
  for (const auto& t : j) p.add_term(t.at("exp").get<Exponent>(), rational_from_json(t.at("coeff")));
  return p;
}

}  // namespace drsocle
