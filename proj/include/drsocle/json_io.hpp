#pragma once

// JSON forms of the exchange types. Rationals are strings "num/den".

#include "drsocle/exact.hpp"
#include "drsocle/modfit.hpp"
#include "drsocle/qseries.hpp"

#include <json.hpp>

namespace drsocle {

nlohmann::json rational_to_json(const Rational& x);
/// Accepts a "num/den" or "n" string, or a JSON integer.
Rational rational_from_json(const nlohmann::json& j);

/// {"order": N, "coeffs": ["c0", ...], "constant_known": bool}
nlohmann::json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const nlohmann::json& j);

/// [{"exp": [a, b, c], "coeff": "num/den"}, ...]
nlohmann::json poly_to_json(const QuasimodularPoly& p);
QuasimodularPoly poly_from_json(const nlohmann::json& j);

}  // namespace drsocle
