#pragma once

#include <json.hpp>

#include "cdr/qseries.hpp"
#include "cdr/scalar.hpp"

namespace cdr {

using json = nlohmann::json;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// [{"pi_deg": d, "num": "...", "den": "..."}, ...]
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

/// {"denom": M, "prec": n, "coeffs": [[e, scalar], ...]}; prec is null for exact series.
json to_json(const QSeries& x);
QSeries qseries_from_json(const json& j);

}  // namespace cdr
