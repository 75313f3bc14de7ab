#include "cdr/serialize.hpp"

namespace cdr {

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational, got " + j.dump());
}

json to_json(const Scalar& s) {
  json out = json::array();
  for (const auto& [d, c] : s.terms()) {
    out.push_back({{"pi_deg", d}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return out;
}

Scalar scalar_from_json(const json& j) {
  // bare numbers and "p/q" strings are accepted as Pi-degree 0
  if (j.is_number_integer() || j.is_string()) return Scalar(rational_from_json(j));
  if (!j.is_array()) throw std::invalid_argument("expected a scalar, got " + j.dump());
  Scalar s;
  for (const auto& t : j) {
    Rational r(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in scalar");
    r.canonicalize();
    s += Scalar(r, t.at("pi_deg").get<int>());
  }
  return s;
}

json to_json(const QSeries& x) {
  json coeffs = json::array();
  for (const auto& [e, c] : x.coeffs()) coeffs.push_back(json::array({e, to_json(c)}));
  json prec = nullptr;
  if (x.bound()) prec = *x.bound();
  return {{"denom", x.denom()}, {"prec", prec}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(const json& j) {
  std::optional<std::int64_t> bound;
  if (j.contains("prec") && !j.at("prec").is_null()) bound = j.at("prec").get<std::int64_t>();
  QSeries x = QSeries::blank(j.value("denom", std::int64_t{1}), bound);
  for (const auto& term : j.at("coeffs")) {
    x.set_coeff(term.at(0).get<std::int64_t>(), scalar_from_json(term.at(1)));
  }
  return x.normalized();
}

}  // namespace cdr
