#include "qparikh/json_io.hpp"

#include "qparikh/errors.hpp"

namespace qparikh {

Json integer_to_json(const Integer& c) {
  if (c.fits_slong_p()) return Json(static_cast<std::int64_t>(c.get_si()));
  return Json(c.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer c;
    if (c.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorCode::InvalidArgument, "not a decimal integer: " + j.get<std::string>());
    return c;
  }
  throw Error(ErrorCode::InvalidArgument, "expected an integer coefficient, got " + j.dump());
}

Json poly_to_json(const IntPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(integer_to_json(c));
  return Json{{"coeffs", coeffs}};
}

IntPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw Error(ErrorCode::InvalidArgument, "expected {\"coeffs\": [...]}, got " + j.dump());
  std::vector<Integer> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(integer_from_json(c));
  return IntPoly(std::move(coeffs));
}

Json series_to_json(const TruncatedSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(integer_to_json(c));
  return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

TruncatedSeries series_from_json(const Json& j) {
  TruncatedSeries s;
  for (const auto& c : j.at("coeffs")) s.coeffs.push_back(integer_from_json(c));
  return s;
}

Json matrix_to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(poly_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

PolyMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::DimensionMismatch, "expected a nonempty array of rows");
  PolyMatrix m(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != j.size())
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < j.size(); ++k) m(i, k) = poly_from_json(j[i][k]);
  }
  return m;
}

Json rational_to_json(const FactoredRational& r) {
  Json den = Json::array();
  for (const auto& [e, mult] : r.denominator()) den.push_back({e, mult});
  return Json{{"numerator", poly_to_json(r.numerator())}, {"denominator", den}};
}

Json recurrence_to_json(const PolyRecurrence& r) {
  Json coeffs = Json::array();
  for (const auto& c : r.coeffs) coeffs.push_back(poly_to_json(c));
  return Json{{"order", r.order()}, {"coeffs", coeffs}};
}

Json recurrence_to_json(const IntRecurrence& r) {
  Json coeffs = Json::array();
  for (const auto& c : r.coeffs) coeffs.push_back(integer_to_json(c));
  return Json{{"order", r.order()}, {"coeffs", coeffs}};
}

}  // namespace qparikh
