#pragma once

// JSON encodings: a polynomial is {"coeffs":[c0,c1,...]} by ascending
// exponent, a matrix is an array of rows of polynomials. Coefficients that
// do not fit in a signed 64-bit integer are written as decimal strings.

#include <json.hpp>

#include "qparikh/matrix.hpp"
#include "qparikh/polynomial.hpp"
#include "qparikh/rational.hpp"
#include "qparikh/recurrence.hpp"

namespace qparikh {

using Json = nlohmann::json;

Json integer_to_json(const Integer& c);
Integer integer_from_json(const Json& j);

Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

Json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const Json& j);

/// {"numerator": poly, "denominator": [[e, multiplicity], ...]}
Json rational_to_json(const FactoredRational& r);

Json recurrence_to_json(const PolyRecurrence& r);
Json recurrence_to_json(const IntRecurrence& r);

}  // namespace qparikh
