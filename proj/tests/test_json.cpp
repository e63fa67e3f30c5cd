#include "support.hpp"

#include "qparikh/errors.hpp"
#include "qparikh/json_io.hpp"
#include "qparikh/parikh.hpp"

using namespace qparikh;

TEST_SUITE("json") {
  TEST_CASE("polynomials") {
    CHECK(poly_to_json(P("q^3+2q^4")).dump() == R"({"coeffs":[0,0,0,1,2]})");
    CHECK(poly_to_json(IntPoly{}).dump() == R"({"coeffs":[]})");
    for (const char* text : {"0", "1", "-q", "3+q^2-7q^9"}) CHECK(poly_from_json(poly_to_json(P(text))) == P(text));
  }

  TEST_CASE("big integers are strings") {
    Integer big = 1;
    big <<= 80;
    const Json j = integer_to_json(big);
    CHECK(j.is_string());
    CHECK(j.get<std::string>() == "1208925819614629174706176");
    CHECK(integer_from_json(j) == big);
    CHECK(integer_from_json(integer_to_json(-big)) == -big);
    CHECK(integer_to_json(Integer(-5)).is_number_integer());
    CHECK_THROWS_AS(integer_from_json(Json("12x")), Error);
    CHECK_THROWS_AS(integer_from_json(Json(1.5)), Error);
  }

  TEST_CASE("matrices") {
    const PolyMatrix m = parikh_matrix(w("0110"), w("01101001"));
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK(matrix_from_json(Json::parse(matrix_to_json(m).dump())) == m);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([[{"coeffs":[1]}],[]])")), Error);
    CHECK_THROWS_AS(poly_from_json(Json::parse("[1,2]")), Error);
  }

  TEST_CASE("series and rationals") {
    TruncatedSeries s;
    s.coeffs = {0, 0, 1, 0, 1};
    const Json j = series_to_json(s);
    CHECK(j["order"] == 4);
    CHECK(series_from_json(j).coeffs == s.coeffs);
    const Json r = rational_to_json(FactoredRational(P("q"), {{4, 1}, {8, 2}}));
    CHECK(r.dump() == R"({"denominator":[[4,1],[8,2]],"numerator":{"coeffs":[0,1]}})");
  }
}
