#include "support.hpp"

#include <string>

#include "qparikh/errors.hpp"
#include "qparikh/morphism_reduction.hpp"
#include "qparikh/parikh.hpp"

using namespace qparikh;

namespace {

PolyMatrix upper(const std::vector<std::vector<const char*>>& rows) {
  const std::size_t n = rows.size() + 1;
  PolyMatrix m = PolyMatrix::identity(n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows[i].size(); ++k) m(i, i + 1 + k) = P(rows[i][k]);
  return m;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

const Word kZ = parse_word("121323");
const Word kU = parse_word("1121323");

}  // namespace

TEST_SUITE("morphism_reduction") {
  TEST_CASE("sigma_z") {
    const Morphism s = sigma_z(kZ);
    CHECK(s.image(Letter{1}) == w("13"));
    CHECK(s.image(Letter{2}) == w("25"));
    CHECK(s.image(Letter{3}) == w("46"));
    CHECK(s.apply(kZ) == w("132513462546"));
    CHECK(s.apply(kU) == w("13132513462546"));

    const Morphism id = sigma_z(w("1234"));
    for (std::uint32_t a = 1; a <= 4; ++a) CHECK(id.image(Letter{a}) == Word{a});

    const Morphism latin = sigma_z(w("aba"));
    CHECK(latin.image(Letter{1}) == w("13"));
    CHECK(latin.image(Letter{2}) == w("2"));
  }

  TEST_CASE("Z and C") {
    const ZCMatrices zc = zc_matrices(kZ);
    CHECK(zc.z == upper({{"q", "q^3", "q^5", "q^9", "q^13", "q^18"},
                         {"q", "q^2", "q^5", "q^8", "q^12"},
                         {"1", "q^2", "q^4", "q^7"},
                         {"q", "q^2", "q^4"},
                         {"1", "q"},
                         {"1"}}));
    CHECK(zc.c == upper({{"1", "q", "q^3", "q^6", "q^10", "q^15"},
                         {"1", "q", "q^3", "q^6", "q^10"},
                         {"1", "q", "q^3", "q^6"},
                         {"1", "q", "q^3"},
                         {"1", "q"},
                         {"1"}}));
    CHECK(code_of([] { zc_matrices(w("1123")); }) == ErrorCode::AdjacentRepeatedLetter);
  }

  TEST_CASE("worked example") {
    const PolyMatrix p = upper({
        {"q^6+q^5+q^3", "q^10+q^9+q^7+q^6+q^4", "q^13+q^12", "q^15+q^14+q^13+q^12", "q^16+q^15", "q^16+q^15"},
        {"q^4+q", "q^7", "q^9+q^7", "q^10", "q^10"},
        {"q^6+q^5+q^3", "q^8+q^7+q^6+2q^5+q^3", "q^9+q^8+q^6", "q^9+q^8+q^6"},
        {"q^2+1", "q^3", "q^3"},
        {"q^4+q", "q^6+q^4+q"},
        {"q^2+1"},
    });
    const PolyMatrix e = upper({
        {"q^13+q^11+q^7", "q^22+q^20+q^16+q^14+q^10", "q^28+q^26", "q^33+q^31+q^29+q^27", "q^35+q^33",
         "q^35+q^33"},
        {"q^9+q^3", "q^15", "q^20+q^16", "q^22", "q^22"},
        {"q^12+q^10+q^6", "q^17+q^15+q^13+2q^11+q^7", "q^19+q^17+q^13", "q^19+q^17+q^13"},
        {"q^5+q", "q^7", "q^7"},
        {"q^8+q^2", "q^12+q^8+q^2"},
        {"q^4+1"},
    });
    CHECK(parikh_matrix(kZ, kU) == p);
    const ReductionReport rep = reduce_to_canonical(kZ, kU);
    CHECK(rep.r == 2);
    CHECK(rep.sigma_u == w("13132513462546"));
    CHECK(rep.p == p);
    CHECK(rep.e == e);
    CHECK(rep.forward);
    CHECK(rep.inverse);
    CHECK(hadamard(rep.zc.c.dilated(1), e) == hadamard(rep.zc.z, p.dilated(2)));
    CHECK(check_canonical_reduction(kZ, kU));
  }

  TEST_CASE("r = 1 is the identity reduction") {
    const ReductionReport rep = reduce_to_canonical(w("123"), w("3121332"));
    CHECK(rep.r == 1);
    CHECK(rep.sigma_u == w("3121332"));
    CHECK(rep.forward);
    CHECK(rep.inverse);
    CHECK(rep.e == rep.p);
  }

  TEST_CASE("hypotheses") {
    CHECK(require_reduction_hypotheses(kZ, kU) == 2);
    CHECK(code_of([] { require_reduction_hypotheses(w("1213"), w("12")); }) == ErrorCode::HypothesisViolated);
    CHECK(code_of([] { require_reduction_hypotheses(w("1212"), w("123")); }) == ErrorCode::HypothesisViolated);
    CHECK(code_of([] { require_reduction_hypotheses(w("1122"), w("12")); }) == ErrorCode::HypothesisViolated);
    CHECK(code_of([] { reduce_to_canonical(w("1213"), w("12")); }) == ErrorCode::HypothesisViolated);
  }

  TEST_CASE("extra property") {
    CHECK(extra_property_check(kZ, kU, 1, 2));
    CHECK(extra_property_check(kZ, kU, 3, 3));
    CHECK(extra_property_check(kZ, kU, 1, 3));
    CHECK(extra_property_check(kZ, kU, 1, 6));
    for (std::size_t i = 1; i <= 6; ++i)
      for (std::size_t j = i; j <= 6; ++j) CHECK(extra_property_check(kZ, w("3213211"), i, j));
    CHECK(code_of([] { extra_property_check(kZ, kU, 0, 2); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { extra_property_check(kZ, kU, 3, 2); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { extra_property_check(kZ, kU, 2, 7); }) == ErrorCode::InvalidArgument);
  }
}
