#include "support.hpp"

#include "qparikh/errors.hpp"
#include "qparikh/qbinomial.hpp"
#include "qparikh/rational.hpp"
#include "qparikh/recurrence.hpp"

using namespace qparikh;

TEST_SUITE("polynomials") {
  TEST_CASE("canonical form and text") {
    CHECK(IntPoly{1, 0, 0, 1, 0, 1, 1, 0, 0}.coeffs().size() == 7);
    CHECK(to_string(IntPoly{1, 0, 0, 1, 0, 1, 1}) == "q^6+q^5+q^3+1");
    CHECK(to_string(IntPoly{}) == "0");
    CHECK(to_string(IntPoly{0, -2, 3}) == "3q^2-2q");
    CHECK(IntPoly{}.degree() == -1);
    CHECK(P("q^6+q^5+q^3+1") == IntPoly{1, 0, 0, 1, 0, 1, 1});
    CHECK(P("3*q^2 - 2q") == IntPoly{0, -2, 3});
    CHECK(P("0").is_zero());
  }

  TEST_CASE("arithmetic") {
    const IntPoly a{1, 1}, b{1, -1};
    CHECK(a * b == IntPoly{1, 0, -1});
    CHECK(a + b == IntPoly{2});
    CHECK((a - a).is_zero());
    CHECK(a.shifted(3) == IntPoly{0, 0, 0, 1, 1});
    CHECK(IntPoly{0, 0, 2}.unshifted(2) == IntPoly{2});
    CHECK_THROWS_AS(P("1+q").unshifted(1), Error);
    CHECK(IntPoly{1, 2, 3}.dilated(2) == IntPoly{1, 0, 2, 0, 3});
    CHECK(IntPoly{1, 2, 3}.dilated(0) == IntPoly{6});
    CHECK(IntPoly{1, 2, 3}.evaluate(2) == 17);
    CHECK(IntPoly{5, 0, 1}.truncated(1) == IntPoly{5});
    CHECK(IntPoly::monomial(4).is_monomial());
    CHECK(!IntPoly{0, 2}.is_monomial());
  }

  TEST_CASE("karatsuba agrees with schoolbook on long inputs") {
    std::vector<Integer> x, y;
    for (int i = 0; i < 150; ++i) x.emplace_back((i * 37 % 11) - 5);
    for (int i = 0; i < 97; ++i) y.emplace_back((i * 13 % 7) - 3);
    const IntPoly a(x), b(y);
    CHECK(multiply_karatsuba(a, b) == multiply_schoolbook(a, b));
    CHECK(multiply_karatsuba(b, a) == multiply_schoolbook(a, b));
  }

  TEST_CASE("big coefficients do not overflow") {
    IntPoly p = IntPoly::one();
    for (int i = 0; i < 80; ++i) p *= IntPoly{1, 1};
    CHECK(p.coeff(40) > Integer("100000000000000000000"));
    CHECK(p.at_one() == Integer(1) << 80);
  }

  TEST_CASE("reciprocal") {
    CHECK(reciprocal(P("q^6+q^5+q^3+1"), 8) == P("q^8+q^5+q^3+q^2"));
    CHECK(reciprocal(P("q^6+q^5+q^3+1"), 8) == oracle::qbinom_subsets(reverse_word(w("abaaba")), w("ab")));
    CHECK(reciprocal(IntPoly::one(), 0) == IntPoly::one());
    CHECK(reciprocal(P("q^2"), 2) == IntPoly::one());
    try {
      reciprocal(P("q^3"), 2);
      FAIL("expected DegreeExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegreeExceeded);
    }
  }

  TEST_CASE("geometric sums and exact division") {
    CHECK(geometric_sum(3, 3) == P("q^6+q^3+1"));
    CHECK(geometric_sum(3, 0).is_zero());
    CHECK(divide_by_one_minus(P("1-q^6"), 3) == std::optional<IntPoly>(P("1+q^3")));
    CHECK(!divide_by_one_minus(P("1+q"), 2));
    auto [quot, rem] = divmod_unit_leading(P("q^4-1"), P("q^2+1"));
    CHECK(quot == P("q^2-1"));
    CHECK(rem.is_zero());
  }

  TEST_CASE("series_expand") {
    CHECK(series_expand(FactoredRational(IntPoly::one(), {{2, 1}}), 5).coeffs ==
          std::vector<Integer>{1, 0, 1, 0, 1, 0});
    const FactoredRational r(P("q^2+q"), {{4, 1}});
    CHECK(series_expand(r, 9).to_poly() == P("q+q^2+q^5+q^6+q^9"));
    CHECK(series_expand(r, 9).coeffs == oracle::long_division(r.numerator(), r.denominator_polynomial(), 9));
    // q^4 (1+q)^2 / ((1-q^4)(1-q^8)), then divided by q
    const FactoredRational limit(P("q^4") * P("1+q") * P("1+q"), {{4, 1}, {8, 1}});
    const TruncatedSeries s = series_expand(limit, 22);
    std::vector<Integer> shifted(s.coeffs.begin() + 1, s.coeffs.end());
    CHECK(IntPoly(shifted) ==
          P("q^3+2q^4+q^5+q^7+2q^8+q^9+2q^11+4q^12+2q^13+2q^15+4q^16+2q^17+3q^19+6q^20+3q^21"));
  }

  TEST_CASE("factored rationals") {
    const FactoredRational a(P("1"), {{1, 1}}), b(P("q"), {{1, 1}});
    CHECK(a - b == FactoredRational(IntPoly::one()));
    CHECK((a - b).to_polynomial() == IntPoly::one());
    FactoredRational c(P("1-q^2"), {{2, 2}});
    c.reduce();
    CHECK(c.denominator() == FactoredRational::Factors{{2, 1}});
    CHECK(c == FactoredRational(IntPoly::one(), {{2, 1}}));
    CHECK_THROWS_AS(FactoredRational(IntPoly::one(), {{1, 1}}).to_polynomial(), Error);
    FactoredRational d(P("1+q"), {{1, 1}});
    d.multiply_by_one_minus(2);
    CHECK(d.to_polynomial() == P("1+q") * P("1+q"));
  }

  TEST_CASE("recurrence text") {
    PolyRecurrence r{{P("1+q^4+q^8"), -P("q^4+q^8+q^12"), P("q^12")}};
    CHECK(to_string(r) == "p(n+3) = (q^8+q^4+1)*p(n+2) - (q^12+q^8+q^4)*p(n+1) + (q^12)*p(n)");
    CHECK(at_one(r).coeffs == std::vector<Integer>{3, -3, 1});
    CHECK(to_string(at_one(r)) == "p(n+3) = 3*p(n+2) - 3*p(n+1) + p(n)");
  }
}
