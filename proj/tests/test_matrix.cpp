#include "support.hpp"

#include "qparikh/errors.hpp"
#include "qparikh/parikh.hpp"

using namespace qparikh;

TEST_SUITE("matrices") {
  TEST_CASE("unitriangular_inverse") {
    CHECK(unitriangular_inverse(PolyMatrix::identity(4)) == PolyMatrix::identity(4));

    const IntPoly a = P("q+2"), b = P("q^3"), c = P("1-q");
    PolyMatrix m = PolyMatrix::identity(3);
    m(0, 1) = a, m(0, 2) = b, m(1, 2) = c;
    PolyMatrix expected = PolyMatrix::identity(3);
    expected(0, 1) = -a, expected(0, 2) = a * c - b, expected(1, 2) = -c;
    CHECK(unitriangular_inverse(m) == expected);

    const PolyMatrix p = parikh_matrix(w("12"), w("12"));
    PolyMatrix inv = PolyMatrix::identity(3);
    inv(0, 1) = P("-q"), inv(1, 2) = P("-1");
    CHECK(unitriangular_inverse(p) == inv);
    CHECK(inv * p == PolyMatrix::identity(3));

    PolyMatrix bad = PolyMatrix::identity(2);
    bad(1, 1) = P("2");
    CHECK_THROWS_AS(unitriangular_inverse(bad), Error);
  }

  TEST_CASE("hadamard") {
    CHECK(hadamard(PolyMatrix::identity(3), PolyMatrix::identity(3)) == PolyMatrix::identity(3));
    const PolyMatrix a = oracle::constants({{1, 2}, {3, 4}});
    CHECK(hadamard(a, oracle::constants({{1, 1}, {1, 1}})) == a);
    PolyMatrix x = PolyMatrix::identity(2);
    x(0, 1) = P("q");
    PolyMatrix x2 = PolyMatrix::identity(2);
    x2(0, 1) = P("q^2");
    CHECK(hadamard(x, x) == x2);
    try {
      hadamard(PolyMatrix::identity(2), PolyMatrix::identity(3));
      FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
  }

  TEST_CASE("antitranspose") {
    CHECK(antitranspose(PolyMatrix::identity(5)) == PolyMatrix::identity(5));
    CHECK(antitranspose(oracle::constants({{1, 2}, {3, 4}})) == oracle::constants({{4, 2}, {3, 1}}));
    PolyMatrix m(5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = IntPoly{static_cast<long>(i), static_cast<long>(j), 1};
    CHECK(antitranspose(antitranspose(m)) == m);
    CHECK(antitranspose(m)(0, 1) == m(3, 4));
  }

  TEST_CASE("minor_det") {
    const PolyMatrix p = parikh_matrix(w("12231"), w("1212312"));
    const std::vector<std::size_t> r1{2}, c1{4};
    CHECK(minor_det(p, r1, c1) == p(2, 4));
    const std::vector<std::size_t> diag{1, 3};
    CHECK(minor_det(PolyMatrix::identity(4), diag, diag) == IntPoly::one());

    // z = vwx = bba over u = ababba; rows {1,2} and columns {3,4} in 1-based terms
    const PolyMatrix q = parikh_matrix(w("bba"), w("ababba"));
    const std::vector<std::size_t> rows{0, 1}, cols{2, 3};
    CHECK(minor_det(q, rows, cols) == P("q^13+q^12+q^10"));

    PolyMatrix m(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = IntPoly{static_cast<long>(i + 2 * j) - 3, static_cast<long>(i * j % 3)};
    const std::vector<std::size_t> all{0, 1, 2, 3}, some{0, 2, 3};
    CHECK(minor_det(m, all, all) == oracle::permutation_det(m, {0, 1, 2, 3}, {0, 1, 2, 3}));
    const std::vector<std::size_t> cols3{0, 1, 3};
    CHECK(minor_det(m, some, cols3) == oracle::permutation_det(m, {0, 2, 3}, {0, 1, 3}));
  }

  TEST_CASE("minor_det dimension mismatch") {
    const std::vector<std::size_t> r{0, 1}, c{0};
    CHECK_THROWS_AS(minor_det(PolyMatrix::identity(3), r, c), Error);
  }

  TEST_CASE("dimension zero is rejected") { CHECK_THROWS_AS(PolyMatrix(0), Error); }
}
