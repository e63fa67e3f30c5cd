#include "support.hpp"

#include "qparikh/errors.hpp"
#include "qparikh/qbinomial.hpp"

using namespace qparikh;

TEST_SUITE("qbinomial") {
  TEST_CASE("qbinom examples") {
    CHECK(qbinom(w("abaaba"), w("ba")) == P("q^6+q^5+q^3+1"));
    CHECK(qbinom(w("abaaba"), w("ba")).at_one() == 4);
    CHECK(qbinom(w("abaaba"), Word{}) == IntPoly::one());
    CHECK(qbinom(Word{}, w("a")).is_zero());
    CHECK(qbinom(w("abaaba"), w("abaaba")) == IntPoly::one());
    CHECK(qbinom(w("aab"), w("ab")) == P("q+1"));
    CHECK(qbinom(w("ab"), w("abc")).is_zero());
  }

  TEST_CASE("qbinom agrees with subset enumeration") {
    for (const char* u : {"abaaba", "aabbab", "abcabca", "cccbbbaaa", "babababab"})
      for (const char* v : {"a", "ab", "ba", "aab", "bca", "abab"}) CHECK(qbinom(w(u), w(v)) == oracle::qbinom_subsets(w(u), w(v)));
  }

  TEST_CASE("truncated q-binomials") {
    const Word u = w("abaabaabbababbab"), v = w("aba");
    for (std::size_t order : {0, 3, 7, 20, 100}) CHECK(qbinom_truncated(u, v, order) == qbinom(u, v).truncated(order));
  }

  TEST_CASE("qbinom_oracle") {
    CHECK(qbinom_oracle(w("abaaba"), w("ba")) == P("q^6+q^5+q^3+1"));
    CHECK(qbinom_oracle(w("ab"), w("ab")) == IntPoly::one());
    CHECK(qbinom_oracle(w("abaaba"), w("ab")) == P("q^8+q^5+q^3+q^2"));
    try {
      qbinom_oracle(w("aaaaaaaaaaaa"), w("aaaaaa"), 100);
      FAIL("expected TooManyOccurrences");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TooManyOccurrences);
    }
  }

  TEST_CASE("qbinom_reversed") {
    CHECK(qbinom_reversed(w("abaaba"), w("ba")) == P("q^8+q^5+q^3+q^2"));
    CHECK(qbinom_reversed(w("abaaba"), w("ba")) == qbinom(w("abaaba"), w("ab")));
    CHECK(qbinom_reversed(w("abc"), Word{}) == IntPoly::one());
    CHECK(qbinom_reversed(w("ab"), w("ab")) == IntPoly::one());
    CHECK(qbinom_reversed(w("ab"), w("abc")).is_zero());
  }

  TEST_CASE("morphic_qbinom") {
    const Morphism id({{Letter{1}, w("a")}, {Letter{2}, w("b")}});
    for (const char* x : {"abba", "ababab", "a"})
      for (const char* y : {"ab", "ba", "bb", ""}) CHECK(morphic_qbinom(id, w(x), w(y)) == qbinom(w(x), w(y)));

    const Morphism tm({{Letter{0}, w("01")}, {Letter{1}, w("10")}});
    CHECK(morphic_qbinom(tm, w("0"), w("01")) == IntPoly::one());
    CHECK(morphic_qbinom(tm, w("0110"), w("010")) == qbinom(w("01101001"), w("010")));

    const Morphism phi({{Letter{1}, w("ab")}, {Letter{2}, w("b")}});
    CHECK(morphic_qbinom(phi, w("ab"), w("bb")) == qbinom(w("abb"), w("bb")));
    CHECK(morphic_qbinom(phi, w("abbab"), w("abb")) == qbinom(phi.apply(w("abbab")), w("abb")));
  }
}
