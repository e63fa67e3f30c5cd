#include "support.hpp"

#include <cstdlib>
#include <sstream>

#include "qparikh/cli.hpp"
#include "qparikh/json_io.hpp"
#include "qparikh/parikh.hpp"

using namespace qparikh;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("qbinom") {
    CHECK(run({"qbinom", "0110", "01"}).out == "q^4+q^3\n");
    CHECK(run({"qbinom", "abba", "ab"}).out == "q^4+q^3\n");
    CHECK(run({"qbinom", "0110", "01", "--oracle"}).out == "q^4+q^3\n");
    CHECK(run({"qbinom", "0110", ""}).out == "1\n");
    CHECK(run({"qbinom", "01", "0110"}).out == "0\n");

    const Run j = run({"qbinom", "0110", "01", "--json"});
    REQUIRE(j.code == 0);
    const Json parsed = Json::parse(j.out);
    CHECK(parsed["u"] == "0110");
    CHECK(poly_from_json(parsed["result"]) == P("q^4+q^3"));
  }

  TEST_CASE("oracle limit") {
    ::setenv("QPARIKH_MAX_ORACLE", "2", 1);
    const Run r = run({"qbinom", "0000", "00", "--oracle"});
    ::unsetenv("QPARIKH_MAX_ORACLE");
    CHECK(r.code == 1);
    CHECK(r.err.find("TooManyOccurrences") != std::string::npos);
    CHECK(run({"qbinom", "0000", "00", "--oracle"}).out == "q^4+q^3+2q^2+q+1\n");
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"qbinom", "0110"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"inverse", "01", "0110", "--method", "bogus"}).code == 2);
    const Run bad = run({"qbinom", "01x", "01"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("UnknownCharacter") != std::string::npos);
    CHECK(run({"residues", "0110", "2"}).code == 1);
    CHECK(run({"morphism", "reduce", "1213", "12"}).code == 1);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("parikh and inverse") {
    const PolyMatrix p = parikh_matrix(w("01"), w("0110"));
    CHECK(matrix_from_json(Json::parse(run({"parikh", "01", "0110", "--json"}).out)) == p);
    CHECK(matrix_from_json(Json::parse(run({"parikh", "01", "0110", "--closed", "--json"}).out)) == p);
    const PolyMatrix inv = unitriangular_inverse(p);
    CHECK(matrix_from_json(Json::parse(run({"parikh", "01", "0110", "--inverse", "--json"}).out)) == inv);
    for (const char* m : {"closed", "reversal", "exact"})
      CHECK(matrix_from_json(Json::parse(run({"inverse", "01", "0110", "--method", m, "--json"}).out)) == inv);
    CHECK(run({"parikh", "01", "0110"}).out == to_string(p) + "\n");
  }

  TEST_CASE("identities and cauchy") {
    CHECK(run({"identity-check", "general", "--z", "0120", "--u", "0112010"}).out.find("identity holds") !=
          std::string::npos);
    CHECK(run({"identity-check", "duality", "--z", "012", "--u", "2100121"}).out == "duality holds\n");
    const Run minor = run({"cauchy", "minor", "ab", "ba", "aab", "ab", "--json"});
    REQUIRE(minor.code == 0);
    CHECK(Json::parse(minor.out)["nonnegative"] == true);
  }

  TEST_CASE("series") {
    CHECK(run({"series", "--stream", "thue-morse", "--z", "00", "--order", "9"}).out ==
          "q^2 + q^4 + q^5 + q^7 + 2q^8 + q^9 + O(q^10)\n");
    const Run j = run({"series", "--stream", "periodic:0110", "--z", "01", "--order", "12", "--json"});
    REQUIRE(j.code == 0);
    const TruncatedSeries s = series_from_json(Json::parse(j.out)["series"]);
    CHECK(s.to_poly() == P("q^3+2q^4+q^5+q^7+2q^8+q^9+2q^11+4q^12"));
    const Run csv = run({"series", "--stream", "periodic:0110", "--z", "01", "--order", "4", "--csv"});
    CHECK(csv.out == "n,coefficient\n0,0\n1,0\n2,0\n3,1\n4,2\n");
  }

  TEST_CASE("periodic analysis") {
    CHECK(run({"residues", "0110", "01"}).out == "vanishing residues mod 4: {2}\n");
    const Run rec = run({"recurrence", "0110", "01", "--at-q1"});
    CHECK(rec.code == 0);
    CHECK(rec.out.find("0,2,8,18,32") != std::string::npos);
    CHECK(run({"recurrence", "0110", "01", "--coefficients"}).out.find("for n >= 4") != std::string::npos);
    CHECK(run({"closed-form", "0110", "01"}).code == 0);
    const Run gf = run({"growth-fit", "0110", "01", "--json"});
    CHECK(gf.code == 0);
    CHECK(run({"growth-fit", "0110", "01", "--residue", "2"}).code == 1);
  }

  TEST_CASE("morphism") {
    CHECK(run({"morphism", "sigma", "121323"}).out == "1 -> 13\n2 -> 25\n3 -> 46\n");
    const Run rep = run({"morphism", "reduce", "121323", "1121323"});
    CHECK(rep.code == 0);
    CHECK(rep.out.find("sigma_z(u) = 13132513462546") != std::string::npos);
  }

  TEST_CASE("verify") {
    const Run a = run({"verify", "--seed", "7", "--only", "qbinom-oracle", "--only", "reversal"});
    const Run b = run({"verify", "--seed", "7", "--only", "qbinom-oracle", "--only", "reversal", "--serial"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("2/2 properties passed") != std::string::npos);
    CHECK(run({"verify", "--list"}).out.find("canonical-reduction\n") != std::string::npos);
  }
}
