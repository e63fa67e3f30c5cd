#include "support.hpp"

#include <set>

#include "qparikh/verify.hpp"

using namespace qparikh;

TEST_SUITE("properties") {
  TEST_CASE("every property passes for several seeds") {
    for (std::uint64_t seed : {kDefaultSeed, std::uint64_t{1}, std::uint64_t{99991}}) {
      VerifyOptions options;
      options.seed = seed;
      for (const auto& r : run_properties(options)) {
        INFO("seed ", seed, " property ", r.name, ": ", r.detail);
        CHECK(r.passed);
        CHECK(r.cases > 0);
      }
    }
  }

  TEST_CASE("serial and parallel runs agree") {
    VerifyOptions parallel;
    parallel.seed = 5;
    VerifyOptions serial = parallel;
    serial.parallel = false;
    CHECK(format_report(run_properties(parallel)) == format_report(run_properties(serial)));
  }

  TEST_CASE("names are unique and filterable") {
    const auto names = property_names();
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
    VerifyOptions options;
    options.only = {"reversal"};
    const auto results = run_properties(options);
    REQUIRE(results.size() == 1);
    CHECK(results[0].name == "reversal");
  }

  TEST_CASE("sampler is deterministic") {
    Sampler a(3), b(3);
    for (int i = 0; i < 20; ++i) CHECK(a.word(0, 8, 3) == b.word(0, 8, 3));
    Sampler c(11);
    for (int i = 0; i < 20; ++i) {
      const Word z = c.balanced_word(3, 2);
      CHECK(z.size() == 6);
      for (std::size_t k = 1; k < z.size(); ++k) CHECK(z[k] != z[k - 1]);
    }
  }
}
