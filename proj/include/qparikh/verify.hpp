#pragma once

// Seeded randomized property suite, shared by `qparikh verify` and the tests.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qparikh/matrix.hpp"
#include "qparikh/polynomial.hpp"
#include "qparikh/words.hpp"

namespace qparikh {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::size_t uniform(std::size_t lo, std::size_t hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// Letters 1..letters, length uniform in [min_len, max_len].
  Word word(std::size_t min_len, std::size_t max_len, std::uint32_t letters);
  Word word_without_adjacent_repeats(std::size_t min_len, std::size_t max_len, std::uint32_t letters);
  /// Each of the letters 1..k exactly r times, no factor aa.
  Word balanced_word(std::uint32_t k, std::size_t r);
  Word word_over(const Word& alphabet_source, std::size_t min_len, std::size_t max_len);
  IntPoly poly(std::size_t max_degree, long max_abs_coeff);
  PolyMatrix unitriangular(std::size_t dim, std::size_t max_degree);
  /// Non-erasing morphism on 1..letters with image lengths in [1, max_image].
  Morphism morphism(std::uint32_t letters, std::size_t max_image);
  /// Sorted k-subset of {0, ..., n-1}.
  std::vector<std::size_t> subset(std::size_t n, std::size_t k);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first counterexample
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  bool parallel = true;
  /// Restricts the run to these property names when nonempty.
  std::vector<std::string> only;
};

std::vector<std::string> property_names();
/// Results come back in property_names() order whatever the scheduling.
std::vector<PropertyResult> run_properties(const VerifyOptions& options = {});
std::string format_report(const std::vector<PropertyResult>& results);

/// Determinant by expansion over all permutations.
IntPoly permutation_determinant(const PolyMatrix& a, const std::vector<std::size_t>& rows,
                                const std::vector<std::size_t>& cols);

}  // namespace qparikh
