#include "qparikh/morphism_reduction.hpp"

#include <algorithm>
#include <map>

#include "qparikh/errors.hpp"
#include "qparikh/parikh.hpp"
#include "qparikh/qbinomial.hpp"

namespace qparikh {

namespace {

// The word i (i+1) ... j, 1-based, or its reversal.
Word position_run(std::size_t i, std::size_t j, bool descending = false) {
  std::vector<Letter> letters;
  for (std::size_t k = i; k <= j; ++k) letters.push_back(Letter{static_cast<std::uint32_t>(k)});
  if (descending) std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

}  // namespace

Morphism sigma_z(const Word& z) {
  if (z.empty()) throw Error(ErrorCode::InvalidArgument, "z must be nonempty");
  std::map<Letter, Word> images;
  for (std::size_t j = 0; j < z.size(); ++j) images[z[j]].push_back(Letter{static_cast<std::uint32_t>(j + 1)});
  return Morphism(std::move(images));
}

ZCMatrices zc_matrices(const Word& z) {
  if (z.empty()) throw Error(ErrorCode::InvalidArgument, "z must be nonempty");
  if (auto pos = z.first_adjacent_repeat())
    throw Error(ErrorCode::AdjacentRepeatedLetter,
                "z has two equal adjacent letters at positions " + std::to_string(*pos + 1) + " and " +
                    std::to_string(*pos + 2));
  const Morphism sigma = sigma_z(z);
  const std::size_t l = z.size();
  ZCMatrices out{PolyMatrix::identity(l + 1), PolyMatrix::identity(l + 1)};
  for (std::size_t i = 1; i <= l; ++i)
    for (std::size_t j = i; j <= l; ++j) {
      IntPoly entry = qbinom(sigma.apply(z.factor(i - 1, j - i + 1)), position_run(i, j));
      if (!entry.is_monomial())
        throw Error(ErrorCode::NonMonomialEntry,
                    "Z entry (" + std::to_string(i) + "," + std::to_string(j + 1) + ") is " + to_string(entry));
      out.z(i - 1, j) = std::move(entry);
      out.c(i - 1, j) = IntPoly::monomial(static_cast<std::size_t>(triangular(static_cast<std::int64_t>(j - i))));
    }
  return out;
}

std::size_t require_reduction_hypotheses(const Word& z, const Word& u) {
  if (z.empty()) throw Error(ErrorCode::HypothesisViolated, "z is empty");
  std::map<Letter, std::size_t> counts;
  for (Letter a : z) ++counts[a];
  const std::size_t r = counts.begin()->second;
  for (const auto& [a, n] : counts)
    if (n != r)
      throw Error(ErrorCode::HypothesisViolated,
                  "letter " + format_letter(a, Script::Digits) + " occurs " + std::to_string(n) + " times in z, expected " +
                      std::to_string(r));
  if (auto pos = z.first_adjacent_repeat())
    throw Error(ErrorCode::HypothesisViolated,
                "z has two equal adjacent letters at positions " + std::to_string(*pos + 1) + " and " +
                    std::to_string(*pos + 2));
  for (Letter a : u)
    if (!counts.contains(a))
      throw Error(ErrorCode::HypothesisViolated, "u uses letter " + format_letter(a, Script::Digits) + " absent from z");
  return r;
}

ReductionReport reduce_to_canonical(const Word& z, const Word& u) {
  ReductionReport rep;
  rep.r = require_reduction_hypotheses(z, u);
  const std::size_t l = z.size();
  rep.sigma_u = sigma_z(z).apply(u);
  rep.zc = zc_matrices(z);
  rep.e = parikh_matrix(canonical_word(l), rep.sigma_u);
  rep.p = parikh_matrix(z, u);
  const PolyMatrix c = rep.zc.c.dilated(rep.r - 1);
  rep.forward = hadamard(c, rep.e) == hadamard(rep.zc.z, rep.p.dilated(rep.r));
  const PolyMatrix e_inv = parikh_inverse_closed(canonical_word(l), rep.sigma_u);
  const PolyMatrix p_inv = parikh_inverse_closed(z, u).dilated(rep.r);
  rep.inverse = hadamard(c, e_inv) == hadamard(rep.zc.z, p_inv);
  return rep;
}

bool check_canonical_reduction(const Word& z, const Word& u) {
  const ReductionReport rep = reduce_to_canonical(z, u);
  return rep.forward && rep.inverse;
}

bool extra_property_check(const Word& z, const Word& u, std::size_t i, std::size_t j) {
  const std::size_t r = require_reduction_hypotheses(z, u);
  if (i < 1 || i > j || j > z.size())
    throw Error(ErrorCode::InvalidArgument, "need 1 <= i <= j <= |z|, got i=" + std::to_string(i) +
                                                ", j=" + std::to_string(j));
  const Morphism sigma = sigma_z(z);
  const Word block = z.factor(i - 1, j - i + 1);
  const Word image = sigma.apply(u), block_image = sigma.apply(block);
  const Word run = position_run(i, j);

  const bool first = qbinom(image, run) == qbinom(block_image, run) * qbinom(u, block).dilated(r);
  const bool second = qbinom(reverse_word(image), run) ==
                      qbinom(reverse_word(block_image), position_run(i, j, true)) *
                          qbinom(reverse_word(u), block).dilated(r);
  return first && second;
}

}  // namespace qparikh
