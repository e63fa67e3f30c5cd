#include "qparikh/qbinomial.hpp"

#include <limits>
#include <map>
#include <utility>

#include "qparikh/errors.hpp"

namespace qparikh {

namespace {

// One polynomial per prefix of v, updated as u is read left to right.
IntPoly qbinom_dp(const Word& u, const Word& v, std::size_t order) {
  const std::size_t k = v.size();
  if (k == 0) return IntPoly::one();
  if (u.size() < k) return {};
  std::vector<IntPoly> b(k + 1);
  b[0] = IntPoly::one();
  for (std::size_t t = 0; t < u.size(); ++t) {
    const Letter a = u[t];
    // Only prefixes of v that still fit into the rest of u matter.
    const std::size_t lowest = k - std::min(k, u.size() - t - 1);
    const std::size_t highest = std::min(k, t + 1);
    for (std::size_t j = highest; j >= std::max<std::size_t>(lowest, 1); --j) {
      IntPoly next = b[j].is_zero() ? IntPoly{} : b[j].shifted(j);
      if (v[j - 1] == a) next += b[j - 1];
      b[j] = next.truncated(order);
    }
  }
  return std::move(b[k]);
}

}  // namespace

IntPoly qbinom(const Word& u, const Word& v) {
  return qbinom_dp(u, v, std::numeric_limits<std::size_t>::max() - 1);
}

IntPoly qbinom_truncated(const Word& u, const Word& v, std::size_t order) { return qbinom_dp(u, v, order); }

IntPoly qbinom_oracle(const Word& u, const Word& v, std::uint64_t limit) {
  const Integer count = subword_count(u, v);
  if (count > Integer(static_cast<unsigned long>(limit)))
    throw Error(ErrorCode::TooManyOccurrences,
                count.get_str() + " occurrences exceed the enumeration limit " + std::to_string(limit));
  const std::size_t n = u.size(), k = v.size();
  std::vector<Integer> coeffs;
  for (const auto& occ : occurrences(u, v)) {
    std::size_t alpha = 0;
    for (std::size_t m = 1; m <= k; ++m) alpha += (n - 1 - occ[m - 1]) - (k - m);
    if (coeffs.size() <= alpha) coeffs.resize(alpha + 1);
    coeffs[alpha] += 1;
  }
  return IntPoly(std::move(coeffs));
}

IntPoly qbinom_reversed(const Word& u, const Word& v) {
  if (v.size() > u.size()) return {};
  const auto d = static_cast<std::int64_t>(v.size() * (u.size() - v.size()));
  return reciprocal(qbinom(u, v), d);
}

IntPoly morphic_qbinom(const Morphism& phi, const Word& w, const Word& u) {
  const std::size_t len_u = u.size();
  if (len_u == 0) return IntPoly::one();

  // suffix[p] = |phi(w[p..])|
  std::vector<std::size_t> suffix(w.size() + 1, 0);
  for (std::size_t p = w.size(); p-- > 0;) suffix[p] = suffix[p + 1] + phi.image(w[p]).size();
  const auto uniform = phi.uniform_length();

  // Block factors <phi(a) choose u[m..m')>, computed once per letter.
  std::map<Letter, std::vector<std::vector<IntPoly>>> blocks;
  for (Letter a : w.alphabet()) {
    auto& table = blocks[a];
    table.assign(len_u, std::vector<IntPoly>(len_u + 1));
    for (std::size_t m = 0; m < len_u; ++m)
      for (std::size_t m2 = m + 1; m2 <= len_u; ++m2) table[m][m2] = qbinom(phi.image(a), u.factor(m, m2 - m));
  }

  // tail[m]: contribution of all ways to place u[m..] in phi(w[p..]).
  std::vector<IntPoly> tail(len_u + 1);
  tail[len_u] = IntPoly::one();
  for (std::size_t p = w.size(); p-- > 0;) {
    const std::size_t right = uniform ? *uniform * (w.size() - p - 1) : suffix[p + 1];
    const auto& table = blocks.at(w[p]);
    std::vector<IntPoly> next = tail;
    for (std::size_t m = 0; m < len_u; ++m) {
      for (std::size_t m2 = m + 1; m2 <= len_u; ++m2) {
        const IntPoly& factor = table[m][m2];
        if (factor.is_zero() || tail[m2].is_zero()) continue;
        // Letters of phi(w[p+1..]) not used by the rest of u, once per letter of the block.
        const std::size_t spare = right - (len_u - m2);
        next[m] += (factor * tail[m2]).shifted((m2 - m) * spare);
      }
    }
    tail = std::move(next);
  }
  return std::move(tail[0]);
}

}  // namespace qparikh
