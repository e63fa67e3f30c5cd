#pragma once

// q-binomial coefficients of words.
//
//   <u choose eps> = 1,  <eps choose v> = 0 for v != eps,
//   <ua choose vb> = q^{|vb|} <u choose vb> + [a == b] <u choose v>.
//
// Each occurrence of v in u contributes q^alpha, alpha being the number of
// non-selected letters lying to the right of each selected letter, summed.

#include <cstddef>
#include <cstdint>

#include "qparikh/polynomial.hpp"
#include "qparikh/words.hpp"

namespace qparikh {

inline constexpr std::uint64_t kDefaultOracleLimit = 1'000'000;

IntPoly qbinom(const Word& u, const Word& v);

/// qbinom(u, v) truncated to exponents <= order; cheaper for long u.
IntPoly qbinom_truncated(const Word& u, const Word& v, std::size_t order);

/// Sums q^alpha over the explicit occurrence list. Throws TooManyOccurrences
/// when the classical count exceeds `limit`.
IntPoly qbinom_oracle(const Word& u, const Word& v, std::uint64_t limit = kDefaultOracleLimit);

/// q^{|v|(|u|-|v|)} qbinom(u, v)(1/q), which equals qbinom(~u, ~v).
IntPoly qbinom_reversed(const Word& u, const Word& v);

/// qbinom(phi(w), u) through block factorizations u = u_1...u_l matched in
/// images phi(a_i) of letters picked from w.
IntPoly morphic_qbinom(const Morphism& phi, const Word& w, const Word& u);

}  // namespace qparikh
