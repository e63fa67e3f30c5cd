#pragma once

// Reduction of P_z to the canonical matrix E_{|z|} = P_{12...|z|}.
//
// sigma_z sends a letter a to the increasing word of the (1-based) positions
// j with z_j = a. When every letter occurs r times in z and z has no factor
// aa, then with Z_{i,j+1} = <sigma_z(z_i...z_j) choose i...j> and
// C_{i,j+1} = q^{s(j-i)}
//
//   C(q^{r-1}) . E_{|z|}(sigma_z(u))      = Z . P_z(u)(q^r)
//   C(q^{r-1}) . E_{|z|}(sigma_z(u))^{-1} = Z . (P_z(u)(q^r))^{-1}
//
// where . is the entrywise product.

#include <cstddef>

#include "qparikh/matrix.hpp"
#include "qparikh/words.hpp"

namespace qparikh {

Morphism sigma_z(const Word& z);

struct ZCMatrices {
  PolyMatrix z{1};
  PolyMatrix c{1};
};
/// Throws AdjacentRepeatedLetter, or NonMonomialEntry if an entry of Z is
/// not a monomial.
ZCMatrices zc_matrices(const Word& z);

/// Throws HypothesisViolated unless z is r-balanced over its alphabet, has no
/// factor aa and u only uses letters of z. Returns r.
std::size_t require_reduction_hypotheses(const Word& z, const Word& u);

struct ReductionReport {
  std::size_t r = 0;
  Word sigma_u;
  ZCMatrices zc;
  PolyMatrix e{1};  // E_{|z|}(sigma_z(u))
  PolyMatrix p{1};  // P_z(u)
  bool forward = false;
  bool inverse = false;
};
ReductionReport reduce_to_canonical(const Word& z, const Word& u);
bool check_canonical_reduction(const Word& z, const Word& u);

/// Both
///   <sigma_z(u) choose i...j>  = <sigma_z(z_i...z_j) choose i...j> <u choose z_i...z_j>(q^r)
///   <~sigma_z(u) choose i...j> = <~sigma_z(z_i...z_j) choose j...i> <~u choose z_i...z_j>(q^r)
/// for 1 <= i <= j <= |z|.
bool extra_property_check(const Word& z, const Word& u, std::size_t i, std::size_t j);

}  // namespace qparikh
