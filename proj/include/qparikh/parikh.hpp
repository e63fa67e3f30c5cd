#pragma once

// q-Parikh matrices induced by a word z.
//
// P_z(w) = M_{w[0], n-1} ... M_{w[n-1], 0} for |w| = n, where M_{d,j} is the
// (|z|+1)-dimensional unitriangular matrix with q^j at (i, i+1) whenever
// z[i] == d. Its entry (i, i+r) equals q^{s(r-1)} <w choose z[i..i+r)>.
//
// Indices here are 0-based; the usual 1-based (i, j) is (i-1, j-1).

#include "qparikh/matrix.hpp"
#include "qparikh/polynomial.hpp"
#include "qparikh/words.hpp"

namespace qparikh {

PolyMatrix atomic_matrix(const Word& z, Letter d, std::size_t j);

/// Product of atomic matrices, applied as row operations.
PolyMatrix parikh_matrix(const Word& z, const Word& w);
/// Entries filled from q-binomials.
PolyMatrix parikh_matrix_closed(const Word& z, const Word& w);

/// P_z(w) for z = 1 2 ... k.
PolyMatrix egecioglu_matrix(std::size_t k, const Word& w);
Word canonical_word(std::size_t k);

/// Entry (i, j) is (-1)^{i+j} q^{(j-i)(|u|-1)} [P_z(~u)]_{i,j}(1/q).
/// Throws AdjacentRepeatedLetter when z has a factor aa.
PolyMatrix parikh_inverse_closed(const Word& z, const Word& u);
/// Sign checkerboard times the antitranspose of P_{~z}(u).
PolyMatrix parikh_inverse_reversal(const Word& z, const Word& u);
/// Closed form when z admits it, exact back substitution otherwise.
PolyMatrix parikh_inverse(const Word& z, const Word& u);

/// [P_z(~u)]_{i,j} == q^{(j-i)(|u|-1)} [P_{~z}(u)]_{l+1-j, l+1-i}(1/q) for all i < j.
bool reverse_duality_check(const Word& z, const Word& u);

/// sum over z = xy of (-1)^{|y|} q^{s(|x|-1)+s(|y|-1)} <u choose x><u choose ~y>,
/// which vanishes when z has no factor aa.
IntPoly cancellation_identity(const Word& z, const Word& u);

/// The 2x2 minor
///   q^{s(|vw|-1)+s(|wx|-1)} <u choose vw><u choose wx>
/// - q^{s(|w|-1)+s(|vwx|-1)} <u choose w><u choose vwx>.
IntPoly cauchy_minor(const Word& u, const Word& v, const Word& w, const Word& x);
/// <xy choose w><yz choose w> - <xyz choose w><y choose w>.
IntPoly cauchy_dual(const Word& x, const Word& y, const Word& z, const Word& w);

/// Recovers w from the second diagonal of P_z(w): the monomial q^j in the
/// entry (i, i+1) means z[i] sits at right-to-left index j of w.
Word decode_word(const Word& z, const PolyMatrix& m);

}  // namespace qparikh
