#pragma once

// Limit series of prefix q-binomials and the periodic case.
//
// For a left-infinite word x = ... x_2 x_1 x_0 the coefficient of q^r in
// <x_{n-1}...x_0 choose z> no longer changes once n >= r + |z|, which
// defines the series s_{x,z}. For x = ...uuu the polynomials <u^n choose z>
// admit the closed form
//
//   q^{-s(|z|-1)} sum_k R_k (1 - q^{c_k n |u|}) / (1 - q^{c_k |u|})
//
// with rational R_k whose denominators are products of (1 - q^{t|u|}).

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "qparikh/matrix.hpp"
#include "qparikh/polynomial.hpp"
#include "qparikh/rational.hpp"
#include "qparikh/recurrence.hpp"
#include "qparikh/words.hpp"

namespace qparikh {

TruncatedSeries series_coefficients(const LeftInfiniteWord& x, const Word& z, std::size_t order);

/// Unitriangular with q^{(j-i)k} above the diagonal.
PolyMatrix pow_matrix(const Word& z, std::size_t k);
/// P_z(u) entrywise times pow_matrix(z, k).
PolyMatrix h_matrix(const Word& z, const Word& u, std::size_t k);

struct ClosedFormTerm {
  FactoredRational rational;  // R_k
  std::size_t multiple = 1;   // c_k, in units of |u|
};

struct ClosedForm {
  std::vector<ClosedFormTerm> terms;  // distinct multiples, ascending
  std::size_t prefactor_exponent = 0;
  std::size_t period_length = 0;
};

ClosedForm periodic_closed_form(const Word& u, const Word& z);
/// <u^n choose z> from the closed form; exact division is enforced.
IntPoly closed_form_eval(const ClosedForm& cf, std::size_t n);
/// sum_k R_k / (1 - q^{c_k |u|}), before dividing by q^{prefactor}.
FactoredRational limit_rational(const ClosedForm& cf);
/// Coefficients of s_{u^omega, z} read off the limit rational.
TruncatedSeries limit_series(const ClosedForm& cf, std::size_t order);
std::string to_string(const ClosedForm& cf);

/// p_{n+s+1} = sum_k (D_k - D_{k-1}) p_{n+s+1-k}, D_k the signed elementary
/// symmetric sums of q^{c_j |u|}, D_0 = -1 and D_{s+1} = 0.
PolyRecurrence recurrence_polynomial(const ClosedForm& cf);

struct IntegerRecurrence {
  IntRecurrence relation;
  std::vector<Integer> terms;  // (u^n choose z) for n = 0, 1, ...
};
IntegerRecurrence recurrence_integer(const Word& u, const Word& z);

struct CoefficientRecurrence {
  IntRecurrence relation;
  /// Limit rational in lowest terms, denominator with constant term 1.
  IntPoly numerator;
  IntPoly denominator;
  /// The relation holds for series indices >= valid_from.
  std::size_t valid_from = 0;
};
CoefficientRecurrence coefficient_recurrence(const ClosedForm& cf);

/// Phi_n, the n-th cyclotomic polynomial.
IntPoly cyclotomic(std::size_t n);

struct ResidueReport {
  std::size_t modulus = 0;
  std::set<std::size_t> admissible;
  std::set<std::size_t> vanishing;
  /// Indices at or beyond this bound follow the residue dichotomy.
  std::size_t cutoff = 0;
};
ResidueReport vanishing_residues(const Word& u, const Word& z);

/// Least-squares slope of log c_{r+i|u|} against log i over the upper half
/// of the indices i with r + i|u| <= order.
double growth_fit(const Word& u, const Word& z, std::size_t residue, std::size_t order);

}  // namespace qparikh
