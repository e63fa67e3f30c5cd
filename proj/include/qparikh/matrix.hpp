#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qparikh/polynomial.hpp"

namespace qparikh {

/// Square matrix of IntPoly, row-major, 0-based.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t n);
  static PolyMatrix identity(std::size_t n);
  /// Constant entries, mostly for tests.
  static PolyMatrix from_constants(const std::vector<std::vector<long>>& rows);

  std::size_t size() const { return n_; }
  IntPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const IntPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  bool is_unitriangular() const;
  /// Entrywise q -> q^r.
  PolyMatrix dilated(std::size_t r) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<IntPoly> entries_;
};

PolyMatrix hadamard(const PolyMatrix& a, const PolyMatrix& b);
/// result(i,j) = a(n-1-j, n-1-i)
PolyMatrix antitranspose(const PolyMatrix& a);
/// ((-1)^{i+j})_{i,j} entrywise.
PolyMatrix checkerboard_signs(const PolyMatrix& a);
/// Exact inverse by back substitution; throws NotUnitriangular.
PolyMatrix unitriangular_inverse(const PolyMatrix& m);
/// Determinant of the submatrix on the given rows and columns.
IntPoly minor_det(const PolyMatrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

/// One row per line, entries separated by " | ".
std::string to_string(const PolyMatrix& m);

}  // namespace qparikh
