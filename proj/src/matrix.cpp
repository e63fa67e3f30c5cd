#include "qparikh/matrix.hpp"

#include <bit>

#include "qparikh/errors.hpp"

namespace qparikh {

PolyMatrix::PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimension must be at least 1");
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = IntPoly::one();
  return m;
}

PolyMatrix PolyMatrix::from_constants(const std::vector<std::vector<long>>& rows) {
  PolyMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error(ErrorCode::DimensionMismatch, "rows must form a square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = IntPoly::constant(rows[i][j]);
  }
  return m;
}

bool PolyMatrix::is_unitriangular() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != IntPoly::one()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  }
  return true;
}

PolyMatrix PolyMatrix::dilated(std::size_t r) const {
  PolyMatrix out(n_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].dilated(r);
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::DimensionMismatch, "matrix product of different sizes");
  PolyMatrix out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const IntPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

PolyMatrix hadamard(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "Hadamard product of different sizes");
  PolyMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(i, j) * b(i, j);
  return out;
}

PolyMatrix antitranspose(const PolyMatrix& a) {
  const std::size_t n = a.size();
  PolyMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(n - 1 - j, n - 1 - i);
  return out;
}

PolyMatrix checkerboard_signs(const PolyMatrix& a) {
  PolyMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((i + j) % 2 == 1) out(i, j) = -out(i, j);
  return out;
}

PolyMatrix unitriangular_inverse(const PolyMatrix& m) {
  if (!m.is_unitriangular()) throw Error(ErrorCode::NotUnitriangular, "matrix is not unitriangular");
  const std::size_t n = m.size();
  PolyMatrix inv = PolyMatrix::identity(n);
  // Column j of the inverse solves M x = e_j from the bottom up.
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j; i-- > 0;) {
      IntPoly acc;
      for (std::size_t k = i + 1; k <= j; ++k)
        if (!m(i, k).is_zero() && !inv(k, j).is_zero()) acc += m(i, k) * inv(k, j);
      inv(i, j) = -acc;
    }
  return inv;
}

IntPoly minor_det(const PolyMatrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.size() != cols.size())
    throw Error(ErrorCode::DimensionMismatch, "minor needs as many rows as columns");
  const std::size_t k = rows.size();
  if (k > 16) throw Error(ErrorCode::DimensionMismatch, "minor larger than 16x16");
  for (auto r : rows)
    if (r >= a.size()) throw Error(ErrorCode::DimensionMismatch, "row index out of range");
  for (auto c : cols)
    if (c >= a.size()) throw Error(ErrorCode::DimensionMismatch, "column index out of range");
  if (k == 0) return IntPoly::one();

  // det[mask] is the minor on the last popcount(mask) selected rows and the
  // selected columns in mask; expand along the top remaining row.
  std::vector<IntPoly> det(std::size_t{1} << k);
  det[0] = IntPoly::one();
  for (std::size_t mask = 1; mask < det.size(); ++mask) {
    const std::size_t row = rows[k - static_cast<std::size_t>(std::popcount(mask))];
    IntPoly acc;
    std::size_t position = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (!(mask & (std::size_t{1} << c))) continue;
      const IntPoly& entry = a(row, cols[c]);
      const IntPoly& rest = det[mask & ~(std::size_t{1} << c)];
      if (!entry.is_zero() && !rest.is_zero()) {
        IntPoly term = entry * rest;
        if (position % 2 == 0) acc += term;
        else acc -= term;
      }
      ++position;
    }
    det[mask] = std::move(acc);
  }
  return det.back();
}

std::string to_string(const PolyMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += " | ";
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace qparikh
