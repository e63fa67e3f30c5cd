#include "qparikh/parikh.hpp"

#include <map>

#include "qparikh/errors.hpp"
#include "qparikh/qbinomial.hpp"

namespace qparikh {

namespace {

void require_inducing_word(const Word& z) {
  if (z.empty()) throw Error(ErrorCode::EmptyInducingWord, "the inducing word z must be nonempty");
}

void require_no_adjacent_repeat(const Word& z) {
  if (auto pos = z.first_adjacent_repeat())
    throw Error(ErrorCode::AdjacentRepeatedLetter,
                "z has two equal adjacent letters at positions " + std::to_string(*pos + 1) + " and " +
                    std::to_string(*pos + 2));
}

IntPoly signed_by(std::size_t i, std::size_t j, IntPoly p) { return (i + j) % 2 == 0 ? p : -p; }

}  // namespace

PolyMatrix atomic_matrix(const Word& z, Letter d, std::size_t j) {
  PolyMatrix m = PolyMatrix::identity(z.size() + 1);
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] == d) m(i, i + 1) = IntPoly::monomial(j);
  return m;
}

PolyMatrix parikh_matrix(const Word& z, const Word& w) {
  require_inducing_word(z);
  const std::size_t dim = z.size() + 1, n = w.size();
  PolyMatrix m = PolyMatrix::identity(dim);
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t exponent = n - 1 - i;
    // Left multiplication by M_{w[i], exponent}: row r += q^exponent * row r+1.
    // Ascending r keeps row r+1 untouched until it has been read.
    for (std::size_t r = 0; r < z.size(); ++r) {
      if (z[r] != w[i]) continue;
      for (std::size_t c = r + 1; c < dim; ++c)
        if (!m(r + 1, c).is_zero()) m(r, c).add_shifted(m(r + 1, c), exponent);
    }
  }
  return m;
}

PolyMatrix parikh_matrix_closed(const Word& z, const Word& w) {
  require_inducing_word(z);
  PolyMatrix m = PolyMatrix::identity(z.size() + 1);
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t r = 1; i + r <= z.size(); ++r)
      m(i, i + r) = qbinom(w, z.factor(i, r)).shifted(static_cast<std::size_t>(triangular(r - 1)));
  return m;
}

Word canonical_word(std::size_t k) {
  std::vector<Letter> letters(k);
  for (std::size_t i = 0; i < k; ++i) letters[i] = Letter{static_cast<std::uint32_t>(i + 1)};
  return Word(std::move(letters));
}

PolyMatrix egecioglu_matrix(std::size_t k, const Word& w) { return parikh_matrix(canonical_word(k), w); }

PolyMatrix parikh_inverse_closed(const Word& z, const Word& u) {
  require_inducing_word(z);
  require_no_adjacent_repeat(z);
  const PolyMatrix reversed = parikh_matrix(z, reverse_word(u));
  const std::size_t dim = z.size() + 1;
  PolyMatrix n = PolyMatrix::identity(dim);
  if (u.empty()) return n;
  const auto len = static_cast<std::int64_t>(u.size());
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      const auto window = static_cast<std::int64_t>(j - i) * (len - 1);
      n(i, j) = signed_by(i, j, reciprocal(reversed(i, j), window));
    }
  return n;
}

PolyMatrix parikh_inverse_reversal(const Word& z, const Word& u) {
  require_inducing_word(z);
  require_no_adjacent_repeat(z);
  return checkerboard_signs(antitranspose(parikh_matrix(reverse_word(z), u)));
}

PolyMatrix parikh_inverse(const Word& z, const Word& u) {
  if (!z.first_adjacent_repeat()) return parikh_inverse_closed(z, u);
  return unitriangular_inverse(parikh_matrix(z, u));
}

bool reverse_duality_check(const Word& z, const Word& u) {
  require_inducing_word(z);
  const std::size_t l = z.size();
  const PolyMatrix lhs = parikh_matrix(z, reverse_word(u));
  const PolyMatrix rhs = parikh_matrix(reverse_word(z), u);
  if (!lhs.is_unitriangular() || !rhs.is_unitriangular()) return false;
  const auto len = static_cast<std::int64_t>(u.size());
  for (std::size_t i = 0; i <= l; ++i)
    for (std::size_t j = i + 1; j <= l; ++j) {
      const IntPoly& mirrored = rhs(l - j, l - i);
      const auto window = static_cast<std::int64_t>(j - i) * (len - 1);
      if (mirrored.is_zero()) {
        if (!lhs(i, j).is_zero()) return false;
        continue;
      }
      if (mirrored.degree() > window) return false;
      if (reciprocal(mirrored, window) != lhs(i, j)) return false;
    }
  return true;
}

IntPoly cancellation_identity(const Word& z, const Word& u) {
  require_inducing_word(z);
  require_no_adjacent_repeat(z);
  const auto n = static_cast<std::int64_t>(z.size());
  IntPoly sum;
  for (std::int64_t i = 0; i <= n; ++i) {
    const Word x = z.factor(0, static_cast<std::size_t>(i));
    const Word y = z.factor(static_cast<std::size_t>(i), static_cast<std::size_t>(n - i));
    const auto shift = static_cast<std::size_t>(triangular(i - 1) + triangular(n - i - 1));
    IntPoly term = (qbinom(u, x) * qbinom(u, reverse_word(y))).shifted(shift);
    if ((n - i) % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

IntPoly cauchy_minor(const Word& u, const Word& v, const Word& w, const Word& x) {
  auto s = [](const Word& word) { return static_cast<std::size_t>(triangular(static_cast<std::int64_t>(word.size()) - 1)); };
  const Word vw = v + w, wx = w + x, vwx = v + w + x;
  IntPoly first = (qbinom(u, vw) * qbinom(u, wx)).shifted(s(vw) + s(wx));
  IntPoly second = (qbinom(u, w) * qbinom(u, vwx)).shifted(s(w) + s(vwx));
  return first - second;
}

IntPoly cauchy_dual(const Word& x, const Word& y, const Word& z, const Word& w) {
  return qbinom(x + y, w) * qbinom(y + z, w) - qbinom(x + y + z, w) * qbinom(y, w);
}

Word decode_word(const Word& z, const PolyMatrix& m) {
  require_inducing_word(z);
  if (m.size() != z.size() + 1) throw Error(ErrorCode::DimensionMismatch, "matrix does not match |z|+1");
  std::map<std::size_t, Letter> at;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const IntPoly& entry = m(i, i + 1);
    for (std::size_t j = 0; j < entry.size(); ++j) {
      const Integer& c = entry.coeffs()[j];
      if (sgn(c) == 0) continue;
      if (c != 1) throw Error(ErrorCode::InvalidArgument, "second diagonal has a coefficient other than 1");
      auto [it, fresh] = at.emplace(j, z[i]);
      if (!fresh && it->second != z[i])
        throw Error(ErrorCode::InvalidArgument, "two letters claim position " + std::to_string(j));
    }
  }
  const std::size_t len = at.empty() ? 0 : at.rbegin()->first + 1;
  if (at.size() != len) throw Error(ErrorCode::InvalidArgument, "second diagonal leaves a position uncovered");
  std::vector<Letter> letters(len);
  for (const auto& [j, a] : at) letters[len - 1 - j] = a;
  return Word(std::move(letters));
}

}  // namespace qparikh
