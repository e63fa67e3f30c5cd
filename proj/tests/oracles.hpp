#pragma once

// Reference implementations used only by the tests. None of them share code
// paths with the library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "qparikh/matrix.hpp"
#include "qparikh/parikh.hpp"
#include "qparikh/polynomial.hpp"
#include "qparikh/words.hpp"

namespace oracle {

using qparikh::Integer;
using qparikh::IntPoly;
using qparikh::PolyMatrix;
using qparikh::Word;

// Sum of q^alpha over all |v|-subsets of positions of u spelling v, where
// alpha counts, for each chosen position, the unchosen positions to its right.
inline IntPoly qbinom_subsets(const Word& u, const Word& v) {
  const std::size_t n = u.size(), k = v.size();
  std::map<std::size_t, Integer> acc;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::size_t m = 0, alpha = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      ok = u[i] == v[m++];
      for (std::size_t j = i + 1; j < n; ++j) alpha += (mask >> j & 1u) ? 0 : 1;
    }
    if (ok) acc[alpha] += 1;
  }
  std::vector<Integer> c(acc.empty() ? 0 : acc.rbegin()->first + 1);
  for (const auto& [e, x] : acc) c[e] = x;
  return IntPoly(std::move(c));
}

inline Integer count_subsets(const Word& u, const Word& v) { return qbinom_subsets(u, v).at_one(); }

// Power series quotient num/den up to q^order by long division; den(0) = +-1.
inline std::vector<Integer> long_division(const IntPoly& num, const IntPoly& den, std::size_t order) {
  std::vector<Integer> c(order + 1);
  const Integer d0 = den.coeff(0);
  for (std::size_t n = 0; n <= order; ++n) {
    Integer acc = num.coeff(n);
    for (std::size_t k = 1; k <= n && k < den.size(); ++k) acc -= den.coeff(k) * c[n - k];
    c[n] = acc / d0;
  }
  return c;
}

inline IntPoly permutation_det(const PolyMatrix& a, const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> p(rows.size());
  std::iota(p.begin(), p.end(), 0);
  IntPoly det;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) sign = -sign;
    IntPoly t = IntPoly::one();
    for (std::size_t i = 0; i < p.size(); ++i) t = t * a(rows[i], cols[p[i]]);
    det = sign > 0 ? det + t : det - t;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

// P_z(w) as the literal product M_{w[0],n-1} ... M_{w[n-1],0}.
inline PolyMatrix parikh_by_products(const Word& z, const Word& w) {
  PolyMatrix m = PolyMatrix::identity(z.size() + 1);
  for (std::size_t i = 0; i < w.size(); ++i) m = m * qparikh::atomic_matrix(z, w[i], w.size() - 1 - i);
  return m;
}

inline PolyMatrix constants(const std::vector<std::vector<long>>& rows) {
  return PolyMatrix::from_constants(rows);
}

}  // namespace oracle
