#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "qparikh/polynomial.hpp"

namespace qparikh {

/// numerator / prod_e (1 - q^e)^{m_e}
///
/// Denominators only ever hold factors of the shape 1 - q^e, so sums use
/// the multiset union of factors as common denominator and cancellation is
/// limited to removing an identical factor from numerator and denominator.
class FactoredRational {
 public:
  using Factors = std::map<std::size_t, std::size_t>;  // exponent e -> multiplicity

  FactoredRational() = default;
  FactoredRational(IntPoly numerator, Factors denominator = {});

  const IntPoly& numerator() const { return numerator_; }
  const Factors& denominator() const { return denominator_; }
  bool is_zero() const { return numerator_.is_zero(); }
  std::size_t denominator_degree() const;

  /// Multiplies by 1 / (1 - q^e)^mult.
  FactoredRational& divide_by_one_minus(std::size_t e, std::size_t mult = 1);
  /// Multiplies by (1 - q^e), cancelling an identical denominator factor when present.
  FactoredRational& multiply_by_one_minus(std::size_t e);
  /// Removes every (1 - q^e) factor the numerator shares with the denominator.
  FactoredRational& reduce();

  FactoredRational& operator+=(const FactoredRational& other);
  FactoredRational& operator-=(const FactoredRational& other);
  FactoredRational& operator*=(const FactoredRational& other);
  FactoredRational& operator*=(const IntPoly& p);

  friend FactoredRational operator+(FactoredRational a, const FactoredRational& b) { return a += b; }
  friend FactoredRational operator-(FactoredRational a, const FactoredRational& b) { return a -= b; }
  friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) { return a *= b; }
  friend FactoredRational operator*(FactoredRational a, const IntPoly& p) { return a *= p; }
  friend FactoredRational operator-(FactoredRational a);
  /// Equality of values (cross multiplication), not of representations.
  friend bool operator==(const FactoredRational& a, const FactoredRational& b);

  IntPoly denominator_polynomial() const;
  /// The value as a polynomial; throws NonExactDivision when it is not one.
  IntPoly to_polynomial() const;

 private:
  /// Rewrites numerator over the factor multiset `target` (a superset).
  IntPoly numerator_over(const Factors& target) const;

  IntPoly numerator_;
  Factors denominator_;
};

std::string to_string(const FactoredRational& r);

/// First N+1 coefficients of the power series of r.
TruncatedSeries series_expand(const FactoredRational& r, std::size_t order);

}  // namespace qparikh
