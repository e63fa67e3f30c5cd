#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qparikh {

using Integer = mpz_class;

/// s(r) = r(r+1)/2, with s(-1) = 0.
constexpr std::int64_t triangular(std::int64_t r) { return r * (r + 1) / 2; }

/// Dense polynomial in q with arbitrary-precision integer coefficients.
/// Coefficients are stored by ascending exponent with trailing zeros
/// trimmed, so the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  /// c * q^e
  static IntPoly monomial(std::size_t e, const Integer& c = 1);
  static IntPoly one() { return constant(1); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const;
  Integer coeff(std::size_t e) const;
  std::size_t size() const { return coeffs_.size(); }

  bool is_monomial() const;
  bool has_nonnegative_coefficients() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const Integer& c);
  /// Adds c * q^shift * other without materializing the product.
  IntPoly& add_shifted(const IntPoly& other, std::size_t shift, const Integer& c = 1);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// q^k * P
  IntPoly shifted(std::size_t k) const;
  /// P / q^k; the k lowest coefficients must vanish.
  IntPoly unshifted(std::size_t k) const;
  /// Keeps the coefficients of q^0 .. q^order.
  IntPoly truncated(std::size_t order) const;
  /// P(q^r); r = 0 yields the constant P(1).
  IntPoly dilated(std::size_t r) const;

  Integer at_one() const;
  Integer evaluate(const Integer& x) const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

/// Product used by operator*; exposed so tests can compare kernels.
IntPoly multiply_schoolbook(const IntPoly& a, const IntPoly& b);
IntPoly multiply_karatsuba(const IntPoly& a, const IntPoly& b);

/// q^D * P(1/q). Throws DegreeExceeded when D < deg P.
IntPoly reciprocal(const IntPoly& p, std::int64_t d);

/// 1 + q^step + ... + q^{step*(count-1)}.
IntPoly geometric_sum(std::size_t step, std::size_t count);

/// P / (1 - q^e) when exact.
std::optional<IntPoly> divide_by_one_minus(const IntPoly& p, std::size_t e);

/// Euclidean division by a monic polynomial (or one with leading
/// coefficient -1).
std::pair<IntPoly, IntPoly> divmod_unit_leading(const IntPoly& p, const IntPoly& divisor);

/// Text form with descending exponents, e.g. "q^6+q^5+q^3+1".
std::string to_string(const IntPoly& p);
/// Inverse of to_string; accepts optional spaces and explicit '*'.
IntPoly parse_poly(std::string_view text);

/// First order+1 coefficients of a formal power series.
struct TruncatedSeries {
  std::vector<Integer> coeffs;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const Integer& operator[](std::size_t i) const { return coeffs[i]; }

  static TruncatedSeries from_poly(const IntPoly& p, std::size_t order);
  IntPoly to_poly() const { return IntPoly(coeffs); }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

}  // namespace qparikh
