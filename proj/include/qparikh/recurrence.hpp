#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qparikh/polynomial.hpp"

namespace qparikh {

/// p_{n+s} = sum_{k=1}^{s} coeffs[k-1] * p_{n+s-k}
template <typename Coeff>
struct LinearRecurrence {
  std::vector<Coeff> coeffs;

  std::size_t order() const { return coeffs.size(); }

  /// Whether every window terms[n..n+s] with n >= from satisfies the relation.
  template <typename Term>
  bool holds_on(std::span<const Term> terms, std::size_t from = 0) const {
    const std::size_t s = order();
    for (std::size_t n = from; n + s < terms.size(); ++n) {
      Term rhs{};
      for (std::size_t k = 1; k <= s; ++k) rhs += coeffs[k - 1] * terms[n + s - k];
      if (!(rhs == terms[n + s])) return false;
    }
    return true;
  }

  friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;
};

using PolyRecurrence = LinearRecurrence<IntPoly>;
using IntRecurrence = LinearRecurrence<Integer>;

/// Specializes the coefficients at q = 1.
IntRecurrence at_one(const PolyRecurrence& r);

/// e.g. "p(n+3) = (q^8+q^4+1)*p(n+2) - ..."
std::string to_string(const PolyRecurrence& r, std::string_view name = "p");
std::string to_string(const IntRecurrence& r, std::string_view name = "p");

}  // namespace qparikh
