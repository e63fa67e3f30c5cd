#include "qparikh/recurrence.hpp"

namespace qparikh {

IntRecurrence at_one(const PolyRecurrence& r) {
  IntRecurrence out;
  out.coeffs.reserve(r.order());
  for (const auto& c : r.coeffs) out.coeffs.push_back(c.at_one());
  return out;
}

namespace {

std::string index(std::string_view name, std::size_t s, std::size_t k) {
  std::string out(name);
  out += "(n";
  if (s > k) out += "+" + std::to_string(s - k);
  return out + ")";
}

}  // namespace

std::string to_string(const PolyRecurrence& r, std::string_view name) {
  const std::size_t s = r.order();
  std::string out = index(name, s, 0) + " =";
  bool first = true;
  for (std::size_t k = 1; k <= s; ++k) {
    const IntPoly& c = r.coeffs[k - 1];
    if (c.is_zero()) continue;
    // Pull a global minus sign out when every coefficient is negative.
    bool negative = c.has_nonnegative_coefficients() ? false : (-c).has_nonnegative_coefficients();
    IntPoly mag = negative ? -c : c;
    out += first ? (negative ? " -" : " ") : (negative ? " - " : " + ");
    first = false;
    if (mag != IntPoly::one()) out += "(" + to_string(mag) + ")*";
    out += index(name, s, k);
  }
  if (first) out += " 0";
  return out;
}

std::string to_string(const IntRecurrence& r, std::string_view name) {
  const std::size_t s = r.order();
  std::string out = index(name, s, 0) + " =";
  bool first = true;
  for (std::size_t k = 1; k <= s; ++k) {
    const Integer& c = r.coeffs[k - 1];
    if (sgn(c) == 0) continue;
    bool negative = sgn(c) < 0;
    out += first ? (negative ? " -" : " ") : (negative ? " - " : " + ");
    first = false;
    Integer mag = abs(c);
    if (mag != 1) out += mag.get_str() + "*";
    out += index(name, s, k);
  }
  if (first) out += " 0";
  return out;
}

}  // namespace qparikh
