#include "qparikh/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <span>

#include "qparikh/errors.hpp"

namespace qparikh {

namespace {

// Below this operand length the quadratic kernel wins.
constexpr std::size_t kKaratsubaThreshold = 32;

using Coeffs = std::span<const Integer>;

void schoolbook_into(Coeffs a, Coeffs b, Integer* out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    const mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
  }
}

std::vector<Integer> add_halves(Coeffs lo, Coeffs hi) {
  std::vector<Integer> out(std::max(lo.size(), hi.size()));
  for (std::size_t i = 0; i < lo.size(); ++i) out[i] = lo[i];
  for (std::size_t i = 0; i < hi.size(); ++i) out[i] += hi[i];
  return out;
}

// out[0 .. a.size()+b.size()-1) += a*b
void karatsuba_into(Coeffs a, Coeffs b, Integer* out) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return;
  if (b.size() < kKaratsubaThreshold) {
    schoolbook_into(a, b, out);
    return;
  }
  if (2 * b.size() <= a.size()) {
    for (std::size_t off = 0; off < a.size(); off += b.size())
      karatsuba_into(a.subspan(off, std::min(b.size(), a.size() - off)), b, out + off);
    return;
  }
  const std::size_t m = a.size() / 2;
  Coeffs a0 = a.first(m), a1 = a.subspan(m), b0 = b.first(m), b1 = b.subspan(m);

  std::vector<Integer> z0(2 * m - 1), z2(a1.size() + b1.size() - 1);
  karatsuba_into(a0, b0, z0.data());
  karatsuba_into(a1, b1, z2.data());
  auto sa = add_halves(a0, a1), sb = add_halves(b0, b1);
  std::vector<Integer> z1(sa.size() + sb.size() - 1);
  karatsuba_into(sa, sb, z1.data());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  // z1 may carry trailing zero slots beyond the product length.
  const std::size_t total = a.size() + b.size() - 1;
  for (std::size_t i = 0; i < z1.size() && m + i < total; ++i) out[m + i] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * m + i] += z2[i];
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(std::size_t e, const Integer& c) {
  std::vector<Integer> v(e + 1);
  v[e] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::size_t IntPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return i;
  return 0;
}

Integer IntPoly::coeff(std::size_t e) const { return e < coeffs_.size() ? coeffs_[e] : Integer(0); }

bool IntPoly::is_monomial() const {
  if (is_zero()) return false;
  return std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; }) == 1 &&
         coeffs_.back() == 1;
}

bool IntPoly::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) >= 0; });
}

IntPoly& IntPoly::operator+=(const IntPoly& other) { return add_shifted(other, 0, 1); }

IntPoly& IntPoly::operator-=(const IntPoly& other) { return add_shifted(other, 0, -1); }

IntPoly& IntPoly::add_shifted(const IntPoly& other, std::size_t shift, const Integer& c) {
  if (other.is_zero() || sgn(c) == 0) return *this;
  if (coeffs_.size() < other.coeffs_.size() + shift) coeffs_.resize(other.coeffs_.size() + shift);
  if (c == 1) {
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i + shift] += other.coeffs_[i];
  } else {
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
      mpz_addmul(coeffs_[i + shift].get_mpz_t(), other.coeffs_[i].get_mpz_t(), c.get_mpz_t());
  }
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) { return *this = *this * other; }

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly multiply_schoolbook(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  schoolbook_into(a.coeffs(), b.coeffs(), out.data());
  return IntPoly(std::move(out));
}

IntPoly multiply_karatsuba(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  karatsuba_into(a.coeffs(), b.coeffs(), out.data());
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (std::min(a.size(), b.size()) < kKaratsubaThreshold) return multiply_schoolbook(a, b);
  return multiply_karatsuba(a, b);
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Integer> v(k + coeffs_.size());
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::unshifted(std::size_t k) const {
  if (is_zero()) return {};
  if (valuation() < k)
    throw Error(ErrorCode::NonExactDivision, "polynomial " + to_string(*this) + " is not divisible by q^" +
                                                 std::to_string(k));
  return IntPoly(std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

IntPoly IntPoly::truncated(std::size_t order) const {
  if (coeffs_.size() <= order + 1) return *this;
  return IntPoly(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

IntPoly IntPoly::dilated(std::size_t r) const {
  if (r == 0) return constant(at_one());
  if (r == 1 || is_zero()) return *this;
  std::vector<Integer> v((coeffs_.size() - 1) * r + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * r] = coeffs_[i];
  return IntPoly(std::move(v));
}

Integer IntPoly::at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly reciprocal(const IntPoly& p, std::int64_t d) {
  if (p.is_zero()) return {};
  if (d < p.degree())
    throw Error(ErrorCode::DegreeExceeded, "reflection window " + std::to_string(d) +
                                               " is below the degree " + std::to_string(p.degree()) + " of " +
                                               to_string(p));
  std::vector<Integer> v(static_cast<std::size_t>(d) + 1);
  for (std::size_t i = 0; i < p.size(); ++i) v[static_cast<std::size_t>(d) - i] = p.coeffs()[i];
  return IntPoly(std::move(v));
}

IntPoly geometric_sum(std::size_t step, std::size_t count) {
  if (count == 0) return {};
  if (step == 0) return IntPoly::constant(static_cast<unsigned long>(count));
  std::vector<Integer> v(step * (count - 1) + 1);
  for (std::size_t m = 0; m < count; ++m) v[m * step] = 1;
  return IntPoly(std::move(v));
}

std::optional<IntPoly> divide_by_one_minus(const IntPoly& p, std::size_t e) {
  if (e == 0) throw Error(ErrorCode::InvalidArgument, "factor 1 - q^0 is zero");
  if (p.is_zero()) return IntPoly{};
  // p = (1 - q^e) Q  <=>  Q[i] = p[i] + Q[i-e]; the quotient must stop at deg p - e.
  const std::size_t n = p.size();
  if (n <= e) return std::nullopt;
  std::vector<Integer> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = p.coeffs()[i];
    if (i >= e) q[i] += q[i - e];
  }
  for (std::size_t i = n - e; i < n; ++i)
    if (sgn(q[i]) != 0) return std::nullopt;
  q.resize(n - e);
  return IntPoly(std::move(q));
}

std::pair<IntPoly, IntPoly> divmod_unit_leading(const IntPoly& p, const IntPoly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  const Integer lead = divisor.coeffs().back();
  if (lead != 1 && lead != -1)
    throw Error(ErrorCode::InvalidArgument, "divisor " + to_string(divisor) + " is not monic");
  std::vector<Integer> rem = p.coeffs();
  const std::size_t dn = divisor.size();
  if (rem.size() < dn) return {IntPoly{}, p};
  std::vector<Integer> quot(rem.size() - dn + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer c = rem[k + dn - 1] * lead;  // lead is its own inverse
    quot[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i < dn; ++i)
      mpz_submul(rem[k + i].get_mpz_t(), c.get_mpz_t(), divisor.coeffs()[i].get_mpz_t());
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t e = p.size(); e-- > 0;) {
    const Integer& c = p.coeffs()[e];
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) out += '-';
    else if (!out.empty()) out += '+';
    Integer mag = abs(c);
    if (e == 0 || mag != 1) out += mag.get_str();
    if (e >= 1) out += 'q';
    if (e >= 2) out += '^' + std::to_string(e);
  }
  return out;
}

IntPoly parse_poly(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&](std::size_t pos) -> IntPoly {
    throw Error(ErrorCode::InvalidArgument,
                "cannot parse polynomial '" + std::string(text) + "' near offset " + std::to_string(pos));
  };
  if (s.empty()) fail(0);
  IntPoly out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail(i);
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Integer c = i > start ? Integer(s.substr(start, i - start)) : Integer(1);
    bool has_digits = i > start;
    if (i < s.size() && s[i] == '*') {
      if (!has_digits) fail(i);
      ++i;
      if (i >= s.size() || s[i] != 'q') fail(i);
    }
    std::size_t e = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t es = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == es) fail(i);
        e = std::stoull(s.substr(es, i - es));
      }
    } else if (!has_digits) {
      fail(i);
    }
    out.add_shifted(IntPoly::one(), e, c * sign);
  }
  return out;
}

TruncatedSeries TruncatedSeries::from_poly(const IntPoly& p, std::size_t order) {
  TruncatedSeries s;
  s.coeffs.resize(order + 1);
  for (std::size_t i = 0; i <= order && i < p.size(); ++i) s.coeffs[i] = p.coeffs()[i];
  return s;
}

}  // namespace qparikh
