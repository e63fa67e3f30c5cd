#include "qparikh/rational.hpp"

#include <algorithm>

#include "qparikh/errors.hpp"

namespace qparikh {

namespace {

IntPoly one_minus(std::size_t e) {
  IntPoly p = IntPoly::one();
  p.add_shifted(IntPoly::one(), e, -1);
  return p;
}

FactoredRational::Factors union_of(const FactoredRational::Factors& a, const FactoredRational::Factors& b) {
  auto out = a;
  for (const auto& [e, m] : b) out[e] = std::max(out[e], m);
  return out;
}

}  // namespace

FactoredRational::FactoredRational(IntPoly numerator, Factors denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  for (auto it = denominator_.begin(); it != denominator_.end();) {
    if (it->first == 0) throw Error(ErrorCode::InvalidArgument, "denominator factor 1 - q^0 vanishes");
    it = it->second == 0 ? denominator_.erase(it) : std::next(it);
  }
  if (numerator_.is_zero()) denominator_.clear();
}

std::size_t FactoredRational::denominator_degree() const {
  std::size_t d = 0;
  for (const auto& [e, m] : denominator_) d += e * m;
  return d;
}

FactoredRational& FactoredRational::divide_by_one_minus(std::size_t e, std::size_t mult) {
  if (e == 0) throw Error(ErrorCode::InvalidArgument, "denominator factor 1 - q^0 vanishes");
  if (!is_zero() && mult > 0) denominator_[e] += mult;
  return *this;
}

FactoredRational& FactoredRational::multiply_by_one_minus(std::size_t e) {
  auto it = denominator_.find(e);
  if (it != denominator_.end()) {
    if (--it->second == 0) denominator_.erase(it);
  } else {
    numerator_ *= one_minus(e);
  }
  return *this;
}

FactoredRational& FactoredRational::reduce() {
  if (is_zero()) {
    denominator_.clear();
    return *this;
  }
  for (auto it = denominator_.begin(); it != denominator_.end();) {
    while (it->second > 0) {
      auto q = qparikh::divide_by_one_minus(numerator_, it->first);
      if (!q) break;
      numerator_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? denominator_.erase(it) : std::next(it);
  }
  return *this;
}

IntPoly FactoredRational::numerator_over(const Factors& target) const {
  IntPoly num = numerator_;
  for (const auto& [e, m] : target) {
    auto it = denominator_.find(e);
    std::size_t have = it == denominator_.end() ? 0 : it->second;
    for (std::size_t k = have; k < m; ++k) num *= one_minus(e);
  }
  return num;
}

FactoredRational& FactoredRational::operator+=(const FactoredRational& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  Factors common = union_of(denominator_, other.denominator_);
  IntPoly num = numerator_over(common) + other.numerator_over(common);
  *this = FactoredRational(std::move(num), std::move(common));
  return reduce();
}

FactoredRational& FactoredRational::operator-=(const FactoredRational& other) { return *this += -other; }

FactoredRational& FactoredRational::operator*=(const FactoredRational& other) {
  numerator_ *= other.numerator_;
  if (numerator_.is_zero()) {
    denominator_.clear();
    return *this;
  }
  for (const auto& [e, m] : other.denominator_) denominator_[e] += m;
  return reduce();
}

FactoredRational& FactoredRational::operator*=(const IntPoly& p) {
  numerator_ *= p;
  if (numerator_.is_zero()) denominator_.clear();
  return *this;
}

FactoredRational operator-(FactoredRational a) {
  a.numerator_ = -a.numerator_;
  return a;
}

bool operator==(const FactoredRational& a, const FactoredRational& b) {
  FactoredRational::Factors common = union_of(a.denominator_, b.denominator_);
  return a.numerator_over(common) == b.numerator_over(common);
}

IntPoly FactoredRational::denominator_polynomial() const {
  IntPoly d = IntPoly::one();
  for (const auto& [e, m] : denominator_)
    for (std::size_t k = 0; k < m; ++k) d *= one_minus(e);
  return d;
}

IntPoly FactoredRational::to_polynomial() const {
  IntPoly num = numerator_;
  for (const auto& [e, m] : denominator_) {
    for (std::size_t k = 0; k < m; ++k) {
      auto q = qparikh::divide_by_one_minus(num, e);
      if (!q)
        throw Error(ErrorCode::NonExactDivision,
                    to_string(*this) + " is not a polynomial (factor 1-q^" + std::to_string(e) + ")");
      num = std::move(*q);
    }
  }
  return num;
}

std::string to_string(const FactoredRational& r) {
  std::string out = "(" + to_string(r.numerator()) + ")";
  if (r.denominator().empty()) return out;
  out += "/(";
  bool first = true;
  for (const auto& [e, m] : r.denominator()) {
    if (!first) out += "*";
    first = false;
    out += "(1-q" + (e == 1 ? std::string() : "^" + std::to_string(e)) + ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out + ")";
}

TruncatedSeries series_expand(const FactoredRational& r, std::size_t order) {
  TruncatedSeries s = TruncatedSeries::from_poly(r.numerator(), order);
  // Multiplying by 1/(1-q^e) is a running sum with stride e.
  for (const auto& [e, m] : r.denominator())
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = e; i <= order; ++i) s.coeffs[i] += s.coeffs[i - e];
  return s;
}

}  // namespace qparikh
