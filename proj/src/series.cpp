#include "qparikh/series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "qparikh/errors.hpp"
#include "qparikh/parikh.hpp"
#include "qparikh/qbinomial.hpp"

namespace qparikh {

namespace {

void require_nonempty(const Word& w, const char* what) {
  if (w.empty()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be nonempty");
}

}  // namespace

TruncatedSeries series_coefficients(const LeftInfiniteWord& x, const Word& z, std::size_t order) {
  require_nonempty(z, "z");
  return TruncatedSeries::from_poly(qbinom_truncated(x.prefix(order + z.size()), z, order), order);
}

PolyMatrix pow_matrix(const Word& z, std::size_t k) {
  const std::size_t dim = z.size() + 1;
  PolyMatrix m = PolyMatrix::identity(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) m(i, j) = IntPoly::monomial((j - i) * k);
  return m;
}

PolyMatrix h_matrix(const Word& z, const Word& u, std::size_t k) {
  return hadamard(parikh_matrix(z, u), pow_matrix(z, k));
}

ClosedForm periodic_closed_form(const Word& u, const Word& z) {
  require_nonempty(u, "u");
  require_nonempty(z, "z");
  const std::size_t l = z.size(), len = u.size();
  const PolyMatrix p = parikh_matrix(z, u);

  // level[j] describes p_{n,j} = q^{s(j-1)} <u^n choose z[l-j..l)> as a sum
  // of R (1 - Q^{cn}) / (1 - Q^c), Q = q^{|u|}, keyed by c.
  std::vector<std::map<std::size_t, FactoredRational>> level(l + 1);
  for (std::size_t j = 1; j <= l; ++j) {
    auto& out = level[j];
    for (std::size_t k = 1; k <= j; ++k) {
      const IntPoly& a = p(l - j, l - j + k);
      if (a.is_zero()) continue;
      if (k == j) {
        out[k] += FactoredRational(a);
        continue;
      }
      for (const auto& [c, r] : level[j - k]) {
        FactoredRational base = r * a;
        base.divide_by_one_minus(c * len);
        out[k] += base;
        out[k + c] -= base;
      }
    }
    for (auto it = out.begin(); it != out.end();) {
      it->second.reduce();
      it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
  }

  ClosedForm cf;
  cf.prefactor_exponent = static_cast<std::size_t>(triangular(static_cast<std::int64_t>(l) - 1));
  cf.period_length = len;
  for (auto& [c, r] : level[l]) cf.terms.push_back({std::move(r), c});
  return cf;
}

IntPoly closed_form_eval(const ClosedForm& cf, std::size_t n) {
  FactoredRational total;
  for (const auto& t : cf.terms) total += t.rational * geometric_sum(t.multiple * cf.period_length, n);
  return total.to_polynomial().unshifted(cf.prefactor_exponent);
}

FactoredRational limit_rational(const ClosedForm& cf) {
  FactoredRational total;
  for (const auto& t : cf.terms) {
    FactoredRational r = t.rational;
    r.divide_by_one_minus(t.multiple * cf.period_length);
    total += r;
  }
  return total.reduce();
}

TruncatedSeries limit_series(const ClosedForm& cf, std::size_t order) {
  const TruncatedSeries full = series_expand(limit_rational(cf), order + cf.prefactor_exponent);
  TruncatedSeries out;
  out.coeffs.assign(full.coeffs.begin() + static_cast<std::ptrdiff_t>(cf.prefactor_exponent), full.coeffs.end());
  return out;
}

std::string to_string(const ClosedForm& cf) {
  std::ostringstream out;
  if (cf.terms.empty()) return "0";
  if (cf.prefactor_exponent > 0) out << "q^-" << cf.prefactor_exponent << " * (";
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    const auto& t = cf.terms[i];
    const std::size_t e = t.multiple * cf.period_length;
    if (i > 0) out << " + ";
    out << "[" << to_string(t.rational) << "] * (1 - q^(" << e << "n))/(1 - q^" << e << ")";
  }
  if (cf.prefactor_exponent > 0) out << ")";
  return out.str();
}

PolyRecurrence recurrence_polynomial(const ClosedForm& cf) {
  const std::size_t s = cf.terms.size();
  // e[k]: k-th elementary symmetric polynomial of the roots q^{c_j |u|}.
  std::vector<IntPoly> e(s + 1);
  e[0] = IntPoly::one();
  for (const auto& t : cf.terms) {
    const std::size_t root = t.multiple * cf.period_length;
    for (std::size_t k = s; k >= 1; --k)
      if (!e[k - 1].is_zero()) e[k].add_shifted(e[k - 1], root);
  }
  auto d = [&](std::size_t k) -> IntPoly {
    if (k == 0) return -IntPoly::one();
    if (k > s) return {};
    return k % 2 == 1 ? e[k] : -e[k];
  };
  PolyRecurrence r;
  for (std::size_t k = 1; k <= s + 1; ++k) r.coeffs.push_back(d(k) - d(k - 1));
  return r;
}

IntegerRecurrence recurrence_integer(const Word& u, const Word& z) {
  IntegerRecurrence out;
  out.relation = at_one(recurrence_polynomial(periodic_closed_form(u, z)));
  const std::size_t count = std::max<std::size_t>(out.relation.order() + 4, 11);
  Word power;
  for (std::size_t n = 0; n < count; ++n) {
    out.terms.push_back(subword_count(power, z));
    power = power + u;
  }
  return out;
}

IntPoly cyclotomic(std::size_t n) {
  static std::map<std::size_t, IntPoly> cache;
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  IntPoly p = IntPoly::monomial(n) - IntPoly::one();
  for (std::size_t d = 1; d < n; ++d)
    if (n % d == 0) p = divmod_unit_leading(p, cyclotomic(d)).first;
  cache.emplace(n, p);
  return p;
}

CoefficientRecurrence coefficient_recurrence(const ClosedForm& cf) {
  const FactoredRational limit = limit_rational(cf);
  IntPoly num = limit.numerator();

  // Each 1 - q^e is -prod_{d | e} Phi_d.
  std::map<std::size_t, std::size_t> phi;
  std::size_t sign_flips = 0;
  for (const auto& [e, m] : limit.denominator()) {
    sign_flips += m;
    for (std::size_t d = 1; d <= e; ++d)
      if (e % d == 0) phi[d] += m;
  }
  for (auto& [d, m] : phi) {
    const IntPoly f = cyclotomic(d);
    while (m > 0 && !num.is_zero()) {
      auto [quot, rem] = divmod_unit_leading(num, f);
      if (!rem.is_zero()) break;
      num = std::move(quot);
      --m;
    }
  }
  IntPoly den = IntPoly::one();
  for (const auto& [d, m] : phi)
    for (std::size_t i = 0; i < m; ++i) den *= cyclotomic(d);
  if (sign_flips % 2 == 1) den = -den;
  if (den.coeff(0) < 0) {
    den = -den;
    num = -num;
  }

  CoefficientRecurrence out;
  for (std::size_t k = 1; k < den.size(); ++k) out.relation.coeffs.push_back(-den.coeff(k));
  const std::int64_t first = num.degree() + 1 - static_cast<std::int64_t>(cf.prefactor_exponent);
  out.valid_from = first > 0 ? static_cast<std::size_t>(first) : 0;
  out.numerator = std::move(num);
  out.denominator = std::move(den);
  return out;
}

ResidueReport vanishing_residues(const Word& u, const Word& z) {
  require_nonempty(u, "u");
  require_nonempty(z, "z");
  const std::size_t len = u.size(), l = z.size();
  ResidueReport report;
  report.modulus = len;

  std::vector<bool> reach(len, false);
  reach[0] = true;
  std::size_t t_max = 0;
  for (Letter a : z) {
    std::vector<std::size_t> shifts;
    for (std::size_t pos = 0; pos < len; ++pos)
      if (u[pos] == a) shifts.push_back(len - 1 - pos);
    if (shifts.empty())
      throw Error(ErrorCode::LetterAbsent, "letter " + format_letter(a, Script::Digits) + " of z does not occur in u");
    t_max = std::max(t_max, shifts.front());
    std::vector<bool> next(len, false);
    for (std::size_t r = 0; r < len; ++r)
      if (reach[r])
        for (std::size_t t : shifts) next[(r + t) % len] = true;
    reach = std::move(next);
  }

  const std::size_t offset = (l * (l - 1) / 2) % len;
  for (std::size_t r = 0; r < len; ++r) {
    const std::size_t residue = (r + len - offset) % len;
    if (reach[r]) report.admissible.insert(residue);
  }
  for (std::size_t r = 0; r < len; ++r)
    if (!report.admissible.contains(r)) report.vanishing.insert(r);
  report.cutoff = l * t_max + (len - 1) * (l * (l - 1) / 2);
  return report;
}

double growth_fit(const Word& u, const Word& z, std::size_t residue, std::size_t order) {
  require_nonempty(u, "u");
  const std::size_t len = u.size();
  if (residue >= len)
    throw Error(ErrorCode::InvalidArgument,
                "residue " + std::to_string(residue) + " is not below the period " + std::to_string(len));
  constexpr std::size_t kMinSamples = 40;
  const std::size_t imax = residue <= order ? (order - residue) / len : 0;
  if (imax < kMinSamples)
    throw Error(ErrorCode::InsufficientSamples,
                "only " + std::to_string(imax) + " indices in the class, need " + std::to_string(kMinSamples));

  const TruncatedSeries s = series_coefficients(LeftInfiniteWord::periodic(u), z, order);
  std::vector<double> xs, ys;
  for (std::size_t i = std::max<std::size_t>(imax / 2, 1); i <= imax; ++i) {
    const Integer& c = s[residue + i * len];
    if (sgn(c) <= 0) continue;
    xs.push_back(std::log(static_cast<double>(i)));
    ys.push_back(std::log(c.get_d()));
  }
  if (xs.empty())
    throw Error(ErrorCode::AllZeroClass, "no positive coefficient in residue class " + std::to_string(residue));
  if (xs.size() < 2) throw Error(ErrorCode::InsufficientSamples, "fewer than two positive coefficients to fit");

  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    sxx += xs[k] * xs[k];
    sxy += xs[k] * ys[k];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace qparikh
