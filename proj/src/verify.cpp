#include "qparikh/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <functional>
#include <future>
#include <numeric>
#include <sstream>

#include "qparikh/errors.hpp"
#include "qparikh/morphism_reduction.hpp"
#include "qparikh/parikh.hpp"
#include "qparikh/qbinomial.hpp"
#include "qparikh/rational.hpp"
#include "qparikh/series.hpp"

namespace qparikh {

std::size_t Sampler::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

Word Sampler::word(std::size_t min_len, std::size_t max_len, std::uint32_t letters) {
  const std::size_t n = uniform(min_len, max_len);
  std::vector<Letter> out(n);
  for (auto& a : out) a = Letter{static_cast<std::uint32_t>(uniform(1, letters))};
  return Word(std::move(out));
}

Word Sampler::word_without_adjacent_repeats(std::size_t min_len, std::size_t max_len, std::uint32_t letters) {
  if (letters < 2) return word(std::min<std::size_t>(min_len, 1), std::min<std::size_t>(max_len, 1), letters);
  const std::size_t n = uniform(min_len, max_len);
  std::vector<Letter> out;
  while (out.size() < n) {
    Letter a{static_cast<std::uint32_t>(uniform(1, letters))};
    if (!out.empty() && out.back() == a) continue;
    out.push_back(a);
  }
  return Word(std::move(out));
}

Word Sampler::balanced_word(std::uint32_t k, std::size_t r) {
  if (k == 0 || (k == 1 && r > 1)) throw Error(ErrorCode::InvalidArgument, "no balanced word without factor aa");
  std::vector<Letter> letters;
  for (std::uint32_t a = 1; a <= k; ++a) letters.insert(letters.end(), r, Letter{a});
  for (;;) {
    std::shuffle(letters.begin(), letters.end(), engine_);
    Word w(letters);
    if (!w.first_adjacent_repeat()) return w;
  }
}

Word Sampler::word_over(const Word& alphabet_source, std::size_t min_len, std::size_t max_len) {
  const auto letters = alphabet_source.alphabet();
  const std::vector<Letter> alphabet(letters.begin(), letters.end());
  const std::size_t n = uniform(min_len, max_len);
  std::vector<Letter> out(n);
  for (auto& a : out) a = alphabet[uniform(0, alphabet.size() - 1)];
  return Word(std::move(out));
}

IntPoly Sampler::poly(std::size_t max_degree, long max_abs_coeff) {
  std::vector<Integer> c(uniform(0, max_degree) + 1);
  for (auto& x : c) x = static_cast<long>(uniform(0, 2 * static_cast<std::size_t>(max_abs_coeff))) - max_abs_coeff;
  return IntPoly(std::move(c));
}

PolyMatrix Sampler::unitriangular(std::size_t dim, std::size_t max_degree) {
  PolyMatrix m = PolyMatrix::identity(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) m(i, j) = poly(max_degree, 3);
  return m;
}

Morphism Sampler::morphism(std::uint32_t letters, std::size_t max_image) {
  std::map<Letter, Word> images;
  for (std::uint32_t a = 1; a <= letters; ++a) images[Letter{a}] = word(1, max_image, letters);
  return Morphism(std::move(images));
}

std::vector<std::size_t> Sampler::subset(std::size_t n, std::size_t k) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), engine_);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

IntPoly permutation_determinant(const PolyMatrix& a, const std::vector<std::size_t>& rows,
                                const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  IntPoly det;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    IntPoly term = IntPoly::one();
    for (std::size_t i = 0; i < perm.size() && !term.is_zero(); ++i) term *= a(rows[i], cols[perm[i]]);
    if (inversions % 2 == 0) det += term;
    else det -= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

namespace {

std::string show(const Word& w) { return "\"" + format_word(w, Script::Digits) + "\""; }

struct Check {
  PropertyResult& result;
  void operator()(bool ok, const std::function<std::string()>& detail) {
    ++result.cases;
    if (!ok && result.passed) {
      result.passed = false;
      result.detail = detail();
    }
  }
};

using Body = void (*)(Sampler&, Check&);

void occurrence_count(Sampler& s, Check& check) {
  for (int t = 0; t < 300; ++t) {
    const Word u = s.word(0, 12, 3), v = s.word(0, 4, 3);
    check(Integer(static_cast<unsigned long>(occurrences(u, v).size())) == subword_count(u, v),
          [&] { return "u=" + show(u) + " v=" + show(v); });
  }
}

void periodic_prefix(Sampler& s, Check& check) {
  for (int t = 0; t < 50; ++t) {
    const Word u = s.word(1, 5, 3);
    const auto x = LeftInfiniteWord::periodic(u);
    for (std::size_t n = 0; n <= 8; ++n)
      check(x.prefix(n * u.size()) == word_power(u, n), [&] { return "u=" + show(u) + " n=" + std::to_string(n); });
  }
}

void thue_morse_parity(Sampler&, Check& check) {
  const auto t = LeftInfiniteWord::thue_morse();
  bool ok = true;
  std::uint64_t bad = 0;
  for (std::uint64_t i = 0; i < (1u << 16) && ok; ++i)
    if (t.letter_at(i).id != static_cast<std::uint32_t>(std::popcount(i) & 1)) ok = false, bad = i;
  check(ok, [&] { return "index " + std::to_string(bad); });
}

void reciprocal_involution(Sampler& s, Check& check) {
  for (int t = 0; t < 300; ++t) {
    const IntPoly p = s.poly(12, 5);
    const auto d = std::max<std::int64_t>(p.degree(), 0) + static_cast<std::int64_t>(s.uniform(0, 5));
    check(reciprocal(reciprocal(p, d), d) == p, [&] { return to_string(p) + " D=" + std::to_string(d); });
  }
}

void series_expansion(Sampler& s, Check& check) {
  for (int t = 0; t < 200; ++t) {
    FactoredRational r(s.poly(6, 4));
    const std::size_t factors = s.uniform(0, 3);
    for (std::size_t k = 0; k < factors; ++k) r.divide_by_one_minus(s.uniform(1, 5));
    const std::size_t order = s.uniform(0, 30);
    const IntPoly expanded = series_expand(r, order).to_poly();
    check((expanded * r.denominator_polynomial()).truncated(order) == r.numerator().truncated(order),
          [&] { return to_string(r) + " N=" + std::to_string(order); });
  }
}

void unitriangular_inverses(Sampler& s, Check& check) {
  for (int t = 0; t < 100; ++t) {
    const PolyMatrix m = s.unitriangular(s.uniform(1, 7), 6);
    const PolyMatrix inv = unitriangular_inverse(m);
    const PolyMatrix id = PolyMatrix::identity(m.size());
    check(inv * m == id && m * inv == id, [&] { return to_string(m); });
  }
}

void minor_expansion(Sampler& s, Check& check) {
  for (int t = 0; t < 100; ++t) {
    PolyMatrix m(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = s.poly(3, 3);
    const std::size_t k = s.uniform(1, 4);
    const auto rows = s.subset(4, k), cols = s.subset(4, k);
    check(minor_det(m, rows, cols) == permutation_determinant(m, rows, cols), [&] { return to_string(m); });
  }
}

void qbinom_oracle_equivalence(Sampler& s, Check& check) {
  for (int t = 0; t < 400; ++t) {
    const Word u = s.word(0, 10, 3), v = s.word(0, 4, 3);
    check(qbinom(u, v) == qbinom_oracle(u, v), [&] { return "u=" + show(u) + " v=" + show(v); });
  }
}

void classical_specialization(Sampler& s, Check& check) {
  for (int t = 0; t < 400; ++t) {
    const Word u = s.word(0, 10, 3), v = s.word(0, 4, 3);
    check(qbinom(u, v).at_one() == Integer(static_cast<unsigned long>(occurrences(u, v).size())),
          [&] { return "u=" + show(u) + " v=" + show(v); });
  }
}

void degree_and_constant_term(Sampler& s, Check& check) {
  for (int t = 0; t < 400; ++t) {
    const Word u = s.word(0, 10, 2), v = s.word(0, 4, 2);
    const IntPoly p = qbinom(u, v);
    const bool bounded = v.size() > u.size() ? p.is_zero()
                                             : p.degree() <= static_cast<std::int64_t>(v.size() * (u.size() - v.size()));
    const bool suffix = v.size() <= u.size() && u.factor(u.size() - v.size(), v.size()) == v;
    check(bounded && ((sgn(p.coeff(0)) != 0) == suffix), [&] { return "u=" + show(u) + " v=" + show(v); });
  }
}

void prepend_recurrence(Sampler& s, Check& check) {
  for (int t = 0; t < 400; ++t) {
    const Word w = s.word(0, 8, 3);
    const Word vp = s.word(0, std::min<std::size_t>(w.size(), 4), 3);
    const Letter d{static_cast<std::uint32_t>(s.uniform(1, 3))};
    const Word dw = Word{d.id} + w, dv = Word{d.id} + vp;
    const IntPoly rhs = qbinom(w, dv) + qbinom(w, vp).shifted(w.size() - vp.size());
    check(qbinom(dw, dv) == rhs, [&] { return "w=" + show(w) + " v'=" + show(vp) + " d=" + std::to_string(d.id); });
  }
}

void reversal(Sampler& s, Check& check) {
  for (int t = 0; t < 400; ++t) {
    const Word u = s.word(0, 10, 3), v = s.word(0, 4, 3);
    check(qbinom_reversed(u, v) == qbinom(reverse_word(u), reverse_word(v)),
          [&] { return "u=" + show(u) + " v=" + show(v); });
  }
}

void morphic_formula(Sampler& s, Check& check) {
  for (int t = 0; t < 200; ++t) {
    const Morphism phi = s.morphism(static_cast<std::uint32_t>(s.uniform(1, 3)), 3);
    const Word w = s.word(0, 5, static_cast<std::uint32_t>(phi.images().size()));
    const Word u = s.word(0, 3, static_cast<std::uint32_t>(phi.images().size()));
    check(morphic_qbinom(phi, w, u) == qbinom(phi.apply(w), u), [&] { return "w=" + show(w) + " u=" + show(u); });
  }
}

void parikh_closed_form(Sampler& s, Check& check) {
  for (int t = 0; t < 200; ++t) {
    const Word z = s.word(1, 6, 3), w = s.word(0, 8, 4);
    check(parikh_matrix(z, w) == parikh_matrix_closed(z, w), [&] { return "z=" + show(z) + " w=" + show(w); });
  }
}

void parikh_inverse_product(Sampler& s, Check& check) {
  for (int t = 0; t < 200; ++t) {
    const Word z = s.word_without_adjacent_repeats(1, 6, 3), u = s.word(0, 8, 3);
    check(parikh_inverse_closed(z, u) * parikh_matrix(z, u) == PolyMatrix::identity(z.size() + 1),
          [&] { return "z=" + show(z) + " u=" + show(u); });
  }
}

void parikh_inverse_agreement(Sampler& s, Check& check) {
  for (int t = 0; t < 200; ++t) {
    const Word z = s.word_without_adjacent_repeats(1, 6, 3), u = s.word(0, 8, 3);
    const PolyMatrix closed = parikh_inverse_closed(z, u);
    check(closed == parikh_inverse_reversal(z, u) && closed == unitriangular_inverse(parikh_matrix(z, u)),
          [&] { return "z=" + show(z) + " u=" + show(u); });
  }
}

void reverse_duality(Sampler& s, Check& check) {
  for (int t = 0; t < 200; ++t) {
    const Word z = s.word(1, 6, 3), u = s.word(0, 8, 3);
    check(reverse_duality_check(z, u), [&] { return "z=" + show(z) + " u=" + show(u); });
  }
}

void nonnegative_minors(Sampler& s, Check& check) {
  for (int t = 0; t < 150; ++t) {
    const Word z = s.word(1, 5, 3), u = s.word(0, 8, 3);
    const PolyMatrix p = parikh_matrix(z, u);
    const std::size_t k = s.uniform(1, std::min<std::size_t>(4, p.size()));
    const auto rows = s.subset(p.size(), k), cols = s.subset(p.size(), k);
    check(minor_det(p, rows, cols).has_nonnegative_coefficients(), [&] { return "z=" + show(z) + " u=" + show(u); });
  }
}

void cancellation(Sampler& s, Check& check) {
  for (int t = 0; t < 300; ++t) {
    const Word z = s.word_without_adjacent_repeats(1, 5, 3), u = s.word(0, 8, 3);
    check(cancellation_identity(z, u).is_zero(), [&] { return "z=" + show(z) + " u=" + show(u); });
  }
}

void cauchy_nonnegativity(Sampler& s, Check& check) {
  for (int t = 0; t < 300; ++t) {
    const Word u = s.word(0, 8, 2), v = s.word(0, 2, 2), w = s.word(0, 2, 2), x = s.word(0, 2, 2);
    check(cauchy_minor(u, v, w, x).has_nonnegative_coefficients(),
          [&] { return "minor u=" + show(u) + " v=" + show(v) + " w=" + show(w) + " x=" + show(x); });
    const Word a = s.word(0, 3, 2), b = s.word(0, 3, 2), c = s.word(0, 3, 2), d = s.word(0, 3, 2);
    check(cauchy_dual(a, b, c, d).has_nonnegative_coefficients(),
          [&] { return "dual x=" + show(a) + " y=" + show(b) + " z=" + show(c) + " w=" + show(d); });
  }
}

void decode_round_trip(Sampler& s, Check& check) {
  for (int t = 0; t < 200; ++t) {
    const Word z = s.word(1, 6, 3);
    const Word w = s.word_over(z, 0, 10);
    check(decode_word(z, parikh_matrix(z, w)) == w, [&] { return "z=" + show(z) + " w=" + show(w); });
  }
}

void stabilization(Sampler& s, Check& check) {
  for (int t = 0; t < 60; ++t) {
    const Word u = s.word(1, 4, 2), z = s.word(1, 3, 2);
    const auto x = s.coin() ? LeftInfiniteWord::periodic(u) : LeftInfiniteWord::thue_morse();
    const std::size_t order = s.uniform(0, 30);
    const IntPoly shorter = qbinom(x.prefix(order + z.size()), z).truncated(order);
    const IntPoly longer = qbinom(x.prefix(order + z.size() + s.uniform(1, 12)), z).truncated(order);
    check(shorter == longer, [&] { return x.name() + " z=" + show(z) + " N=" + std::to_string(order); });
  }
}

void closed_form_soundness(Sampler& s, Check& check) {
  for (int t = 0; t < 60; ++t) {
    const Word u = s.word(1, 4, 2), z = s.word(1, 3, 2);
    const ClosedForm cf = periodic_closed_form(u, z);
    for (std::size_t n = 0; n <= 6; ++n)
      check(closed_form_eval(cf, n) == qbinom(word_power(u, n), z),
            [&] { return "u=" + show(u) + " z=" + show(z) + " n=" + std::to_string(n); });
  }
}

void recurrence_soundness(Sampler& s, Check& check) {
  for (int t = 0; t < 40; ++t) {
    const Word u = s.word(1, 4, 2), z = s.word(1, 3, 2);
    const PolyRecurrence rec = recurrence_polynomial(periodic_closed_form(u, z));
    std::vector<IntPoly> terms;
    for (std::size_t n = 0; n < rec.order() + 5; ++n) terms.push_back(qbinom(word_power(u, n), z));
    check(rec.holds_on(std::span<const IntPoly>(terms)), [&] { return "poly u=" + show(u) + " z=" + show(z); });
    const IntegerRecurrence ir = recurrence_integer(u, z);
    check(ir.terms.size() >= ir.relation.order() + 4 && ir.relation.holds_on(std::span<const Integer>(ir.terms)),
          [&] { return "integer u=" + show(u) + " z=" + show(z); });
  }
}

void limit_consistency(Sampler& s, Check& check) {
  for (int t = 0; t < 60; ++t) {
    const Word u = s.word(1, 4, 2), z = s.word(1, 3, 2);
    const std::size_t order = s.uniform(10, 60);
    check(limit_series(periodic_closed_form(u, z), order) ==
              series_coefficients(LeftInfiniteWord::periodic(u), z, order),
          [&] { return "u=" + show(u) + " z=" + show(z); });
  }
}

void coefficient_recurrence_soundness(Sampler& s, Check& check) {
  for (int t = 0; t < 40; ++t) {
    const Word u = s.word(1, 4, 2), z = s.word(1, 3, 2);
    const ClosedForm cf = periodic_closed_form(u, z);
    const CoefficientRecurrence rec = coefficient_recurrence(cf);
    const std::size_t order = rec.valid_from + rec.relation.order() + 30;
    const TruncatedSeries series = series_coefficients(LeftInfiniteWord::periodic(u), z, order);
    const std::size_t from = std::max(rec.valid_from, rec.relation.order()) - rec.relation.order();
    check(rec.relation.holds_on(std::span<const Integer>(series.coeffs), from),
          [&] { return "u=" + show(u) + " z=" + show(z); });
  }
}

void residue_soundness(Sampler& s, Check& check) {
  for (int t = 0; t < 60; ++t) {
    const Word u = s.word(1, 5, 2);
    const Word z = s.word_over(u, 1, 3);
    const ResidueReport rep = vanishing_residues(u, z);
    const std::size_t len = u.size();
    const std::size_t order = rep.cutoff + 20 * len;
    const TruncatedSeries c = series_coefficients(LeftInfiniteWord::periodic(u), z, order);
    bool ok = true;
    for (std::size_t n = rep.cutoff; n <= order; ++n) {
      const bool zero = sgn(c[n]) == 0;
      if (rep.vanishing.contains(n % len) != zero) ok = false;
    }
    check(ok, [&] { return "u=" + show(u) + " z=" + show(z); });
  }
}

void sigma_positions(Sampler& s, Check& check) {
  for (int t = 0; t < 100; ++t) {
    const Word z = s.word(1, 8, 4);
    const Morphism sigma = sigma_z(z);
    std::vector<int> seen(z.size() + 1, 0);
    bool ok = true;
    for (std::size_t i = 0; i < z.size(); ++i)
      if (!sigma.image(z[i]).contains(Letter{static_cast<std::uint32_t>(i + 1)})) ok = false;
    for (const auto& [a, image] : sigma.images())
      for (Letter p : image) ++seen.at(p.id);
    for (std::size_t i = 1; i <= z.size(); ++i) ok = ok && seen[i] == 1;
    check(ok, [&] { return "z=" + show(z); });
  }
}

void z_monomials(Sampler& s, Check& check) {
  for (int t = 0; t < 100; ++t) {
    const Word z = s.word_without_adjacent_repeats(1, 8, 4);
    bool ok = true;
    try {
      zc_matrices(z);
    } catch (const Error&) {
      ok = false;
    }
    check(ok, [&] { return "z=" + show(z); });
  }
}

void canonical_reduction(Sampler& s, Check& check) {
  for (int t = 0; t < 60; ++t) {
    const auto k = static_cast<std::uint32_t>(s.uniform(2, 3));
    const std::size_t r = s.uniform(1, 2);
    const Word z = s.balanced_word(k, r);
    const Word u = s.word(0, 6, k);
    bool all = true;
    for (std::size_t i = 1; i <= z.size(); ++i)
      for (std::size_t j = i; j <= z.size(); ++j) all = all && extra_property_check(z, u, i, j);
    check(all && check_canonical_reduction(z, u), [&] { return "z=" + show(z) + " u=" + show(u); });
  }
}

struct Property {
  const char* name;
  Body body;
};

const std::vector<Property>& properties() {
  static const std::vector<Property> all = {
      {"occurrence-count", occurrence_count},
      {"periodic-prefix", periodic_prefix},
      {"thue-morse-parity", thue_morse_parity},
      {"reciprocal-involution", reciprocal_involution},
      {"series-expansion", series_expansion},
      {"unitriangular-inverse", unitriangular_inverses},
      {"minor-expansion", minor_expansion},
      {"qbinom-oracle", qbinom_oracle_equivalence},
      {"classical-specialization", classical_specialization},
      {"degree-and-constant-term", degree_and_constant_term},
      {"prepend-recurrence", prepend_recurrence},
      {"reversal", reversal},
      {"morphic-formula", morphic_formula},
      {"parikh-closed-form", parikh_closed_form},
      {"parikh-inverse-product", parikh_inverse_product},
      {"parikh-inverse-agreement", parikh_inverse_agreement},
      {"reverse-duality", reverse_duality},
      {"nonnegative-minors", nonnegative_minors},
      {"cancellation-identity", cancellation},
      {"cauchy-nonnegativity", cauchy_nonnegativity},
      {"decode-round-trip", decode_round_trip},
      {"stabilization", stabilization},
      {"closed-form-soundness", closed_form_soundness},
      {"recurrence-soundness", recurrence_soundness},
      {"limit-consistency", limit_consistency},
      {"coefficient-recurrence", coefficient_recurrence_soundness},
      {"residue-soundness", residue_soundness},
      {"sigma-positions", sigma_positions},
      {"z-monomials", z_monomials},
      {"canonical-reduction", canonical_reduction},
  };
  return all;
}

PropertyResult run_one(const Property& p, std::uint64_t seed, std::size_t index) {
  PropertyResult result;
  result.name = p.name;
  // Each property draws from its own stream so scheduling cannot change the outcome.
  Sampler sampler(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  Check check{result};
  try {
    p.body(sampler, check);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  return result;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> names;
  for (const auto& p : properties()) names.emplace_back(p.name);
  return names;
}

std::vector<PropertyResult> run_properties(const VerifyOptions& options) {
  const auto& all = properties();
  for (const auto& name : options.only)
    if (std::none_of(all.begin(), all.end(), [&](const Property& p) { return name == p.name; }))
      throw Error(ErrorCode::InvalidArgument, "unknown property " + name);

  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (options.only.empty() || std::find(options.only.begin(), options.only.end(), all[i].name) != options.only.end())
      selected.push_back(i);

  std::vector<PropertyResult> results;
  if (!options.parallel) {
    for (std::size_t i : selected) results.push_back(run_one(all[i], options.seed, i));
    return results;
  }
  std::vector<std::future<PropertyResult>> pending;
  for (std::size_t i : selected)
    pending.push_back(std::async(std::launch::async, run_one, std::cref(all[i]), options.seed, i));
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

std::string format_report(const std::vector<PropertyResult>& results) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (!r.passed) {
      ++failed;
      out << ": " << r.detail;
    }
    out << '\n';
  }
  out << results.size() - failed << "/" << results.size() << " properties passed\n";
  return out.str();
}

}  // namespace qparikh
