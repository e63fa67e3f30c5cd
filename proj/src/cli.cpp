#include "qparikh/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qparikh/errors.hpp"
#include "qparikh/json_io.hpp"
#include "qparikh/morphism_reduction.hpp"
#include "qparikh/parikh.hpp"
#include "qparikh/qbinomial.hpp"
#include "qparikh/series.hpp"
#include "qparikh/verify.hpp"

namespace qparikh::cli {

namespace {

constexpr std::size_t kDefaultOrder = 64;
constexpr std::size_t kDefaultGrowthOrder = 400;

// All words of one command share a script, inferred from their concatenation.
struct Words {
  Script script = Script::Digits;
  std::vector<Word> words;

  explicit Words(const std::vector<std::string>& texts) {
    std::string joined;
    for (const auto& t : texts) joined += t;
    if (joined.empty()) {
      words.resize(texts.size());
      return;
    }
    const Alphabet alphabet = Alphabet::infer(joined);
    script = alphabet.script();
    for (const auto& t : texts) words.push_back(parse_word(t, alphabet));
  }
  const Word& operator[](std::size_t i) const { return words[i]; }
  std::string show(const Word& w) const { return format_word(w, script); }
};

std::uint64_t oracle_limit() {
  const char* env = std::getenv("QPARIKH_MAX_ORACLE");
  if (!env || !*env) return kDefaultOracleLimit;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw Error(ErrorCode::InvalidArgument, std::string("QPARIKH_MAX_ORACLE is not a number: ") + env);
  return v;
}

// Ascending rendering used for power series, e.g. "q^3 + 2q^4 + O(q^6)".
std::string series_text(const TruncatedSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    const Integer& c = s.coeffs[i];
    if (sgn(c) == 0) continue;
    if (!first) out << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    const Integer a = abs(c);
    if (i == 0) out << a;
    else {
      if (a != 1) out << a;
      out << (i == 1 ? std::string("q") : "q^" + std::to_string(i));
    }
  }
  if (!first) out << " + ";
  out << "O(q^" << s.coeffs.size() << ")";
  return out.str();
}

std::string set_text(const std::set<std::size_t>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ", ") + std::to_string(*it);
  return out + "}";
}

Json set_json(const std::set<std::size_t>& s) { return Json(std::vector<std::size_t>(s.begin(), s.end())); }

Json closed_form_json(const ClosedForm& cf) {
  Json terms = Json::array();
  for (const auto& t : cf.terms) terms.push_back({{"multiple", t.multiple}, {"rational", rational_to_json(t.rational)}});
  return Json{{"prefactor_exponent", cf.prefactor_exponent}, {"period_length", cf.period_length}, {"terms", terms}};
}

struct Options {
  bool json = false;
  bool oracle = false;
  bool closed = false;
  bool inverse = false;
  bool at_q1 = false;
  bool coefficients = false;
  bool csv = false;
  bool serial = false;
  bool list = false;
  std::string method = "closed";
  std::string stream;
  std::string z, u;
  std::vector<std::string> positional;
  std::size_t order = kDefaultOrder;
  std::size_t growth_order = kDefaultGrowthOrder;
  std::vector<std::size_t> residues;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> only;
};

// Each subcommand returns the process exit code.
using Action = std::function<int(const Options&, std::ostream&)>;

int cmd_qbinom(const Options& o, std::ostream& out) {
  const Words w(o.positional);
  const IntPoly p = o.oracle ? qbinom_oracle(w[0], w[1], oracle_limit()) : qbinom(w[0], w[1]);
  if (o.json)
    out << Json{{"u", w.show(w[0])}, {"v", w.show(w[1])}, {"result", poly_to_json(p)}}.dump() << '\n';
  else
    out << to_string(p) << '\n';
  return 0;
}

int cmd_parikh(const Options& o, std::ostream& out) {
  const Words w(o.positional);
  PolyMatrix m = o.closed ? parikh_matrix_closed(w[0], w[1]) : parikh_matrix(w[0], w[1]);
  if (o.inverse) m = parikh_inverse(w[0], w[1]);
  if (o.json) out << matrix_to_json(m).dump() << '\n';
  else out << to_string(m) << '\n';
  return 0;
}

int cmd_inverse(const Options& o, std::ostream& out) {
  const Words w(o.positional);
  PolyMatrix m(1);
  if (o.method == "closed") m = parikh_inverse_closed(w[0], w[1]);
  else if (o.method == "reversal") m = parikh_inverse_reversal(w[0], w[1]);
  else m = unitriangular_inverse(parikh_matrix(w[0], w[1]));
  if (o.json) out << matrix_to_json(m).dump() << '\n';
  else out << to_string(m) << '\n';
  return 0;
}

int cmd_identity_general(const Options& o, std::ostream& out) {
  const Words w({o.z, o.u});
  const IntPoly sum = cancellation_identity(w[0], w[1]);
  if (o.json) out << Json{{"z", w.show(w[0])}, {"u", w.show(w[1])}, {"sum", poly_to_json(sum)}}.dump() << '\n';
  else out << to_string(sum) << '\n' << (sum.is_zero() ? "identity holds" : "identity fails") << '\n';
  return sum.is_zero() ? 0 : 1;
}

int cmd_identity_duality(const Options& o, std::ostream& out) {
  const Words w({o.z, o.u});
  const bool ok = reverse_duality_check(w[0], w[1]);
  if (o.json) out << Json{{"z", w.show(w[0])}, {"u", w.show(w[1])}, {"holds", ok}}.dump() << '\n';
  else out << (ok ? "duality holds" : "duality fails") << '\n';
  return ok ? 0 : 1;
}

int cmd_cauchy(const Options& o, std::ostream& out, bool minor) {
  const Words w(o.positional);
  const IntPoly p = minor ? cauchy_minor(w[0], w[1], w[2], w[3]) : cauchy_dual(w[0], w[1], w[2], w[3]);
  if (o.json)
    out << Json{{"result", poly_to_json(p)}, {"nonnegative", p.has_nonnegative_coefficients()}}.dump() << '\n';
  else out << to_string(p) << '\n';
  return 0;
}

int cmd_series(const Options& o, std::ostream& out) {
  const LeftInfiniteWord x = make_stream(o.stream);
  std::vector<std::string> texts{o.z};
  if (x.kind() == LeftInfiniteWord::Kind::Periodic) texts.push_back(o.stream.substr(o.stream.find(':') + 1));
  const Words w(texts);
  const TruncatedSeries s = series_coefficients(x, w[0], o.order);
  if (o.json) {
    out << Json{{"stream", o.stream}, {"z", w.show(w[0])}, {"series", series_to_json(s)}}.dump() << '\n';
  } else if (o.csv) {
    out << "n,coefficient\n";
    for (std::size_t n = 0; n < s.coeffs.size(); ++n) out << n << ',' << s.coeffs[n] << '\n';
  } else {
    out << series_text(s) << '\n';
  }
  return 0;
}

int cmd_closed_form(const Options& o, std::ostream& out) {
  const Words w(o.positional);
  const ClosedForm cf = periodic_closed_form(w[0], w[1]);
  const FactoredRational limit = limit_rational(cf);
  if (o.json) {
    Json j = closed_form_json(cf);
    j["limit"] = rational_to_json(limit);
    out << j.dump() << '\n';
  } else {
    out << "(u^n choose z) = " << to_string(cf) << '\n';
    out << "limit = q^-" << cf.prefactor_exponent << " * " << to_string(limit) << '\n';
  }
  return 0;
}

int cmd_recurrence(const Options& o, std::ostream& out) {
  const Words w(o.positional);
  if (o.coefficients) {
    const CoefficientRecurrence r = coefficient_recurrence(periodic_closed_form(w[0], w[1]));
    if (o.json) {
      Json j = recurrence_to_json(r.relation);
      j["valid_from"] = r.valid_from;
      j["numerator"] = poly_to_json(r.numerator);
      j["denominator"] = poly_to_json(r.denominator);
      out << j.dump() << '\n';
    } else {
      out << to_string(r.relation, "c") << "  for n >= " << r.valid_from << '\n';
    }
  } else if (o.at_q1) {
    const IntegerRecurrence r = recurrence_integer(w[0], w[1]);
    if (o.json) {
      Json j = recurrence_to_json(r.relation);
      Json terms = Json::array();
      for (const auto& t : r.terms) terms.push_back(integer_to_json(t));
      j["terms"] = terms;
      out << j.dump() << '\n';
    } else {
      out << to_string(r.relation) << '\n';
      for (std::size_t i = 0; i < r.terms.size(); ++i) out << (i ? "," : "") << r.terms[i];
      out << '\n';
    }
  } else {
    const PolyRecurrence r = recurrence_polynomial(periodic_closed_form(w[0], w[1]));
    if (o.json) out << recurrence_to_json(r).dump() << '\n';
    else out << to_string(r) << '\n';
  }
  return 0;
}

int cmd_residues(const Options& o, std::ostream& out) {
  const Words w(o.positional);
  const ResidueReport r = vanishing_residues(w[0], w[1]);
  if (o.json)
    out << Json{{"modulus", r.modulus},
                {"vanishing", set_json(r.vanishing)},
                {"admissible", set_json(r.admissible)},
                {"cutoff", r.cutoff}}
               .dump()
        << '\n';
  else out << "vanishing residues mod " << r.modulus << ": " << set_text(r.vanishing) << '\n';
  return 0;
}

int cmd_growth_fit(const Options& o, std::ostream& out) {
  const Words w(o.positional);
  std::vector<std::size_t> residues = o.residues;
  if (residues.empty()) {
    const ResidueReport r = vanishing_residues(w[0], w[1]);
    residues.assign(r.admissible.begin(), r.admissible.end());
  }
  Json j = Json::array();
  for (std::size_t r : residues) {
    const double slope = growth_fit(w[0], w[1], r, o.growth_order);
    if (o.json) j.push_back({{"residue", r}, {"exponent", slope}});
    else out << "residue " << r << ": exponent " << slope << '\n';
  }
  if (o.json) out << j.dump() << '\n';
  return 0;
}

int cmd_sigma(const Options& o, std::ostream& out) {
  const Words w(o.positional);
  const Morphism sigma = sigma_z(w[0]);
  Json j = Json::object();
  for (const auto& [a, image] : sigma.images()) {
    const std::string key = format_letter(a, w.script);
    const std::string value = format_word(image, Script::Digits);
    if (o.json) j[key] = value;
    else out << key << " -> " << value << '\n';
  }
  if (o.json) out << j.dump() << '\n';
  return 0;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const Words w(o.positional);
  const ReductionReport rep = reduce_to_canonical(w[0], w[1]);
  if (o.json) {
    out << Json{{"r", rep.r},
                {"sigma_u", format_word(rep.sigma_u, Script::Digits)},
                {"Z", matrix_to_json(rep.zc.z)},
                {"C", matrix_to_json(rep.zc.c)},
                {"E", matrix_to_json(rep.e)},
                {"P", matrix_to_json(rep.p)},
                {"forward", rep.forward},
                {"inverse", rep.inverse}}
               .dump()
        << '\n';
  } else {
    out << "r = " << rep.r << '\n' << "sigma_z(u) = " << format_word(rep.sigma_u, Script::Digits) << '\n';
    out << "Z =\n" << to_string(rep.zc.z) << "C =\n" << to_string(rep.zc.c);
    out << "E(sigma_z(u)) =\n" << to_string(rep.e) << "P_z(u) =\n" << to_string(rep.p);
    out << "C(q^(r-1)) . E = Z . P(q^r): " << (rep.forward ? "holds" : "fails") << '\n';
    out << "C(q^(r-1)) . E^-1 = Z . P(q^r)^-1: " << (rep.inverse ? "holds" : "fails") << '\n';
  }
  return rep.forward && rep.inverse ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.list) {
    for (const auto& name : property_names()) out << name << '\n';
    return 0;
  }
  VerifyOptions options;
  options.seed = o.seed;
  options.parallel = !o.serial;
  options.only = o.only;
  const auto results = run_properties(options);
  out << "seed " << o.seed << '\n' << format_report(results);
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; }) ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-deformed binomial coefficients of words and q-Parikh matrices", "qparikh"};
  app.require_subcommand(1);
  Options o;
  Action action;
  auto bind = [&](CLI::App* sub, Action a) { sub->callback([&action, a] { action = a; }); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable output"); };

  auto* qb = app.add_subcommand("qbinom", "q-binomial coefficient <u choose v>");
  qb->add_option("u", o.u)->required();
  qb->add_option("v", o.z)->required();
  qb->add_flag("--oracle", o.oracle, "Sum over the explicit occurrence list");
  add_json(qb);
  qb->callback([&] {
    o.positional = {o.u, o.z};
    action = cmd_qbinom;
  });

  auto* pm = app.add_subcommand("parikh", "q-Parikh matrix P_z(w)");
  pm->add_option("z", o.z)->required();
  pm->add_option("w", o.u)->required();
  pm->add_flag("--closed", o.closed, "Fill the entries from q-binomials");
  pm->add_flag("--inverse", o.inverse, "Print the inverse instead");
  add_json(pm);
  bind(pm, [](const Options& opt, std::ostream& os) {
    Options copy = opt;
    copy.positional = {opt.z, opt.u};
    return cmd_parikh(copy, os);
  });

  auto* inv = app.add_subcommand("inverse", "Inverse of P_z(u)");
  inv->add_option("z", o.z)->required();
  inv->add_option("u", o.u)->required();
  inv->add_option("--method", o.method, "closed, reversal or exact")
      ->check(CLI::IsMember({"closed", "reversal", "exact"}));
  add_json(inv);
  bind(inv, [](const Options& opt, std::ostream& os) {
    Options copy = opt;
    copy.positional = {opt.z, opt.u};
    return cmd_inverse(copy, os);
  });

  auto* idc = app.add_subcommand("identity-check", "Check the matrix identities");
  idc->require_subcommand(1);
  auto* general = idc->add_subcommand("general", "Alternating sum over factorizations z = xy");
  general->add_option("--z", o.z)->required();
  general->add_option("--u", o.u)->required();
  add_json(general);
  bind(general, cmd_identity_general);
  auto* duality = idc->add_subcommand("duality", "P_z(~u) against the antitranspose of P_~z(u)");
  duality->add_option("--z", o.z)->required();
  duality->add_option("--u", o.u)->required();
  add_json(duality);
  bind(duality, cmd_identity_duality);

  auto* cauchy = app.add_subcommand("cauchy", "Cauchy-type polynomials");
  cauchy->require_subcommand(1);
  auto* minor = cauchy->add_subcommand("minor", "2x2 minor for u, v, w, x");
  minor->add_option("u", o.z)->required();
  minor->add_option("v", o.u)->required();
  std::string c3, c4;
  minor->add_option("w", c3)->required();
  minor->add_option("x", c4)->required();
  add_json(minor);
  auto* dual = cauchy->add_subcommand("dual", "<xy choose w><yz choose w> - <xyz choose w><y choose w>");
  dual->add_option("x", o.z)->required();
  dual->add_option("y", o.u)->required();
  dual->add_option("z", c3)->required();
  dual->add_option("w", c4)->required();
  add_json(dual);
  minor->callback([&] {
    o.positional = {o.z, o.u, c3, c4};
    action = [](const Options& opt, std::ostream& os) { return cmd_cauchy(opt, os, true); };
  });
  dual->callback([&] {
    o.positional = {o.z, o.u, c3, c4};
    action = [](const Options& opt, std::ostream& os) { return cmd_cauchy(opt, os, false); };
  });

  auto* ser = app.add_subcommand("series", "Limit series s_{x,z} truncated at q^N");
  ser->add_option("--stream", o.stream, "periodic:<word> or thue-morse")->required();
  ser->add_option("--z", o.z)->required();
  ser->add_option("--order", o.order, "Truncation order N")->capture_default_str();
  add_json(ser);
  ser->add_flag("--csv", o.csv, "Coefficient table as CSV");
  bind(ser, cmd_series);

  auto with_uz = [&](const char* name, const char* help, Action a) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("u", o.u)->required();
    sub->add_option("z", o.z)->required();
    add_json(sub);
    sub->callback([&o, &action, a] {
      o.positional = {o.u, o.z};
      action = a;
    });
    return sub;
  };
  with_uz("closed-form", "Closed form of <u^n choose z>", cmd_closed_form);
  auto* rec = with_uz("recurrence", "Linear recurrence satisfied by <u^n choose z>", cmd_recurrence);
  rec->add_flag("--at-q1", o.at_q1, "Integer recurrence for the classical coefficients");
  rec->add_flag("--coefficients", o.coefficients, "Recurrence on the coefficients of the limit series");
  with_uz("residues", "Residue classes of vanishing series coefficients", cmd_residues);
  auto* gf = with_uz("growth-fit", "Empirical growth exponent per residue class", cmd_growth_fit);
  gf->add_option("--residue", o.residues, "Residue classes to fit (default: all admissible)");
  gf->add_option("--order", o.growth_order, "Number of series coefficients")->capture_default_str();

  auto* morph = app.add_subcommand("morphism", "The morphism sigma_z and the reduction to 12...|z|");
  morph->require_subcommand(1);
  auto* sigma = morph->add_subcommand("sigma", "Images of sigma_z");
  sigma->add_option("z", o.z)->required();
  add_json(sigma);
  sigma->callback([&] {
    o.positional = {o.z};
    action = cmd_sigma;
  });
  auto* reduce = morph->add_subcommand("reduce", "Check both Hadamard identities for z and u");
  reduce->add_option("z", o.z)->required();
  reduce->add_option("u", o.u)->required();
  add_json(reduce);
  reduce->callback([&] {
    o.positional = {o.z, o.u};
    action = cmd_reduce;
  });

  auto* ver = app.add_subcommand("verify", "Run the randomized property suite");
  ver->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  ver->add_flag("--serial", o.serial, "Run the properties one after another");
  ver->add_option("--only", o.only, "Property names to run");
  ver->add_flag("--list", o.list, "List the property names");
  bind(ver, cmd_verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    return action ? action(o, out) : 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  }
}

}  // namespace qparikh::cli
