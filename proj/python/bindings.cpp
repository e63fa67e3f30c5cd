#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qparikh/cli.hpp"
#include "qparikh/errors.hpp"
#include "qparikh/morphism_reduction.hpp"
#include "qparikh/parikh.hpp"
#include "qparikh/qbinomial.hpp"
#include "qparikh/series.hpp"
#include "qparikh/verify.hpp"

namespace py = pybind11;
using namespace qparikh;

namespace {

// Words are strings; the script is inferred from all words of one call.
std::vector<Word> words(std::initializer_list<std::string> texts) {
  std::string joined;
  for (const auto& t : texts) joined += t;
  std::vector<Word> out;
  if (joined.empty()) return std::vector<Word>(texts.size());
  const Alphabet alphabet = Alphabet::infer(joined);
  for (const auto& t : texts) out.push_back(parse_word(t, alphabet));
  return out;
}

py::int_ to_py(const Integer& c) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(c.get_str().c_str(), nullptr, 10));
}

// Polynomials are coefficient lists, constant term first.
py::list to_py(const IntPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

py::list to_py(const std::vector<Integer>& v) {
  py::list out;
  for (const auto& c : v) out.append(to_py(c));
  return out;
}

py::list to_py(const PolyMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.size(); ++j) row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

py::dict to_py(const FactoredRational& r) {
  py::dict d;
  d["numerator"] = to_py(r.numerator());
  py::list den;
  for (const auto& [e, m] : r.denominator()) den.append(py::make_tuple(e, m));
  d["denominator"] = den;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qparikh, m) {
  m.doc() = "q-deformed binomial coefficients of words and q-Parikh matrices";

  py::register_exception<Error>(m, "QParikhError", PyExc_ValueError);

  m.def("qbinom", [](const std::string& u, const std::string& v) {
    const auto w = words({u, v});
    return to_py(qbinom(w[0], w[1]));
  }, py::arg("u"), py::arg("v"));
  m.def("qbinom_oracle", [](const std::string& u, const std::string& v) {
    const auto w = words({u, v});
    return to_py(qbinom_oracle(w[0], w[1]));
  }, py::arg("u"), py::arg("v"));
  m.def("subword_count", [](const std::string& u, const std::string& v) {
    const auto w = words({u, v});
    return to_py(subword_count(w[0], w[1]));
  }, py::arg("u"), py::arg("v"));

  m.def("parikh_matrix", [](const std::string& z, const std::string& u, bool closed) {
    const auto w = words({z, u});
    return to_py(closed ? parikh_matrix_closed(w[0], w[1]) : parikh_matrix(w[0], w[1]));
  }, py::arg("z"), py::arg("u"), py::arg("closed") = false);
  m.def("parikh_inverse", [](const std::string& z, const std::string& u, const std::string& method) {
    const auto w = words({z, u});
    if (method == "closed") return to_py(parikh_inverse_closed(w[0], w[1]));
    if (method == "reversal") return to_py(parikh_inverse_reversal(w[0], w[1]));
    if (method == "exact") return to_py(parikh_inverse(w[0], w[1]));
    throw Error(ErrorCode::InvalidArgument, "unknown method " + method);
  }, py::arg("z"), py::arg("u"), py::arg("method") = "closed");
  m.def("reverse_duality_check", [](const std::string& z, const std::string& u) {
    const auto w = words({z, u});
    return reverse_duality_check(w[0], w[1]);
  }, py::arg("z"), py::arg("u"));
  m.def("cancellation_identity", [](const std::string& z, const std::string& u) {
    const auto w = words({z, u});
    return to_py(cancellation_identity(w[0], w[1]));
  }, py::arg("z"), py::arg("u"));
  m.def("cauchy_minor", [](const std::string& u, const std::string& v, const std::string& x, const std::string& y) {
    const auto w = words({u, v, x, y});
    return to_py(cauchy_minor(w[0], w[1], w[2], w[3]));
  });
  m.def("cauchy_dual", [](const std::string& x, const std::string& y, const std::string& z, const std::string& v) {
    const auto w = words({x, y, z, v});
    return to_py(cauchy_dual(w[0], w[1], w[2], w[3]));
  });

  m.def("series_coefficients", [](const std::string& stream, const std::string& z, std::size_t order) {
    const auto w = words({z});
    return to_py(series_coefficients(make_stream(stream), w[0], order).coeffs);
  }, py::arg("stream"), py::arg("z"), py::arg("order"));
  m.def("periodic_closed_form", [](const std::string& u, const std::string& z) {
    const auto w = words({u, z});
    const ClosedForm cf = periodic_closed_form(w[0], w[1]);
    py::list terms;
    for (const auto& t : cf.terms) {
      py::dict d;
      d["multiple"] = t.multiple;
      d["rational"] = to_py(t.rational);
      terms.append(d);
    }
    py::dict out;
    out["terms"] = terms;
    out["prefactor_exponent"] = cf.prefactor_exponent;
    out["period_length"] = cf.period_length;
    out["limit"] = to_py(limit_rational(cf));
    return out;
  }, py::arg("u"), py::arg("z"));
  m.def("closed_form_eval", [](const std::string& u, const std::string& z, std::size_t n) {
    const auto w = words({u, z});
    return to_py(closed_form_eval(periodic_closed_form(w[0], w[1]), n));
  }, py::arg("u"), py::arg("z"), py::arg("n"));
  m.def("recurrence_polynomial", [](const std::string& u, const std::string& z) {
    const auto w = words({u, z});
    py::list out;
    for (const auto& c : recurrence_polynomial(periodic_closed_form(w[0], w[1])).coeffs) out.append(to_py(c));
    return out;
  }, py::arg("u"), py::arg("z"));
  m.def("recurrence_integer", [](const std::string& u, const std::string& z) {
    const auto w = words({u, z});
    const IntegerRecurrence r = recurrence_integer(w[0], w[1]);
    return py::make_tuple(to_py(r.relation.coeffs), to_py(r.terms));
  }, py::arg("u"), py::arg("z"));
  m.def("coefficient_recurrence", [](const std::string& u, const std::string& z) {
    const auto w = words({u, z});
    const CoefficientRecurrence r = coefficient_recurrence(periodic_closed_form(w[0], w[1]));
    py::dict out;
    out["coeffs"] = to_py(r.relation.coeffs);
    out["numerator"] = to_py(r.numerator);
    out["denominator"] = to_py(r.denominator);
    out["valid_from"] = r.valid_from;
    return out;
  }, py::arg("u"), py::arg("z"));
  m.def("vanishing_residues", [](const std::string& u, const std::string& z) {
    const auto w = words({u, z});
    const ResidueReport r = vanishing_residues(w[0], w[1]);
    py::dict out;
    out["modulus"] = r.modulus;
    out["vanishing"] = r.vanishing;
    out["admissible"] = r.admissible;
    out["cutoff"] = r.cutoff;
    return out;
  }, py::arg("u"), py::arg("z"));
  m.def("growth_fit", [](const std::string& u, const std::string& z, std::size_t residue, std::size_t order) {
    const auto w = words({u, z});
    return growth_fit(w[0], w[1], residue, order);
  }, py::arg("u"), py::arg("z"), py::arg("residue"), py::arg("order") = 400);

  m.def("sigma_z", [](const std::string& z) {
    const auto w = words({z});
    const Script script = Alphabet::infer(z).script();
    const Morphism sigma = sigma_z(w[0]);
    py::dict out;
    for (const auto& [a, image] : sigma.images())
      out[py::str(format_letter(a, script))] = format_word(image, Script::Digits);
    return out;
  }, py::arg("z"));
  m.def("check_canonical_reduction", [](const std::string& z, const std::string& u) {
    const auto w = words({z, u});
    return check_canonical_reduction(w[0], w[1]);
  }, py::arg("z"), py::arg("u"));

  m.def("verify", [](std::uint64_t seed, bool parallel) {
    VerifyOptions options;
    options.seed = seed;
    options.parallel = parallel;
    std::vector<PropertyResult> results;
    {
      py::gil_scoped_release release;
      results = run_properties(options);
    }
    py::list out;
    for (const auto& r : results) out.append(py::make_tuple(r.name, r.passed, r.cases, r.detail));
    return out;
  }, py::arg("seed") = kDefaultSeed, py::arg("parallel") = true);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
