#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gradsk/verify.hpp"

namespace py = pybind11;
using namespace gradsk;

namespace {

IntMatrix to_matrix(const std::vector<std::vector<long long>>& rows) {
  std::vector<Vec> conv;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows) {
    Vec v;
    for (long long x : r) v.push_back(Int(x));
    conv.push_back(std::move(v));
  }
  return IntMatrix::from_rows(conv, cols);
}

std::vector<std::vector<std::string>> from_matrix(const IntMatrix& m) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::string> from_vec(const Vec& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::vector<Int> to_ints(const std::vector<long long>& xs) {
  std::vector<Int> out;
  for (long long x : xs) out.push_back(Int(x));
  return out;
}

SKResult run_on_document(const std::string& text, bool unitary) {
  InputDocument in = parse_input_text(text);
  if (in.valued) return unitary ? sk1u_valued(*in.valued) : sk1_valued(*in.valued);
  if (unitary) {
    require(in.involution.has_value(), Errc::SchemaError,
            "document has no involution block");
    return sk1u_auto(*in.presentation, *in.involution);
  }
  return sk1_totally_ramified(*in.presentation);
}

}  // namespace

PYBIND11_MODULE(_gradsk, m) {
  m.doc() = "reduced Whitehead groups of graded division algebras";

  py::register_exception<Error>(m, "GradskError");

  m.def(
      "smith_normal_form",
      [](const std::vector<std::vector<long long>>& a) {
        SmithForm f = smith_normal_form(to_matrix(a));
        py::dict out;
        out["U"] = from_matrix(f.U);
        out["S"] = from_matrix(f.S);
        out["V"] = from_matrix(f.V);
        out["diag"] = from_vec(f.diag());
        return out;
      },
      py::arg("matrix"),
      "U*A*V = S with unimodular transforms; entries returned as strings");

  m.def(
      "invariant_factors",
      [](long long ngens, const std::vector<std::vector<long long>>& rel) {
        FGAbGroup g(static_cast<std::size_t>(ngens), to_matrix(rel));
        return from_vec(g.invariant_factors());
      },
      py::arg("ngens"), py::arg("relations"),
      "invariant factors of the presented abelian group");

  m.def(
      "sk1u_toex",
      [](const std::vector<long long>& r, long long mu, long long theta) {
        SKResult res = sk1u_valued(toex_input(to_ints(r), Int(mu), Int(theta)));
        return from_vec(res.group.invariant_factors());
      },
      py::arg("r"), py::arg("mu"), py::arg("theta"),
      "unitary group of the Laurent-series symbol algebra");

  m.def(
      "sk1_toex",
      [](const std::vector<long long>& r, long long mu, long long theta) {
        SKResult res = sk1_valued(toex_input(to_ints(r), Int(mu), Int(theta)));
        return from_vec(res.group.invariant_factors());
      },
      py::arg("r"), py::arg("mu"), py::arg("theta"),
      "nonunitary group of the Laurent-series symbol algebra");

  m.def(
      "classify_document",
      [](const std::string& text) {
        InputDocument in = parse_input_text(text);
        AlgebraPresentation p = in.valued
                                    ? associated_graded(*in.valued).presentation
                                    : *in.presentation;
        return render_report(classify_to_json(classify(p)));
      },
      py::arg("document"), "classification report for a JSON input document");

  m.def(
      "sk1u_document",
      [](const std::string& text) {
        return render_report(sk_result_to_json(run_on_document(text, true)));
      },
      py::arg("document"), "unitary group report for a JSON input document");

  m.def(
      "sk1_document",
      [](const std::string& text) {
        return render_report(sk_result_to_json(run_on_document(text, false)));
      },
      py::arg("document"), "nonunitary group report for a JSON input document");

  m.def(
      "bridge_document",
      [](const std::string& text) {
        InputDocument in = parse_input_text(text);
        require(in.valued.has_value(), Errc::SchemaError,
                "bridge needs a valued input");
        return render_report(bridge_to_json(associated_graded(*in.valued)));
      },
      py::arg("document"), "valued-to-graded bridge report");

  m.def(
      "verify",
      [](const std::vector<std::string>& suites, std::uint64_t seed) {
        py::list out;
        for (const auto& rep : run_suites(suites, seed)) {
          py::dict d;
          d["suite"] = rep.name;
          d["cases"] = rep.cases;
          d["failures"] = rep.failures;
          d["pass"] = rep.pass();
          d["details"] = rep.details;
          out.append(d);
        }
        return out;
      },
      py::arg("suites") = std::vector<std::string>{}, py::arg("seed") = 0,
      "run verification suites and report pass/fail counts");

  m.def("suite_names", &suite_names, "names of the verification suites");
}
