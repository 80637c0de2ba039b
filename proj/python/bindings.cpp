#include "eqmf/classification.hpp"
#include "eqmf/divisor.hpp"
#include "eqmf/eisenstein.hpp"
#include "eqmf/errors.hpp"
#include "eqmf/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace eqmf;

namespace {

// Exact values cross the boundary as decimal or "p/q" strings.
std::vector<std::string> coefficients(const PowerSeries& f) { return f.coefficient_strings(); }

py::tuple series(const PowerSeries& f) { return py::make_tuple(f.leading_exponent(), coefficients(f)); }

std::vector<std::string> ascending(const Polynomial& p) {
  std::vector<std::string> out;
  for (int i = 0; i <= std::max(p.degree(), 0); ++i) out.push_back(p.coefficient(i).get_str());
  return out;
}

py::dict sweep_dict(const SweepReport& s) {
  py::dict d;
  d["formula"] = s.formula_id;
  d["first_k"] = s.first_k;
  d["bound"] = s.bound;
  d["admissible"] = s.admissible;
  d["certified"] = s.certificate.ok();
  py::list w;
  for (const auto& x : s.witnesses) w.append(py::make_tuple(x.k, x.value.get_str()));
  d["rejected"] = w;
  return d;
}

std::int64_t base_lambda(unsigned depth, int weight) { return vanishing_order(depth, weight); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact q-expansions of extremal quasimodular forms";
  m.attr("__version__") = eqmf::version();

  py::register_exception<NonexistentForm>(m, "NonexistentForm", PyExc_ValueError);
  py::register_exception<UnsupportedClass>(m, "UnsupportedClass", PyExc_ValueError);
  py::register_exception<UnknownIdentifier>(m, "UnknownIdentifier", PyExc_KeyError);
  py::register_exception<PreconditionViolation>(m, "PreconditionViolation", PyExc_ValueError);
  py::register_exception<CertificateFailure>(m, "CertificateFailure", PyExc_RuntimeError);

  m.def("sigma", [](unsigned k, std::int64_t n) { return sigma(k, n).get_str(); }, py::arg("k"), py::arg("n"));
  m.def("tau", [](std::int64_t n) { return tau(n).get_str(); }, py::arg("n"));
  m.def("eisenstein", [](int w, std::size_t order) { return coefficients(eisenstein(w, order)); },
        py::arg("weight"), py::arg("order") = kDefaultOrder);

  m.def("form_exists", &form_exists, py::arg("depth"), py::arg("weight"));
  m.def("vanishing_order", &vanishing_order, py::arg("depth"), py::arg("weight"));
  m.def("extremal_expansion",
        [](unsigned depth, int weight, std::size_t terms) { return series(extremal_expansion(depth, weight, terms)); },
        py::arg("depth"), py::arg("weight"), py::arg("terms") = kDefaultOrder,
        "(leading exponent, coefficient strings) of the normalized extremal form");
  m.def(
      "frobenius",
      [](unsigned depth, int weight, std::size_t terms) {
        const auto op = extremal_mdo(depth, weight, terms + 1);
        return series(frobenius_solve(op, base_lambda(depth, weight), terms).series);
      },
      py::arg("depth"), py::arg("weight"), py::arg("terms") = kDefaultOrder,
      "Frobenius solution of the extremal MDO (base classes only)");
  m.def(
      "matrix",
      [](unsigned depth, int weight, std::size_t n) {
        const auto op = extremal_mdo(depth, weight, n + 1);
        const auto mat = matrix_representation(op, base_lambda(depth, weight), n);
        std::vector<std::vector<std::string>> rows(n, std::vector<std::string>(n));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) rows[i][j] = mat(i, j).get_str();
        return rows;
      },
      py::arg("depth"), py::arg("weight"), py::arg("n"));
  m.def(
      "indicial_polynomial",
      [](unsigned depth, int weight) { return ascending(indicial_polynomial(extremal_mdo(depth, weight, 4))); },
      py::arg("depth"), py::arg("weight"), "coefficients in ascending degree");

  m.def("formula_ids", [] {
    std::vector<std::string> ids;
    for (const auto& f : coefficient_formulas()) ids.push_back(f.id);
    return ids;
  });
  m.def("coeff_formula", [](const std::string& id, long k) { return coeff_formula(id, k).get_str(); },
        py::arg("id"), py::arg("k"));
  m.def("integrality_sweep", [](const std::string& id) { return sweep_dict(integrality_sweep(id)); },
        py::arg("id"));
  m.def(
      "screen",
      [](unsigned depth) {
        py::list out;
        for (const auto& s : screen_depth(depth)) {
          py::dict d;
          d["modulus"] = s.modulus;
          d["residue"] = s.residue;
          d["method"] = s.method;
          d["stages"] = s.stages;
          d["stage_labels"] = s.stage_labels;
          d["weights"] = s.weights;
          d["nonexistent_weights"] = s.nonexistent_weights;
          py::list sweeps;
          for (const auto& sw : s.sweeps) sweeps.append(sweep_dict(sw));
          d["sweeps"] = sweeps;
          d["notes"] = s.notes;
          out.append(d);
        }
        return out;
      },
      py::arg("depth"));
  m.def("candidate_weights", [](unsigned depth) { return candidate_weights(depth); }, py::arg("depth"));

  m.def("divisor_form", [](const std::string& id, std::size_t order) { return coefficients(divisor_form(id, order)); },
        py::arg("id"), py::arg("order") = kDefaultOrder, "coefficients of q^1 .. q^order");
  m.def(
      "verify_divisor_identity",
      [](const std::string& id, std::size_t order) {
        const IdentityReport r = verify_divisor_identity(id, order);
        py::dict d;
        d["id"] = r.id;
        d["order"] = r.order;
        d["representations"] = r.representations;
        d["all_agree"] = r.all_agree;
        d["first_mismatch"] = r.first_mismatch;
        return d;
      },
      py::arg("id"), py::arg("order") = kDefaultOrder);
  m.def(
      "verify_e_sets",
      [](std::size_t order) {
        py::list out;
        for (const auto& r : verify_e_sets(order)) {
          py::dict d;
          d["depth"] = r.depth;
          d["candidates"] = r.candidates;
          d["confirmed"] = r.confirmed;
          d["determined"] = r.determined;
          d["passed"] = r.passed;
          py::dict members;
          for (const auto& mc : r.members) members[py::int_(mc.weight)] = to_string(mc.status);
          d["members"] = members;
          out.append(d);
        }
        return out;
      },
      py::arg("order") = kDefaultOrder);
}
