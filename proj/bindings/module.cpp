// Python bindings: a thin JSON bridge over the report builders. Every
// function takes and returns JSON text in the formats documented in
// wco/json_io.hpp (complex numbers are [re, im] pairs), so the python
// surface stays in lockstep with the CLI's --json output.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "wco/demos.hpp"
#include "wco/reports.hpp"

namespace py = pybind11;
using namespace wco;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("cannot parse JSON: ") + e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "weighted composition systems on finite discrete measure spaces: "
      "closed-form criteria with a dense-matrix referee";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def(
      "analyze",
      [](const std::string& system, double tol) {
        return analysis_report(system_from_json(parse(system)), tol).dump();
      },
      py::arg("system"), py::arg("tol") = kDefaultTol,
      "Full report on a system document: density, conditional expectation, "
      "property table, polar and generalized polar weights.");

  m.def(
      "oracle",
      [](const std::string& system, double tol, bool dump_matrix) {
        return oracle_report(system_from_json(parse(system)), tol, dump_matrix)
            .dump();
      },
      py::arg("system"), py::arg("tol") = kDefaultTol,
      py::arg("dump_matrix") = false,
      "Matrix metrics and closed-form vs matrix verdict agreement.");

  m.def(
      "invariant",
      [](const std::string& system, double tol) {
        return invariant_report(system_from_json(parse(system)), tol).dump();
      },
      py::arg("system"), py::arg("tol") = kDefaultTol,
      "Invariant subspace search and verification.");

  m.def(
      "tree",
      [](const std::string& tree, bool interior_only, double tol) {
        return tree_report(tree_from_json(parse(tree)), interior_only, tol)
            .dump();
      },
      py::arg("tree"), py::arg("interior_only") = false,
      py::arg("tol") = kDefaultTol,
      "Tree-shift criteria on a tree document: weighted and unweighted "
      "junction tests, the system route and the matrix commutator.");

  m.def(
      "gauss",
      [](double alpha, const std::vector<double>& coeffs, int dim, int samples,
         bool entire, double box_half_width, std::uint64_t seed, double tol) {
        GaussRequest req{alpha, coeffs, dim, samples, entire, box_half_width,
                         seed};
        return gauss_report(req, tol).dump();
      },
      py::arg("alpha") = 2.0, py::arg("coeffs") = std::vector<double>{1.0, 1.0},
      py::arg("dim") = 1, py::arg("samples") = 1000, py::arg("entire") = false,
      py::arg("box_half_width") = 10.0, py::arg("seed") = 42,
      py::arg("tol") = kDefaultTol,
      "Scaling map against a radial profile: boundedness and the sampled "
      "log-convexity inequality.");

  m.def(
      "rudy", [](int n_max) { return rudy_report(n_max).dump(); },
      py::arg("n_max") = 20,
      "Growth table of the backward-slide phase scale gaps.");

  m.def(
      "demo",
      [](const std::string& name, double alpha, int depth, double tol,
         std::uint64_t seed) {
        return demo_report(name, alpha, depth, tol, seed).dump();
      },
      py::arg("name"), py::arg("alpha") = 1.0, py::arg("depth") = 4,
      py::arg("tol") = kDefaultTol, py::arg("seed") = 42,
      "Report on a named example system.");

  m.def(
      "fuzz",
      [](int count, std::uint64_t seed, int max_atoms, double tol,
         bool inject_bug) {
        FuzzConfig config;
        config.count = count;
        config.seed = seed;
        config.max_atoms = max_atoms;
        config.tol = tol;
        config.inject_bug = inject_bug;
        return fuzz_report(config).dump();
      },
      py::arg("count") = 1000, py::arg("seed") = 42, py::arg("max_atoms") = 8,
      py::arg("tol") = kDefaultTol, py::arg("inject_bug") = false,
      "Differential battery of random systems; every closed form is checked "
      "against the dense-matrix route.");

  m.def("demo_names", &demo_names, "Names accepted by demo().");

  m.def(
      "normalize_system",
      [](const std::string& system) {
        return system_to_json(system_from_json(parse(system))).dump();
      },
      py::arg("system"),
      "Parse and re-serialize a system document (validation round trip).");

  m.def(
      "normalize_tree",
      [](const std::string& tree) {
        return tree_to_json(tree_from_json(parse(tree))).dump();
      },
      py::arg("tree"),
      "Parse and re-serialize a tree document (validation round trip).");
}
