#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordalg/cantor/counterexample.hpp"
#include "ordalg/cli/acceptance.hpp"
#include "ordalg/cli/dispatch.hpp"
#include "ordalg/order/io.hpp"
#include "ordalg/ortho/caf.hpp"
#include "ordalg/partitions/eqrel.hpp"
#include "ordalg/scatter/fintop.hpp"
#include "ordalg/scatter/ordinal.hpp"
#include "ordalg/staralg/algebra.hpp"
#include "ordalg/version.hpp"

namespace py = pybind11;
using nlohmann::json;

// JSON crosses the boundary as text; the package wraps it with json.loads.
PYBIND11_MODULE(_core, m) {
  m.doc() = "Bindings for the ordalg C++ library";
  m.attr("__version__") = ordalg::kVersion;
  py::register_exception<ordalg::Error>(m, "OrdalgError", PyExc_ValueError);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = ordalg::cli::dispatch(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI subcommand; returns (exit code, stdout, stderr).");

  m.def(
      "poset_report",
      [](const std::string& poset_json) {
        const auto p = ordalg::order::poset_from_json(json::parse(poset_json));
        return ordalg::order::report_to_json(p, ordalg::order::domain_report(p)).dump();
      },
      py::arg("poset_json"));

  m.def(
      "eqrel_join",
      [](std::size_t n, std::vector<std::vector<std::size_t>> a, std::vector<std::vector<std::size_t>> b) {
        using ordalg::partitions::EqRel;
        return ordalg::partitions::join(EqRel::from_classes(n, std::move(a)), EqRel::from_classes(n, std::move(b)))
            .classes();
      },
      py::arg("n"), py::arg("a"), py::arg("b"));

  m.def(
      "eqrel_meet",
      [](std::size_t n, std::vector<std::vector<std::size_t>> a, std::vector<std::vector<std::size_t>> b) {
        using ordalg::partitions::EqRel;
        return ordalg::partitions::meet(EqRel::from_classes(n, std::move(a)), EqRel::from_classes(n, std::move(b)))
            .classes();
      },
      py::arg("n"), py::arg("a"), py::arg("b"));

  m.def(
      "partition_count", [](std::size_t n) { return ordalg::partitions::enumerate_partitions(n).size(); },
      py::arg("n"));

  m.def(
      "verify_counterexample",
      [](unsigned d) { return ordalg::cantor::report_to_json(ordalg::cantor::verify_counterexample(d)).dump(); },
      py::arg("depth"));

  m.def(
      "caf_iso_diagonal",
      [](std::size_t k) {
        return ordalg::ortho::caf_report_to_json(ordalg::ortho::verify_caf_iso(ordalg::staralg::diagonal_algebra(k)))
            .dump();
      },
      py::arg("k"));

  m.def(
      "cb_rank", [](const std::string& a) { return ordalg::scatter::cb_rank_ord(ordalg::scatter::parse_ordinal(a)); },
      py::arg("ordinal"));

  m.def(
      "cb_derivative",
      [](const std::string& a) -> std::optional<std::string> {
        const auto d = ordalg::scatter::cb_derivative_ord(ordalg::scatter::parse_ordinal(a));
        if (!d) return std::nullopt;
        return d->to_string();
      },
      py::arg("ordinal"));

  m.def(
      "topo_stages",
      [](const std::string& topology_json) {
        const auto t = ordalg::scatter::fintop_from_json(json::parse(topology_json));
        return ordalg::scatter::cb_rank_fin(t).stage;
      },
      py::arg("topology_json"));

  m.def(
      "acceptance",
      [](const std::string& selector) {
        const auto results = ordalg::cli::run_acceptance(ordalg::cli::selector_from_string(selector));
        return ordalg::cli::acceptance_to_json(results).dump();
      },
      py::arg("selector") = "fast");
}
