#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symdiv/audit.hpp"
#include "symdiv/csiszar.hpp"
#include "symdiv/differences.hpp"
#include "symdiv/error.hpp"
#include "symdiv/measures.hpp"

namespace py = pybind11;
using namespace symdiv;

namespace {

ProbabilityDistribution to_dist(const std::vector<double>& w) { return make_distribution(w); }

std::vector<double> as_list(const ProbabilityDistribution& d) {
  return {d.weights().begin(), d.weights().end()};
}

MeasureId measure(const std::string& name) {
  const auto id = parse_measure(name);
  if (!id) throw Error(ErrorKind::UnknownId, "unknown measure '" + name + "'");
  return *id;
}

const DifferenceSpec& difference(const std::string& name) {
  const auto id = parse_difference(name);
  if (!id) throw Error(ErrorKind::UnknownId, "unknown difference '" + name + "'");
  return difference_spec(*id);
}

// Reports go through the same serializer as the CLI.
std::string report_json(AuditReport report) {
  report.timestamp = utc_timestamp();
  return to_json(report).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Symmetric divergence measures and their inequality chains";
  m.attr("__version__") = kVersion;

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result(
      [&] { return py::exception<Error>(m, "SymdivError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error.get_stored(),
                    (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("measure_ids", [] {
    std::vector<std::string> out;
    for (MeasureId id : kAllMeasures) out.emplace_back(to_string(id));
    return out;
  });

  m.def("normalize",
        [](const std::vector<double>& w, double eps) { return as_list(normalize(w, eps)); },
        py::arg("weights"), py::arg("smoothing_epsilon") = 0.0);

  m.def("validate", [](const std::vector<double>& w) { return as_list(to_dist(w)); },
        py::arg("weights"), "Strict validation; returns the exactly renormalized weights.");

  m.def("evaluate",
        [](const std::string& name, const std::vector<double>& p, const std::vector<double>& q) {
          return evaluate(measure(name), to_dist(p), to_dist(q)).value;
        },
        py::arg("measure"), py::arg("p"), py::arg("q"));

  m.def("csiszar",
        [](const std::string& name, const std::vector<double>& p, const std::vector<double>& q) {
          const auto g = parse_generator(name);
          if (!g) throw Error(ErrorKind::UnknownId, "unknown generator '" + name + "'");
          return csiszar_divergence(catalog(*g), to_dist(p), to_dist(q)).value;
        },
        py::arg("generator"), py::arg("p"), py::arg("q"));

  m.def("generator_second_derivative",
        [](const std::string& name, double x) {
          const auto g = parse_generator(name);
          if (!g) throw Error(ErrorKind::UnknownId, "unknown generator '" + name + "'");
          return catalog(*g).second_derivative(x);
        },
        py::arg("generator"), py::arg("x"));

  m.def("difference",
        [](const std::string& name, const std::vector<double>& p, const std::vector<double>& q) {
          return difference_value(difference(name), to_dist(p), to_dist(q));
        },
        py::arg("name"), py::arg("p"), py::arg("q"));

  m.def("difference_second_derivative",
        [](const std::string& name, double x) { return second_derivative(difference(name), x); },
        py::arg("name"), py::arg("x"));

  m.def("sample_pair",
        [](std::uint64_t seed, std::uint64_t index, int n_min, int n_max, double skew) {
          auto [p, q] = sample_pair(PairSampler{seed, n_min, n_max, skew}, index);
          return py::make_tuple(as_list(p), as_list(q));
        },
        py::arg("seed"), py::arg("index"), py::arg("n_min") = 2, py::arg("n_max") = 64,
        py::arg("skew") = 1e6);

  m.def("_audit_json",
        [](std::uint64_t seed, std::size_t pairs, int n_min, int n_max, double skew,
           const std::string& chains) {
          AuditConfig config;
          config.sampler = PairSampler{seed, n_min, n_max, skew};
          config.pairs = pairs;
          config.chains = chains;
          py::gil_scoped_release release;
          return report_json(run_audit(config));
        });

  m.def("_bounds_json", [](const std::string& ratio, double x_min, double x_max,
                           std::size_t points) {
    GridSpec grid;
    grid.x_min = x_min;
    grid.x_max = x_max;
    grid.points = points;
    py::gil_scoped_release release;
    return report_json(run_bounds(ratio, grid));
  });
}
