#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maxtsp/cycle_cover.hpp"
#include "maxtsp/driver.hpp"
#include "maxtsp/error.hpp"
#include "maxtsp/exact.hpp"
#include "maxtsp/gluing.hpp"
#include "maxtsp/instance.hpp"
#include "maxtsp/matching.hpp"
#include "maxtsp/merge.hpp"

namespace py = pybind11;
using namespace maxtsp;

namespace {

py::tuple solution(SolveResult r) {
  return py::make_tuple(std::move(r.tour), std::move(r.certificate));
}

py::dict report_dict(const ValidationReport& report) {
  py::dict d;
  d["passed"] = report.passed;
  d["tolerance"] = report.tolerance;
  py::list sym;
  for (const auto& s : report.symmetry) sym.append(py::make_tuple(s.i, s.j, s.magnitude));
  d["symmetry"] = sym;
  d["nonzero_diagonal"] = report.nonzero_diagonal;
  d["negative_entries"] = report.negative_entries;
  if (report.worst_triangle) {
    const auto& t = *report.worst_triangle;
    d["worst_triangle"] = py::make_tuple(t.i, t.j, t.via, t.magnitude);
  } else {
    d["worst_triangle"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Metric maximum TSP solvers";

  auto base = py::register_exception<Error>(m, "MaxTspError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<MetricError>(m, "MetricError", base.ptr());
  py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", base.ptr());

  py::class_<Instance>(m, "Instance")
      .def(py::init([](const std::vector<std::vector<double>>& rows,
                       std::optional<double> dim_hint) {
             return Instance::from_rows(rows, dim_hint);
           }),
           py::arg("rows"), py::arg("dim_hint") = py::none())
      .def_static(
          "from_points",
          [](std::vector<std::vector<double>> coords, const std::string& norm,
             std::optional<double> dim_hint) {
            PointSet pts{parse_norm(norm), coords.empty() ? 0 : coords.front().size(),
                         std::move(coords)};
            return Instance::from_points(std::move(pts), dim_hint);
          },
          py::arg("coords"), py::arg("norm") = "euclidean", py::arg("dim_hint") = py::none())
      .def("__len__", &Instance::size)
      .def("dist", &Instance::dist)
      .def_property_readonly("dim_hint", [](const Instance& i) { return i.dim_hint(); })
      .def_property_readonly("max_distance", &Instance::max_distance)
      .def("rows",
           [](const Instance& inst) {
             std::vector<std::vector<double>> rows(inst.size());
             for (std::size_t i = 0; i < inst.size(); ++i) {
               for (std::size_t j = 0; j < inst.size(); ++j) {
                 rows[i].push_back(inst(static_cast<Vertex>(i), static_cast<Vertex>(j)));
               }
             }
             return rows;
           })
      .def("serialize", [](const Instance& inst) { return serialize(inst); })
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; });

  py::class_<CycleCover>(m, "CycleCover")
      .def_readonly("cycles", &CycleCover::cycles)
      .def_readonly("weight", &CycleCover::weight)
      .def("__len__", &CycleCover::size);

  py::class_<Tour>(m, "Tour")
      .def_readonly("order", &Tour::order)
      .def_readonly("weight", &Tour::weight)
      .def("__repr__", [](const Tour& t) {
        return "<Tour n=" + std::to_string(t.order.size()) + " weight=" +
               format_double(t.weight) + ">";
      });

  py::class_<Certificate>(m, "Certificate")
      .def_property_readonly("branch", [](const Certificate& c) { return std::string(to_string(c.branch)); })
      .def_readonly("epsilon", &Certificate::epsilon)
      .def_readonly("delta", &Certificate::delta)
      .def_readonly("dim", &Certificate::dim)
      .def_readonly("n_threshold", &Certificate::n_threshold)
      .def_readonly("n", &Certificate::n)
      .def_readonly("k_initial", &Certificate::k_initial)
      .def_readonly("k_after_gluing", &Certificate::k_after_gluing)
      .def_readonly("gluings", &Certificate::gluings)
      .def_readonly("weight_cover", &Certificate::weight_cover)
      .def_readonly("weight_after_gluing", &Certificate::weight_after_gluing)
      .def_readonly("weight_tour", &Certificate::weight_tour)
      .def_readonly("claimed_bound", &Certificate::claimed_bound)
      .def_readonly("claimed_error", &Certificate::claimed_error)
      .def_readonly("posterior_bound", &Certificate::posterior_bound)
      .def_readonly("closed_form_bound", &Certificate::closed_form_bound)
      .def_readonly("r_tau", &Certificate::r_tau)
      .def_readonly("t_min", &Certificate::t_min)
      .def_readonly("certified", &Certificate::certified)
      .def_readonly("note", &Certificate::note)
      .def("observed_ratio", &Certificate::observed_ratio)
      .def("to_text", &Certificate::to_text);

  m.def("load_instance", [](const std::string& text) { return load_instance(text); },
        py::arg("text"));
  m.def("parse_instance", [](const std::string& text) { return parse_instance(text); },
        py::arg("text"));
  m.def("validate_metric",
        [](const Instance& inst, double tol) { return report_dict(validate_metric(inst, tol)); },
        py::arg("instance"), py::arg("tol") = kDefaultMetricTolerance);
  m.def(
      "generate",
      [](const std::string& family, std::size_t n, std::size_t d, std::uint64_t seed,
         double scale) {
        return generate(GeneratorSpec{parse_family(family), n, d, seed, scale});
      },
      py::arg("family"), py::arg("n"), py::arg("d") = 2, py::arg("seed") = 0,
      py::arg("scale") = 1.0);
  m.def("estimate_doubling", &estimate_doubling, py::arg("instance"), py::arg("levels") = 8);

  m.def(
      "max_weight_perfect_matching",
      [](int num_vertices, const std::vector<std::tuple<int, int, double>>& edges) {
        WeightedGraph g{num_vertices, {}};
        for (const auto& [u, v, w] : edges) g.add_edge(u, v, w);
        Matching mt = max_weight_perfect_matching(g);
        return py::make_tuple(mt.pairs, mt.weight);
      },
      py::arg("num_vertices"), py::arg("edges"));

  m.def("max_weight_cycle_cover", &max_weight_cycle_cover, py::arg("instance"));
  m.def("serdyukov_combine", &serdyukov_combine, py::arg("instance"), py::arg("cover"));
  m.def("held_karp_max", [](const Instance& inst) { return held_karp_max(inst); },
        py::arg("instance"));
  m.def("brute_force_tour", &brute_force_tour, py::arg("instance"));
  m.def("minmax_transform", &minmax_transform, py::arg("instance"));

  m.def(
      "algorithm_a",
      [](const Instance& inst, double delta, std::optional<double> dim) {
        return solution(algorithm_a_solve(inst, delta, dim));
      },
      py::arg("instance"), py::arg("delta"), py::arg("dim") = py::none());
  m.def(
      "eptas",
      [](const Instance& inst, double epsilon, double dim) {
        return solution(eptas(inst, epsilon, dim));
      },
      py::arg("instance"), py::arg("epsilon"), py::arg("dim"));
  m.def(
      "asymptotic",
      [](const Instance& inst, double dim) { return solution(asymptotic(inst, dim)); },
      py::arg("instance"), py::arg("dim"));
  m.def("exact", [](const Instance& inst) { return solution(exact(inst)); },
        py::arg("instance"));
  m.def("five_sixths", [](const Instance& inst) { return solution(five_sixths(inst)); },
        py::arg("instance"));
}
