#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "genergy/coloring.hpp"
#include "genergy/enumerate.hpp"
#include "genergy/graph6.hpp"
#include "genergy/planarity.hpp"
#include "genergy/report.hpp"
#include "genergy/verify.hpp"

namespace py = pybind11;
using namespace genergy;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::int_ bigint_to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

py::dict profile_dict(const DegreeProfile& p) {
    py::dict d;
    d["order"] = p.order;
    d["size"] = p.size;
    d["max_degree"] = p.max_degree;
    d["min_degree"] = p.min_degree;
    d["avg_degree"] = p.avg_degree.value();
    d["avg_degree_exact"] = p.avg_degree.str();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "graph energy, adjacency spectra, lower bounds, and exhaustive conjecture scans";

    py::register_exception<graph6_error>(m, "Graph6Error", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("has_edge", &Graph::has_edge)
        .def("add_edge", &Graph::add_edge)
        .def("degree", &Graph::degree)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__",
             [](const Graph& g) { return "Graph(graph6='" + to_graph6(g) + "')"; });

    m.def("from_graph6", [](const std::string& s) { return from_graph6(s); });
    m.def("to_graph6", &to_graph6);
    m.def("path", &path);
    m.def("cycle", &cycle);
    m.def("complete", &complete);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("disjoint_union", &disjoint_union);

    m.def("degree_profile", [](const Graph& g) { return profile_dict(degree_profile(g)); });
    m.def("is_connected", &is_connected);
    m.def("is_bipartite", &is_bipartite);
    m.def("is_regular", [](const Graph& g) -> py::object {
        auto k = is_regular(g);
        return k ? py::cast(*k) : py::none();
    });
    m.def("chromatic_number", &chromatic_number);
    m.def("is_planar", &is_planar);

    m.def("eigenvalues", [](const Graph& g) { return eigenvalues(g).eigenvalues; });
    m.def("energy", [](const Graph& g) { return energy(g); });
    m.def("exact_determinant",
          [](const Graph& g) { return bigint_to_py(exact_determinant(g).value); });
    m.def("is_nonsingular", &is_nonsingular);
    m.def("char_poly", [](const Graph& g) {
        py::list out;
        for (const BigInt& c : char_poly(g).coefficients) out.append(bigint_to_py(c));
        return out;
    });

    m.def("bound_log", &bound_log);
    m.def("bound_amgm", &bound_amgm);
    m.def("bound_variance", &bound_variance);
    m.def("quantity_c", &quantity_c);
    m.def("bound_conjugate", &bound_conjugate);
    m.def("bound_report",
          [](const Graph& g) { return json_to_py(report_to_json(make_report(g))); });

    m.def("canonical_form", &canonical_form);
    m.def("generate_all", &generate_all);
    m.def(
        "scan",
        [](int n, int workers, bool allow_long) {
            ScanOptions opt;
            opt.workers = workers;
            opt.allow_long_runs = allow_long;
            EnumerationSummary s;
            {
                py::gil_scoped_release release;
                s = scan_order(n, opt);
            }
            return json_to_py(summary_to_json(s));
        },
        py::arg("n"), py::arg("workers") = 1, py::arg("allow_long") = false);
    m.def(
        "scan_graph6_lines",
        [](const std::string& text, bool strict) {
            std::istringstream in(text);
            ScanOptions opt;
            opt.strict_parse = strict;
            auto result = scan_stream(in, opt);
            py::dict d;
            d["summary"] = json_to_py(summary_to_json(result.summary));
            py::list errors;
            for (const auto& [line, msg] : result.ingest.errors)
                errors.append(py::make_tuple(line, msg));
            d["errors"] = errors;
            return d;
        },
        py::arg("text"), py::arg("strict") = false);

    m.def("run_property_suite", [](int grid_points) {
        py::list out;
        for (const auto& r : run_property_suite(grid_points)) {
            py::dict d;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    });
}
