#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "tilebalance/analyzer.hpp"
#include "tilebalance/catalog.hpp"
#include "tilebalance/cli.hpp"
#include "tilebalance/error.hpp"
#include "tilebalance/geometry.hpp"
#include "tilebalance/periodic_map.hpp"

namespace py = pybind11;
using namespace tilebalance;

namespace {

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(r.str());
}

py::dict fraction_map(const std::map<int, Rational>& m) {
    py::dict d;
    for (const auto& [k, r] : m) d[py::int_(k)] = fraction(r);
    return d;
}

py::dict stats_dict(const LimitStats& s) {
    py::dict d;
    d["t"] = fraction_map(s.t);
    d["v_j"] = fraction_map(s.v);
    d["v"] = fraction(s.vertices_per_tile);
    d["e"] = fraction(s.edges_per_tile);
    d["w"] = fraction_map(s.w);
    d["avg_valence"] = fraction(s.average_valence());
    d["avg_adjacents"] = fraction(s.average_adjacents());
    d["corners"] = s.corners;
    d["edge_to_edge"] = s.edge_to_edge;
    return d;
}

py::dict census_dict(const PatchCensus& c) {
    py::dict d;
    d["vertices"] = c.vertices;
    d["edges"] = c.edges;
    d["tiles"] = c.tiles;
    d["euler"] = c.euler();
    d["tiles_by_adjacents"] = c.tiles_by_adjacents;
    d["vertices_by_valence"] = c.vertices_by_valence;
    return d;
}

py::dict check_dict(const CheckResult& c) {
    py::dict d;
    d["check_id"] = c.check_id;
    d["applicable"] = c.applicable;
    d["passed"] = c.passed;
    d["lhs"] = c.lhs;
    d["rhs"] = c.rhs;
    d["note"] = c.note;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact census statistics for doubly periodic tilings";

    py::register_exception<TilingError>(m, "TilingError", PyExc_ValueError);

    py::class_<TilingTemplate>(m, "Template")
        .def_readonly("name", &TilingTemplate::name)
        .def_readonly("type_label", &TilingTemplate::type_label)
        .def_property_readonly("tile_count", [](const TilingTemplate& t) { return t.tiles.size(); })
        .def("to_json", &serialize_template)
        .def("__repr__", [](const TilingTemplate& t) { return "<Template " + t.name + ">"; });

    py::class_<PeriodicTiling>(m, "Tiling")
        .def(py::init(&build_periodic_tiling), py::arg("template"))
        .def_property_readonly("name", &PeriodicTiling::name)
        .def_property_readonly("type_label", &PeriodicTiling::type_label)
        .def_property_readonly("tile_count", &PeriodicTiling::tile_count)
        .def_property_readonly("vertex_count", &PeriodicTiling::vertex_count)
        .def_property_readonly("edge_to_edge", [](const PeriodicTiling& t) { return is_edge_to_edge(t); })
        .def_property_readonly("circumradius_bound", [](const PeriodicTiling& t) { return circumradius_bound(t); })
        .def_property_readonly("default_center", [](const PeriodicTiling& t) {
            const Vec2 c = default_center(t);
            return py::make_tuple(c.x, c.y);
        })
        .def("limit_stats", [](const PeriodicTiling& t) { return stats_dict(limit_stats(t)); })
        .def("quotient_counts",
             [](const PeriodicTiling& t) {
                 const QuotientCensus q = quotient_counts(t);
                 py::dict d;
                 d["vertices"] = q.vertices;
                 d["edges"] = q.edges;
                 d["tiles"] = q.tiles;
                 d["tiles_by_adjacents"] = q.tiles_by_adjacents;
                 d["vertices_by_valence"] = q.vertices_by_valence;
                 return d;
             })
        .def("bounds",
             [](const PeriodicTiling& t) {
                 const BoundsReport b = validate_geometry(t);
                 return py::make_tuple(b.inradius, b.circumradius);
             })
        .def(
            "patch_census",
            [](const PeriodicTiling& t, double radius, std::optional<std::pair<double, double>> center) {
                const Vec2 c = center ? Vec2{center->first, center->second} : default_center(t);
                const Patch p = patch(t, {c, radius});
                py::dict d = census_dict(patch_census(p, t));
                d["f1"] = p.f1.size();
                d["f2"] = p.f2.size();
                d["f3"] = p.f3.size();
                return d;
            },
            py::arg("radius"), py::arg("center") = py::none())
        .def("checks",
             [](const PeriodicTiling& t) {
                 py::list out;
                 for (const CheckResult& c : check_structure(t)) out.append(check_dict(c));
                 for (const CheckResult& c : run_all_checks(limit_stats(t))) out.append(check_dict(c));
                 return out;
             })
        .def("__repr__", [](const PeriodicTiling& t) { return "<Tiling " + t.name() + ">"; });

    m.def("catalog_names", &catalog_names);
    m.def("list_catalog", [] {
        py::list out;
        for (const CatalogEntry& e : list_catalog()) {
            py::dict d;
            d["name"] = e.name;
            d["type_label"] = e.type_label;
            d["edge_to_edge"] = e.edge_to_edge;
            d["tiles_per_domain"] = e.tiles_per_domain;
            out.append(d);
        }
        return out;
    });
    m.def("load_template", [](const std::string& source) { return load_template(source); }, py::arg("source"));
    m.def("parse_template", [](const std::string& text) { return parse_template(text); }, py::arg("text"));
    m.def("load", [](const std::string& source) { return build_periodic_tiling(load_template(source)); },
          py::arg("source"), "Loads and builds a catalog entry or template file.");
    m.def("table1_compare", [] {
        py::list out;
        for (const auto& [label, c] : table1_compare()) out.append(py::make_tuple(label, check_dict(c)));
        return out;
    });
    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
