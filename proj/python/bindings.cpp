#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "spinecensus/census.hpp"
#include "spinecensus/cli.hpp"
#include "spinecensus/errors.hpp"
#include "spinecensus/io.hpp"
#include "spinecensus/reduction.hpp"
#include "spinecensus/triangulation.hpp"

namespace py = pybind11;
using namespace spinecensus;

namespace {

RegularGraph graph_from_pairs(int n, const std::vector<DartPair>& pairs) { return build_graph(n, pairs); }

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status;
    {
        py::gil_scoped_release release;
        status = cli::main(args, out, err);
    }
    return py::make_tuple(status, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_spinecensus, m) {
    m.doc() = "Oriented special spines over 4-regular graphs";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DegreeError>(m, "DegreeError", base.ptr());
    py::register_exception<SelfPairError>(m, "SelfPairError", base.ptr());
    py::register_exception<LimitError>(m, "LimitError", base.ptr());
    py::register_exception<DisconnectedError>(m, "DisconnectedError", base.ptr());
    py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
    py::register_exception<NonCoherentTraceError>(m, "NonCoherentTraceError", base.ptr());
    py::register_exception<UnknownEdgeError>(m, "UnknownEdgeError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<ConstructionFailure>(m, "ConstructionFailure", base.ptr());
    py::register_exception<ReductionFailure>(m, "ReductionFailure", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<ParityError>(m, "ParityError", base.ptr());

    py::class_<RegularGraph>(m, "RegularGraph")
        .def(py::init(&graph_from_pairs), py::arg("n"), py::arg("pairs"))
        .def_property_readonly("vertex_count", &RegularGraph::vertex_count)
        .def_property_readonly("edge_count", &RegularGraph::edge_count)
        .def("partner", &RegularGraph::partner)
        .def("pairs", &RegularGraph::pairs)
        .def("multiplicity_matrix", &RegularGraph::multiplicity_matrix)
        .def("is_simple", &RegularGraph::is_simple)
        .def("is_connected", [](const RegularGraph& g) { return is_connected(g); })
        .def("canonical_code", [](const RegularGraph& g) { return canonical_form(g).hex(); })
        .def("to_json", [](const RegularGraph& g) { return io::to_json(g).dump(); })
        .def_static("from_json", [](const std::string& s) { return io::graph_from_json(io::parse(s)); })
        .def(py::self == py::self)
        .def("__repr__", [](const RegularGraph& g) {
            return "<RegularGraph n=" + std::to_string(g.vertex_count()) + ">";
        });

    m.def("graph_from_multiplicities", &graph_from_multiplicities, py::arg("matrix"));
    m.def("enumerate_A", [](int n) { return enumerate_A(n); }, py::arg("n"));
    m.def("enumerate_C", [](int n) { return enumerate_C(n); }, py::arg("n"));

    py::class_<Spine>(m, "Spine")
        .def(py::init(&build_spine), py::arg("graph"), py::arg("chirality"), py::arg("gluing"))
        .def_property_readonly("graph", &Spine::graph)
        .def_property_readonly("chirality", &Spine::chirality)
        .def_property_readonly("gluing", &Spine::gluing)
        .def("cell_count", [](const Spine& s) { return count_cells(s); })
        .def("cells", [](const Spine& s) {
            std::vector<std::vector<std::tuple<int, int, int>>> out;
            for (auto& cell : trace_cells(s).cells) {
                auto& c = out.emplace_back();
                for (auto& t : cell) c.emplace_back(t.edge, t.direction, t.page);
            }
            return out;
        })
        .def("rotate", [](const Spine& s, int edge) { return rotate_edge(s, edge); }, py::arg("edge"))
        .def("canonical_code", [](const Spine& s) { return canonical_spine(s).hex(); })
        .def("edge_classes", [](const Spine& s) { return count_edge_classes(to_triangulation(s)); })
        .def("triangulation_json", [](const Spine& s) { return io::to_json(to_triangulation(s)).dump(); })
        .def_static("from_triangulation_json",
                    [](const std::string& s) { return from_triangulation(io::table_from_json(io::parse(s))); })
        .def("to_json", [](const Spine& s) { return io::to_json(s).dump(); })
        .def_static("from_json", [](const std::string& s) { return io::spine_from_json(io::parse(s)); })
        .def(py::self == py::self);

    m.def("seed_spine", &seed_spine, py::arg("graph"));
    m.def(
        "minimize_cells",
        [](const Spine& start) {
            auto r = minimize_cells(start);
            return py::make_tuple(r.spine, r.cell_count, io::to_json(r.trace).dump());
        },
        py::arg("start"), "Returns (spine, cell count, trace JSON).");
    m.def(
        "exhaustive_min_cells", [](const RegularGraph& g) { return exhaustive_min_cells(g).min_cells; },
        py::arg("graph"));
    m.def("insert_loop_vertex", &insert_loop_vertex, py::arg("spine"), py::arg("edge"));
    m.def("find_gluing_edge", &find_gluing_edge, py::arg("spine"));

    m.def(
        "census_one_cell",
        [](int n, int jobs) {
            CensusOptions options;
            options.jobs = jobs;
            CensusResult r;
            {
                py::gil_scoped_release release;
                r = census_one_cell(n, options);
            }
            std::vector<Spine> spines;
            for (auto& rec : r.records) spines.push_back(rec.spine);
            return py::make_tuple(spines, r.anomalies.size());
        },
        py::arg("n"), py::arg("jobs") = 1, "Returns (one-cell spines, anomaly count).");
    m.def(
        "bounds_table",
        [](int from, int to) {
            std::vector<std::string> rows;
            for (auto& r : bounds_table(from, to)) rows.push_back(io::to_json(r).dump());
            return rows;
        },
        py::arg("n_from"), py::arg("n_to"), "Rows as JSON strings.");
    m.def("bollobas_ln_estimate", &bollobas_ln_estimate, py::arg("r"), py::arg("n"));
    m.def("bollobas_ln_exact", &bollobas_ln_exact, py::arg("r"), py::arg("n"));
    m.def("asymptotic_residual", &asymptotic_residual, py::arg("n"));
    m.def("run_cli", &run_cli, py::arg("args"), "Returns (exit status, stdout text, stderr text).");
}
