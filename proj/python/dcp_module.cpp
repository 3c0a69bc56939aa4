#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dcp/baselines.hpp"
#include "dcp/errors.hpp"
#include "dcp/graph.hpp"
#include "dcp/io.hpp"
#include "dcp/likelihood.hpp"
#include "dcp/mcstats.hpp"
#include "dcp/methods.hpp"
#include "dcp/metrics.hpp"
#include "dcp/synth.hpp"

namespace py = pybind11;
using namespace dcp;

namespace {

Partition to_partition(const DirectedGraph& g, const std::vector<int>& labels, int k) {
    if (labels.size() != g.n()) throw Error("labels must have one entry per vertex");
    return Partition{labels, k};
}

py::dict fit_dict(const LikelihoodFit& f) {
    py::dict d;
    d["log_lik"] = f.log_lik;
    d["p1"] = f.p1;
    d["p2"] = f.p2;
    d["swapped"] = f.swapped;
    return d;
}

py::dict detect(const DirectedGraph& g, const std::string& method, std::uint64_t seed, std::optional<double> tol,
                std::optional<int> restarts) {
    const Detector det = make_detector(method, MethodOverrides{tol, restarts});
    DetectionResult r;
    {
        py::gil_scoped_release release;
        r = det(g, seed);
    }
    py::dict d;
    d["method"] = r.diagnostics.method;
    d["seed"] = seed;
    d["labels"] = r.partition.labels;
    const LabelScheme scheme = method == "bowtie" ? LabelScheme::BowTie : LabelScheme::Dcp4;
    std::vector<std::string> names;
    for (int l : r.partition.labels) names.push_back(label_name(l, scheme));
    d["names"] = names;
    d["scores"] = r.scores.raw;
    d["normalized_scores"] = r.scores.normalized;
    if (method != "bowtie") d["fit"] = fit_dict(r.fit);
    d["iterations"] = r.diagnostics.iterations;
    d["converged"] = r.diagnostics.converged;
    d["fallback_used"] = r.diagnostics.fallback_used;
    return d;
}

}  // namespace

PYBIND11_MODULE(dcp, m) {
    m.doc() = "Directed core-periphery detection";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<DirectedGraph>(m, "Graph")
        .def(py::init([](std::size_t n, std::vector<Edge> edges, std::vector<std::string> names) {
                 return DirectedGraph(n, std::move(edges), std::move(names));
             }),
             py::arg("n"), py::arg("edges"), py::arg("names") = std::vector<std::string>{})
        .def_static("from_edge_list", [](const std::string& text) { return from_edge_list(text); }, py::arg("text"))
        .def_static("read", [](const std::string& path) { return read_edge_list(path); }, py::arg("path"))
        .def_property_readonly("n", &DirectedGraph::n)
        .def_property_readonly("m", &DirectedGraph::m)
        .def_property_readonly("edges", &DirectedGraph::edges)
        .def("name", &DirectedGraph::name)
        .def("has_edge", &DirectedGraph::has_edge)
        .def("density", &DirectedGraph::density)
        .def("to_edge_list", [](const DirectedGraph& g) { return to_edge_list(g); })
        .def("largest_wcc", [](const DirectedGraph& g) {
            Subgraph s = largest_weakly_connected_component(g);
            return py::make_tuple(std::move(s.graph), std::move(s.original));
        })
        .def("__repr__", [](const DirectedGraph& g) {
            return "<dcp.Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + ">";
        });

    m.def("methods", &method_ids);
    m.def("detect", &detect, py::arg("graph"), py::arg("method") = "advhits", py::arg("seed") = 0,
          py::arg("tol") = std::nullopt, py::arg("restarts") = std::nullopt);

    m.def(
        "sample_one_param",
        [](double p, std::vector<std::size_t> sizes, std::uint64_t seed) {
            PlantedGraph pg = sample_one_param(p, sizes, seed);
            return py::make_tuple(std::move(pg.graph), std::move(pg.planted.labels));
        },
        py::arg("p"), py::arg("sizes"), py::arg("seed") = 0);
    m.def(
        "sample_sbm",
        [](std::vector<std::size_t> sizes, double p1, double p2, std::uint64_t seed, const std::string& structure) {
            PlantedGraph pg = sample_sbm(catalog(structure), SbmParams{std::move(sizes), p1, p2}, seed);
            return py::make_tuple(std::move(pg.graph), std::move(pg.planted.labels));
        },
        py::arg("sizes"), py::arg("p1"), py::arg("p2"), py::arg("seed") = 0, py::arg("structure") = "DCP4");
    m.def("sample_er", &sample_er, py::arg("n"), py::arg("p"), py::arg("seed") = 0);

    m.def("ari", [](const std::vector<int>& x, const std::vector<int>& y) { return ari(x, y); });
    m.def("nmi", [](const std::vector<int>& x, const std::vector<int>& y) { return nmi(x, y); });
    m.def("voi", [](const std::vector<int>& x, const std::vector<int>& y) { return voi(x, y); });

    m.def(
        "log_likelihood",
        [](const DirectedGraph& g, const std::vector<int>& labels, const std::string& structure) {
            const BlockStructure s = catalog(structure);
            return fit_dict(log_likelihood(g, to_partition(g, labels, s.k), s));
        },
        py::arg("graph"), py::arg("labels"), py::arg("structure") = "DCP4");
    m.def(
        "l_shape_statistic",
        [](const DirectedGraph& g, const std::vector<int>& labels) {
            const LShape s = l_shape_statistic(g, to_partition(g, labels, 4));
            py::dict d;
            d["stat"] = s.stat;
            d["d_in"] = s.d_in;
            d["d_out"] = s.d_out;
            d["naming"] = s.naming;
            return d;
        },
        py::arg("graph"), py::arg("labels"));
    m.def(
        "mctest",
        [](const DirectedGraph& g, const std::string& method, const std::string& null, int reps, std::uint64_t seed,
           int workers) {
            if (null != "er" && null != "config") throw Error("null must be 'er' or 'config'");
            McOptions opt;
            opt.reps = reps;
            opt.seed = seed;
            opt.method_seed = seed;
            opt.workers = workers;
            McTestResult r;
            {
                py::gil_scoped_release release;
                r = monte_carlo_test(g, make_detector(method), method, null == "er" ? NullModel::ER : NullModel::Config,
                                     opt);
            }
            py::dict d;
            d["observed_stat"] = r.observed_stat;
            d["null_stats"] = r.null_stats;
            d["p_value"] = r.p_value;
            d["retries"] = r.retries;
            return d;
        },
        py::arg("graph"), py::arg("method") = "hits", py::arg("null") = "er", py::arg("reps") = 250,
        py::arg("seed") = 0, py::arg("workers") = 1);
    m.def(
        "bowtie", [](const DirectedGraph& g) { return bowtie(g).labels; }, py::arg("graph"));
}
