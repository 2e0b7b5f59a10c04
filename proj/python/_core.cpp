#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "degpen/bounds.hpp"
#include "degpen/correlation.hpp"
#include "degpen/embedding.hpp"
#include "degpen/error.hpp"
#include "degpen/generator.hpp"
#include "degpen/graph.hpp"
#include "degpen/powerlaw.hpp"
#include "degpen/reconstruct.hpp"
#include "degpen/skipgram.hpp"
#include "degpen/spectral.hpp"
#include "degpen/tasks.hpp"
#include "degpen/walker.hpp"

namespace py = pybind11;
using namespace degpen;

namespace {

using Matrix = py::array_t<double, py::array::c_style | py::array::forcecast>;

py::array_t<double> to_numpy(const Embedding& e) {
    py::array_t<double> out({e.rows(), e.dim()});
    std::copy(e.values().begin(), e.values().end(), out.mutable_data());
    return out;
}

Embedding from_numpy(const Matrix& values, std::vector<Label> labels) {
    if (values.ndim() != 2) throw Error("embedding must be a 2-d array");
    const auto n = static_cast<std::size_t>(values.shape(0)), k = static_cast<std::size_t>(values.shape(1));
    if (labels.empty()) {
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = i;
    }
    return Embedding(n, k, std::vector<double>(values.data(), values.data() + n * k), std::move(labels));
}

py::dict correlations_dict(const DegreeCorrelations& c) {
    py::dict d;
    d["pearson"] = c.pearson;
    d["spearman"] = c.spearman;
    d["kendall"] = c.kendall;
    d["defined"] = c.defined;
    return d;
}

py::dict fit_dict(const PowerLawFit& f) {
    py::dict d;
    d["alpha"] = f.alpha;
    d["d_min"] = f.d_min;
    d["ks"] = f.ks;
    d["n_tail"] = f.n_tail;
    return d;
}

py::dict task_dict(const TaskReport& r) {
    py::dict d;
    d["precision"] = r.precision;
    d["recall"] = r.recall;
    d["f1"] = r.f1;
    d["accuracy"] = r.accuracy;
    d["per_class_accuracy"] = r.per_class_accuracy;
    d["train_size"] = r.train_size;
    d["test_size"] = r.test_size;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Degree-penalized graph embeddings";

    // Translators run newest first, so the base class goes first.
    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def_static(
            "from_edges",
            [](std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
                return Graph::from_edges(n, edges);
            },
            py::arg("n"), py::arg("edges"))
        .def_static("load", &load_edge_list_file, py::arg("path"))
        .def("save", [](const Graph& g, const std::string& path) { write_edge_list_file(path, g); }, py::arg("path"))
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def_property_readonly("degrees",
                               [](const Graph& g) { return std::vector<std::uint32_t>(g.degrees().begin(), g.degrees().end()); })
        .def_property_readonly("labels",
                               [](const Graph& g) { return std::vector<Label>(g.labels().begin(), g.labels().end()); })
        .def("neighbors",
             [](const Graph& g, VertexId v) {
                 if (v >= g.num_vertices()) throw py::index_error("vertex out of range");
                 return std::vector<VertexId>(g.neighbors(v).begin(), g.neighbors(v).end());
             })
        .def("has_edge", &Graph::has_edge)
        .def("edges", &Graph::edge_list)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) + ">";
        });

    m.def(
        "generate_pa", [](std::size_t n, std::size_t m_, std::uint64_t seed) { return generate_pa({n, m_, seed}); },
        py::arg("n"), py::arg("m"), py::arg("seed") = 0, "Barabasi-Albert preferential-attachment graph.");

    m.def(
        "embed_spectral",
        [](const Graph& g, std::size_t k, double beta, const std::string& mode, double tol, std::uint64_t seed) {
            SpectralConfig cfg;
            cfg.k = k;
            cfg.beta = beta;
            cfg.tol = tol;
            cfg.seed = seed;
            if (mode == "le") cfg.mode = SpectralMode::Laplacian;
            else if (mode != "dp") throw Error("mode must be 'dp' or 'le'");
            SpectralResult r;
            {
                py::gil_scoped_release release;
                r = embed_spectral(g, cfg);
            }
            py::dict d;
            d["embedding"] = to_numpy(r.embedding);
            d["eigenvalues"] = r.eigenvalues;
            d["residuals"] = r.residuals;
            d["trivial_eigenvalue"] = r.trivial_eigenvalue;
            return d;
        },
        py::arg("graph"), py::arg("k") = 200, py::arg("beta") = 1.0, py::arg("mode") = "dp", py::arg("tol") = 1e-8,
        py::arg("seed") = 0,
        "Spectral embedding; mode 'dp' uses degree-penalized weights, 'le' plain Laplacian eigenmaps.");

    m.def(
        "embed_walker",
        [](const Graph& g, std::size_t k, double beta, const std::string& mode, std::size_t walks,
           std::size_t walk_length, std::size_t window, std::size_t epochs, std::uint64_t seed, std::size_t threads) {
            WalkConfig wc;
            wc.walks_per_vertex = walks;
            wc.walk_length = walk_length;
            wc.beta = beta;
            wc.seed = seed;
            wc.threads = threads;
            if (mode == "deepwalk") wc.mode = WalkMode::Uniform;
            else if (mode != "dp") throw Error("mode must be 'dp' or 'deepwalk'");
            SkipGramConfig sc;
            sc.k = k;
            sc.window = window;
            sc.epochs = epochs;
            sc.seed = derive_seed(seed, {1});
            WalkerResult r;
            {
                py::gil_scoped_release release;
                r = embed_walker(g, wc, sc);
            }
            return to_numpy(r.embedding);
        },
        py::arg("graph"), py::arg("k") = 200, py::arg("beta") = 1.0, py::arg("mode") = "dp", py::arg("walks") = 10,
        py::arg("walk_length") = 40, py::arg("window") = 5, py::arg("epochs") = 1, py::arg("seed") = 0,
        py::arg("threads") = 1, "Random-walk embedding trained with hierarchical-softmax skip-gram.");

    m.def(
        "transition_distribution",
        [](const Graph& g, double beta, VertexId v) { return transition_distribution(g, beta, v); },
        py::arg("graph"), py::arg("beta"), py::arg("vertex"), "Exact next-step law of the degree-penalized walk.");

    m.def(
        "reconstruct_degrees",
        [](const Matrix& emb, double epsilon) { return reconstruct_degrees(from_numpy(emb, {}), epsilon); },
        py::arg("embedding"), py::arg("epsilon"), "Degrees of the graph with p_ij >= epsilon.");

    m.def(
        "sweep_epsilon",
        [](const Matrix& emb, const Graph& g, std::vector<Label> labels) {
            if (labels.empty()) labels.assign(g.labels().begin(), g.labels().end());
            auto s = sweep_epsilon(from_numpy(emb, std::move(labels)), g);
            py::dict d;
            d["epsilon"] = s.best.epsilon;
            d["degrees"] = s.best.degrees;
            d["edge_count"] = s.best.edge_count;
            d["degenerate"] = s.degenerate;
            d.attr("update")(correlations_dict(s.best.correlations));
            py::list table;
            for (const auto& row : s.table) {
                auto r = correlations_dict(row.correlations);
                r["epsilon"] = row.epsilon;
                r["edge_count"] = row.edge_count;
                table.append(r);
            }
            d["table"] = table;
            return d;
        },
        py::arg("embedding"), py::arg("graph"), py::arg("labels") = std::vector<Label>{},
        "Best-Pearson reconstruction over the epsilon grid. Rows follow the graph's vertex order unless labels are given.");

    m.def(
        "degree_correlations",
        [](const std::vector<double>& a, const std::vector<double>& b) {
            return correlations_dict(degree_correlations(a, b));
        },
        py::arg("original"), py::arg("reconstructed"));

    m.def(
        "fit_power_law", [](const std::vector<double>& d) { return fit_dict(fit_power_law(d)); }, py::arg("degrees"),
        "Discrete power-law MLE with d_min chosen by K-S distance.");

    m.def(
        "sphere_bounds",
        [](std::size_t k) {
            auto r = sphere_bounds(k);
            py::dict d;
            d["k"] = r.k;
            d["lower"] = r.lower.exact ? py::cast(*r.lower.exact) : py::cast(r.lower.approx());
            d["upper"] = r.upper.exact ? py::cast(*r.upper.exact) : py::cast(r.upper.approx());
            d["lower_log2"] = r.lower.log2;
            d["upper_log2"] = r.upper.log2;
            d["upper_valid"] = r.upper_valid;
            return d;
        },
        py::arg("k"));

    m.def(
        "link_prediction",
        [](const Matrix& emb, const Graph& g, double fraction, std::uint64_t seed, std::vector<Label> labels) {
            if (labels.empty()) labels.assign(g.labels().begin(), g.labels().end());
            LinkPredictionConfig cfg;
            cfg.sample_fraction = fraction;
            cfg.seed = seed;
            return task_dict(link_prediction_eval(from_numpy(emb, std::move(labels)), g, cfg));
        },
        py::arg("embedding"), py::arg("graph"), py::arg("fraction") = 0.01, py::arg("seed") = 0,
        py::arg("labels") = std::vector<Label>{});

    m.def(
        "classify",
        [](const Matrix& emb, const std::map<Label, int>& classes, std::uint64_t seed, std::vector<Label> labels) {
            ClassificationConfig cfg;
            cfg.seed = seed;
            return task_dict(vertex_classification_eval(from_numpy(emb, std::move(labels)), classes, cfg));
        },
        py::arg("embedding"), py::arg("classes"), py::arg("seed") = 0, py::arg("labels") = std::vector<Label>{});

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs a degpen command; returns (exit code, stdout, stderr).");
}
