#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include "degpen/bounds.hpp"
#include "degpen/error.hpp"
#include "degpen/generator.hpp"
#include "degpen/powerlaw.hpp"
#include "degpen/reconstruct.hpp"
#include "degpen/rng.hpp"
#include "degpen/skipgram.hpp"
#include "degpen/spectral.hpp"
#include "degpen/tasks.hpp"
#include "degpen/walker.hpp"

#ifndef DEGPEN_VERSION
#define DEGPEN_VERSION "dev"
#endif

namespace degpen::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Seed derivation. A run's --seed feeds every stage through these tags, so
// `embed --seed s` and the embed stage of `pipeline --seed s` agree.
constexpr std::uint64_t kSpectralStream = 2;
constexpr std::uint64_t kWalkStream = 3;
constexpr std::uint64_t kSkipGramStream = 4;
constexpr std::uint64_t kLinkStream = 5;
constexpr std::uint64_t kClassifyStream = 6;

struct EmbedOptions {
    std::string method = "dp-spectral";
    std::vector<double> betas{1.0};
    std::size_t dim = 200;
    std::size_t walks = 10;
    std::size_t walk_length = 40;
    std::size_t window = 5;
    std::size_t epochs = 1;
    double tol = 1e-8;
    std::size_t max_iter = 0;
    std::size_t threads = 1;
    bool deterministic = true;
    std::string corpus_out;
};

struct SweepOptions {
    double start = 0.01;
    double end = 1.0;
    double step = 0.01;
};

void add_embed_flags(CLI::App* app, EmbedOptions& o, bool multi_beta) {
    app->add_option("--method", o.method, "Embedding method")
        ->check(CLI::IsMember({"dp-spectral", "dp-walker", "le", "deepwalk"}))
        ->capture_default_str();
    if (multi_beta)
        app->add_option("--beta", o.betas, "Degree-penalty exponent(s); the best Pearson is kept")
            ->delimiter(',')
            ->capture_default_str();
    else
        app->add_option("--beta", o.betas.front(), "Degree-penalty exponent")->capture_default_str();
    app->add_option("--dim", o.dim, "Embedding dimension")->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--walks", o.walks, "Walks per vertex")->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--walk-length", o.walk_length, "Vertices per walk")
        ->check(CLI::Range(2, 1 << 30))
        ->capture_default_str();
    app->add_option("--window", o.window, "Skip-gram window")->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--epochs", o.epochs, "Skip-gram epochs")->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--tol", o.tol, "Eigensolver residual tolerance")->capture_default_str();
    app->add_option("--max-iter", o.max_iter, "Eigensolver operator applications (0 = 10 n)")
        ->capture_default_str();
    app->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app->add_flag("--deterministic,!--no-deterministic", o.deterministic,
                  "Single-worker reproducible skip-gram training")
        ->capture_default_str();
    app->add_option("--corpus-out", o.corpus_out, "Also write the walk corpus here");
}

void add_sweep_flags(CLI::App* app, SweepOptions& s) {
    app->add_option("--eps-start", s.start, "First epsilon of the sweep")->capture_default_str();
    app->add_option("--eps-end", s.end, "Last epsilon of the sweep")->capture_default_str();
    app->add_option("--eps-step", s.step, "Epsilon step")->capture_default_str();
}

json embed_json(const EmbedOptions& o) {
    return {{"method", o.method},       {"beta", o.betas},         {"dim", o.dim},
            {"walks", o.walks},         {"walk_length", o.walk_length}, {"window", o.window},
            {"epochs", o.epochs},       {"tol", o.tol},            {"max_iter", o.max_iter},
            {"threads", o.threads},     {"deterministic", o.deterministic}};
}

json sweep_json(const SweepOptions& s) { return {{"eps_start", s.start}, {"eps_end", s.end}, {"eps_step", s.step}}; }

bool is_walker(const std::string& method) { return method == "dp-walker" || method == "deepwalk"; }

struct EmbedOutcome {
    Embedding embedding;
    std::vector<std::string> notes;  // "key value" lines for reports
};

EmbedOutcome embed_graph(const Graph& g, const EmbedOptions& o, double beta, std::uint64_t seed) {
    EmbedOutcome out;
    if (is_walker(o.method)) {
        WalkConfig wc;
        wc.walks_per_vertex = o.walks;
        wc.walk_length = o.walk_length;
        wc.beta = beta;
        wc.seed = derive_seed(seed, {kWalkStream});
        wc.mode = o.method == "deepwalk" ? WalkMode::Uniform : WalkMode::DegreePenalty;
        wc.threads = o.threads;
        SkipGramConfig sc;
        sc.k = o.dim;
        sc.window = o.window;
        sc.epochs = o.epochs;
        sc.seed = derive_seed(seed, {kSkipGramStream});
        sc.deterministic = o.deterministic;
        sc.threads = o.threads;
        auto corpus = generate_walks(g, wc);
        if (!o.corpus_out.empty()) write_corpus_file(o.corpus_out, corpus);
        auto trained = train_skipgram(corpus, sc);
        out.embedding = std::move(trained.embedding);
        out.notes.push_back(fmt::format("walk_tokens {}", corpus.num_tokens()));
        for (std::size_t e = 0; e < trained.epoch_loss.size(); ++e)
            out.notes.push_back(fmt::format("epoch_{}_loss {:.17g}", e + 1, trained.epoch_loss[e]));
        out.notes.push_back(fmt::format("untrained_vertices {}", trained.untrained.size()));
    } else {
        SpectralConfig sc;
        sc.k = o.dim;
        sc.beta = beta;
        sc.tol = o.tol;
        sc.max_iter = o.max_iter;
        sc.mode = o.method == "le" ? SpectralMode::Laplacian : SpectralMode::DegreePenalty;
        sc.seed = derive_seed(seed, {kSpectralStream});
        auto res = embed_spectral(g, sc);
        out.embedding = std::move(res.embedding);
        double worst = 0.0;
        for (double r : res.residuals) worst = std::max(worst, r);
        out.notes.push_back(fmt::format("trivial_eigenvalue {:.17g}", res.trivial_eigenvalue));
        out.notes.push_back(fmt::format("smallest_eigenvalue {:.17g}", res.eigenvalues.front()));
        out.notes.push_back(fmt::format("largest_eigenvalue {:.17g}", res.eigenvalues.back()));
        out.notes.push_back(fmt::format("max_residual {:.3e}", worst));
        out.notes.push_back(fmt::format("operator_applications {}", res.matvecs));
    }
    return out;
}

std::vector<double> as_doubles(std::span<const std::uint32_t> v) { return {v.begin(), v.end()}; }

// Positive entries only; zero-degree vertices have no place in a power law.
std::vector<double> positive_degrees(std::span<const std::uint32_t> v) {
    std::vector<double> out;
    for (auto d : v)
        if (d > 0) out.push_back(d);
    return out;
}

void write_fit_section(std::ostream& out, const std::string& name, std::span<const double> degrees) {
    out << '[' << name << "]\n";
    try {
        write_fit(out, fit_power_law(degrees));
    } catch (const Error& e) {
        out << "status unfittable: " << e.what() << '\n';
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write '" + path + "'");
    f << text;
    if (!f) throw Error("failed writing '" + path + "'");
}

std::vector<double> read_degrees(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open degree file '" + path + "'");
    std::vector<double> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok) || tok.front() == '#') continue;
        std::size_t used = 0;
        double d = 0.0;
        try {
            d = std::stod(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw ParseError(lineno, "invalid degree '" + tok + "'");
        out.push_back(d);
    }
    return out;
}

struct Manifest {
    json doc;
    std::string path;  // empty: print to the error stream

    void emit(std::ostream& err) const {
        if (path.empty()) {
            err << doc.dump() << '\n';
        } else {
            write_text_file(path, doc.dump(2) + "\n");
        }
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degree-penalized network embedding toolkit"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.set_version_flag("--version", DEGPEN_VERSION);
    std::string log_level = "warn";
    app.add_option("--log-level", log_level, "trace, debug, info, warn, error or off")->capture_default_str();

    std::string manifest_path;
    std::uint64_t seed = 0;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "Seed for every random choice of the run")->capture_default_str();
        sub->add_option("--manifest", manifest_path, "Where to write the run manifest");
    };

    // generate
    PaConfig pa{1000, 5, 0};
    std::string gen_out;
    auto* gen = app.add_subcommand("generate", "Preferential-attachment graph as an edge list");
    gen->add_option("--n", pa.n, "Vertex count")->capture_default_str();
    gen->add_option("--m", pa.m, "Edges per arriving vertex")->capture_default_str();
    gen->add_option("--out", gen_out, "Output edge list")->required();
    common(gen);

    // embed
    EmbedOptions emb_opts;
    std::string emb_in, emb_out;
    auto* emb = app.add_subcommand("embed", "Learn an embedding of an edge-list graph");
    add_embed_flags(emb, emb_opts, false);
    emb->add_option("--in", emb_in, "Input edge list")->required()->check(CLI::ExistingFile);
    emb->add_option("--out", emb_out, "Output embedding")->required();
    common(emb);

    // reconstruct
    SweepOptions rec_sweep;
    std::string rec_emb, rec_graph, rec_out, rec_table, rec_edges;
    double rec_edges_eps = 0.0;
    auto* rec = app.add_subcommand("reconstruct", "Epsilon-NN reconstruction sweep of an embedding");
    rec->add_option("--emb", rec_emb, "Embedding file")->required()->check(CLI::ExistingFile);
    rec->add_option("--graph", rec_graph, "Original edge list")->required()->check(CLI::ExistingFile);
    rec->add_option("--out", rec_out, "Report output (stdout when omitted)");
    rec->add_option("--table-out", rec_table, "Sweep table CSV");
    rec->add_option("--edges-out", rec_edges, "Write the reconstructed edge list (small graphs)");
    rec->add_option("--edges-eps", rec_edges_eps, "Epsilon for --edges-out (default: the best one)");
    add_sweep_flags(rec, rec_sweep);
    common(rec);

    // fit
    std::string fit_graph, fit_degrees, fit_out;
    auto* fit = app.add_subcommand("fit", "Power-law fit and KS distance of a degree sequence");
    auto* fg = fit->add_option("--graph", fit_graph, "Fit the degrees of this edge list")->check(CLI::ExistingFile);
    auto* fd = fit->add_option("--degrees", fit_degrees, "Fit one degree per line")->check(CLI::ExistingFile);
    fg->excludes(fd);
    fit->add_option("--out", fit_out, "Report output (stdout when omitted)");
    common(fit);

    // bounds
    std::size_t bounds_dim = 0;
    std::string bounds_out;
    auto* bnd = app.add_subcommand("bounds", "Sphere-packing bounds on epsilon-ball neighbourhoods");
    bnd->add_option("--dim", bounds_dim, "Embedding dimension k")->required();
    bnd->add_option("--out", bounds_out, "Report output (stdout when omitted)");
    common(bnd);

    // linkpred
    LinkPredictionConfig lp_cfg;
    std::string lp_emb, lp_graph, lp_out;
    auto* lp = app.add_subcommand("linkpred", "Link prediction with logistic regression on u_i - u_j");
    lp->add_option("--emb", lp_emb, "Embedding file")->required()->check(CLI::ExistingFile);
    lp->add_option("--graph", lp_graph, "Edge list")->required()->check(CLI::ExistingFile);
    lp->add_option("--fraction", lp_cfg.sample_fraction, "Positive pairs as a fraction of |E|")->capture_default_str();
    lp->add_option("--train-fraction", lp_cfg.train_fraction, "Training share of the split")->capture_default_str();
    std::string lp_feature = "absdiff";
    lp->add_option("--feature", lp_feature, "Pair feature: absdiff = |u_i - u_j|, diff = u_i - u_j (i < j)")
        ->check(CLI::IsMember({"absdiff", "diff"}))
        ->capture_default_str();
    lp->add_option("--out", lp_out, "Report output (stdout when omitted)");
    common(lp);

    // classify
    ClassificationConfig cl_cfg;
    std::string cl_emb, cl_labels, cl_out;
    auto* cl = app.add_subcommand("classify", "One-vs-rest vertex classification");
    cl->add_option("--emb", cl_emb, "Embedding file")->required()->check(CLI::ExistingFile);
    cl->add_option("--labels", cl_labels, "Labels file")->required()->check(CLI::ExistingFile);
    cl->add_option("--train-fraction", cl_cfg.train_fraction, "Training share of the split")->capture_default_str();
    cl->add_option("--out", cl_out, "Report output (stdout when omitted)");
    common(cl);

    // pipeline
    EmbedOptions pipe_opts;
    SweepOptions pipe_sweep;
    PaConfig pipe_pa{2000, 40, 0};
    std::string pipe_in, pipe_dir;
    auto* pipe = app.add_subcommand("pipeline", "generate -> embed -> reconstruct -> fit, with a combined report");
    add_embed_flags(pipe, pipe_opts, true);
    add_sweep_flags(pipe, pipe_sweep);
    pipe->add_option("--in", pipe_in, "Use this edge list instead of generating")->check(CLI::ExistingFile);
    pipe->add_option("--n", pipe_pa.n, "Generated vertex count")->capture_default_str();
    pipe->add_option("--m", pipe_pa.m, "Generated edges per arriving vertex")->capture_default_str();
    pipe->add_option("--out-dir", pipe_dir, "Directory for all artifacts")->required();
    common(pipe);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        for (auto* sub : app.get_subcommands()) out << sub->help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << DEGPEN_VERSION << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    spdlog::set_level(spdlog::level::from_str(log_level));
    const auto started = std::chrono::steady_clock::now();
    auto* sub = app.get_subcommands().front();
    Manifest manifest;
    manifest.doc = {{"tool", "degpen"}, {"version", DEGPEN_VERSION}, {"subcommand", sub->get_name()},
                    {"argv", args},      {"seed", seed}};
    json flags, inputs = json::array(), outputs = json::array();
    bool deterministic = true;

    auto default_manifest = [&](const std::string& main_output) {
        if (!manifest_path.empty()) return manifest_path;
        return main_output.empty() ? std::string{} : main_output + ".manifest.json";
    };
    // Report text goes to the file or the output stream.
    auto deliver = [&](const std::string& path, const std::string& text) {
        if (path.empty()) {
            out << text;
        } else {
            write_text_file(path, text);
            outputs.push_back(path);
        }
    };

    try {
        if (sub == gen) {
            pa.seed = seed;
            auto g = generate_pa(pa);
            write_edge_list_file(gen_out, g);
            outputs.push_back(gen_out);
            flags = {{"n", pa.n}, {"m", pa.m}};
            manifest.path = default_manifest(gen_out);
        } else if (sub == emb) {
            auto g = load_edge_list_file(emb_in);
            inputs.push_back(emb_in);
            auto res = embed_graph(g, emb_opts, emb_opts.betas.front(), seed);
            write_embedding_file(emb_out, res.embedding);
            outputs.push_back(emb_out);
            if (!emb_opts.corpus_out.empty()) outputs.push_back(emb_opts.corpus_out);
            flags = embed_json(emb_opts);
            deterministic = !is_walker(emb_opts.method) || emb_opts.deterministic;
            manifest.path = default_manifest(emb_out);
        } else if (sub == rec) {
            auto g = load_edge_list_file(rec_graph);
            auto e = read_embedding_file(rec_emb);
            inputs = {rec_emb, rec_graph};
            auto sweep = sweep_epsilon(e, g, rec_sweep.start, rec_sweep.end, rec_sweep.step);
            std::ostringstream report;
            const auto& c = sweep.best.correlations;
            report << fmt::format("best_epsilon {:.4f}\npearson {:.17g}\nspearman {:.17g}\nkendall {:.17g}\n"
                                  "edge_count {}\ndegenerate {}\n",
                                  sweep.best.epsilon, c.pearson, c.spearman, c.kendall, sweep.best.edge_count,
                                  sweep.degenerate ? "true" : "false");
            deliver(rec_out, report.str());
            if (!rec_table.empty()) {
                write_sweep_table_file(rec_table, sweep);
                outputs.push_back(rec_table);
            }
            if (!rec_edges.empty()) {
                double eps = rec_edges_eps > 0.0 ? rec_edges_eps : sweep.best.epsilon;
                std::ostringstream text;
                for (auto [u, v] : reconstruct_edges(e, eps)) text << e.labels()[u] << ' ' << e.labels()[v] << '\n';
                write_text_file(rec_edges, text.str());
                outputs.push_back(rec_edges);
            }
            flags = sweep_json(rec_sweep);
            manifest.path = default_manifest(rec_out.empty() ? rec_table : rec_out);
        } else if (sub == fit) {
            std::vector<double> degrees;
            if (!fit_graph.empty()) {
                auto g = load_edge_list_file(fit_graph);
                degrees = as_doubles(g.degrees());
                inputs.push_back(fit_graph);
            } else if (!fit_degrees.empty()) {
                degrees = read_degrees(fit_degrees);
                inputs.push_back(fit_degrees);
            } else {
                throw CLI::RequiredError("--graph or --degrees");
            }
            std::ostringstream report;
            write_fit(report, fit_power_law(degrees));
            deliver(fit_out, report.str());
            manifest.path = default_manifest(fit_out);
        } else if (sub == bnd) {
            std::ostringstream report;
            write_bounds(report, sphere_bounds(bounds_dim));
            deliver(bounds_out, report.str());
            flags = {{"dim", bounds_dim}};
            manifest.path = default_manifest(bounds_out);
        } else if (sub == lp) {
            auto g = load_edge_list_file(lp_graph);
            auto e = read_embedding_file(lp_emb);
            inputs = {lp_emb, lp_graph};
            lp_cfg.seed = derive_seed(seed, {kLinkStream});
            lp_cfg.feature = lp_feature == "diff" ? PairFeature::Difference : PairFeature::AbsDifference;
            std::ostringstream report;
            write_link_report(report, link_prediction_eval(e, g, lp_cfg));
            deliver(lp_out, report.str());
            flags = {{"feature", lp_feature}, {"fraction", lp_cfg.sample_fraction}, {"train_fraction", lp_cfg.train_fraction}};
            manifest.path = default_manifest(lp_out);
        } else if (sub == cl) {
            auto e = read_embedding_file(cl_emb);
            auto labels = read_labels_file(cl_labels);
            inputs = {cl_emb, cl_labels};
            cl_cfg.seed = derive_seed(seed, {kClassifyStream});
            std::ostringstream report;
            write_classification_report(report, vertex_classification_eval(e, labels, cl_cfg));
            deliver(cl_out, report.str());
            flags = {{"train_fraction", cl_cfg.train_fraction}};
            manifest.path = default_manifest(cl_out);
        } else if (sub == pipe) {
            fs::create_directories(pipe_dir);
            const auto dir = fs::path(pipe_dir);
            Graph g;
            std::ostringstream report;
            report << "[graph]\n";
            if (pipe_in.empty()) {
                pipe_pa.seed = seed;
                g = generate_pa(pipe_pa);
                auto path = (dir / "graph.edges").string();
                write_edge_list_file(path, g);
                outputs.push_back(path);
                report << fmt::format("source preferential-attachment n={} m={}\n", pipe_pa.n, pipe_pa.m);
            } else {
                g = load_edge_list_file(pipe_in);
                inputs.push_back(pipe_in);
                report << "source " << fs::path(pipe_in).filename().string() << '\n';
            }
            report << fmt::format("vertices {}\nedges {}\n", g.num_vertices(), g.num_edges());

            // One embedding per beta; the best Pearson wins.
            const bool uses_beta = pipe_opts.method == "dp-spectral" || pipe_opts.method == "dp-walker";
            std::vector<double> betas = uses_beta ? pipe_opts.betas : std::vector<double>{0.0};
            std::optional<EmbedOutcome> best_emb;
            std::optional<SweepResult> best_sweep;
            double best_beta = 0.0;
            std::ostringstream beta_lines;
            for (double beta : betas) {
                auto res = embed_graph(g, pipe_opts, beta, seed);
                auto sweep = sweep_epsilon(res.embedding, g, pipe_sweep.start, pipe_sweep.end, pipe_sweep.step);
                beta_lines << fmt::format("beta {:.6g} pearson {:.17g}\n", beta, sweep.best.correlations.pearson);
                bool better = !best_sweep || (!sweep.degenerate && (best_sweep->degenerate ||
                                                                    sweep.best.correlations.pearson >
                                                                        best_sweep->best.correlations.pearson));
                if (better) {
                    best_emb = std::move(res);
                    best_sweep = std::move(sweep);
                    best_beta = beta;
                }
            }
            auto emb_path = (dir / "embedding.emb").string();
            auto table_path = (dir / "sweep.csv").string();
            write_embedding_file(emb_path, best_emb->embedding);
            write_sweep_table_file(table_path, *best_sweep);
            outputs.push_back(emb_path);
            outputs.push_back(table_path);

            report << "\n[embedding]\n" << fmt::format("method {}\ndim {}\n", pipe_opts.method, pipe_opts.dim);
            if (uses_beta) report << fmt::format("beta {:.6g}\n", best_beta) << beta_lines.str();
            for (const auto& note : best_emb->notes) report << note << '\n';

            const auto& c = best_sweep->best.correlations;
            report << "\n[reconstruction]\n"
                   << fmt::format("best_epsilon {:.4f}\npearson {:.17g}\nspearman {:.17g}\nkendall {:.17g}\n"
                                  "edge_count {}\ndegenerate {}\n",
                                  best_sweep->best.epsilon, c.pearson, c.spearman, c.kendall,
                                  best_sweep->best.edge_count, best_sweep->degenerate ? "true" : "false");
            report << '\n';
            write_fit_section(report, "powerlaw.original", as_doubles(g.degrees()));
            report << '\n';
            write_fit_section(report, "powerlaw.reconstructed", positive_degrees(best_sweep->best.degrees));

            auto report_path = (dir / "report.txt").string();
            write_text_file(report_path, report.str());
            outputs.push_back(report_path);
            flags = embed_json(pipe_opts);
            flags.update(sweep_json(pipe_sweep));
            if (pipe_in.empty()) flags.update(json{{"n", pipe_pa.n}, {"m", pipe_pa.m}});
            deterministic = !is_walker(pipe_opts.method) || pipe_opts.deterministic;
            manifest.path = manifest_path.empty() ? (dir / "manifest.json").string() : manifest_path;
        }
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    manifest.doc["flags"] = flags.is_null() ? json::object() : flags;
    manifest.doc["inputs"] = inputs;
    manifest.doc["outputs"] = outputs;
    manifest.doc["deterministic"] = deterministic;
    manifest.doc["wall_clock_seconds"] = seconds;
    try {
        manifest.emit(err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace degpen::cli
