#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = degpen::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("degpen-cli-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) +
                                           "-" + std::to_string(::time(nullptr)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"embed", "--method", "pca", "--in", "x", "--out", "y"}).code == 2);
    CHECK(run({"generate", "--n", "ten", "--out", "g"}).code == 2);
    CHECK(run({"bounds"}).code == 2);
    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("pipeline") != std::string::npos);
}

TEST_CASE("generate, embed, reconstruct, fit, bounds, linkpred") {
    TempDir dir;
    auto g = dir / "g.edges";
    auto e = dir / "e.emb";
    REQUIRE(run({"generate", "--n", "300", "--m", "3", "--seed", "4", "--out", g}).code == 0);
    auto manifest = nlohmann::json::parse(slurp(g + ".manifest.json"));
    CHECK(manifest["subcommand"] == "generate");
    CHECK(manifest["seed"] == 4);
    CHECK(manifest["flags"]["n"] == 300);
    CHECK(manifest.contains("version"));
    CHECK(manifest.contains("wall_clock_seconds"));
    CHECK(manifest["outputs"][0] == g);

    REQUIRE(run({"embed", "--in", g, "--out", e, "--dim", "8", "--seed", "4"}).code == 0);
    auto emb = slurp(e);
    CHECK(emb.rfind("300 8\n", 0) == 0);

    auto rec = run({"reconstruct", "--emb", e, "--graph", g, "--table-out", dir / "sweep.csv"});
    CHECK(rec.code == 0);
    CHECK(rec.out.find("pearson ") != std::string::npos);
    CHECK(slurp(dir / "sweep.csv").rfind("epsilon,pearson,spearman,kendall,edge_count\n", 0) == 0);

    auto fit = run({"fit", "--graph", g});
    CHECK(fit.code == 0);
    CHECK(fit.out.rfind("alpha ", 0) == 0);

    auto bounds = run({"bounds", "--dim", "100", "--out", dir / "b.txt"});
    CHECK(bounds.code == 0);
    CHECK(slurp(dir / "b.txt").find("lower 4.065612e17") != std::string::npos);
    CHECK(fs::exists(dir / "b.txt.manifest.json"));

    auto lp = run({"linkpred", "--emb", e, "--graph", g, "--fraction", "0.2"});
    CHECK(lp.code == 0);
    CHECK(lp.out.find("f1 ") != std::string::npos);
}

TEST_CASE("module errors exit with 1") {
    TempDir dir;
    auto g = dir / "g.edges";
    {
        std::ofstream(g) << "0 1\n1 2\n";
    }
    auto r = run({"embed", "--in", g, "--out", dir / "e.emb", "--dim", "5"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error:") != std::string::npos);
    {
        std::ofstream(dir / "bad.edges") << "0 1\n1 two\n";
    }
    auto bad = run({"fit", "--graph", dir / "bad.edges"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(run({"bounds", "--dim", "0"}).code == 1);
}

TEST_CASE("pipeline writes its artifacts and reruns byte-identically") {
    TempDir dir;
    for (auto method : {"dp-spectral", "dp-walker"}) {
        std::vector<std::string> args{"pipeline", "--n", "250", "--m", "3", "--dim", "8", "--walks", "2",
                                      "--walk-length", "10", "--beta", "0.5,1", "--method", method, "--seed", "9"};
        auto a = args, b = args;
        a.insert(a.end(), {"--out-dir", dir / "a"});
        b.insert(b.end(), {"--out-dir", dir / "b"});
        REQUIRE(run(a).code == 0);
        REQUIRE(run(b).code == 0);
        for (auto name : {"graph.edges", "embedding.emb", "sweep.csv", "report.txt"})
            CHECK_MESSAGE(slurp(fs::path(dir / "a") / name) == slurp(fs::path(dir / "b") / name), name);
        auto report = slurp(fs::path(dir / "a") / "report.txt");
        for (auto section : {"[graph]", "[embedding]", "[reconstruction]", "[powerlaw.original]",
                             "[powerlaw.reconstructed]", "pearson ", "ks "})
            CHECK_MESSAGE(report.find(section) != std::string::npos, section);
        auto manifest = nlohmann::json::parse(slurp(fs::path(dir / "a") / "manifest.json"));
        CHECK(manifest["deterministic"] == true);
        CHECK(manifest["flags"]["beta"].size() == 2);
    }
}

TEST_CASE("embed and pipeline agree on the same seed") {
    TempDir dir;
    REQUIRE(run({"pipeline", "--n", "200", "--m", "3", "--dim", "6", "--seed", "2", "--out-dir", dir / "p"}).code == 0);
    REQUIRE(run({"embed", "--in", dir / "p/graph.edges", "--out", dir / "e.emb", "--dim", "6", "--seed", "2"}).code == 0);
    CHECK(slurp(dir / "e.emb") == slurp(dir / "p/embedding.emb"));
}

}  // TEST_SUITE
