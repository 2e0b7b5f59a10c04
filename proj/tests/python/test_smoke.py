import json

import numpy as np
import pytest

import degpen


@pytest.fixture(scope="module")
def graph():
    return degpen.generate_pa(400, 4, seed=3)


def test_generator_edge_count(graph):
    assert graph.num_vertices == 400
    assert graph.num_edges == 4 * 5 // 2 + 4 * (400 - 5)
    assert sum(graph.degrees) == 2 * graph.num_edges


def test_spectral_embedding_reconstructs_degrees(graph):
    res = degpen.embed_spectral(graph, k=16, beta=1.0, seed=1)
    emb = res["embedding"]
    assert emb.shape == (400, 16)
    assert np.all(np.isfinite(emb))
    assert max(res["residuals"]) <= 1e-8
    sweep = degpen.sweep_epsilon(emb, graph)
    assert len(sweep["table"]) == 100
    assert sweep["pearson"] > 0.5
    assert degpen.reconstruct_degrees(emb, sweep["epsilon"]) == sweep["degrees"]


def test_walker_embedding_is_reproducible(graph):
    a = degpen.embed_walker(graph, k=8, walks=2, walk_length=10, seed=5)
    b = degpen.embed_walker(graph, k=8, walks=2, walk_length=10, seed=5)
    assert a.shape == (400, 8)
    assert np.array_equal(a, b)


def test_star_transition_law():
    star = degpen.Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    law = dict(degpen.transition_distribution(star, 1.0, 1))
    assert law[0] == pytest.approx(1 / 7, abs=1e-15)
    assert law[2] == pytest.approx(3 / 7, abs=1e-15)
    assert 1 not in law


def test_power_law_fit():
    rng = np.random.default_rng(0)
    u = rng.random(50000)
    d = np.maximum(5, np.floor(4.5 * u ** (1 / (1 - 2.5)) + 0.5))
    fit = degpen.fit_power_law(d.tolist())
    assert 2.4 <= fit["alpha"] <= 2.6
    assert fit["ks"] <= 0.02


def test_sphere_bounds():
    assert degpen.sphere_bounds(1)["lower"] == 1
    assert degpen.sphere_bounds(100)["lower"] > 4.06e17


def test_link_prediction_and_classification(graph):
    emb = degpen.embed_spectral(graph, k=16, seed=1)["embedding"]
    report = degpen.link_prediction(emb, graph, fraction=0.2, seed=2)
    assert 0.0 <= report["f1"] <= 1.0
    classes = {i: int(emb[i, 0] > 0) for i in range(400)}
    shifted = emb.copy()
    shifted[:, 0] += np.where(shifted[:, 0] > 0, 1.0, -1.0)
    assert degpen.classify(shifted, classes)["accuracy"] == 1.0


def test_errors_map_to_python_exceptions(graph, tmp_path):
    bad = tmp_path / "bad.edges"
    bad.write_text("0 1\n1 x\n")
    with pytest.raises(degpen.ParseError, match="line 2"):
        degpen.Graph.load(str(bad))
    with pytest.raises(ValueError):
        degpen.embed_spectral(graph, k=16, mode="pca")
    with pytest.raises(ValueError):
        degpen.sweep_epsilon(np.zeros((3, 2)), graph)


def test_cli_round_trip(tmp_path):
    out = tmp_path / "g.edges"
    code, _, err = degpen.run_cli(["generate", "--n", "100", "--m", "2", "--seed", "1", "--out", str(out)])
    assert code == 0, err
    manifest = json.loads((tmp_path / "g.edges.manifest.json").read_text())
    assert manifest["subcommand"] == "generate"
    g = degpen.Graph.load(str(out))
    assert g.num_vertices == 100
    code, _, _ = degpen.run_cli(["nope"])
    assert code == 2
