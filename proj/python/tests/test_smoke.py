import pytest

g = pytest.importorskip("geodetic")


def cycle(n):
    return g.Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_cycles():
    assert g.solve_fpt(cycle(6)).optimum == 2
    assert g.solve_fpt(cycle(7)).optimum == 3


def test_fpt_matches_brute():
    for seed in range(20):
        graph = g.random_fen_graph(12, seed % 4, seed)
        result = g.solve_fpt(graph, deterministic=True)
        assert result.solved
        assert result.optimum == g.min_geodetic_brute(graph)[0]
        assert g.is_geodetic(graph, result.witness)


def test_interval_and_closure():
    path = g.parse_graph("4 3\n0 1\n1 2\n2 3\n")
    assert g.interval(path, 0, 3) == [0, 1, 2, 3]
    assert g.interval_closure(path, [1, 2]) == [1, 2]
    assert g.is_geodetic(path, [0, 3])
    assert g.format_graph(g.parse_graph(g.format_graph(path))) == g.format_graph(path)


def test_reduce():
    graph = g.Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (3, 5)])
    out = g.reduce(graph, 4)
    assert out["k"] == 3
    assert out["route"] == "fen1"
    assert out["trace"][0].startswith("RULE rr2")


def test_gadget():
    inst, planted = g.random_planted_instance(2, 1, 1, 7)
    gadget = g.build_gadget(inst)
    assert gadget.budget == 8
    assert gadget.graph.vertex_count == 1100
    report = g.verify_structure(gadget)
    assert report["hubs_cut_cycles"] and report["pendant_closure_exact"]
    assert report["diameter_ok"] and report["pendants_only_leaves"]
    assert len(g.canonical_solution(gadget, inst, planted)) == 8
    assert gadget.id("alpha") == 0


def test_errors():
    with pytest.raises(ValueError):
        g.Graph.from_edges(2, [(0, 5)])
    with pytest.raises(ValueError):
        g.solve_fpt(g.Graph.from_edges(4, [(0, 1), (2, 3)]))
