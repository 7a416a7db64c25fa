import pytest

import shortcut_forge as sf


def test_graph_and_closure():
    g = sf.DiGraph(3, [(0, 1), (1, 2), (0, 1)])
    assert g.m == 2
    assert g.closure_edges() == [(0, 1), (0, 2), (1, 2)]
    assert g.is_acyclic()


def test_errors_carry_codes():
    with pytest.raises(sf.ShortcutForgeError) as info:
        sf.DiGraph(2, [(0, 0)])
    assert info.value.code == "SelfLoop"


def test_shortcut_round_trip():
    g = sf.gen_random_dag(40, 0.08, 3)
    r = sf.approx_shortcut_dag(g, s=40, d=2, alpha_d=1, seed=3)
    assert sf.verify_shortcut(g, r["edges"], 2)["valid"]
    assert r["f1_size"] <= r["f1_cap"]
    assert r["f2_size"] <= r["f2_cap"]


def test_path_examples():
    p = sf.gen_path(5)
    assert sf.path_two_shortcut(p, [0, 1, 2, 3, 4]) == [(0, 2), (2, 4)]
    assert sf.min_shortcut_exact(sf.gen_path(4), 1)[0] == 3
    assert not sf.exists_shortcut(p, 0, 2)


def test_reduction_and_spanner():
    g = sf.DiGraph(3, [(0, 1), (1, 2), (0, 2)])
    assert sf.transitive_reduction(g).edges == [(0, 1), (1, 2)]
    path = sf.gen_path(9)
    h = sf.approx_tc_spanner(path, s=9, d=2)
    assert sf.verify_tc_spanner(path, h, 2)["valid"]


def test_scc_wrapper():
    g = sf.gen_planted_cycles(20, 0.1, 3, 4, 1)
    r = sf.approx_shortcut(g, s=20, d=2)
    assert sf.verify_shortcut(g, r["edges"], r["bound"])["valid"]
    assert r["overhead"] <= 40


def test_bad_budget():
    with pytest.raises(sf.ShortcutForgeError) as info:
        sf.approx_shortcut_dag(sf.gen_path(10), s=5, d=2)
    assert info.value.code == "BadParams"
