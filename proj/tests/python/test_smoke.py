"""Smoke tests for the python bindings."""

import pytest

try:
    from ccfc import _ccfc as m
except ImportError:  # build-tree layout
    try:
        import _ccfc as m
    except ImportError:
        pytest.skip("python module not built", allow_module_level=True)

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_cycle_solves():
    g = m.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert m.girth(g) == 5
    res = m.solve_circular(g, 5, 2)
    assert res["sat"]
    assert m.check_circular(g, 5, 2, res["assignment"])
    fres = m.solve_fractional(g, 5)
    assert fres["sat"]
    assert m.check_fractional(g, 5, fres["assignment"])


def test_triangle_unsat():
    g = m.Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert not m.solve_circular(g, 5, 2)["sat"]
    assert not m.solve_fractional(g, 5)["sat"]


def test_gadgets():
    w = m.build_devos_wheel(5)
    assert w.n == 22
    assert m.girth(w) == 7
    assert not m.solve_circular(w, 5, 2)["sat"]

    h = m.build_hp(5)
    assert h.n == 106
    assert m.cycle_spectrum(h, 13) == {5}

    ring = m.build_nonprime_gadget(3, 3, 10)
    assert m.girth(ring) == 9

    g2 = m.Graph.from_json(h.to_json())
    assert g2.n == h.n


def test_precolored_solve():
    path = m.build_necklace(5, "e,e")
    res = m.solve_circular(path, 5, 2, precolor={0: 0, 2: 1})
    assert res["sat"]
    assert res["assignment"][0] == 0 and res["assignment"][2] == 1


def test_propagation_and_sumsets():
    assert m.sumset(5, [0, 1], [0, 2]) == [0, 1, 2, 3]
    sets = m.propagate_necklace(5, "e,e", [0])
    assert sets[1] == [2, 3]
    assert sets[2] == [0, 1, 4]
    assert m.cycle_precolor_feasible(5, 0, 2, 0, 1)
    assert not m.cycle_precolor_feasible(5, 0, 1, 0, 1)


def test_fractional_machinery():
    assert m.path_bound(3, 5) == ("lower", 1)
    assert m.cycle_intersection_required(5, 2) == 1
    assert m.feasible_overlap(5, 5) == (0, 2)
    assert m.compute_mn(5, 1, 3, 1, False) == (0, 0)

    out = m.extend_necklace_fractional(5, "e,e,e", [0, 1], [1, 2])
    assert out is not None
    g = m.build_necklace(5, "e,e,e")
    assert m.check_fractional(g, 5, out)
    assert m.extend_necklace_fractional(5, "e,e,e", [0, 1], [2, 3]) is None

    bull = m.extend_bull_fractional(5, 1, "e,e,e,e", [0, 1], [1, 2], [3, 4])
    assert bull is not None
    bg = m.build_bull(5, 1, "e,e,e,e")
    assert m.check_fractional(bg, 5, bull)


def test_five_color_pipeline():
    k4 = m.Graph(4, K4_EDGES)
    colors = m.pipeline_five_color(k4)
    assert colors is not None
    assert all(colors[u] != colors[v] for u, v in K4_EDGES)


def test_verify_suite():
    rep = m.run_verify("lemma-2.1", {"k": 5})
    assert rep["passed"]
    assert rep["cases_total"] == 625
    assert "lemma-2.1" in m.verify_suite_names()
