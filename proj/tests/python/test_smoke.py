"""Smoke tests for the python bindings: the main operations round-trip
through pybind11 with the same numbers the C++ suites pin down."""

import math

import pytest

import ordlat


def linear_with(*presets, n=4):
    s = ordlat.Structure.linear(n)
    for name in presets:
        s.add_preset(name, name)
    return s


def test_permutation_algebra():
    p = ordlat.Permutation([1, 0, 2])
    q = ordlat.Permutation([2, 1, 0])
    assert (p * q).images == [2, 0, 1]
    assert p.inverse() == p
    assert p.apply([0, 2]) == [1, 2]
    assert len(ordlat.Permutation.identity(5)) == 5
    with pytest.raises(ValueError):
        ordlat.Permutation([0, 0, 1])


def test_generate_group():
    g = ordlat.generate_group(3, [ordlat.Permutation([1, 2, 0])])
    assert g.order == 3
    assert ordlat.Permutation.identity(3) in g


def test_classical_group_orders():
    s = linear_with("equality", "separation", "between", "cycle", "order")
    orders = {
        name: ordlat.aut_group(s, [name]).order
        for name in ("equality", "separation", "between", "cycle", "order")
    }
    assert orders == {
        "equality": 24,
        "separation": 8,
        "between": 2,
        "cycle": 4,
        "order": 1,
    }
    exhaustive = ordlat.aut_group_exhaustive(s, ["separation"])
    assert exhaustive == ordlat.aut_group(s, ["separation"])


def test_definable_and_witness():
    s = linear_with("between", "equipollence", "cycle", n=5)
    assert ordlat.definable(s, "equipollence", ["between"]) is None
    w = ordlat.definable(s, "between", ["cycle"])
    assert w is not None
    assert ordlat.preserves(w.permutation, s.relation("cycle"))
    broken = s.relation(w.broken)
    assert (tuple(w.tuple) in [tuple(t) for t in broken.tuples]) != (
        tuple(w.permutation.apply(w.tuple)) in [tuple(t) for t in broken.tuples]
    )


def test_formula_evaluation():
    s = ordlat.Structure.linear(3)
    s.add_formula("B", "B(x,y,z) := (x<y & y<z) | (x>y & y>z)")
    assert [tuple(t) for t in s.relation("B").tuples] == [(0, 1, 2), (2, 1, 0)]
    canonical = ordlat.parse_formula("I(x) := exists y. x<y")
    assert canonical == "I(x) := exists y. (x<y)"
    with pytest.raises(ValueError):
        s.add_formula("bad", "X(x) := y<x")


def test_grid_operations():
    g = ordlat.Structure.grid(3, 2)
    assert g.is_grid and g.verticals == 3 and g.height == 2
    assert ordlat.diff(g, g.point(0, 1), g.point(0, 0)) == 1
    assert ordlat.diff(g, g.point(0, 0), g.point(1, 0)) == math.inf

    flip = ordlat.lift_uniform(g, ordlat.Permutation.identity(3), True)
    c = ordlat.classify(g, flip)
    assert c.systemic and c.negative and not c.positive
    assert ordlat.initiate(g, flip) == ordlat.Permutation.identity(3)

    g.add_preset("codir_1", "codir", n=1)
    assert ordlat.aut_group(g, ["codir_1"]).order == 12
    assert ordlat.m_indistinguishable(g, [0, 1], [0, 1], 1)


def test_boundary_and_blocks():
    w = ordlat.Structure.grid(1, 8)
    w.add_preset("succ_1", "succ", n=1)
    w.add_preset("order", "order")
    assert ordlat.boundary(w, "succ_1") == 1
    assert ordlat.boundary(w, "order") == 0
    assert ordlat.boundary(w, "succ_1", cap=0) is None

    g = ordlat.Structure.grid(1, 6)
    placed = ordlat.place_blocks(g, [[0, 1], [0, 1]], [0, 0], 2)
    assert placed == [0, 1, 4, 5]


def test_section_classify():
    assert ordlat.section_classify(ordlat.Permutation([1, 2, 3, 0])) == [(3, "ii")]
    assert ordlat.section_classify(ordlat.Permutation([1, 0, 2, 3])) == []


def test_hasse_and_dot():
    s = linear_with("equality", "separation", "between", "cycle", "order", n=6)
    d = ordlat.hasse(s, [["equality"], ["separation"], ["between"], ["cycle"], ["order"]])
    assert d.orders == [720, 12, 6, 2, 1]
    assert d.labels[0] == "equality"
    assert (0, 1) in [tuple(e) for e in d.edges]
    dot = d.to_dot()
    assert dot.startswith("digraph definability {")
    witnesses = ordlat.strictness_witnesses(s, d)
    assert len(witnesses) == len(d.edges)
