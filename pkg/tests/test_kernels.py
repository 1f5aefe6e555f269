"""The compiled and pure-Python kernels must agree bit for bit."""

from __future__ import annotations

import random

import networkx as nx
import pytest

from tfik import kernels
from tfik.graph import SimpleGraph, all_pairs

from conftest import random_graph

pytestmark = pytest.mark.skipif(kernels.compiled_backend is None, reason="compiled kernels not built")

PY = kernels.python_backend
C = kernels.compiled_backend


def _sample(count: int, seed: int) -> list[SimpleGraph]:
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(0, 13), rng.uniform(0.1, 0.8)) for _ in range(count)]


def test_canon_and_orbits_agree():
    for g in _sample(300, 1):
        assert C.canon(g.order, list(g.rows)) == PY.canon(g.order, list(g.rows))
        assert C.canon_form(g.order, list(g.rows)) == PY.canon_form(g.order, list(g.rows))


def test_orbits_match_automorphism_group():
    for g in _sample(60, 2):
        _, orbits = C.canon(g.order, list(g.rows))
        h = nx.Graph()
        h.add_nodes_from(range(g.order))
        h.add_edges_from(g.edges())
        expected = list(range(g.order))
        for iso in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter():
            for v, w in iso.items():
                expected[w] = min(expected[w], v)
        # orbit representative is the smallest vertex of the orbit
        rep = [min(u for u in range(g.order) if expected[u] == expected[v]) for v in range(g.order)]
        assert list(orbits) == rep


def test_planarity_agrees():
    for g in _sample(300, 3):
        assert C.is_planar(g.order, list(g.rows)) == PY.is_planar(g.order, list(g.rows))


def test_reduction_agrees():
    rng = random.Random(4)
    for g in _sample(150, 4):
        if g.order < 2:
            continue
        a, b = rng.sample(range(g.order), 2)
        assert C.reduce_pair(g.order, list(g.rows), a, b) == PY.reduce_pair(g.order, list(g.rows), a, b)


def test_first_planar_pair_agrees():
    for g in _sample(100, 5):
        pairs = all_pairs(g.order)
        assert C.first_planar_pair(g.order, list(g.rows), pairs) == PY.first_planar_pair(g.order, list(g.rows), pairs)


@pytest.mark.parametrize("n,m,mindeg,maxdeg,tf", [(7, 9, 0, 6, False), (8, 12, 3, 4, True), (9, 14, 3, 5, True)])
def test_generation_agrees(n, m, mindeg, maxdeg, tf):
    assert C.generate(0, [], n, m, mindeg, maxdeg, tf, n, 0) == PY.generate(0, [], n, m, mindeg, maxdeg, tf, n, 0)


def test_canon_overflow_is_shared():
    assert C.CanonOverflow is PY.CanonOverflow is kernels.CanonOverflow


def test_backend_switch():
    previous = kernels.BACKEND
    try:
        assert kernels.set_backend("python") == "python"
        assert kernels.get() is PY
        assert kernels.set_backend("compiled") == "compiled"
        assert kernels.get() is C
        with pytest.raises(ValueError):
            kernels.set_backend("fortran")
    finally:
        kernels.set_backend(previous)
