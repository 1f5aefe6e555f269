"""Named graphs and contraction witnesses."""

from __future__ import annotations

import pytest

from tfik.catalog import (
    COUSIN94_DEGREES,
    NAMES,
    build,
    canonical_name,
    contraction_witnesses,
    k3311_family,
    k7_family,
    verify_contraction_witness,
)
from tfik.errors import NoWitness, UnknownGraph
from tfik.graph import automorphism_orbits, contract_edge, degree_sequence, distance, is_triangle_free


@pytest.mark.parametrize(
    "name,order,edges",
    [("K5", 5, 10), ("K33", 6, 9), ("K7", 7, 21), ("K3311", 8, 22), ("K44", 8, 16), ("C6", 6, 6),
     ("Petersen", 10, 15), ("cousin110", 10, 22), ("M_11", 11, 22), ("cousin94", 12, 22)],
)
def test_sizes(name, order, edges):
    g = build(name, with_witness=False).graph
    assert (g.order, g.edge_count) == (order, edges)


def test_theorem_graphs():
    assert degree_sequence(build("cousin110", with_witness=False).graph) == [5, 5, 5, 5, 5, 5, 4, 4, 3, 3]
    m = build("M_11", with_witness=False).graph
    assert degree_sequence(m) == [5, 5, 5, 5, 4, 4, 4, 3, 3, 3, 3]
    assert degree_sequence(m).count(5) == 4
    assert degree_sequence(build("cousin94", with_witness=False).graph) == COUSIN94_DEGREES
    for name in ("cousin110", "M_11", "cousin94"):
        assert is_triangle_free(build(name, with_witness=False).graph)


def test_cousin110_pair_distance():
    ng = build("cousin110", with_witness=False)
    assert distance(ng.graph, ng.vertex("a"), ng.vertex("b")) == 2


@pytest.mark.parametrize("name,target", [("cousin110", 9), ("M_11", 10), ("cousin94", 11)])
def test_witnesses(name, target):
    ng = build(name)
    assert ng.expected_contraction_family == "K7" and ng.expected_target_order == target
    assert ng.contraction_witness is not None
    assert verify_contraction_witness(ng, k7_family())
    h = contract_edge(ng.graph, ng.contraction_witness)
    assert (h.order, h.edge_count) == (target, 21)


def test_m11_witnesses_form_one_orbit():
    ng = build("M_11", with_witness=False)
    hits = contraction_witnesses(ng.graph, k7_family(), 10)
    assert hits
    orbits = automorphism_orbits(ng.graph)
    assert len({tuple(sorted((orbits[u], orbits[v]))) for u, v in hits}) == 1


def test_bad_witness_is_repaired():
    ng = build("M_11")
    good = ng.contraction_witness
    ng.contraction_witness = (ng.vertex("a"), ng.vertex("x1"))
    assert verify_contraction_witness(ng, k7_family())
    assert ng.contraction_witness == good


def test_k3311_has_no_witness():
    ng = build("K3311")
    assert contraction_witnesses(ng.graph, k7_family()) == []
    with pytest.raises(NoWitness):
        verify_contraction_witness(ng, k7_family())
    ng.contraction_witness = ng.graph.edges()[0]
    assert not verify_contraction_witness(ng, k7_family())


def test_k3311_family_membership():
    assert len(k3311_family()) == 58


def test_names():
    assert canonical_name("k_{3,3,1,1}") == "K3311"
    assert canonical_name("m11") == "M_11"
    assert set(NAMES) >= {"K5", "K33", "K7", "K3311", "Petersen", "cousin110", "M_11", "cousin94"}
    with pytest.raises(UnknownGraph):
        build("Heawood")


def test_descriptor():
    d = build("M_11").descriptor()
    assert d["degree_sequence"] == [5, 5, 5, 5, 4, 4, 4, 3, 3, 3, 3]
    assert d["triangle_free"] and d["contraction_order"] == 10
    assert len(d["witness_edge_names"]) == 2
