"""Named graphs and the single-edge contraction witnesses of the theorem graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .errors import NoWitness, UnknownGraph
from .graph import (
    SimpleGraph,
    canonicalize,
    contract_edge,
    degree_sequence,
    from_edges,
    graph6_decode,
    is_triangle_free,
)
from .moves import TY, FamilyClosure, family_closure


@dataclass
class NamedGraph:
    name: str
    graph: SimpleGraph
    vertex_names: tuple[str, ...] = ()
    contraction_witness: tuple[int, int] | None = None
    expected_contraction_family: str | None = None
    expected_target_order: int | None = None
    notes: dict = field(default_factory=dict)

    def vertex(self, label: str) -> int:
        return self.vertex_names.index(label)

    def descriptor(self) -> dict:
        w = self.contraction_witness
        return {
            "name": self.name,
            "order": self.graph.order,
            "edges": self.graph.edge_count,
            "degree_sequence": degree_sequence(self.graph),
            "triangle_free": is_triangle_free(self.graph),
            "witness_edge": list(w) if w else None,
            "witness_edge_names": [self.vertex_names[w[0]], self.vertex_names[w[1]]]
            if w and self.vertex_names
            else None,
            "contraction_family": self.expected_contraction_family,
            "contraction_order": self.expected_target_order,
        }


def _labeled(names: str, adjacency: list[tuple[str, str]]) -> tuple[SimpleGraph, tuple[str, ...]]:
    labels = tuple(names.split())
    index = {v: i for i, v in enumerate(labels)}
    return from_edges(len(labels), [(index[u], index[v]) for u, v in adjacency]), labels


def complete(n: int) -> SimpleGraph:
    return from_edges(n, combinations(range(n), 2))


def complete_multipartite(*parts: int) -> SimpleGraph:
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]])


def cycle(n: int) -> SimpleGraph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def cousin110() -> tuple[SimpleGraph, tuple[str, ...]]:
    core = ["x1", "y1", "z1", "z2", "z3"]
    edges = [(p, c) for p in ("a", "b") for c in core]
    edges += [(z, v) for z in ("z1", "z2", "z3") for v in ("v1", "v2", "v3")]
    edges += [("x1", "v1"), ("y1", "v1"), ("y1", "v2")]
    return _labeled("a b x1 y1 z1 z2 z3 v1 v2 v3", edges)


def m11() -> tuple[SimpleGraph, tuple[str, ...]]:
    core = ["x1", "y1", "y2", "z1", "z2"]
    edges = [(p, c) for p in ("a", "b") for c in core]
    edges += [(z, v) for z in ("z1", "z2") for v in ("v1", "v2", "v3")]
    edges += [("x1", "v1"), ("v2", "y1"), ("v3", "y2"), ("v4", "y1"), ("v4", "y2"), ("v4", "v1")]
    return _labeled("a b x1 y1 y2 z1 z2 v1 v2 v3 v4", edges)


COUSIN94_DEGREES = [5, 5, 4, 4, 4, 4, 3, 3, 3, 3, 3, 3]


def cousin94() -> SimpleGraph:
    """The order-12 triangle-free member of the cousin-110 family with degrees COUSIN94_DEGREES."""
    hits = [
        g
        for g in (graph6_decode(f) for f in sorted(e9e_family().members))
        if g.order == 12 and is_triangle_free(g) and degree_sequence(g) == COUSIN94_DEGREES
    ]
    if len(hits) != 1:
        raise UnknownGraph(f"expected one order-12 candidate in the family, found {len(hits)}")
    return hits[0]


@lru_cache(maxsize=None)
def k7_family() -> FamilyClosure:
    return family_closure(complete(7), {TY})


@lru_cache(maxsize=None)
def e9e_family() -> FamilyClosure:
    return family_closure(cousin110()[0])


@lru_cache(maxsize=None)
def k3311_family() -> FamilyClosure:
    return family_closure(complete_multipartite(3, 3, 1, 1))


_TARGET_ORDER = {"cousin110": 9, "M_11": 10, "cousin94": 11}

_ALIASES = {
    "k5": "K5",
    "k33": "K33",
    "k3,3": "K33",
    "k7": "K7",
    "k3311": "K3311",
    "k3,3,1,1": "K3311",
    "k44": "K44",
    "k4,4": "K44",
    "c6": "C6",
    "petersen": "Petersen",
    "cousin110": "cousin110",
    "m11": "M_11",
    "cousin94": "cousin94",
}

NAMES = sorted(set(_ALIASES.values()))


def canonical_name(name: str) -> str:
    key = name.lower()
    for ch in "_{} ":
        key = key.replace(ch, "")
    if key not in _ALIASES:
        raise UnknownGraph(f"unknown graph {name!r}; known: {', '.join(NAMES)}")
    return _ALIASES[key]


def build(name: str, with_witness: bool = True) -> NamedGraph:
    """Construct a named graph; theorem graphs carry a contraction witness into the K7 family."""
    key = canonical_name(name)
    labels: tuple[str, ...] = ()
    if key == "K5":
        g = complete(5)
    elif key == "K33":
        g = complete_multipartite(3, 3)
    elif key == "K7":
        g = complete(7)
    elif key == "K3311":
        g = complete_multipartite(3, 3, 1, 1)
    elif key == "K44":
        g = complete_multipartite(4, 4)
    elif key == "C6":
        g = cycle(6)
    elif key == "Petersen":
        g = petersen()
    elif key == "cousin110":
        g, labels = cousin110()
    elif key == "M_11":
        g, labels = m11()
    else:
        g = cousin94()
    ng = NamedGraph(key, g, labels)
    if key in _TARGET_ORDER:
        ng.expected_contraction_family = "K7"
        ng.expected_target_order = _TARGET_ORDER[key]
        if with_witness:
            ng.contraction_witness = find_contraction_witness(g, k7_family(), ng.expected_target_order)
    return ng


def contraction_witnesses(g: SimpleGraph, family: FamilyClosure, target_order: int | None = None):
    """All edges whose contraction lands in ``family`` (optionally at a given order)."""
    out = []
    for e in g.edges():
        h = contract_edge(g, e)
        if target_order is not None and h.order != target_order:
            continue
        if canonicalize(h) in family:
            out.append(e)
    return out


def find_contraction_witness(g: SimpleGraph, family: FamilyClosure, target_order: int | None = None):
    hits = contraction_witnesses(g, family, target_order)
    return hits[0] if hits else None


def verify_contraction_witness(n: NamedGraph, k7: FamilyClosure) -> bool:
    """Check the stored witness; if it fails, search every edge and record any hit."""
    if n.contraction_witness is None:
        raise NoWitness(f"{n.name} has no contraction witness")
    order = n.expected_target_order
    h = contract_edge(n.graph, n.contraction_witness)
    if (order is None or h.order == order) and canonicalize(h) in k7:
        return True
    found = find_contraction_witness(n.graph, k7, order)
    if found is None:
        return False
    n.contraction_witness = found
    return True
