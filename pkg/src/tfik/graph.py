"""Simple undirected graphs as bitset rows, with canonical forms and graph6 I/O."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NewType

from . import kernels
from .errors import BadVertex, DuplicateEdge, InvalidEdge, NotAnEdge, ParseError

CanonicalForm = NewType("CanonicalForm", bytes)

MAX_ORDER = 62


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class SimpleGraph:
    """Loopless simple graph on vertices ``0..order-1``.

    ``rows[v]`` is the bitmask of neighbours of ``v``.  Instances are immutable and
    hashable; equality is labeled equality.
    """

    order: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.order:
            raise ValueError("rows must have one entry per vertex")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        return from_edges(order, edges)

    @classmethod
    def empty(cls, order: int = 0) -> "SimpleGraph":
        return cls(order, (0,) * order)

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        self._check(v)
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return list(_bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.order and 0 <= v < self.order and bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def _check(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise BadVertex(f"vertex {v} not in 0..{self.order - 1}")

    def __repr__(self) -> str:
        return f"SimpleGraph(order={self.order}, edges={self.edges()})"


def from_edges(order: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
    """Build a graph, rejecting loops, repeated pairs and out-of-range endpoints."""
    if order < 0:
        raise BadVertex("negative order")
    rows = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise BadVertex(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
        if u == v:
            raise InvalidEdge(f"loop at vertex {u}")
        if rows[u] >> v & 1:
            raise DuplicateEdge(f"edge ({u}, {v}) given twice")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return SimpleGraph(order, tuple(rows))


def degree_sequence(g: SimpleGraph) -> list[int]:
    return sorted(g.degrees(), reverse=True)


def is_triangle_free(g: SimpleGraph) -> bool:
    rows = g.rows
    for u in range(g.order):
        for v in _bits(rows[u] >> (u + 1) << (u + 1)):
            if rows[u] & rows[v]:
                return False
    return True


def is_connected(g: SimpleGraph) -> bool:
    """Connectivity; the graph with no vertices counts as connected."""
    if g.order == 0:
        return True
    seen = frontier = 1
    while frontier:
        v = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        new = g.rows[v] & ~seen
        seen |= new
        frontier |= new
    return seen == (1 << g.order) - 1


def distance(g: SimpleGraph, a: int, b: int) -> int | None:
    """Length of a shortest a-b path, or None if they are disconnected."""
    g._check(a)
    g._check(b)
    seen = frontier = 1 << a
    d = 0
    while frontier:
        if frontier >> b & 1:
            return d
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return None


def canonicalize(g: SimpleGraph) -> CanonicalForm:
    """Exact isomorphism invariant: graph6 bytes of the canonically relabeled graph."""
    return CanonicalForm(kernels.active.canon_form(g.order, g.rows))


def canonical_labeling(g: SimpleGraph) -> list[int]:
    """``lab[i]`` is the vertex placed at position ``i`` in the canonical form."""
    lab, _ = kernels.active.canon(g.order, g.rows)
    return lab


def automorphism_orbits(g: SimpleGraph) -> list[int]:
    """Orbit representative (smallest member) for every vertex."""
    _, orbits = kernels.active.canon(g.order, g.rows)
    return orbits


def canonical_graph(g: SimpleGraph) -> SimpleGraph:
    return graph6_decode(canonicalize(g))


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    return g.order == h.order and g.edge_count == h.edge_count and canonicalize(g) == canonicalize(h)


def relabel(g: SimpleGraph, perm: list[int]) -> SimpleGraph:
    """Graph in which vertex ``v`` of ``g`` becomes ``perm[v]``."""
    return from_edges(g.order, [(perm[u], perm[v]) for u, v in g.edges()])


def contract_edge(g: SimpleGraph, e: tuple[int, int]) -> SimpleGraph:
    """Merge the endpoints of ``e``; the merged vertex takes the smaller index.

    Loops vanish and parallel edges collapse.  Other vertices keep their relative order.
    """
    u, v = sorted(e)
    if not g.has_edge(u, v):
        raise NotAnEdge(f"({e[0]}, {e[1]}) is not an edge")
    merged = (g.rows[u] | g.rows[v]) & ~(1 << u) & ~(1 << v)
    rows = list(g.rows)
    rows[u] = merged
    for w in range(g.order):
        if w != u and rows[w] >> v & 1:
            rows[w] = (rows[w] & ~(1 << v)) | (1 << u)
    return _drop(g.order, rows, v)


def delete_vertex(g: SimpleGraph, v: int) -> SimpleGraph:
    g._check(v)
    return _drop(g.order, list(g.rows), v)


def delete_edge(g: SimpleGraph, e: tuple[int, int]) -> SimpleGraph:
    u, v = e
    if not g.has_edge(u, v):
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return SimpleGraph(g.order, tuple(rows))


def induced_subgraph(g: SimpleGraph, vertices: Iterable[int]) -> SimpleGraph:
    """Subgraph induced on ``vertices``, re-indexed in increasing order."""
    keep = sorted(set(vertices))
    for v in keep:
        g._check(v)
    return _compact(g.rows, keep)


def _drop(order: int, rows: list[int], v: int) -> SimpleGraph:
    return _compact(rows, [w for w in range(order) if w != v])


def _compact(rows, keep: list[int]) -> SimpleGraph:
    index = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        r = 0
        for u in _bits(rows[v]):
            if u in index:
                r |= 1 << index[u]
        out.append(r)
    return SimpleGraph(len(keep), tuple(out))


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def graph6_encode(g: SimpleGraph) -> bytes:
    if g.order > MAX_ORDER:
        raise BadVertex(f"graph6 header supports at most {MAX_ORDER} vertices")
    return kernels.python_backend.g6_from_rows(g.order, g.rows)


def graph6_decode(data: bytes | str) -> SimpleGraph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip(b"\r\n")
    if not data:
        raise ParseError("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise ParseError("graph6 bytes must lie in 63..126")
    n = data[0] - 63
    if n > MAX_ORDER:
        raise ParseError("multi-byte graph6 headers are not supported")
    nbits = n * (n - 1) // 2
    body = data[1:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"expected {(nbits + 5) // 6} body bytes for order {n}, got {len(body)}")
    acc = 0
    for c in body:
        acc = (acc << 6) | (c - 63)
    pad = 6 * len(body) - nbits
    if pad and acc & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits")
    acc >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if acc >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return SimpleGraph(n, tuple(rows))


def read_graph6_file(path) -> list[SimpleGraph]:
    with open(path, "rb") as fh:
        return [graph6_decode(line) for line in fh.read().split(b"\n") if line.strip()]


def write_graph6_file(path, graphs: Iterable[SimpleGraph]) -> None:
    with open(path, "wb") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + b"\n")


def all_pairs(order: int) -> list[tuple[int, int]]:
    return list(combinations(range(order), 2))
