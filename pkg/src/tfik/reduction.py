"""Vertex-pair reduction, the edge-count ledger, and pair neighbourhood profiles."""

from __future__ import annotations

import json
import random
import warnings
from dataclasses import asdict, dataclass, field

from . import kernels
from .errors import BadVertex, OutOfRegime, SamePair
from .graph import SimpleGraph, _bits, distance, is_triangle_free


@dataclass(frozen=True)
class Reduction:
    graph: SimpleGraph
    merged: bool  # a smoothing step hit an existing edge and dropped the duplicate


def _check_pair(g: SimpleGraph, a: int, b: int) -> None:
    g._check(a)
    g._check(b)
    if a == b:
        raise SamePair(f"pair ({a}, {b}) repeats a vertex")


def reduce_pair_detail(g: SimpleGraph, a: int, b: int, rng: random.Random | None = None) -> Reduction:
    """Delete ``a`` and ``b``, then strip and smooth vertices of degree at most 2.

    Without ``rng`` the lowest-index eligible vertex is processed first (the kernel
    path).  With ``rng`` a random eligible vertex is chosen at every step.
    """
    _check_pair(g, a, b)
    alive = ((1 << g.order) - 1) & ~(1 << a) & ~(1 << b)
    if rng is None:
        m, rows, merged = kernels.active.reduce_mask(g.order, g.rows, alive)
        return Reduction(SimpleGraph(m, tuple(rows)), merged)
    return _reduce_random(g, alive, rng)


def reduce_pair(g: SimpleGraph, a: int, b: int, rng: random.Random | None = None) -> SimpleGraph:
    return reduce_pair_detail(g, a, b, rng).graph


def _reduce_random(g: SimpleGraph, alive: int, rng: random.Random) -> Reduction:
    adj = [g.rows[v] & alive if alive >> v & 1 else 0 for v in range(g.order)]
    merged = False
    while True:
        low = [v for v in _bits(alive) if adj[v].bit_count() <= 2]
        if not low:
            break
        v = rng.choice(low)
        nb = adj[v]
        alive &= ~(1 << v)
        adj[v] = 0
        for u in _bits(nb):
            adj[u] &= ~(1 << v)
        if nb.bit_count() == 2:
            p, q = _bits(nb)
            if adj[p] >> q & 1:
                merged = True
            else:
                adj[p] |= 1 << q
                adj[q] |= 1 << p
    keep = list(_bits(alive))
    index = {v: i for i, v in enumerate(keep)}
    rows = tuple(sum(1 << index[u] for u in _bits(adj[v])) for v in keep)
    return Reduction(SimpleGraph(len(keep), rows), merged)


# ---------------------------------------------------------------------------
# ledger
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReductionLedger:
    pair: tuple[int, int]
    ne: int
    nv3: int
    v4: int
    vy: int
    predicted: int
    actual: int
    degenerate: bool
    in_regime: bool = field(default=True, compare=False)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pair"] = list(self.pair)
        del d["in_regime"]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _nbr_of_degree(g: SimpleGraph, v: int, deg: int, exclude: int) -> int:
    out = 0
    for u in _bits(g.rows[v] & ~exclude):
        if g.rows[u].bit_count() == deg:
            out |= 1 << u
    return out


def in_ledger_regime(g: SimpleGraph) -> bool:
    return g.edge_count == 22 and min(g.degrees(), default=3) >= 3 and is_triangle_free(g)


def pair_ledger(g: SimpleGraph, a: int, b: int) -> ReductionLedger:
    """Edge bookkeeping for deleting ``a`` and ``b``, next to the real reduction.

    The pair vertices never count as members of each other's neighbour classes.
    Outside the 22-edge, min-degree-3, triangle-free regime an ``OutOfRegime``
    warning is issued and the ledger is still returned.
    """
    _check_pair(g, a, b)
    in_regime = in_ledger_regime(g)
    if not in_regime:
        warnings.warn("ledger computed outside its regime", OutOfRegime, stacklevel=2)
    ab = (1 << a) | (1 << b)
    ne = g.degree(a) + g.degree(b) - int(g.has_edge(a, b))
    v3a = _nbr_of_degree(g, a, 3, ab)
    v3b = _nbr_of_degree(g, b, 3, ab)
    v3ab = v3a & v3b
    v4ab = _nbr_of_degree(g, a, 4, ab) & _nbr_of_degree(g, b, 4, ab)
    vy = 0
    for d in _bits(v3ab):
        vy |= _nbr_of_degree(g, d, 3, ab)
    nv3 = v3a.bit_count() + v3b.bit_count() - v3ab.bit_count()
    predicted = g.edge_count - ne - (nv3 + v4ab.bit_count() + vy.bit_count())
    red = reduce_pair_detail(g, a, b)
    crowded = any((g.rows[c] & v3ab).bit_count() >= 2 for c in range(g.order) if not ab >> c & 1)
    return ReductionLedger(
        pair=(a, b),
        ne=ne,
        nv3=nv3,
        v4=v4ab.bit_count(),
        vy=vy.bit_count(),
        predicted=predicted,
        actual=red.graph.edge_count,
        degenerate=crowded or red.merged,
        in_regime=in_regime,
    )


# ---------------------------------------------------------------------------
# neighbourhood partition around a pair
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairNeighborhoodProfile:
    pair: tuple[int, int]
    x: int
    y: int
    z: int
    full: bool  # False when the pair is not a distance-2 pair of degree-5 vertices
    ua: int | None = None
    ub: int | None = None
    wa: int | None = None
    wb: int | None = None
    boundary_degrees: tuple[int, ...] | None = None
    extra_edges: int | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pair"] = list(self.pair)
        if self.boundary_degrees is not None:
            d["boundary_degrees"] = list(self.boundary_degrees)
        return d


def neighborhood_partition(g: SimpleGraph, a: int, b: int) -> PairNeighborhoodProfile:
    """Split the neighbours of ``a`` and ``b`` by degree and sharing.

    ``x``, ``y``, ``z`` count common neighbours of degree 3, 4 and 5.  For a
    distance-2 pair of degree-5 vertices the private classes and the boundary of
    the subgraph spanned by the edges at ``V(a) + b`` are filled in too.
    """
    _check_pair(g, a, b)
    ab = (1 << a) | (1 << b)
    na = g.rows[a] & ~ab
    nb = g.rows[b] & ~ab
    common = na & nb
    by_deg = [0] * 8
    for c in _bits(common):
        d = g.rows[c].bit_count()
        if d < 8:
            by_deg[d] |= 1 << c
    x, y, z = by_deg[3].bit_count(), by_deg[4].bit_count(), by_deg[5].bit_count()
    if not (g.degree(a) == 5 and g.degree(b) == 5 and distance(g, a, b) == 2):
        return PairNeighborhoodProfile((a, b), x, y, z, full=False)
    v3a = _nbr_of_degree(g, a, 3, ab)
    v3b = _nbr_of_degree(g, b, 3, ab)
    v3ab = v3a & v3b
    ua = (v3a & ~v3ab).bit_count()
    ub = (v3b & ~v3ab).bit_count()
    wa = (na & ~v3a & ~nb).bit_count()
    wb = (nb & ~v3b & ~na).bit_count()
    # H holds every edge at V(a) or b; the boundary is everything outside a, b and V(a)
    core = g.rows[a] | (1 << b)
    h_edges = set()
    for c in _bits(core):
        for u in _bits(g.rows[c]):
            h_edges.add((min(c, u), max(c, u)))
    boundary = ((1 << g.order) - 1) & ~core & ~(1 << a)
    degs = tuple(sorted((g.rows[c].bit_count() for c in _bits(boundary)), reverse=True))
    extra = g.edge_count - len(h_edges)
    return PairNeighborhoodProfile(
        (a, b), x, y, z, True, ua, ub, wa, wb, boundary_degrees=degs, extra_edges=extra
    )


def check_pair(g: SimpleGraph, pair: tuple[int, int]) -> tuple[int, int]:
    a, b = pair
    if not (0 <= a < g.order and 0 <= b < g.order):
        raise BadVertex(f"pair {pair} out of range")
    if a == b:
        raise SamePair(f"pair {pair} repeats a vertex")
    return a, b
