"""Planarity, homeomorphism to K33, and the planar-reduction test for a vertex pair."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import kernels
from .graph import SimpleGraph, _bits, canonicalize, from_edges
from .reduction import reduce_pair

_K33_FORM = None


def _k33_form() -> bytes:
    global _K33_FORM
    if _K33_FORM is None:
        _K33_FORM = canonicalize(from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)]))
    return _K33_FORM


def is_planar(g: SimpleGraph) -> bool:
    """Exact planarity (path addition on biconnected pieces)."""
    return kernels.active.is_planar(g.order, g.rows)


def smooth_degree_two(g: SimpleGraph) -> SimpleGraph | None:
    """Replace every degree-2 vertex by an edge between its neighbours.

    Returns None when a smoothing step would produce a parallel edge.  No vertex of
    any other degree is touched.
    """
    rows = list(g.rows)
    alive = (1 << g.order) - 1
    while True:
        v = next((u for u in _bits(alive) if rows[u].bit_count() == 2), -1)
        if v < 0:
            break
        p, q = _bits(rows[v])
        if rows[p] >> q & 1:
            return None
        alive &= ~(1 << v)
        rows[p] = (rows[p] & ~(1 << v)) | (1 << q)
        rows[q] = (rows[q] & ~(1 << v)) | (1 << p)
        rows[v] = 0
    keep = list(_bits(alive))
    index = {v: i for i, v in enumerate(keep)}
    return SimpleGraph(len(keep), tuple(sum(1 << index[u] for u in _bits(rows[v])) for v in keep))


def is_homeomorphic_to_k33(g: SimpleGraph) -> bool:
    if g.edge_count < 9:
        return False
    h = smooth_degree_two(g)
    return h is not None and h.order == 6 and h.edge_count == 9 and canonicalize(h) == _k33_form()


class ReductionClause(str, Enum):
    EDGE_BUDGET = "EdgeBudget"
    NINE_PLANAR = "NinePlanar"
    PLANAR_DIRECT = "PlanarDirect"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class ReductionOutcome:
    """Classification of a pair reduction; any kind but NOT_APPLICABLE means planar."""

    kind: ReductionClause
    reduced_edges: int

    @property
    def applies(self) -> bool:
        return self.kind is not ReductionClause.NOT_APPLICABLE


def classify_reduced(h: SimpleGraph) -> ReductionOutcome:
    m = h.edge_count
    if m <= 8:
        return ReductionOutcome(ReductionClause.EDGE_BUDGET, m)
    if m == 9 and not is_homeomorphic_to_k33(h):
        return ReductionOutcome(ReductionClause.NINE_PLANAR, m)
    if is_planar(h):
        return ReductionOutcome(ReductionClause.PLANAR_DIRECT, m)
    return ReductionOutcome(ReductionClause.NOT_APPLICABLE, m)


def classify_pair(g: SimpleGraph, a: int, b: int) -> ReductionOutcome:
    """Reduce at ``(a, b)`` and report which planarity clause (if any) applies."""
    return classify_reduced(reduce_pair(g, a, b))
