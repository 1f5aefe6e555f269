"""Isomorph-free enumeration of regime graphs and a labeled brute-force oracle."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator, Sequence

from . import kernels
from .errors import OracleTooLarge, Truncated
from .graph import (
    CanonicalForm,
    SimpleGraph,
    canonicalize,
    degree_sequence,
    graph6_decode,
    is_connected,
    is_triangle_free,
)

__all__ = [
    "ANY_PROFILE",
    "MAX_DEG_5_TWO_DEG_5",
    "MAX_DEG_AT_LEAST_6",
    "EnumerationResult",
    "Regime",
    "brute_force_all",
    "enumerate_regime",
    "feasible_degree_sequences",
    "is_graphical",
    "triangle_free_feasible",
]

log = logging.getLogger("tfik.enumeration")

DegreePredicate = Callable[[Sequence[int]], bool]

MAX_DEG_AT_LEAST_6 = "maxdeg6plus"
MAX_DEG_5_TWO_DEG_5 = "two-deg5"
ANY_PROFILE = "any"

PROFILES: dict[str, DegreePredicate] = {
    MAX_DEG_AT_LEAST_6: lambda s: s[0] >= 6,
    MAX_DEG_5_TWO_DEG_5: lambda s: s[0] == 5 and s[1] == 5,
    ANY_PROFILE: lambda s: True,
}


@dataclass(frozen=True)
class Regime:
    """A class of graphs: edge count, degree floor, triangle-freeness, connectivity and a degree profile.

    ``profile`` is a profile name or a predicate on descending degree sequences.
    ``orders`` restricts the vertex counts considered; by default every order
    compatible with the other constraints is used.
    """

    edge_count: int
    min_degree: int = 3
    triangle_free: bool = True
    connected: bool = True
    profile: str | DegreePredicate = ANY_PROFILE
    orders: tuple[int, ...] | None = None

    def profile_predicate(self) -> DegreePredicate:
        if callable(self.profile):
            return self.profile
        try:
            return PROFILES[self.profile]
        except KeyError:
            raise ValueError(f"unknown profile {self.profile!r}") from None

    def order_range(self) -> range:
        m = self.edge_count
        lo = 1 if m == 0 else 2
        while lo * (lo - 1) // 2 < m or (self.triangle_free and lo * lo // 4 < m):
            lo += 1
        if self.min_degree > 0:
            hi = 2 * m // self.min_degree
        elif self.connected:
            hi = m + 1
        else:
            hi = -1
        if self.orders is not None:
            return range(min(self.orders), max(self.orders) + 1) if hi < 0 else range(
                max(lo, min(self.orders)), min(hi, max(self.orders)) + 1
            )
        if hi < 0:
            raise ValueError("orders must be given when isolated vertices are allowed")
        return range(lo, hi + 1)

    def feasible_orders(self) -> list[int]:
        allowed = set(self.orders) if self.orders is not None else None
        return [n for n in self.order_range() if allowed is None or n in allowed]

    def accepts(self, g: SimpleGraph) -> bool:
        """Post-hoc check of every regime predicate."""
        seq = degree_sequence(g)
        if g.edge_count != self.edge_count or (seq and seq[-1] < self.min_degree):
            return False
        if self.orders is not None and g.order not in self.orders:
            return False
        if self.triangle_free and not is_triangle_free(g):
            return False
        if self.connected and not is_connected(g):
            return False
        return self.profile_predicate()(seq)


def is_graphical(seq: Sequence[int]) -> bool:
    """Erdős–Gallai test for a descending sequence."""
    n = len(seq)
    if sum(seq) % 2:
        return False
    for k in range(1, n + 1):
        lhs = sum(seq[:k])
        rhs = k * (k - 1) + sum(min(d, k) for d in seq[k:])
        if lhs > rhs:
            return False
    return True


def triangle_free_feasible(seq: Sequence[int], m: int) -> bool:
    """Necessary conditions for a triangle-free realization with ``m`` edges.

    The neighbours of a vertex are independent, so their edges are distinct and
    their degrees sum to at most ``m``; bipartite-type density caps ``m`` at n^2/4.
    """
    n = len(seq)
    if m > n * n // 4:
        return False
    asc = sorted(seq)
    for d in set(seq):
        others = asc.copy()
        others.remove(d)
        if sum(others[:d]) > m:
            return False
    return True


def feasible_degree_sequences(r: Regime) -> list[tuple[int, ...]]:
    """Descending degree sequences that the regime allows and that pass the realizability tests."""
    pred = r.profile_predicate()
    out: list[tuple[int, ...]] = []
    total = 2 * r.edge_count
    for n in r.feasible_orders():
        cap = n - 1

        def rec(prefix: list[int], remaining: int, slots: int, top: int) -> None:
            if slots == 0:
                if remaining == 0:
                    seq = tuple(prefix)
                    if (
                        pred(seq)
                        and is_graphical(seq)
                        and (not r.triangle_free or triangle_free_feasible(seq, r.edge_count))
                    ):
                        out.append(seq)
                return
            for d in range(min(top, remaining - r.min_degree * (slots - 1)), r.min_degree - 1, -1):
                if d * slots < remaining:
                    break
                prefix.append(d)
                rec(prefix, remaining - d, slots - 1, d)
                prefix.pop()

        rec([], total, n, cap)
    return out


@dataclass
class EnumerationResult:
    regime: Regime
    graphs: list[SimpleGraph] = field(default_factory=list)
    forms: list[CanonicalForm] = field(default_factory=list)
    by_order: dict[int, int] = field(default_factory=dict)
    nodes: int = 0
    truncated: bool = False

    def __iter__(self) -> Iterator[SimpleGraph]:
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)


def _run_unit(args) -> tuple[list[tuple[tuple, bytes]], bool, int]:
    k, rows, n, m, mindeg, maxdeg, tf, budget, backend = args
    kern = kernels.compiled_backend if backend == "compiled" else kernels.python_backend
    return kern.generate(k, rows, n, m, mindeg, maxdeg, tf, n, budget)


def _split_level(n: int) -> int:
    return max(1, n - 5)


def enumerate_regime(r: Regime, jobs: int = 1, budget: int | None = None, strict: bool = False) -> EnumerationResult:
    """Every graph of the regime exactly once, as canonical graphs sorted by canonical form.

    ``budget`` caps the generation-tree nodes per order (per work unit when
    ``jobs > 1``).  On overrun the result is marked truncated, or ``Truncated`` is
    raised when ``strict``.
    """
    seqs = feasible_degree_sequences(r)
    by_n: dict[int, set[tuple[int, ...]]] = {}
    for s in seqs:
        by_n.setdefault(len(s), set()).add(s)
    res = EnumerationResult(r)
    kern = kernels.active
    backend = kernels.BACKEND
    found: list[tuple[bytes, SimpleGraph]] = []
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for n in sorted(by_n):
            allowed = by_n[n]
            maxdeg = max(s[0] for s in allowed)
            mindeg = min(s[-1] for s in allowed)
            b = budget or 0
            if pool is None:
                items, trunc, nodes = kern.generate(0, [], n, r.edge_count, mindeg, maxdeg, r.triangle_free, n, b)
            else:
                split = _split_level(n)
                top, trunc, nodes = kern.generate(0, [], n, r.edge_count, mindeg, maxdeg, r.triangle_free, split, b)
                units = [(split, rows, n, r.edge_count, mindeg, maxdeg, r.triangle_free, b, backend) for rows, _ in top]
                items = []
                chunk = max(1, len(units) // (8 * jobs))
                for sub, t, nd in pool.map(_run_unit, units, chunksize=chunk):
                    items.extend(sub)
                    trunc = trunc or t
                    nodes += nd
                if budget and nodes > budget:
                    trunc = True
            res.nodes += nodes
            res.truncated = res.truncated or trunc
            kept = 0
            for rows, form in items:
                g = SimpleGraph(n, tuple(rows))
                if tuple(degree_sequence(g)) not in allowed:
                    continue
                if r.connected and not is_connected(g):
                    continue
                found.append((form, graph6_decode(form)))
                kept += 1
            res.by_order[n] = kept
            log.info("order %d: %d graphs, %d nodes%s", n, kept, nodes, " (truncated)" if trunc else "")
    finally:
        if pool is not None:
            pool.shutdown()
    found.sort(key=lambda t: t[0])
    res.forms = [CanonicalForm(f) for f, _ in found]
    res.graphs = [g for _, g in found]
    if res.truncated and strict:
        raise Truncated("enumeration budget exhausted", partial=res)
    return res


# short alias; ``enumerate`` shadows the builtin only inside this namespace
enumerate = enumerate_regime  # noqa: A001


def default_jobs() -> int:
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------

ORACLE_MAX_ORDER = 9


def brute_force_all(
    order: int,
    edge_count: int,
    predicate: Callable[[SimpleGraph], bool] | None = None,
    *,
    min_degree: int = 0,
    max_degree: int | None = None,
    triangle_free: bool = False,
) -> set[CanonicalForm]:
    """Canonical forms of all graphs with the given order and size that pass the filters.

    Labeled graphs are built row by row with vertex degrees forced non-increasing in
    index order (every isomorphism class has such a labeling).  The keyword filters
    prune the search and are part of the acceptance test; ``predicate`` is applied
    to each complete labeled graph.
    """
    if order > ORACLE_MAX_ORDER:
        raise OracleTooLarge(f"oracle supports order <= {ORACLE_MAX_ORDER}")
    n, m = order, edge_count
    top = n - 1 if max_degree is None else min(max_degree, n - 1)
    out: set[CanonicalForm] = set()
    if n == 0:
        if m == 0 and (predicate is None or predicate(SimpleGraph(0, ()))):
            out.add(canonicalize(SimpleGraph(0, ())))
        return out
    rows = [0] * n
    deg = [0] * n

    def rec(i: int, edges: int, cap: int) -> None:
        if i == n:
            if edges == m:
                g = SimpleGraph(n, tuple(rows))
                if predicate is None or predicate(g):
                    out.add(canonicalize(g))
            return
        later = list(range(i + 1, n))
        base = deg[i]
        for extra in range(0, len(later) + 1):
            d = base + extra
            if d > cap or d > top:
                break
            if d < min_degree:
                continue
            if edges + extra > m:
                break
            for sub in combinations(later, extra):
                mask = 0
                ok = True
                for j in sub:
                    if deg[j] + 1 > d:
                        ok = False
                        break
                    if triangle_free and (rows[j] & (rows[i] | mask)):
                        ok = False
                        break
                    mask |= 1 << j
                if not ok:
                    continue
                for j in sub:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                    deg[j] += 1
                deg[i] = d
                e2 = edges + extra
                rest = m - e2
                need = sum(max(0, min_degree - deg[j]) for j in later)
                room = sum(d - deg[j] for j in later)
                if 2 * rest >= need and 2 * rest <= room:
                    rec(i + 1, e2, d)
                for j in sub:
                    rows[i] &= ~(1 << j)
                    rows[j] &= ~(1 << i)
                    deg[j] -= 1
                deg[i] = base

    rec(0, 0, top)
    return out
