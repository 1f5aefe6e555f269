"""Elimination and positive certificates, and the end-to-end classification run."""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import IO, Iterable, Sequence

from . import kernels
from .catalog import COUSIN94_DEGREES, build, e9e_family, k3311_family, k7_family
from .enumeration import MAX_DEG_5_TWO_DEG_5, MAX_DEG_AT_LEAST_6, Regime, enumerate_regime
from .graph import (
    SimpleGraph,
    _bits,
    canonicalize,
    contract_edge,
    degree_sequence,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    is_connected,
)
from .moves import FamilyClosure, triangle_free_members
from .planarity import classify_reduced, is_planar
from .reduction import _reduce_random, reduce_pair

PLANAR_REDUCTION = "planar-reduction"
TWO_CUT = "two-cut"
ALL_RULES = (PLANAR_REDUCTION, TWO_CUT)


class CertificateKind(str, Enum):
    PLANAR_REDUCTION = "NotIKPlanarReduction"
    TWO_CUT = "NotIKTwoCut"
    CONTRACTION = "IKByContraction"
    SURVIVOR = "Survivor"


@dataclass(frozen=True)
class Certificate:
    kind: CertificateKind
    graph6: str
    details: dict = field(default_factory=dict)

    @property
    def eliminated(self) -> bool:
        return self.kind in (CertificateKind.PLANAR_REDUCTION, CertificateKind.TWO_CUT)

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "graph6": self.graph6, **self.details}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def pair_order(g: SimpleGraph) -> list[tuple[int, int]]:
    """All vertex pairs, highest degree sum first, then lexicographic."""
    deg = g.degrees()
    pairs = [(u, v) for u in range(g.order) for v in range(u + 1, g.order)]
    pairs.sort(key=lambda p: (-(deg[p[0]] + deg[p[1]]), p))
    return pairs


def two_cut_pieces(g: SimpleGraph, u: int, v: int) -> list[SimpleGraph] | None:
    """Pieces ``S + {u, v}`` over the components ``S`` of ``g - {u, v}``; None if not a cut."""
    rest = ((1 << g.order) - 1) & ~(1 << u) & ~(1 << v)
    comps = []
    while rest:
        start = rest & -rest
        seen = frontier = start
        while frontier:
            w = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = g.rows[w] & rest & ~seen
            seen |= new
            frontier |= new
        comps.append(seen)
        rest &= ~seen
    if len(comps) < 2:
        return None
    return [induced_subgraph(g, list(_bits(c)) + [u, v]) for c in comps]


def eliminate(
    g: SimpleGraph,
    rules: Sequence[str] = ALL_RULES,
    pairs: Sequence[tuple[int, int]] | None = None,
) -> Certificate:
    """Try the planar-reduction rule over all pairs, then the two-cut rule."""
    g6 = graph6_encode(g).decode()
    if PLANAR_REDUCTION in rules:
        order = list(pairs) if pairs is not None else pair_order(g)
        idx = kernels.active.first_planar_pair(g.order, g.rows, order)
        if idx >= 0:
            a, b = order[idx]
            h = reduce_pair(g, a, b)
            outcome = classify_reduced(h)
            return Certificate(
                CertificateKind.PLANAR_REDUCTION,
                g6,
                {"pair": [a, b], "reduced_edges": h.edge_count, "clause": outcome.kind.value},
            )
    if TWO_CUT in rules:
        for u in range(g.order):
            for v in range(u + 1, g.order):
                pieces = two_cut_pieces(g, u, v)
                if pieces is not None and all(is_planar(p) for p in pieces):
                    sides = [{"order": p.order, "edges": p.edge_count} for p in pieces]
                    return Certificate(CertificateKind.TWO_CUT, g6, {"cut": [u, v], "sides": sides})
    return Certificate(CertificateKind.SURVIVOR, g6, {})


def positive_certificate(g: SimpleGraph, families: Sequence[tuple[str, FamilyClosure]]) -> Certificate | None:
    """First edge (lexicographic) whose contraction is a member of one of ``families``."""
    for e in g.edges():
        h = contract_edge(g, e)
        form = canonicalize(h)
        for name, fam in families:
            if form in fam:
                return Certificate(
                    CertificateKind.CONTRACTION,
                    graph6_encode(g).decode(),
                    {"edge": list(e), "family": name, "target_order": h.order, "target": form.decode()},
                )
    return None


def check_certificate(cert: Certificate, families: dict[str, FamilyClosure] | None = None, seed: int = 0) -> bool:
    """Re-validate a certificate from its witness data alone.

    Reductions are replayed with a random processing order through the pure-Python
    path, and planarity through the pure-Python kernel.
    """
    g = graph6_decode(cert.graph6)
    rng = random.Random(seed)
    py = kernels.python_backend

    def planar(h: SimpleGraph) -> bool:
        return py.is_planar(h.order, h.rows)

    d = cert.details
    if cert.kind is CertificateKind.PLANAR_REDUCTION:
        a, b = d["pair"]
        h = _reduce_random(g, ((1 << g.order) - 1) & ~(1 << a) & ~(1 << b), rng).graph
        return planar(h) and h.edge_count == d["reduced_edges"]
    if cert.kind is CertificateKind.TWO_CUT:
        u, v = d["cut"]
        pieces = two_cut_pieces(g, u, v)
        return pieces is not None and all(planar(p) for p in pieces)
    if cert.kind is CertificateKind.CONTRACTION:
        if families is None or d["family"] not in families:
            return False
        h = contract_edge(g, tuple(d["edge"]))
        return h.order == d["target_order"] and canonicalize(h) in families[d["family"]]
    full = (1 << g.order) - 1
    for a in range(g.order):
        for b in range(a + 1, g.order):
            h = _reduce_random(g, full & ~(1 << a) & ~(1 << b), rng).graph
            if planar(h):
                return False
    return True


# ---------------------------------------------------------------------------
# full classification run
# ---------------------------------------------------------------------------


@dataclass
class Check:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected, "actual": self.actual, "ok": self.ok}


@dataclass
class TheoremReport:
    regimes: dict = field(default_factory=dict)
    survivors: list = field(default_factory=list)
    families: dict = field(default_factory=dict)
    two_cut_only: list = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_dict(self, with_timing: bool = True) -> dict:
        d = {
            "ok": self.ok,
            "regimes": self.regimes,
            "survivors": self.survivors,
            "families": self.families,
            "two_cut_only": self.two_cut_only,
            "checks": [c.to_dict() for c in self.checks],
        }
        if with_timing:
            d["timing"] = self.timing
        return d

    def to_json(self, with_timing: bool = True) -> str:
        return json.dumps(self.to_dict(with_timing), indent=1, sort_keys=True)


def _eliminate_batch(args) -> list[Certificate]:
    forms, rules, backend = args
    if backend != kernels.BACKEND:
        kernels.set_backend(backend)
    return [eliminate(graph6_decode(f), rules) for f in forms]


def eliminate_all(graphs: Iterable[SimpleGraph], rules: Sequence[str] = ALL_RULES, jobs: int = 1) -> list[Certificate]:
    graphs = list(graphs)
    if jobs <= 1 or len(graphs) < 64:
        return [eliminate(g, rules) for g in graphs]
    forms = [graph6_encode(g) for g in graphs]
    size = max(16, len(forms) // (8 * jobs))
    batches = [(forms[i : i + size], tuple(rules), kernels.BACKEND) for i in range(0, len(forms), size)]
    out: list[Certificate] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_eliminate_batch, batches):
            out.extend(part)
    return out


def standard_families() -> list[tuple[str, FamilyClosure]]:
    return [("K7", k7_family()), ("K3311", k3311_family()), ("E9+e", e9e_family())]


def verify_theorem(
    jobs: int = 1,
    budget: int | None = None,
    sink: IO[str] | None = None,
    rules: Sequence[str] = ALL_RULES,
) -> TheoremReport:
    """Enumerate both regimes, eliminate, certify survivors and check the expected outcome.

    Per-candidate certificates are written to ``sink`` as JSON lines.
    """
    rep = TheoremReport()
    t0 = time.perf_counter()
    fams = standard_families()
    fam_map = dict(fams)
    k7, k3311, e9e = fam_map["K7"], fam_map["K3311"], fam_map["E9+e"]
    rep.families = {
        name: {"members": len(f), "triangle_free": len(triangle_free_members(f))} for name, f in fams
    }
    rep.checks += [
        Check("K7 family size (triangle-to-Y only)", 14, len(k7)),
        Check("K3311 family size", 58, len(k3311)),
        Check("E9+e family size (seeded from cousin 110)", 110, len(e9e)),
        Check("K3311 family triangle-free members", 4, len(triangle_free_members(k3311))),
        Check("E9+e family triangle-free members", 10, len(triangle_free_members(e9e))),
    ]
    rep.timing["families_s"] = round(time.perf_counter() - t0, 3)

    catalog_forms = {name: canonicalize(build(name, with_witness=False).graph) for name in ("cousin110", "M_11")}
    cousin94_form = canonicalize(build("cousin94", with_witness=False).graph)

    expected = {MAX_DEG_AT_LEAST_6: 0, MAX_DEG_5_TWO_DEG_5: 3}
    all_survivors: list[tuple[str, SimpleGraph]] = []
    for profile in (MAX_DEG_AT_LEAST_6, MAX_DEG_5_TWO_DEG_5):
        t1 = time.perf_counter()
        regime = Regime(22, profile=profile)
        res = enumerate_regime(regime, jobs=jobs, budget=budget)
        t2 = time.perf_counter()
        certs = eliminate_all(res.graphs, rules, jobs)
        t3 = time.perf_counter()
        counts: dict[str, int] = {}
        survivors = []
        for g, c in zip(res.graphs, certs):
            counts[c.kind.value] = counts.get(c.kind.value, 0) + 1
            if c.kind is CertificateKind.SURVIVOR:
                survivors.append(g)
                pos = positive_certificate(g, fams)
                if pos is not None:
                    c = pos
            if sink is not None:
                rec = c.to_dict()
                rec["degree_sequence"] = degree_sequence(g)
                rec["regime"] = profile
                sink.write(json.dumps(rec, sort_keys=True) + "\n")
        if TWO_CUT in rules:
            restricted = eliminate_all([g for g, c in zip(res.graphs, certs) if c.kind is CertificateKind.TWO_CUT],
                                       (PLANAR_REDUCTION,), jobs)
            rep.two_cut_only += [
                {"regime": profile, "graph6": c.graph6} for c in restricted if c.kind is CertificateKind.SURVIVOR
            ]
        rep.regimes[profile] = {
            "candidates": len(res),
            "by_order": {str(k): v for k, v in sorted(res.by_order.items())},
            "generation_nodes": res.nodes,
            "truncated": res.truncated,
            "outcomes": dict(sorted(counts.items())),
            "survivors": len(survivors),
        }
        rep.timing[f"{profile}_enumerate_s"] = round(t2 - t1, 3)
        rep.timing[f"{profile}_eliminate_s"] = round(t3 - t2, 3)
        rep.checks.append(Check(f"{profile}: enumeration complete", False, res.truncated))
        rep.checks.append(Check(f"{profile}: survivors", expected[profile], len(survivors)))
        all_survivors += [(profile, g) for g in survivors]

    regime_b = sorted((g for p, g in all_survivors if p == MAX_DEG_5_TWO_DEG_5), key=lambda g: g.order)
    rep.checks.append(Check("two-deg5 survivor orders", [10, 11, 12], [g.order for g in regime_b]))
    rep.checks.append(
        Check(
            "two-deg5 survivor degree sequences",
            [[5, 5, 5, 5, 5, 5, 4, 4, 3, 3], [5, 5, 5, 5, 4, 4, 4, 3, 3, 3, 3], COUSIN94_DEGREES],
            [degree_sequence(g) for g in regime_b],
        )
    )
    by_order = {g.order: canonicalize(g) for g in regime_b}
    rep.checks.append(Check("order-10 survivor is cousin 110", True, by_order.get(10) == catalog_forms["cousin110"]))
    rep.checks.append(Check("order-11 survivor is M_11", True, by_order.get(11) == catalog_forms["M_11"]))
    rep.checks.append(Check("order-12 survivor is the derived cousin 94", True, by_order.get(12) == cousin94_form))
    names = {10: "cousin110", 11: "M_11", 12: "cousin94"}
    for p, g in all_survivors:
        cert = positive_certificate(g, fams)
        entry = {
            "regime": p,
            "graph6": graph6_encode(g).decode(),
            "order": g.order,
            "degree_sequence": degree_sequence(g),
            "name": names.get(g.order) if p == MAX_DEG_5_TWO_DEG_5 else None,
            "connected": is_connected(g),
            "certificate": cert.to_dict() if cert else None,
            "certificate_replays": bool(cert) and check_certificate(cert, fam_map),
        }
        rep.survivors.append(entry)
        rep.checks.append(
            Check(
                f"order-{g.order} survivor contracts into the K7 family",
                ["K7", g.order - 1, True],
                [cert.details["family"], cert.details["target_order"], entry["certificate_replays"]]
                if cert
                else None,
            )
        )
    rep.checks.append(Check("graphs eliminated only by the two-cut rule", [], rep.two_cut_only))
    rep.timing["total_s"] = round(time.perf_counter() - t0, 3)
    return rep


def audit_families(families: Sequence[tuple[str, FamilyClosure]] | None = None) -> dict[str, list[str]]:
    """Members of known intrinsically knotted families that some rule would eliminate (should be empty)."""
    out: dict[str, list[str]] = {}
    for name, fam in families or standard_families():
        bad = []
        for form in sorted(fam.members):
            if eliminate(graph6_decode(form)).eliminated:
                bad.append(form.decode())
        out[name] = bad
    return out
