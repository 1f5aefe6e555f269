"""Triangle-to-Y and Y-to-triangle moves and family closures."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ClosureBudget, NotATriangle, NotAYVertex, WouldCreateParallel
from .graph import (
    CanonicalForm,
    SimpleGraph,
    _bits,
    canonicalize,
    graph6_decode,
    is_triangle_free,
)

TY = "ty"  # triangle -> Y
YT = "yt"  # Y -> triangle
ALL_MOVES = frozenset({TY, YT})


def triangle_y(g: SimpleGraph, t: tuple[int, int, int]) -> SimpleGraph:
    """Remove the triangle's edges and join a new last vertex to its corners."""
    a, b, c = t
    for v in t:
        g._check(v)
    if len({a, b, c}) != 3 or not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        raise NotATriangle(f"{t} is not a triangle")
    n = g.order
    rows = list(g.rows)
    rows[a] = (rows[a] & ~(1 << b) & ~(1 << c)) | (1 << n)
    rows[b] = (rows[b] & ~(1 << a) & ~(1 << c)) | (1 << n)
    rows[c] = (rows[c] & ~(1 << a) & ~(1 << b)) | (1 << n)
    rows.append((1 << a) | (1 << b) | (1 << c))
    return SimpleGraph(n + 1, tuple(rows))


def y_triangle(g: SimpleGraph, v: int) -> SimpleGraph:
    """Delete a degree-3 vertex with independent neighbours and join them pairwise."""
    g._check(v)
    if g.degree(v) != 3:
        raise NotAYVertex(f"vertex {v} has degree {g.degree(v)}")
    a, b, c = _bits(g.rows[v])
    if g.has_edge(a, b) or g.has_edge(b, c) or g.has_edge(a, c):
        raise WouldCreateParallel(f"neighbours of {v} are not independent")
    rows = list(g.rows)
    rows[a] |= (1 << b) | (1 << c)
    rows[b] |= (1 << a) | (1 << c)
    rows[c] |= (1 << a) | (1 << b)
    keep = [w for w in range(g.order) if w != v]
    index = {w: i for i, w in enumerate(keep)}
    out = tuple(sum(1 << index[u] for u in _bits(rows[w]) if u != v) for w in keep)
    return SimpleGraph(g.order - 1, out)


def triangles(g: SimpleGraph) -> list[tuple[int, int, int]]:
    out = []
    for a in range(g.order):
        for b in _bits(g.rows[a] >> (a + 1) << (a + 1)):
            for c in _bits(g.rows[a] & g.rows[b] & ~((2 << b) - 1)):
                out.append((a, b, c))
    return out


def y_vertices(g: SimpleGraph) -> list[int]:
    """Vertices where a Y-to-triangle move is legal."""
    out = []
    for v in range(g.order):
        if g.rows[v].bit_count() == 3:
            a, b, c = _bits(g.rows[v])
            if not (g.rows[a] & ((1 << b) | (1 << c)) or g.rows[b] >> c & 1):
                out.append(v)
    return out


def legal_moves(g: SimpleGraph, moves=ALL_MOVES) -> list[tuple[str, tuple[int, ...]]]:
    out: list[tuple[str, tuple[int, ...]]] = []
    if TY in moves:
        out += [(TY, t) for t in triangles(g)]
    if YT in moves:
        out += [(YT, (v,)) for v in y_vertices(g)]
    return out


def apply_move(g: SimpleGraph, move: tuple[str, tuple[int, ...]]) -> SimpleGraph:
    kind, args = move
    if kind == TY:
        return triangle_y(g, args)  # type: ignore[arg-type]
    if kind == YT:
        return y_triangle(g, args[0])
    raise ValueError(f"unknown move {kind!r}")


@dataclass
class FamilyMember:
    form: CanonicalForm
    index: int
    depth: int
    parent: CanonicalForm | None
    move: tuple[str, tuple[int, ...]] | None  # applied to the parent's canonical graph

    @property
    def graph(self) -> SimpleGraph:
        return graph6_decode(self.form)


@dataclass
class FamilyClosure:
    seed: CanonicalForm
    moves: frozenset
    members: dict[CanonicalForm, FamilyMember] = field(default_factory=dict)
    complete: bool = True

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, form) -> bool:
        return form in self.members

    def graphs(self) -> list[SimpleGraph]:
        return [m.graph for m in self.ordered()]

    def ordered(self) -> list[FamilyMember]:
        return sorted(self.members.values(), key=lambda m: m.index)

    def path_to(self, form: CanonicalForm) -> list[tuple[CanonicalForm, tuple[str, tuple[int, ...]]]]:
        """Move sequence from the seed: ``(graph the move acts on, move)`` pairs."""
        steps = []
        m = self.members[form]
        while m.parent is not None:
            steps.append((m.parent, m.move))
            m = self.members[m.parent]
        return steps[::-1]

    def by_order(self) -> dict[int, list[CanonicalForm]]:
        out: dict[int, list[CanonicalForm]] = {}
        for m in self.ordered():
            out.setdefault(m.form[0] - 63, []).append(m.form)
        return out


def family_closure(seed: SimpleGraph, moves=ALL_MOVES, budget: int | None = None) -> FamilyClosure:
    """Breadth-first closure over canonical forms under the selected moves.

    Each layer is expanded in canonical-form order, so member numbering and the
    recorded parent move are deterministic.
    """
    moves = frozenset(moves)
    if not moves <= ALL_MOVES:
        raise ValueError(f"unknown moves {set(moves - ALL_MOVES)}")
    root = canonicalize(seed)
    fam = FamilyClosure(root, moves)
    fam.members[root] = FamilyMember(root, 0, 0, None, None)
    layer = [root]
    depth = 0
    while layer:
        depth += 1
        nxt: list[CanonicalForm] = []
        for form in sorted(layer):
            g = graph6_decode(form)
            for mv in legal_moves(g, moves):
                h = canonicalize(apply_move(g, mv))
                if h in fam.members:
                    continue
                fam.members[h] = FamilyMember(h, len(fam.members), depth, form, mv)
                nxt.append(h)
                if budget is not None and len(fam.members) > budget:
                    fam.complete = False
                    raise ClosureBudget(f"closure exceeded {budget} members", partial=fam)
        layer = nxt
    return fam


def triangle_free_members(f: FamilyClosure) -> set[CanonicalForm]:
    return {form for form in f.members if is_triangle_free(graph6_decode(form))}


def export_family(f: FamilyClosure, path: str | Path) -> tuple[Path, Path]:
    """Write members as graph6 lines plus a JSON provenance sidecar."""
    path = Path(path)
    side = path.with_suffix(path.suffix + ".json")
    members = f.ordered()
    with open(path, "wb") as fh:
        for m in members:
            fh.write(m.form + b"\n")
    record = {
        "seed": f.seed.decode(),
        "moves": sorted(f.moves),
        "size": len(members),
        "members": [
            {
                "index": m.index,
                "graph6": m.form.decode(),
                "order": m.form[0] - 63,
                "depth": m.depth,
                "triangle_free": is_triangle_free(graph6_decode(m.form)),
                "parent": m.parent.decode() if m.parent is not None else None,
                "move": [m.move[0], list(m.move[1])] if m.move is not None else None,
            }
            for m in members
        ],
    }
    side.write_text(json.dumps(record, indent=1) + "\n")
    return path, side
