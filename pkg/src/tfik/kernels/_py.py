"""Pure-Python kernels.

This module mirrors ``_core.pyx`` function for function and produces bit-identical
results (canonical forms, labelings, orbits, enumeration order).  Graphs are passed
as ``(n, rows)`` where ``rows[v]`` is the neighbourhood bitmask of vertex ``v``.
"""

from __future__ import annotations

MAXN = 64


class CanonOverflow(RuntimeError):
    pass


def _low(x: int) -> int:
    return (x & -x).bit_length() - 1


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# ---------------------------------------------------------------------------
# partition refinement and canonical labeling
# ---------------------------------------------------------------------------


def _refine(n: int, adj, lab: list, ptn: list, active: int) -> None:
    while active:
        w = _low(active)
        active &= active - 1
        we = w
        while not ptn[we]:
            we += 1
        wmask = 0
        for p in range(w, we + 1):
            wmask |= 1 << lab[p]
        s = 0
        while s < n:
            e = s
            while not ptn[e]:
                e += 1
            if e > s:
                cnt = [(adj[lab[p]] & wmask).bit_count() for p in range(s, e + 1)]
                if min(cnt) != max(cnt):
                    order = sorted(range(e - s + 1), key=cnt.__getitem__)
                    verts = [lab[s + i] for i in order]
                    cnt = [cnt[i] for i in order]
                    lab[s : e + 1] = verts
                    active |= 1 << s
                    for i in range(e - s):
                        if cnt[i] != cnt[i + 1]:
                            ptn[s + i] = 1
                            active |= 1 << (s + i + 1)
            s = e + 1


def _cert(n: int, adj, lab) -> tuple:
    inv = [0] * n
    for i, v in enumerate(lab):
        inv[v] = i
    out = []
    for i in range(n):
        row = 0
        for u in _bits(adj[lab[i]]):
            row |= 1 << inv[u]
        out.append(row)
    return tuple(out)


class _Canon:
    """Individualization-refinement search for the lexicographically largest leaf."""

    maxgens = 512

    def __init__(self, n: int, adj):
        self.n = n
        self.adj = adj
        self.first = None  # (cert, lab, seq)
        self.best = None
        self.gens: list[list[int]] = []
        self.seq = [0] * (n + 1)

    def run(self):
        n = self.n
        lab = list(range(n))
        ptn = [0] * n
        if n:
            ptn[n - 1] = 1
            _refine(n, self.adj, lab, ptn, 1)
            self._search(0, lab, ptn)
        return self

    def _add_gen(self, src, dst) -> None:
        if len(self.gens) >= self.maxgens:
            raise CanonOverflow("automorphism generator table full")
        gamma = [0] * self.n
        for i in range(self.n):
            gamma[src[i]] = dst[i]
        self.gens.append(gamma)

    def _orbit_hit(self, level: int, v: int, tried: int) -> bool:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        prefix = self.seq[:level]
        for g in self.gens:
            if all(g[u] == u for u in prefix):
                for i in range(self.n):
                    a, b = find(i), find(g[i])
                    if a != b:
                        if a < b:
                            parent[b] = a
                        else:
                            parent[a] = b
        rv = find(v)
        return any(find(u) == rv for u in _bits(tried))

    def _leaf(self, level: int, lab) -> int:
        cert = _cert(self.n, self.adj, lab)
        seq = self.seq[:level]
        if self.first is None:
            self.first = self.best = (cert, list(lab), seq)
            return level
        if cert == self.first[0]:
            self._add_gen(self.first[1], lab)
            return _common(seq, self.first[2])
        if cert > self.best[0]:
            self.best = (cert, list(lab), seq)
            return level
        if cert == self.best[0]:
            self._add_gen(self.best[1], lab)
            return _common(seq, self.best[2])
        return level

    def _search(self, level: int, lab, ptn) -> int:
        n = self.n
        bs = be = -1
        bsize = MAXN + 1
        s = 0
        while s < n:
            e = s
            while not ptn[e]:
                e += 1
            if e > s and e - s + 1 < bsize:
                bsize, bs, be = e - s + 1, s, e
            s = e + 1
        if bs < 0:
            return self._leaf(level, lab)
        cellmask = 0
        for p in range(bs, be + 1):
            cellmask |= 1 << lab[p]
        tried = 0
        for v in _bits(cellmask):
            if tried and self._orbit_hit(level, v, tried):
                continue
            clab = list(lab)
            cptn = list(ptn)
            p = clab.index(v, bs, be + 1)
            clab[p] = clab[bs]
            clab[bs] = v
            cptn[bs] = 1
            _refine(n, self.adj, clab, cptn, 1 << bs)
            self.seq[level] = v
            r = self._search(level + 1, clab, cptn)
            tried |= 1 << v
            if r < level:
                return r
        return level

    def orbits(self) -> list[int]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for g in self.gens:
            for i in range(self.n):
                a, b = find(i), find(g[i])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return [find(i) for i in range(self.n)]


def _common(a, b) -> int:
    i = 0
    while i < len(a) and i < len(b) and a[i] == b[i]:
        i += 1
    return i


def g6_from_rows(n: int, rows) -> bytes:
    """graph6 bytes of a labeled graph (n <= 62)."""
    out = bytearray([n + 63])
    acc = 0
    nbits = 0
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def canon(n: int, rows) -> tuple[list[int], list[int]]:
    """Canonical labeling ``lab`` (position -> vertex) and orbit representatives."""
    c = _Canon(n, list(rows)).run()
    lab = c.best[1] if n else []
    return lab, c.orbits()


def canon_form(n: int, rows) -> bytes:
    c = _Canon(n, list(rows)).run()
    if not n:
        return g6_from_rows(0, ())
    return g6_from_rows(n, c.best[0])


# ---------------------------------------------------------------------------
# planarity
# ---------------------------------------------------------------------------


def _component(adj, mask: int, start: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        v = _low(frontier)
        frontier &= frontier - 1
        nb = adj[v] & mask & ~seen
        seen |= nb
        frontier |= nb
    return seen


def _edges_in(adj, mask: int) -> int:
    return sum((adj[v] & mask).bit_count() for v in _bits(mask)) // 2


def _planar_connected(adj, comp: int) -> bool:
    nv = comp.bit_count()
    if nv <= 4:
        return True
    ne = _edges_in(adj, comp)
    if ne <= 8:
        return True
    if ne > 3 * nv - 6:
        return False
    for v in _bits(comp):
        sub = comp & ~(1 << v)
        if _component(adj, sub, _low(sub)) != sub:
            rest = sub
            while rest:
                d = _component(adj, rest, _low(rest))
                rest &= ~d
                if not _planar_connected(adj, d | (1 << v)):
                    return False
            return True
    return _dmp(adj, comp)


def _dmp(adj, vs: int) -> bool:
    """Demoucron-Malgrange-Pertuiset path addition on a biconnected graph."""
    A = [0] * MAXN
    for v in _bits(vs):
        A[v] = adj[v] & vs
    total = sum(A[v].bit_count() for v in _bits(vs)) // 2

    s = _low(vs)
    t = _low(A[s])
    parent = {t: -1}
    queue = [t]
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        if v == s:
            break
        for u in _bits(A[v]):
            if v == t and u == s:
                continue
            if u not in parent:
                parent[u] = v
                queue.append(u)
    cycle = []
    v = s
    while v != -1:
        cycle.append(v)
        v = parent[v]
    H = [0] * MAXN
    hv = 0
    for i in range(len(cycle)):
        a, b = cycle[i], cycle[(i + 1) % len(cycle)]
        H[a] |= 1 << b
        H[b] |= 1 << a
        hv |= 1 << a
    embedded = len(cycle)
    faces = [list(cycle), list(cycle)]
    fmask = [hv, hv]

    while embedded < total:
        chosen = None  # (att, comp or 0, face index)
        for u in _bits(hv):
            ch = A[u] & hv & ~H[u] & ~((2 << u) - 1)
            for w in _bits(ch):
                att = (1 << u) | (1 << w)
                adm = [f for f in range(len(faces)) if fmask[f] & att == att]
                if not adm:
                    return False
                if chosen is None or (len(adm) == 1 and chosen[3] != 1):
                    chosen = (att, 0, adm[0], len(adm))
        rest = vs & ~hv
        while rest:
            c = _component(A, rest, _low(rest))
            rest &= ~c
            att = 0
            for x in _bits(c):
                att |= A[x] & hv
            adm = [f for f in range(len(faces)) if fmask[f] & att == att]
            if not adm:
                return False
            if chosen is None or (len(adm) == 1 and chosen[3] != 1):
                chosen = (att, c, adm[0], len(adm))
        att, comp, f, _ = chosen
        if not comp:
            x = _low(att)
            y = _low(att & ~(1 << x))
            path = [x, y]
        else:
            x = _low(att)
            c0 = _low(A[x] & comp)
            par = {c0: -1}
            queue = [c0]
            qi = 0
            end = -1
            while qi < len(queue):
                c = queue[qi]
                qi += 1
                if A[c] & att & ~(1 << x):
                    end = c
                    break
                for u in _bits(A[c] & comp):
                    if u not in par:
                        par[u] = c
                        queue.append(u)
            y = _low(A[end] & att & ~(1 << x))
            inner = []
            c = end
            while c != -1:
                inner.append(c)
                c = par[c]
            inner.reverse()
            path = [x] + inner + [y]
        for i in range(len(path) - 1):
            a, b = path[i], path[i + 1]
            H[a] |= 1 << b
            H[b] |= 1 << a
            hv |= (1 << a) | (1 << b)
        embedded += len(path) - 1
        face = faces[f]
        L = len(face)
        i = face.index(x)
        j = face.index(y)
        arc1 = [face[(i + k) % L] for k in range((j - i) % L + 1)]
        arc2 = [face[(j + k) % L] for k in range((i - j) % L + 1)]
        interior = path[1:-1]
        f1 = arc1 + interior[::-1]
        f2 = arc2 + interior
        faces[f] = f1
        faces.append(f2)
        fmask[f] = _mask(f1)
        fmask.append(_mask(f2))
    return True


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def planar_mask(adj, vs: int) -> bool:
    rest = vs
    while rest:
        comp = _component(adj, rest, _low(rest))
        rest &= ~comp
        if not _planar_connected(adj, comp):
            return False
    return True


def is_planar(n: int, rows) -> bool:
    return planar_mask(list(rows), (1 << n) - 1)


# ---------------------------------------------------------------------------
# pair reduction
# ---------------------------------------------------------------------------


def reduce_mask(n: int, rows, alive: int) -> tuple[int, tuple, bool]:
    """Suppress degree <= 2 vertices of the subgraph induced on ``alive``.

    Always processes the lowest-index eligible vertex first.  Returns the compacted
    graph and whether a parallel edge was merged away.
    """
    A = [rows[v] & alive if (alive >> v) & 1 else 0 for v in range(n)]
    merged = False
    while True:
        v = -1
        for u in _bits(alive):
            if A[u].bit_count() <= 2:
                v = u
                break
        if v < 0:
            break
        nb = A[v]
        alive &= ~(1 << v)
        A[v] = 0
        for u in _bits(nb):
            A[u] &= ~(1 << v)
        if nb.bit_count() == 2:
            p = _low(nb)
            q = _low(nb & (nb - 1))
            if (A[p] >> q) & 1:
                merged = True
            else:
                A[p] |= 1 << q
                A[q] |= 1 << p
    keep = list(_bits(alive))
    index = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        row = 0
        for u in _bits(A[v]):
            row |= 1 << index[u]
        out.append(row)
    return len(keep), tuple(out), merged


def reduce_pair(n: int, rows, a: int, b: int) -> tuple[int, tuple, bool]:
    return reduce_mask(n, rows, ((1 << n) - 1) & ~(1 << a) & ~(1 << b))


def first_planar_pair(n: int, rows, pairs) -> int:
    """Index of the first pair whose reduction is planar, or -1."""
    full = (1 << n) - 1
    rows = list(rows)
    for idx, (a, b) in enumerate(pairs):
        m, red, _ = reduce_mask(n, rows, full & ~(1 << a) & ~(1 << b))
        if planar_mask(list(red), (1 << m) - 1):
            return idx
    return -1


# ---------------------------------------------------------------------------
# orderly generation by canonical vertex deletion
# ---------------------------------------------------------------------------


class _Gen:
    def __init__(self, n, m, mindeg, maxdeg, tf, stop, budget):
        self.n, self.m, self.mindeg, self.maxdeg = n, m, mindeg, maxdeg
        self.tf, self.stop, self.budget = tf, stop, budget
        self.nodes = 0
        self.truncated = False
        self.out = []

    def rec(self, k: int, adj: list, e: int) -> None:
        if self.truncated:
            return
        if k == self.stop:
            return
        deg = [adj[u].bit_count() for u in range(k)]
        gmin = min(deg) if k else 0
        r = self.n - k
        lo = max(0, self.mindeg - (r - 1))
        hi = min(self.maxdeg, k, gmin + 1)
        full = (1 << k) - 1
        seen: set = set()
        for d in range(lo, hi + 1):
            forced = 0
            bad = False
            for u in range(k):
                if deg[u] < d or self.mindeg - deg[u] > r - 1:
                    forced |= 1 << u
                    if deg[u] < d - 1 or deg[u] >= self.maxdeg:
                        bad = True
            if bad or forced.bit_count() > d:
                continue
            if self.tf and any(adj[u] & forced for u in _bits(forced)):
                continue
            avail = full & ~forced
            for u in range(k):
                if deg[u] >= self.maxdeg or deg[u] < d:
                    avail &= ~(1 << u)
            if self.tf:
                for u in _bits(forced):
                    avail &= ~adj[u]
            self._choose(k, adj, e, deg, d, forced, avail, d - forced.bit_count(), seen)
            if self.truncated:
                return

    def _choose(self, k, adj, e, deg, d, chosen, avail, need, seen) -> None:
        if need == 0:
            self._child(k, adj, e, deg, d, chosen, seen)
            return
        while avail and avail.bit_count() >= need:
            v = _low(avail)
            avail &= avail - 1
            nxt = avail & ~adj[v] if self.tf else avail
            self._choose(k, adj, e, deg, d, chosen | (1 << v), nxt, need - 1, seen)
            if self.truncated:
                return

    def _child(self, k, adj, e, deg, d, nbrs, seen) -> None:
        n1 = k + 1
        e1 = e + d
        r1 = self.n - n1
        R = self.m - e1
        if R < 0:
            return
        mindeg, maxdeg = self.mindeg, self.maxdeg
        sumdef = 0
        cross = 0
        for u in range(k):
            du = deg[u] + ((nbrs >> u) & 1)
            D = mindeg - du
            if D > r1:
                return
            if D > 0:
                sumdef += D
            cross += min(maxdeg - du, r1)
        D = mindeg - d
        if D > r1:
            return
        if D > 0:
            sumdef += D
        cross += min(maxdeg - d, r1)
        if r1 == 0:
            if R != 0 or sumdef:
                return
        else:
            if 2 * R < mindeg * r1 + sumdef:
                return
            smax = 0
            smin = 0
            for i in range(1, r1 + 1):
                smax += min(maxdeg, d + i, k + i)
                smin += max(0, mindeg - (i - 1))
            if R > smax or R < smin:
                return
            inner = (r1 * r1) // 4 if self.tf else r1 * (r1 - 1) // 2
            if R > cross + inner:
                return
        child = list(adj[:k])
        for u in _bits(nbrs):
            child[u] |= 1 << k
        child.append(nbrs)
        # cheap canonical-deletion test on the root equitable partition
        lab = list(range(n1))
        ptn = [0] * n1
        ptn[n1 - 1] = 1
        _refine(n1, child, lab, ptn, 1)
        p = n1 - 1
        while child[lab[p]].bit_count() != d:
            p -= 1
        s = p
        while s > 0 and not ptn[s - 1]:
            s -= 1
        e_ = p
        while not ptn[e_]:
            e_ += 1
        if k not in lab[s : e_ + 1]:
            return
        c = _Canon(n1, child).run()
        best_lab = c.best[1]
        p = n1 - 1
        while child[best_lab[p]].bit_count() != d:
            p -= 1
        mv = best_lab[p]
        if mv != k:
            orb = c.orbits()
            if orb[mv] != orb[k]:
                return
        key = g6_from_rows(n1, c.best[0])
        if key in seen:
            return
        seen.add(key)
        self.nodes += 1
        if self.budget and self.nodes > self.budget:
            self.truncated = True
            return
        if n1 == self.stop:
            self.out.append((tuple(child), key))
            return
        self.rec(n1, child, e1)


def generate(k, rows, n, m, mindeg, maxdeg, triangle_free, stop, budget=0):
    """Canonical-path descendants of the level-``k`` graph ``rows`` at level ``stop``.

    Returns ``(items, truncated, nodes)`` where items are ``(rows, canonical_g6)``.
    """
    g = _Gen(n, m, mindeg, maxdeg, bool(triangle_free), stop, budget)
    adj = list(rows)
    e = sum(r.bit_count() for r in adj) // 2
    if k == stop:
        return [(tuple(adj), canon_form(k, adj))], False, 0
    g.rec(k, adj, e)
    return g.out, g.truncated, g.nodes
