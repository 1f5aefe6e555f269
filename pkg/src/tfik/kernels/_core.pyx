# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels.

Same algorithms and tie-breaking as ``_py.py``; results are bit-identical.  All
graphs are bitset adjacency rows with at most 64 vertices.
"""

from libc.stdint cimport uint64_t
from libc.string cimport memcpy

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64
    MAXGENS = 512
    MAXF = 130


from ._py import CanonOverflow


cdef inline int popc(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t bit(int i) noexcept nogil:
    return (<uint64_t>1) << i


cdef inline uint64_t lowmask(int n) noexcept nogil:
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return bit(n) - 1


# ---------------------------------------------------------------------------
# partition refinement and canonical labeling
# ---------------------------------------------------------------------------

cdef void refine(int n, const uint64_t* adj, int* lab, char* ptn, uint64_t active) noexcept nogil:
    cdef int w, we, s, e, p, q, tc, tv, same
    cdef uint64_t wmask
    cdef int cnt[MAXN]
    while active:
        w = ctz(active)
        active &= active - 1
        we = w
        while not ptn[we]:
            we += 1
        wmask = 0
        for p in range(w, we + 1):
            wmask |= bit(lab[p])
        s = 0
        while s < n:
            e = s
            while not ptn[e]:
                e += 1
            if e > s:
                same = 1
                for p in range(s, e + 1):
                    cnt[p] = popc(adj[lab[p]] & wmask)
                    if cnt[p] != cnt[s]:
                        same = 0
                if not same:
                    for p in range(s + 1, e + 1):
                        tc = cnt[p]
                        tv = lab[p]
                        q = p - 1
                        while q >= s and cnt[q] > tc:
                            cnt[q + 1] = cnt[q]
                            lab[q + 1] = lab[q]
                            q -= 1
                        cnt[q + 1] = tc
                        lab[q + 1] = tv
                    active |= bit(s)
                    for p in range(s, e):
                        if cnt[p] != cnt[p + 1]:
                            ptn[p] = 1
                            active |= bit(p + 1)
            s = e + 1


# canonical search state; the module is single-threaded per process
cdef int C_n
cdef uint64_t C_adj[MAXN]
cdef bint C_have_first
cdef int C_first_lab[MAXN]
cdef int C_best_lab[MAXN]
cdef uint64_t C_first_cert[MAXN]
cdef uint64_t C_best_cert[MAXN]
cdef int C_first_seq[MAXN]
cdef int C_best_seq[MAXN]
cdef int C_first_depth
cdef int C_best_depth
cdef int C_seq[MAXN + 1]
cdef int C_ngens
cdef bint C_overflow
cdef int C_gens[MAXGENS][MAXN]


cdef inline int uf_find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef inline void uf_union(int* parent, int a, int b) noexcept nogil:
    a = uf_find(parent, a)
    b = uf_find(parent, b)
    if a != b:
        if a < b:
            parent[b] = a
        else:
            parent[a] = b


cdef bint orbit_hit(int level, int v, uint64_t tried) noexcept nogil:
    cdef int parent[MAXN]
    cdef int i, g, ok, n = C_n, rv
    for i in range(n):
        parent[i] = i
    for g in range(C_ngens):
        ok = 1
        for i in range(level):
            if C_gens[g][C_seq[i]] != C_seq[i]:
                ok = 0
                break
        if ok:
            for i in range(n):
                uf_union(parent, i, C_gens[g][i])
    rv = uf_find(parent, v)
    while tried:
        i = ctz(tried)
        tried &= tried - 1
        if uf_find(parent, i) == rv:
            return 1
    return 0


cdef void compute_cert(int n, const uint64_t* adj, const int* lab, uint64_t* cert) noexcept nogil:
    cdef int inv[MAXN]
    cdef int i
    cdef uint64_t row, nb
    for i in range(n):
        inv[lab[i]] = i
    for i in range(n):
        row = 0
        nb = adj[lab[i]]
        while nb:
            row |= bit(inv[ctz(nb)])
            nb &= nb - 1
        cert[i] = row


cdef inline int cmp_cert(int n, const uint64_t* a, const uint64_t* b) noexcept nogil:
    cdef int i
    for i in range(n):
        if a[i] != b[i]:
            return 1 if a[i] > b[i] else -1
    return 0


cdef inline int common_prefix(const int* a, int la, const int* b, int lb) noexcept nogil:
    cdef int i = 0
    while i < la and i < lb and a[i] == b[i]:
        i += 1
    return i


cdef void add_gen(const int* src, const int* dst) noexcept nogil:
    global C_ngens, C_overflow
    cdef int i
    if C_ngens >= MAXGENS:
        C_overflow = 1
        return
    for i in range(C_n):
        C_gens[C_ngens][src[i]] = dst[i]
    C_ngens += 1


cdef int leaf(int level, const int* lab) noexcept nogil:
    global C_have_first, C_first_depth, C_best_depth
    cdef uint64_t cert[MAXN]
    cdef int n = C_n, c
    compute_cert(n, C_adj, lab, cert)
    if not C_have_first:
        C_have_first = 1
        memcpy(C_first_cert, cert, n * sizeof(uint64_t))
        memcpy(C_best_cert, cert, n * sizeof(uint64_t))
        memcpy(C_first_lab, lab, n * sizeof(int))
        memcpy(C_best_lab, lab, n * sizeof(int))
        memcpy(C_first_seq, C_seq, level * sizeof(int))
        memcpy(C_best_seq, C_seq, level * sizeof(int))
        C_first_depth = level
        C_best_depth = level
        return level
    if cmp_cert(n, cert, C_first_cert) == 0:
        add_gen(C_first_lab, lab)
        return common_prefix(C_seq, level, C_first_seq, C_first_depth)
    c = cmp_cert(n, cert, C_best_cert)
    if c > 0:
        memcpy(C_best_cert, cert, n * sizeof(uint64_t))
        memcpy(C_best_lab, lab, n * sizeof(int))
        memcpy(C_best_seq, C_seq, level * sizeof(int))
        C_best_depth = level
        return level
    if c == 0:
        add_gen(C_best_lab, lab)
        return common_prefix(C_seq, level, C_best_seq, C_best_depth)
    return level


cdef int search(int level, const int* lab, const char* ptn) noexcept nogil:
    cdef int n = C_n
    cdef int s, e, bs = -1, be = -1, bsize = MAXN + 1, p, v, r
    cdef int clab[MAXN]
    cdef char cptn[MAXN]
    cdef uint64_t cellmask = 0, tried = 0
    s = 0
    while s < n:
        e = s
        while not ptn[e]:
            e += 1
        if e > s and e - s + 1 < bsize:
            bsize = e - s + 1
            bs = s
            be = e
        s = e + 1
    if bs < 0:
        return leaf(level, lab)
    for p in range(bs, be + 1):
        cellmask |= bit(lab[p])
    while cellmask:
        v = ctz(cellmask)
        cellmask &= cellmask - 1
        if tried and orbit_hit(level, v, tried):
            continue
        memcpy(clab, lab, n * sizeof(int))
        memcpy(cptn, ptn, n)
        p = bs
        while clab[p] != v:
            p += 1
        clab[p] = clab[bs]
        clab[bs] = v
        cptn[bs] = 1
        refine(n, C_adj, clab, cptn, bit(bs))
        C_seq[level] = v
        r = search(level + 1, clab, cptn)
        tried |= bit(v)
        if r < level:
            return r
    return level


cdef void run_canon(int n, const uint64_t* adj) noexcept nogil:
    global C_n, C_have_first, C_ngens, C_overflow
    cdef int lab[MAXN]
    cdef char ptn[MAXN]
    cdef int i
    C_n = n
    C_have_first = 0
    C_ngens = 0
    C_overflow = 0
    if n == 0:
        return
    for i in range(n):
        C_adj[i] = adj[i]
        lab[i] = i
        ptn[i] = 0
    ptn[n - 1] = 1
    refine(n, C_adj, lab, ptn, 1)
    search(0, lab, ptn)


cdef void canon_orbits(int* orbit) noexcept nogil:
    cdef int parent[MAXN]
    cdef int i, g
    for i in range(C_n):
        parent[i] = i
    for g in range(C_ngens):
        for i in range(C_n):
            uf_union(parent, i, C_gens[g][i])
    for i in range(C_n):
        orbit[i] = uf_find(parent, i)


cdef bytes g6_cert(int n, const uint64_t* rows):
    cdef bytearray out = bytearray()
    cdef int i, j, acc = 0, nbits = 0
    out.append(n + 63)
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | <int>((rows[j] >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


cdef int load_rows(rows, uint64_t* adj) except -1:
    cdef int n = len(rows), i
    if n > MAXN:
        raise ValueError("kernels support at most 64 vertices")
    for i in range(n):
        adj[i] = <uint64_t>rows[i]
    return n


def g6_from_rows(int n, rows):
    cdef uint64_t adj[MAXN]
    load_rows(rows, adj)
    return g6_cert(n, adj)


def canon(int n, rows):
    """Canonical labeling ``lab`` (position -> vertex) and orbit representatives."""
    cdef uint64_t adj[MAXN]
    cdef int orbit[MAXN]
    load_rows(rows, adj)
    run_canon(n, adj)
    if C_overflow:
        raise CanonOverflow("automorphism generator table full")
    canon_orbits(orbit)
    return [C_best_lab[i] for i in range(n)], [orbit[i] for i in range(n)]


def canon_form(int n, rows):
    cdef uint64_t adj[MAXN]
    load_rows(rows, adj)
    run_canon(n, adj)
    if C_overflow:
        raise CanonOverflow("automorphism generator table full")
    return g6_cert(n, C_best_cert)


# ---------------------------------------------------------------------------
# planarity
# ---------------------------------------------------------------------------

cdef uint64_t component(const uint64_t* adj, uint64_t mask, int start) noexcept nogil:
    cdef uint64_t seen = bit(start), frontier = bit(start), nb
    cdef int v
    while frontier:
        v = ctz(frontier)
        frontier &= frontier - 1
        nb = adj[v] & mask & ~seen
        seen |= nb
        frontier |= nb
    return seen


cdef int edges_in(const uint64_t* adj, uint64_t mask) noexcept nogil:
    cdef int total = 0
    cdef uint64_t m = mask
    while m:
        total += popc(adj[ctz(m)] & mask)
        m &= m - 1
    return total // 2


cdef uint64_t list_mask(const int* vs, int length) noexcept nogil:
    cdef uint64_t m = 0
    cdef int i
    for i in range(length):
        m |= bit(vs[i])
    return m


cdef bint dmp(const uint64_t* adj, uint64_t vs) noexcept nogil:
    cdef uint64_t A[MAXN]
    cdef uint64_t H[MAXN]
    cdef int faces[MAXF][MAXN + 1]
    cdef int flen[MAXF]
    cdef uint64_t fmask[MAXF]
    cdef int nf, total, embedded, s, t, v, u, w, i, j, k, L, f, cnt, firstf
    cdef int par[MAXN]
    cdef int queue[MAXN]
    cdef int qh, qt
    cdef int path[MAXN + 1]
    cdef int plen
    cdef int tmp[MAXN + 1]
    cdef int tlen
    cdef uint64_t m, hv, ch, att, rest, c, comp
    cdef uint64_t ch_att
    cdef uint64_t ch_comp
    cdef int ch_face, ch_cnt, x, y, end, c0

    m = vs
    while m:
        v = ctz(m)
        m &= m - 1
        A[v] = adj[v] & vs
        H[v] = 0
    total = edges_in(A, vs)

    s = ctz(vs)
    t = ctz(A[s])
    for i in range(MAXN):
        par[i] = -2
    par[t] = -1
    qh = 0
    qt = 0
    queue[qt] = t
    qt += 1
    while qh < qt:
        v = queue[qh]
        qh += 1
        if v == s:
            break
        m = A[v]
        while m:
            u = ctz(m)
            m &= m - 1
            if v == t and u == s:
                continue
            if par[u] == -2:
                par[u] = v
                queue[qt] = u
                qt += 1
    L = 0
    v = s
    while v != -1:
        faces[0][L] = v
        faces[1][L] = v
        L += 1
        v = par[v]
    hv = 0
    for i in range(L):
        u = faces[0][i]
        w = faces[0][(i + 1) % L]
        H[u] |= bit(w)
        H[w] |= bit(u)
        hv |= bit(u)
    flen[0] = L
    flen[1] = L
    fmask[0] = hv
    fmask[1] = hv
    nf = 2
    embedded = L

    while embedded < total:
        ch_cnt = 0
        ch_att = 0
        ch_comp = 0
        ch_face = -1
        m = hv
        while m:
            u = ctz(m)
            m &= m - 1
            ch = A[u] & hv & ~H[u] & ~(lowmask(u + 1))
            while ch:
                w = ctz(ch)
                ch &= ch - 1
                att = bit(u) | bit(w)
                cnt = 0
                firstf = -1
                for f in range(nf):
                    if fmask[f] & att == att:
                        if firstf < 0:
                            firstf = f
                        cnt += 1
                if cnt == 0:
                    return 0
                if ch_face < 0 or (cnt == 1 and ch_cnt != 1):
                    ch_att = att
                    ch_comp = 0
                    ch_face = firstf
                    ch_cnt = cnt
        rest = vs & ~hv
        while rest:
            comp = component(A, rest, ctz(rest))
            rest &= ~comp
            att = 0
            c = comp
            while c:
                att |= A[ctz(c)] & hv
                c &= c - 1
            cnt = 0
            firstf = -1
            for f in range(nf):
                if fmask[f] & att == att:
                    if firstf < 0:
                        firstf = f
                    cnt += 1
            if cnt == 0:
                return 0
            if ch_face < 0 or (cnt == 1 and ch_cnt != 1):
                ch_att = att
                ch_comp = comp
                ch_face = firstf
                ch_cnt = cnt

        x = ctz(ch_att)
        if ch_comp == 0:
            y = ctz(ch_att & ~bit(x))
            path[0] = x
            path[1] = y
            plen = 2
        else:
            c0 = ctz(A[x] & ch_comp)
            for i in range(MAXN):
                par[i] = -2
            par[c0] = -1
            qh = 0
            qt = 0
            queue[qt] = c0
            qt += 1
            end = -1
            while qh < qt:
                v = queue[qh]
                qh += 1
                if A[v] & ch_att & ~bit(x):
                    end = v
                    break
                m = A[v] & ch_comp
                while m:
                    u = ctz(m)
                    m &= m - 1
                    if par[u] == -2:
                        par[u] = v
                        queue[qt] = u
                        qt += 1
            if end < 0:
                return 0
            y = ctz(A[end] & ch_att & ~bit(x))
            tlen = 0
            v = end
            while v != -1:
                tmp[tlen] = v
                tlen += 1
                v = par[v]
            path[0] = x
            plen = 1
            for i in range(tlen - 1, -1, -1):
                path[plen] = tmp[i]
                plen += 1
            path[plen] = y
            plen += 1

        for i in range(plen - 1):
            u = path[i]
            w = path[i + 1]
            H[u] |= bit(w)
            H[w] |= bit(u)
            hv |= bit(u) | bit(w)
        embedded += plen - 1

        f = ch_face
        L = flen[f]
        i = 0
        while faces[f][i] != x:
            i += 1
        j = 0
        while faces[f][j] != y:
            j += 1
        # second face: arc j..i followed by the path interior
        tlen = 0
        for k in range((i - j + L) % L + 1):
            tmp[tlen] = faces[f][(j + k) % L]
            tlen += 1
        for k in range(1, plen - 1):
            tmp[tlen] = path[k]
            tlen += 1
        if nf >= MAXF:
            return 0
        memcpy(faces[nf], tmp, tlen * sizeof(int))
        flen[nf] = tlen
        fmask[nf] = list_mask(tmp, tlen)
        # first face: arc i..j followed by the reversed path interior
        tlen = 0
        for k in range((j - i + L) % L + 1):
            tmp[tlen] = faces[f][(i + k) % L]
            tlen += 1
        for k in range(plen - 2, 0, -1):
            tmp[tlen] = path[k]
            tlen += 1
        memcpy(faces[f], tmp, tlen * sizeof(int))
        flen[f] = tlen
        fmask[f] = list_mask(tmp, tlen)
        nf += 1
    return 1


cdef bint planar_connected(const uint64_t* adj, uint64_t comp) noexcept nogil:
    cdef int nv = popc(comp), ne, v
    cdef uint64_t m, sub, rest, d
    if nv <= 4:
        return 1
    ne = edges_in(adj, comp)
    if ne <= 8:
        return 1
    if ne > 3 * nv - 6:
        return 0
    m = comp
    while m:
        v = ctz(m)
        m &= m - 1
        sub = comp & ~bit(v)
        if component(adj, sub, ctz(sub)) != sub:
            rest = sub
            while rest:
                d = component(adj, rest, ctz(rest))
                rest &= ~d
                if not planar_connected(adj, d | bit(v)):
                    return 0
            return 1
    return dmp(adj, comp)


cdef bint planar_mask(const uint64_t* adj, uint64_t vs) noexcept nogil:
    cdef uint64_t rest = vs, comp
    while rest:
        comp = component(adj, rest, ctz(rest))
        rest &= ~comp
        if not planar_connected(adj, comp):
            return 0
    return 1


def is_planar(int n, rows):
    cdef uint64_t adj[MAXN]
    load_rows(rows, adj)
    return bool(planar_mask(adj, lowmask(n)))


# ---------------------------------------------------------------------------
# pair reduction
# ---------------------------------------------------------------------------

cdef int reduce_core(int n, const uint64_t* adj, uint64_t alive, uint64_t* out, bint* merged) noexcept nogil:
    cdef uint64_t A[MAXN]
    cdef uint64_t m, nb
    cdef int v, u, p, q, i, k
    cdef int index[MAXN]
    merged[0] = 0
    for v in range(n):
        A[v] = adj[v] & alive if (alive >> v) & 1 else 0
    while True:
        v = -1
        m = alive
        while m:
            u = ctz(m)
            m &= m - 1
            if popc(A[u]) <= 2:
                v = u
                break
        if v < 0:
            break
        nb = A[v]
        alive &= ~bit(v)
        A[v] = 0
        m = nb
        while m:
            u = ctz(m)
            m &= m - 1
            A[u] &= ~bit(v)
        if popc(nb) == 2:
            p = ctz(nb)
            q = ctz(nb & (nb - 1))
            if (A[p] >> q) & 1:
                merged[0] = 1
            else:
                A[p] |= bit(q)
                A[q] |= bit(p)
    k = 0
    m = alive
    while m:
        v = ctz(m)
        m &= m - 1
        index[v] = k
        k += 1
    i = 0
    m = alive
    while m:
        v = ctz(m)
        m &= m - 1
        out[i] = 0
        nb = A[v]
        while nb:
            out[i] |= bit(index[ctz(nb)])
            nb &= nb - 1
        i += 1
    return k


def reduce_mask(int n, rows, alive):
    cdef uint64_t adj[MAXN]
    cdef uint64_t out[MAXN]
    cdef bint merged
    cdef int k
    load_rows(rows, adj)
    k = reduce_core(n, adj, <uint64_t>alive, out, &merged)
    return k, tuple([out[i] for i in range(k)]), bool(merged)


def reduce_pair(int n, rows, int a, int b):
    return reduce_mask(n, rows, lowmask(n) & ~bit(a) & ~bit(b))


def first_planar_pair(int n, rows, pairs):
    """Index of the first pair whose reduction is planar, or -1."""
    cdef uint64_t adj[MAXN]
    cdef uint64_t out[MAXN]
    cdef bint merged
    cdef int k, idx = 0, a, b
    load_rows(rows, adj)
    for a, b in pairs:
        k = reduce_core(n, adj, lowmask(n) & ~bit(a) & ~bit(b), out, &merged)
        if planar_mask(out, lowmask(k)):
            return idx
        idx += 1
    return -1


# ---------------------------------------------------------------------------
# orderly generation by canonical vertex deletion
# ---------------------------------------------------------------------------

cdef struct GenParams:
    int n
    int m
    int mindeg
    int maxdeg
    bint tf
    int stop
    long long budget
    long long nodes
    bint truncated


cdef class _Gen:
    cdef GenParams P
    cdef list out

    cdef int rec(self, int k, const uint64_t* adj, int e) except -1:
        cdef int deg[MAXN]
        cdef int gmin = 0, r, lo, hi, d, u, bad
        cdef uint64_t forced, avail, full, nb
        cdef set seen
        if self.P.truncated or k == self.P.stop:
            return 0
        for u in range(k):
            deg[u] = popc(adj[u])
            if u == 0 or deg[u] < gmin:
                gmin = deg[u]
        r = self.P.n - k
        lo = self.P.mindeg - (r - 1)
        if lo < 0:
            lo = 0
        hi = gmin + 1
        if k < hi:
            hi = k
        if self.P.maxdeg < hi:
            hi = self.P.maxdeg
        full = lowmask(k)
        seen = set()
        for d in range(lo, hi + 1):
            forced = 0
            bad = 0
            for u in range(k):
                if deg[u] < d or self.P.mindeg - deg[u] > r - 1:
                    forced |= bit(u)
                    if deg[u] < d - 1 or deg[u] >= self.P.maxdeg:
                        bad = 1
            if bad or popc(forced) > d:
                continue
            if self.P.tf:
                nb = forced
                while nb:
                    if adj[ctz(nb)] & forced:
                        bad = 1
                        break
                    nb &= nb - 1
                if bad:
                    continue
            avail = full & ~forced
            for u in range(k):
                if deg[u] >= self.P.maxdeg or deg[u] < d:
                    avail &= ~bit(u)
            if self.P.tf:
                nb = forced
                while nb:
                    avail &= ~adj[ctz(nb)]
                    nb &= nb - 1
            self.choose(k, adj, e, deg, d, forced, avail, d - popc(forced), seen)
            if self.P.truncated:
                return 0
        return 0

    cdef int choose(self, int k, const uint64_t* adj, int e, const int* deg, int d,
                    uint64_t chosen, uint64_t avail, int need, set seen) except -1:
        cdef int v
        cdef uint64_t nxt
        if need == 0:
            self.child(k, adj, e, deg, d, chosen, seen)
            return 0
        while avail and popc(avail) >= need:
            v = ctz(avail)
            avail &= avail - 1
            nxt = avail & ~adj[v] if self.P.tf else avail
            self.choose(k, adj, e, deg, d, chosen | bit(v), nxt, need - 1, seen)
            if self.P.truncated:
                return 0
        return 0

    cdef int child(self, int k, const uint64_t* adj, int e, const int* deg, int d,
                   uint64_t nbrs, set seen) except -1:
        cdef int n1 = k + 1, e1 = e + d, r1, R, sumdef = 0, cross = 0, u, du, D, i, t
        cdef int smax = 0, smin = 0, inner, p, s, ee, mv
        cdef uint64_t child[MAXN]
        cdef int lab[MAXN]
        cdef char ptn[MAXN]
        cdef int orbit[MAXN]
        cdef bint found
        cdef int mindeg = self.P.mindeg, maxdeg = self.P.maxdeg
        r1 = self.P.n - n1
        R = self.P.m - e1
        if R < 0:
            return 0
        for u in range(k):
            du = deg[u] + <int>((nbrs >> u) & 1)
            D = mindeg - du
            if D > r1:
                return 0
            if D > 0:
                sumdef += D
            t = maxdeg - du
            cross += t if t < r1 else r1
        D = mindeg - d
        if D > r1:
            return 0
        if D > 0:
            sumdef += D
        t = maxdeg - d
        cross += t if t < r1 else r1
        if r1 == 0:
            if R != 0 or sumdef:
                return 0
        else:
            if 2 * R < mindeg * r1 + sumdef:
                return 0
            for i in range(1, r1 + 1):
                t = maxdeg
                if d + i < t:
                    t = d + i
                if k + i < t:
                    t = k + i
                smax += t
                t = mindeg - (i - 1)
                if t > 0:
                    smin += t
            if R > smax or R < smin:
                return 0
            inner = (r1 * r1) // 4 if self.P.tf else r1 * (r1 - 1) // 2
            if R > cross + inner:
                return 0
        for u in range(k):
            child[u] = adj[u]
            if (nbrs >> u) & 1:
                child[u] |= bit(k)
        child[k] = nbrs
        for i in range(n1):
            lab[i] = i
            ptn[i] = 0
        ptn[n1 - 1] = 1
        refine(n1, child, lab, ptn, 1)
        p = n1 - 1
        while popc(child[lab[p]]) != d:
            p -= 1
        s = p
        while s > 0 and not ptn[s - 1]:
            s -= 1
        ee = p
        while not ptn[ee]:
            ee += 1
        found = 0
        for i in range(s, ee + 1):
            if lab[i] == k:
                found = 1
                break
        if not found:
            return 0
        run_canon(n1, child)
        if C_overflow:
            raise CanonOverflow("automorphism generator table full")
        p = n1 - 1
        while popc(child[C_best_lab[p]]) != d:
            p -= 1
        mv = C_best_lab[p]
        if mv != k:
            canon_orbits(orbit)
            if orbit[mv] != orbit[k]:
                return 0
        key = g6_cert(n1, C_best_cert)
        if key in seen:
            return 0
        seen.add(key)
        self.P.nodes += 1
        if self.P.budget and self.P.nodes > self.P.budget:
            self.P.truncated = 1
            return 0
        if n1 == self.P.stop:
            self.out.append((tuple([child[i] for i in range(n1)]), key))
            return 0
        self.rec(n1, child, e1)
        return 0


def generate(int k, rows, int n, int m, int mindeg, int maxdeg, triangle_free, int stop, long long budget=0):
    """Canonical-path descendants of the level-``k`` graph ``rows`` at level ``stop``.

    Returns ``(items, truncated, nodes)`` where items are ``(rows, canonical_g6)``.
    """
    cdef uint64_t adj[MAXN]
    cdef int e = 0, i
    cdef _Gen g
    if n > MAXN or stop > MAXN:
        raise ValueError("kernels support at most 64 vertices")
    load_rows(rows, adj)
    for i in range(k):
        e += popc(adj[i])
    e //= 2
    if k == stop:
        return [(tuple(rows), canon_form(k, rows))], False, 0
    g = _Gen()
    g.out = []
    g.P.n = n
    g.P.m = m
    g.P.mindeg = mindeg
    g.P.maxdeg = maxdeg
    g.P.tf = bool(triangle_free)
    g.P.stop = stop
    g.P.budget = budget
    g.P.nodes = 0
    g.P.truncated = 0
    g.rec(k, adj, e)
    return g.out, bool(g.P.truncated), g.P.nodes
