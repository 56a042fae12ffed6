"""Local moves on 4-dimensional generalised triangulations.

Every move is applied by building the replacement complex and validating
it (simulate-and-validate).  A site is legal when the local configuration
matches the model of the move, the result is a valid facet pairing, and the
core f-vector (v, e | p) changes by the documented amount.

Untouched pentachora keep their relative order; new ones are appended.
"""
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .perm import compose, inverse
from .triangulation import Triangulation


class MoveKind(str, Enum):
    P15 = "1-5"
    P51 = "5-1"
    P24 = "2-4"
    P42 = "4-2"
    P33 = "3-3"
    P44 = "4-4"
    TWO_ZERO_TRIANGLE = "2-0t"
    TWO_ZERO_EDGE = "2-0e"
    TWO_ZERO_VERTEX = "2-0v"
    COLLAPSE_EDGE = "collapse"


# anchor face dimension and core f-vector delta (None: variable)
FACE_DIM = {
    MoveKind.P15: 4, MoveKind.P51: 0, MoveKind.P24: 3, MoveKind.P42: 1,
    MoveKind.P33: 2, MoveKind.P44: 1, MoveKind.TWO_ZERO_TRIANGLE: 2,
    MoveKind.TWO_ZERO_EDGE: 1, MoveKind.TWO_ZERO_VERTEX: 0, MoveKind.COLLAPSE_EDGE: 1,
}
DELTA = {
    MoveKind.P15: (1, 5, 4), MoveKind.P51: (-1, -5, -4),
    MoveKind.P24: (0, 1, 2), MoveKind.P42: (0, -1, -2),
    MoveKind.P33: (0, 0, 0), MoveKind.P44: (0, 0, 0),
    MoveKind.TWO_ZERO_TRIANGLE: (0, -1, -2), MoveKind.TWO_ZERO_EDGE: (0, -1, -2),
    MoveKind.TWO_ZERO_VERTEX: (-1, -4, -2), MoveKind.COLLAPSE_EDGE: None,
}
_DEGREE = {MoveKind.P51: 5, MoveKind.P42: 4, MoveKind.P33: 3, MoveKind.P44: 4,
           MoveKind.TWO_ZERO_TRIANGLE: 2, MoveKind.TWO_ZERO_EDGE: 2,
           MoveKind.TWO_ZERO_VERTEX: 2}


class IllegalMove(ValueError):
    pass


@dataclass(frozen=True)
class MoveSite:
    """A move anchored at the face spanned by ``verts`` in pentachoron
    ``simplex``.  ``axis`` selects among geometric options (4-4 only)."""
    kind: MoveKind
    simplex: int
    verts: tuple
    axis: int = 0

    def describe(self):
        s = "%s %d:%s" % (self.kind.value, self.simplex, "".join(map(str, self.verts)))
        return s + ("/%d" % self.axis if self.kind is MoveKind.P44 else "")

    @classmethod
    def parse(cls, text):
        kind, rest = text.split()
        t, rest = rest.split(":")
        axis = 0
        if "/" in rest:
            rest, a = rest.split("/")
            axis = int(a)
        return cls(MoveKind(kind), int(t), tuple(int(c) for c in rest), axis)


# -- helpers ------------------------------------------------------------------

def _rebuild(tri, removed, new_rows):
    """Drop pentachora in ``removed`` and append ``new_rows``.

    ``new_rows`` refer to surviving pentachora by old index and to new ones
    as ("new", i).  Returns an unchecked Triangulation.
    """
    keep = [t for t in range(tri.size) if t not in removed]
    ren = {t: i for i, t in enumerate(keep)}
    base = len(keep)

    def fix(g):
        if g is None:
            return None
        u, p = g
        if isinstance(u, tuple):
            return (base + u[1], p)
        return (ren[u], p) if u in ren else None

    rows = []
    for t in keep:
        rows.append([fix(g) for g in tri.gluings[t]])
    for r in new_rows:
        rows.append([fix(g) for g in r])
    return rows, ren


def _finish(tri, rows, kind, removed_count=None):
    try:
        new = Triangulation(rows, tri.dim, check=True)
    except ValueError:
        return None
    if new.size == 0:
        return None
    if len(new.boundary_facets()) != len(tri.boundary_facets()):
        return None
    before, after = tri.core_f_vector(), new.core_f_vector()
    d = tuple(a - b for a, b in zip(after, before))
    want = DELTA[kind]
    if want is None:
        if d[0] != -1 or d[2] != -removed_count:
            return None
    elif d != want:
        return None
    return new


# -- Pachner moves -------------------------------------------------------------

def _pachner(tri, t0, face):
    """Bistellar move replacing the pentachora around ``face`` (local vertices
    of ``t0``) by the complementary part of the boundary of a 5-simplex.

    Returns (rows, ren, new_count) or None when the star is not the model.
    """
    na = len(face)
    nb = 6 - na
    if tri.faces(na - 1).degree(tri.faces(na - 1).locate(t0, face)[0]) != nb:
        return None
    # labels: face -> 0..na-1, the rest -> na..5; P_b misses label b
    lab = {}
    miss = {}
    rest = [v for v in range(5) if v not in face]
    l0 = {v: i for i, v in enumerate(face)}
    for i, v in enumerate(rest):
        l0[v] = na + i
    lab[t0] = l0
    miss[t0] = 5
    todo = [t0]
    while todo:
        s = todo.pop()
        for x in range(5):
            b = lab[s][x]
            if b < na:
                continue
            g = tri.gluings[s][x]
            if g is None:
                return None
            u, p = g
            want = {p[y]: lab[s][y] for y in range(5) if y != x}
            want[p[x]] = miss[s]
            if u in lab:
                if lab[u] != want or miss[u] != b:
                    return None
            else:
                if b in miss.values():
                    return None
                lab[u] = want
                miss[u] = b
                todo.append(u)
    if len(lab) != nb:
        return None
    old = {miss[s]: s for s in lab}
    unlab = {s: {v: k for k, v in lab[s].items()} for s in lab}
    labels_of = {a: [l for l in range(6) if l != a] for a in range(na)}
    # new pentachoron N_a has local vertex j labelled labels_of[a][j]
    new_rows = [[None] * 5 for _ in range(na)]
    changes = {}
    for b, s in old.items():
        for a in range(na):
            x = unlab[s][a]
            u, p = tri.gluings[s][x]
            nl = labels_of[a]
            fb = nl.index(b)
            if u in lab:
                b2 = miss[u]
                a2 = lab[u][p[x]]
                nl2 = labels_of[a2]
                perm = []
                for j in range(5):
                    if j == fb:
                        perm.append(nl2.index(b2))
                    else:
                        perm.append(nl2.index(lab[u][p[unlab[s][nl[j]]]]))
                new_rows[a][fb] = (("new", a2), tuple(perm))
            else:
                perm = []
                for j in range(5):
                    perm.append(p[x] if j == fb else p[unlab[s][nl[j]]])
                perm = tuple(perm)
                new_rows[a][fb] = (u, perm)
                changes[(u, perm[fb])] = (("new", a), inverse(perm))
    # internal gluings of the new pentachora: N_a and N_a' share V \ {a, a'}
    for a in range(na):
        for a2 in range(na):
            if a == a2:
                continue
            nl, nl2 = labels_of[a], labels_of[a2]
            f = nl.index(a2)
            perm = tuple(nl2.index(a) if j == f else nl2.index(nl[j]) for j in range(5))
            new_rows[a][f] = (("new", a2), perm)
    removed = set(lab)
    rows, ren = _rebuild(tri, removed, new_rows)
    base = tri.size - len(removed)
    for (u, f), (tag, p) in changes.items():
        rows[ren[u]][f] = (base + tag[1], p)
    return rows, ren, na


def _pachner_move(tri, kind, t, verts):
    r = _pachner(tri, t, tuple(verts))
    if r is None:
        return None
    return _finish(tri, r[0], kind)


def _four_four(tri, t, verts, axis):
    """4-4 move about a degree-4 edge: a 2-4 move on an internal facet of the
    edge's star, after which the edge has degree 4 with the star of a 4-2
    move; the 4-2 move about it leaves four pentachora around a new edge."""
    e = tuple(verts)
    ft = tri.faces(1)
    cid, _ = ft.locate(t, e)
    emb = ft.classes[cid]
    star = {s for s, _ in emb}
    if len(emb) != 4 or len(star) != 4:
        return None
    facets = set()
    for s, order in emb:
        for f in range(5):
            if f in order:
                continue
            u, p = tri.gluings[s][f]
            if u in star:
                facets.add(min((s, f), (u, p[f])))
    facets = sorted(facets)
    if axis >= len(facets):
        return None
    s, f = facets[axis]
    mid = _pachner(tri, s, tuple(v for v in range(5) if v != f))
    if mid is None:
        return None
    rows, ren, _ = mid
    try:
        mt = Triangulation(rows, tri.dim, check=True)
    except ValueError:
        return None
    x, o = next((x, o) for x, o in emb if x in ren)
    r = _pachner(mt, ren[x], o)
    if r is None:
        return None
    return _finish(tri, r[0], MoveKind.P44)


# -- 2-0 moves ----------------------------------------------------------------

def _two_zero(tri, kind, t, verts):
    """Squash the two pentachora around a degree-2 face flat."""
    face = tuple(verts)
    k = len(face) - 1
    ft = tri.faces(k)
    cid, _ = ft.locate(t, face)
    emb = ft.classes[cid]
    if len(emb) != 2:
        return None
    (s1, o1), (s2, o2) = emb
    if s1 == s2:
        return None
    # the facets containing the face pair s1 with s2 through one map phi
    phi = None
    for f in range(5):
        if f in o1:
            continue
        g = tri.gluings[s1][f]
        if g is None or g[0] != s2:
            return None
        if phi is None:
            phi = g[1]
        elif g[1] != phi:
            return None
    if phi is None or tuple(phi[v] for v in o1) != tuple(o2):
        return None
    # outer facets: those opposite a face vertex.  Flattening identifies
    # (s1, x) with (s2, phi[x]); outside neighbours are joined through them,
    # following chains when an outer facet is glued back into the pair.
    twin = {}
    for x in o1:
        twin[(s1, x)] = (s2, phi[x], phi)
        twin[(s2, phi[x])] = (s1, x, inverse(phi))
    new_gl = {}
    used = set()
    for side in twin:
        g = tri.gluings[side[0]][side[1]]
        if g is None:
            return None
        q, p = g
        if q in (s1, s2) or side in used:
            continue
        start = (q, p[side[1]])
        acc = inverse(p)                     # start vertices -> side pentachoron
        cur = side
        for _ in range(len(twin) + 1):
            if cur in used or cur not in twin:
                return None
            used.add(cur)
            t, f, tau = twin[cur]
            used.add((t, f))
            acc = compose(tau, acc)
            u, pu = tri.gluings[t][f]
            acc = compose(pu, acc)
            if u not in (s1, s2):
                end = (u, pu[f])
                break
            cur = (u, pu[f])
        else:
            return None
        if start == end or start in new_gl or end in new_gl:
            return None
        new_gl[start] = (end[0], acc)
        new_gl[end] = (start[0], inverse(acc))
    if len(used) != len(twin):
        return None                          # a closed loop of outer facets
    rows, ren = _rebuild(tri, {s1, s2}, [])
    for (q, f), (u, p) in new_gl.items():
        rows[ren[q]][f] = (ren[u], p)
    return _finish(tri, rows, kind)


# -- edge collapse -------------------------------------------------------------

class _DSU:
    def __init__(self):
        self.p = {}

    def find(self, x):
        self.p.setdefault(x, x)
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        self.p[a] = b
        return True


def _collapse_edge(tri, t, verts):
    e = tuple(verts)
    ft = tri.faces(1)
    cid, _ = ft.locate(t, e)
    emb = ft.classes[cid]
    vt = tri.faces(0)
    a0, b0 = (vt.locate(t, (v,))[0] for v in e)
    if a0 == b0:
        return None
    flat = {}
    for s, o in emb:
        if s in flat:
            return None
        flat[s] = o
    # faces that get identified pairwise must form forests
    for k in (1, 2, 3):
        fk = tri.faces(k)
        dsu = _DSU()
        seen = set()
        for s, (u, v) in flat.items():
            others = [x for x in range(5) if x not in (u, v)]
            for rest in combinations(others, k):
                key = fk.locate(s, (u,) + rest)[0], fk.locate(s, (v,) + rest)[0]
                cls = tri.faces(k + 1).locate(s, (u, v) + rest)[0] if k < 4 else None
                if cls in seen:
                    continue
                seen.add(cls)
                if not dsu.union(*key):
                    return None
    # follow chains through flattened pentachora
    new_gl = {}
    for s in range(tri.size):
        if s in flat:
            continue
        for f in range(5):
            g = tri.gluings[s][f]
            if g is None or g[0] not in flat:
                continue
            u, p = g
            m = p
            steps = 0
            while u in flat:
                steps += 1
                if steps > 2 * len(flat) + 2:
                    return None
                x, y = flat[u]
                fu = m[f]
                if fu not in (x, y):
                    return None
                swap = tuple(y if i == x else x if i == y else i for i in range(5))
                out = swap[fu]
                g2 = tri.gluings[u][out]
                if g2 is None:
                    return None
                u2, p2 = g2
                m = compose(p2, compose(swap, m))
                u = u2
            if u == s and m[f] == f:
                return None
            new_gl[(s, f)] = (u, m)
    rows, ren = _rebuild(tri, set(flat), [])
    for (s, f), (u, p) in new_gl.items():
        rows[ren[s]][f] = (ren[u], p)
    return _finish(tri, rows, MoveKind.COLLAPSE_EDGE, len(flat))


# -- public interface ------------------------------------------------------------

def _simulate(tri, site):
    kind = MoveKind(site.kind)
    if not 0 <= site.simplex < tri.size:
        raise IllegalMove("no pentachoron %d" % site.simplex)
    verts = tuple(site.verts)
    if len(verts) != FACE_DIM[kind] + 1 or len(set(verts)) != len(verts) \
            or not all(0 <= v < 5 for v in verts):
        raise IllegalMove("bad face %r for %s" % (verts, kind.value))
    if kind in (MoveKind.P15, MoveKind.P24, MoveKind.P33, MoveKind.P42, MoveKind.P51):
        return _pachner_move(tri, kind, site.simplex, verts)
    if kind is MoveKind.P44:
        return _four_four(tri, site.simplex, verts, site.axis)
    if kind is MoveKind.COLLAPSE_EDGE:
        return _collapse_edge(tri, site.simplex, verts)
    return _two_zero(tri, kind, site.simplex, verts)


def is_legal(tri, site):
    return _simulate(tri, site) is not None


def apply(tri, site):
    out = _simulate(tri, site)
    if out is None:
        raise IllegalMove("move %s is not legal here" % site.describe())
    return out


def candidate_sites(tri, kind):
    """One site per face of the anchor dimension (first embedding), in
    ascending face index, without checking legality."""
    kind = MoveKind(kind)
    k = FACE_DIM[kind]
    ft = tri.faces(k)
    want = _DEGREE.get(kind)
    out = []
    for i, cl in enumerate(ft.classes):
        if want is not None and len(cl) != want:
            continue
        t, order = cl[0]
        if kind is MoveKind.P24 and tri.gluings[t][[v for v in range(5) if v not in order][0]] is None:
            continue
        axes = range(6) if kind is MoveKind.P44 else (0,)
        for a in axes:
            out.append(MoveSite(kind, t, tuple(order), a))
    return out


def enumerate_moves(tri, kind):
    """Legal sites of the given kind, in ascending face index."""
    return [s for s in candidate_sites(tri, kind) if is_legal(tri, s)]


def first_legal(tri, kinds, rng=None):
    """Random legal site among ``kinds`` (or None), sampling candidates
    without enumerating every legal site."""
    cands = [s for k in kinds for s in candidate_sites(tri, k)]
    if rng is not None:
        rng.shuffle(cands)
    for s in cands:
        out = _simulate(tri, s)
        if out is not None:
            return s, out
    return None
