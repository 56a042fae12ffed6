import random
from itertools import combinations

import pytest

from kirbytri.corpus import CORPUS
from kirbytri.moves import MoveKind, first_legal
from kirbytri.perm import compose, identity, inverse
from kirbytri.triangulation import Triangulation

# Table of published f-vectors, keyed by corpus name.
TABLE_F = {
    "akbulut_cork": (1, 2, 17, 25, 10), "positron_cork": (1, 6, 34, 45, 18),
    "plug_P12": (3, 3, 12, 15, 6), "A1": (2, 2, 17, 25, 10), "A2": (2, 2, 17, 25, 10),
    "N3": (3, 3, 22, 30, 12), "N3_0": (3, 3, 22, 30, 12),
    "N5": (3, 5, 30, 40, 16), "N5_0": (3, 5, 30, 40, 16),
    "W1": (4, 5, 30, 40, 16), "W2": (4, 5, 30, 40, 16),
    "M1": (2, 9, 46, 60, 24), "M2": (2, 9, 46, 60, 24),
    "Y1": (2, 10, 50, 65, 26), "Y2": (2, 10, 50, 65, 26),
}


def two_simplex_sphere():
    """S^4 from two pentachora glued by the identity on every facet."""
    ident = identity(5)
    return Triangulation([[(1, ident)] * 5, [(0, ident)] * 5])


def boundary_of_5_simplex():
    verts = range(6)
    pents = [tuple(v for v in verts if v != i) for i in verts]
    index = {p: i for i, p in enumerate(pents)}
    g = []
    for p in pents:
        row = []
        for j, a in enumerate(p):
            b = [v for v in verts if v not in p][0]
            q = tuple(sorted([v for v in p if v != a] + [b]))
            perm = tuple(q.index(b if v == a else v) for v in p)
            row.append((index[q], perm))
        g.append(row)
    return Triangulation(g)


def insert_pillow(tri, q, facets):
    """Inverse of a 2-0 move: unglue ``facets`` of pentachoron ``q`` and
    insert two pentachora meeting along their other facets.  The new face
    (local vertices 0..k of the first new pentachoron, k = len(facets) - 1)
    has degree 2.  Returns (complex, index of first new pentachoron) or None.
    """
    k = len(facets) - 1
    rest = sorted(v for v in range(5) if v not in facets)
    pi = tuple(list(facets) + rest)          # s1 vertex -> q vertex
    outer = []
    for f in facets:
        g = tri.gluings[q][f]
        if g is None:
            return None
        outer.append(g)
    targets = [(q, f) for f in facets] + [(u, p[f]) for (u, p), f in zip(outer, facets)]
    if len(set(targets)) != len(targets):
        return None
    n = tri.size
    s1, s2 = n, n + 1
    rows = [list(r) for r in tri.gluings] + [[None] * 5, [None] * 5]
    ident = identity(5)
    for x in range(k + 1, 5):
        rows[s1][x] = (s2, ident)
        rows[s2][x] = (s1, ident)
    for x, (f, (u, p)) in enumerate(zip(facets, outer)):
        rows[s1][x] = (q, pi)
        rows[q][f] = (s1, inverse(pi))
        m = compose(p, pi)                   # s2 vertex -> u vertex
        rows[s2][x] = (u, m)
        rows[u][p[f]] = (s2, inverse(m))
    return Triangulation(rows), s1


def pillow_kind(k):
    return {0: MoveKind.TWO_ZERO_VERTEX, 1: MoveKind.TWO_ZERO_EDGE,
            2: MoveKind.TWO_ZERO_TRIANGLE}[k]


def fuzz_corpus(n=100, seed=1, max_size=14):
    """Small closed complexes from random 1-5, 2-4, 3-3 moves and pillow
    insertions, starting from spheres and the smallest corpus entry."""
    from kirbytri.codec import decode
    rng = random.Random(seed)
    seeds = [two_simplex_sphere(), boundary_of_5_simplex(), decode(CORPUS["plug_P12"])]
    out = list(seeds)
    while len(out) < n:
        t = rng.choice(out)
        r = rng.random()
        if r < 0.35 and t.size + 2 <= max_size:
            k = rng.randint(0, 2)
            q = rng.randrange(t.size)
            res = insert_pillow(t, q, sorted(rng.sample(range(5), k + 1)))
            if res is None:
                continue
            t2 = res[0]
        else:
            kinds = [MoveKind.P24, MoveKind.P33] if t.size + 4 > max_size else \
                [MoveKind.P15, MoveKind.P24, MoveKind.P33]
            m = first_legal(t, [rng.choice(kinds)], rng)
            if m is None or m[1].size > max_size:
                continue
            t2 = m[1]
        out.append(t2)
    return out


@pytest.fixture(scope="session")
def fuzz():
    return fuzz_corpus()


@pytest.fixture(scope="session")
def fuzz_sigs(fuzz):
    return [t.isosig() for t in fuzz]


def brute_isomorphic(a, b):
    """Isomorphism test by propagation from every start (independent of
    the signature code)."""
    if a.size != b.size or a.f_vector != b.f_vector:
        return False
    if a.size == 0:
        return True
    from kirbytri.perm import compose, inverse, ordered
    for u0 in range(b.size):
        for p0 in ordered(5):
            smap = {0: u0}
            vmap = {0: p0}
            todo = [0]
            ok = True
            while todo and ok:
                t = todo.pop()
                for f in range(5):
                    ga, gb = a.gluings[t][f], b.gluings[smap[t]][vmap[t][f]]
                    if (ga is None) != (gb is None):
                        ok = False
                        break
                    if ga is None:
                        continue
                    (ta, pa), (tb, pb) = ga, gb
                    want = compose(pb, compose(vmap[t], inverse(pa)))
                    if ta in smap:
                        if smap[ta] != tb or vmap[ta] != want:
                            ok = False
                            break
                    else:
                        if tb in smap.values():
                            ok = False
                            break
                        smap[ta], vmap[ta] = tb, want
                        todo.append(ta)
            if ok and len(smap) == a.size:
                return True
    return False


@pytest.fixture(scope="session")
def corpus():
    from kirbytri.codec import decode
    return {k: decode(s) for k, s in CORPUS.items()}


def all_face_subsets(k):
    return list(combinations(range(5), k + 1))
