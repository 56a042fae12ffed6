"""Generalised triangulations: simplices glued along facets.

A complex of dimension ``n`` is a list of n-simplices.  ``gluings[t][f]`` is
either ``None`` (facet ``f`` of simplex ``t`` is boundary) or a pair
``(u, p)`` where ``p`` is a permutation of ``range(n+1)`` sending the vertices
of ``t`` to the vertices of ``u``; facet ``f`` of ``t`` is then identified with
facet ``p[f]`` of ``u``.  This is the same convention used by isomorphism
signatures.

Values are immutable.  Derived data (face classes, invariants) is computed
lazily and cached on the instance.
"""
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
import random

from .perm import compose, identity, inverse, parity
from .snf import smith_factors


def _mask(verts):
    m = 0
    for v in verts:
        m |= 1 << v
    return m


class FaceTable:
    """Equivalence classes of k-faces.

    ``classes[i]`` lists the embeddings ``(simplex, order)`` of face ``i``;
    ``order`` is the tuple of simplex vertices matching the first
    embedding's (sorted) vertex order.  ``where[(t, mask)]`` gives
    ``(i, order)`` for every embedding.
    """

    def __init__(self, tri, k):
        self.k = k
        self.classes = []
        self.where = {}
        self.reversed = set()   # classes identified with themselves by an odd map
        n = tri.dim
        subsets = list(combinations(range(n + 1), k + 1))
        for t in range(tri.size):
            for s in subsets:
                if (t, _mask(s)) in self.where:
                    continue
                cid = len(self.classes)
                emb = [(t, s)]
                self.where[(t, _mask(s))] = (cid, s)
                todo = deque(emb)
                while todo:
                    x, order = todo.popleft()
                    m = _mask(order)
                    for f in range(n + 1):
                        if m >> f & 1:
                            continue
                        g = tri.gluings[x][f]
                        if g is None:
                            continue
                        u, p = g
                        nord = tuple(p[v] for v in order)
                        key = (u, _mask(nord))
                        seen = self.where.get(key)
                        if seen is None:
                            self.where[key] = (cid, nord)
                            emb.append((u, nord))
                            todo.append((u, nord))
                        elif k > 0 and seen[1] != nord:
                            pos = {v: i for i, v in enumerate(seen[1])}
                            if parity([pos[v] for v in nord]) < 0:
                                self.reversed.add(cid)
                self.classes.append(emb)

    def __len__(self):
        return len(self.classes)

    def locate(self, t, verts):
        """Class index and orientation sign of the face of ``t`` on ``verts``.

        The sign compares the given vertex order with the class's
        reference order.
        """
        cid, order = self.where[(t, _mask(verts))]
        pos = {v: i for i, v in enumerate(order)}
        return cid, parity([pos[v] for v in verts])

    def degree(self, i):
        return len(self.classes[i])


@dataclass(frozen=True)
class HomologyGroups:
    """Integral homology: Betti numbers and torsion coefficients per degree."""
    betti: tuple
    torsion: tuple

    def __str__(self):
        parts = []
        for k, (b, tor) in enumerate(zip(self.betti, self.torsion)):
            terms = (["Z^%d" % b if b > 1 else "Z"] if b else []) + ["Z_%d" % d for d in tor]
            parts.append("H%d = %s" % (k, " + ".join(terms) if terms else "0"))
        return "\n".join(parts)

    @property
    def torsion_free(self):
        return not any(self.torsion)

    def euler(self):
        return sum((-1) ** k * b for k, b in enumerate(self.betti))


@dataclass
class GroupPresentation:
    """Finitely presented group.  Words are lists of nonzero ints: ``g`` is
    generator ``g - 1`` and ``-g`` its inverse."""
    n_generators: int
    relators: list = field(default_factory=list)

    def is_trivial(self):
        return self.n_generators == 0

    def abelianisation(self):
        """(rank, torsion) of the abelianised group."""
        ent = {}
        for i, w in enumerate(self.relators):
            for x in w:
                key = (i, abs(x) - 1)
                ent[key] = ent.get(key, 0) + (1 if x > 0 else -1)
        r, tor = smith_factors(ent, len(self.relators), self.n_generators)
        return self.n_generators - r, tor

    def __str__(self):
        names = "abcdefghijklmnopqrstuvwxyz"

        def gname(i):
            return names[i] if i < 26 else "g%d" % i

        def word(w):
            return " ".join(gname(abs(x) - 1) + ("^-1" if x < 0 else "") for x in w)

        gens = ", ".join(gname(i) for i in range(self.n_generators))
        rels = ", ".join(word(w) for w in self.relators)
        return "< %s | %s >" % (gens, rels)


def _free_reduce(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    while len(out) > 1 and out[0] == -out[-1]:
        out = out[1:-1]
    return out


def _canonical_relator(w):
    """Pick a fixed representative among cyclic rotations and inverses."""
    if not w:
        return ()
    inv = [-x for x in reversed(w)]
    cands = [tuple(v[i:] + v[:i]) for v in (w, inv) for i in range(len(v))]
    return min(cands)


def _shorten(rels):
    """One relator-shortening substitution, or None.

    If a cyclic rotation of relator ``s`` (or its inverse) starts with a
    word ``w`` longer than half of ``s`` that occurs cyclically in another
    relator ``r``, replace ``w`` in ``r`` by the inverse of the rest of ``s``.
    """
    for si, s in enumerate(rels):
        L = len(s)
        half = L // 2 + 1
        variants = []
        for v in (s, [-x for x in reversed(s)]):
            for i in range(L):
                variants.append(v[i:] + v[:i])
        for ri, r in enumerate(rels):
            if ri == si or len(r) < half:
                continue
            rr = r + r
            n = len(r)
            for v in variants:
                w = v[:half]
                for i in range(n):
                    if rr[i:i + half] == w:
                        k = half
                        while k < L and k < n and rr[i + k] == v[k]:
                            k += 1
                        rest = [-x for x in reversed(v[k:])]
                        rot = rr[i:i + n]
                        new = _free_reduce(rest + rot[k:])
                        if len(new) < n:
                            out = list(rels)
                            out[ri] = new
                            return out
    return None


def tietze(pres, passes=10000):
    """Simplify a presentation by removing generators that occur exactly
    once in some relator, and by shortening relators against each other.
    Never claims triviality without reaching zero generators."""
    ngen = pres.n_generators
    rels = [_free_reduce(list(w)) for w in pres.relators]
    alive = list(range(1, ngen + 1))
    for _ in range(passes):
        rels = [r for r in rels if r]
        rels = list({_canonical_relator(r): r for r in rels}.values())
        rels.sort(key=len)
        progress = False
        for ri, r in enumerate(rels):
            counts = {}
            for x in r:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            gens = [g for g, c in counts.items() if c == 1]
            if not gens:
                continue
            g = gens[0]
            i = next(j for j, x in enumerate(r) if abs(x) == g)
            # rotate r to g^e C, so g^e = C^-1
            rot = r[i:] + r[:i]
            e = rot[0]
            repl = [-x for x in reversed(rot[1:])]
            if e < 0:
                repl = [-x for x in reversed(repl)]
            repl_inv = [-x for x in reversed(repl)]
            new = []
            for j, s in enumerate(rels):
                if j == ri:
                    continue
                w = []
                for x in s:
                    if x == g:
                        w.extend(repl)
                    elif x == -g:
                        w.extend(repl_inv)
                    else:
                        w.append(x)
                new.append(_free_reduce(w))
            rels = new
            alive.remove(g)
            progress = True
            break
        if not progress:
            shorter = _shorten(rels)
            if shorter is None:
                break
            rels = shorter
    ren = {g: i + 1 for i, g in enumerate(alive)}
    out = []
    for r in rels:
        if r:
            out.append([ren[abs(x)] * (1 if x > 0 else -1) for x in r])
    return GroupPresentation(len(alive), out)


class Triangulation:
    """An n-dimensional generalised triangulation (default n = 4)."""

    def __init__(self, gluings, dim=4, check=True):
        self.dim = dim
        self.gluings = tuple(
            tuple(None if g is None else (g[0], tuple(g[1])) for g in row)
            for row in gluings)
        if check:
            self.validate()

    # -- construction -------------------------------------------------

    @classmethod
    def from_pairs(cls, size, pairs, dim=4):
        """Build from ``(t, f, u, perm)`` records, each gluing listed once."""
        g = [[None] * (dim + 1) for _ in range(size)]
        for t, f, u, p in pairs:
            p = tuple(p)
            if g[t][f] is not None or g[u][p[f]] is not None:
                raise ValueError("facet glued twice: %d.%d" % (t, f))
            g[t][f] = (u, p)
            g[u][p[f]] = (t, inverse(p))
        return cls(g, dim)

    @property
    def size(self):
        return len(self.gluings)

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return isinstance(other, Triangulation) and self.dim == other.dim \
            and self.gluings == other.gluings

    def __hash__(self):
        return hash((self.dim, self.gluings))

    def __repr__(self):
        return "Triangulation(dim=%d, size=%d)" % (self.dim, self.size)

    def validate(self):
        """Raise ValueError unless the gluings form a valid facet pairing."""
        n = self.dim
        for t, row in enumerate(self.gluings):
            if len(row) != n + 1:
                raise ValueError("simplex %d has %d facets" % (t, len(row)))
            for f, g in enumerate(row):
                if g is None:
                    continue
                u, p = g
                if not 0 <= u < self.size:
                    raise ValueError("simplex %d.%d glued to missing %d" % (t, f, u))
                if sorted(p) != list(range(n + 1)):
                    raise ValueError("bad permutation at %d.%d" % (t, f))
                if u == t and p[f] == f:
                    raise ValueError("facet %d.%d glued to itself" % (t, f))
                back = self.gluings[u][p[f]]
                if back is None or back[0] != t or back[1] != inverse(p):
                    raise ValueError("gluing at %d.%d is not involutive" % (t, f))

    def relabel(self, simplex_perm, vertex_perms):
        """Isomorphic copy: simplex ``t`` becomes ``simplex_perm[t]`` and its
        vertex ``i`` becomes ``vertex_perms[t][i]``."""
        g = [None] * self.size
        for t, row in enumerate(self.gluings):
            nt = simplex_perm[t]
            vt = vertex_perms[t]
            nrow = [None] * (self.dim + 1)
            for f, x in enumerate(row):
                if x is None:
                    continue
                u, p = x
                # new vertex a of nt -> old inv(vt)[a] -> p -> vu
                nrow[vt[f]] = (simplex_perm[u], compose(vertex_perms[u], compose(p, inverse(vt))))
            g[nt] = nrow
        return Triangulation(g, self.dim)

    def random_relabel(self, rng=None):
        rng = rng or random.Random()
        sp = list(range(self.size))
        rng.shuffle(sp)
        vps = []
        for _ in range(self.size):
            v = list(range(self.dim + 1))
            rng.shuffle(v)
            vps.append(tuple(v))
        return self.relabel(sp, vps)

    # -- faces --------------------------------------------------------

    def faces(self, k):
        cache = self.__dict__.setdefault("_faces", {})
        if k not in cache:
            cache[k] = FaceTable(self, k)
        return cache[k]

    def boundary_facets(self):
        return [(t, f) for t, row in enumerate(self.gluings)
                for f, g in enumerate(row) if g is None]

    def is_closed(self):
        return not self.boundary_facets()

    @cached_property
    def f_vector(self):
        """Face counts (f_0, ..., f_n)."""
        return tuple(len(self.faces(k)) for k in range(self.dim)) + (self.size,)

    def core_f_vector(self):
        """(v, e, p) as used to describe simplification progress."""
        return (len(self.faces(0)), len(self.faces(1)), self.size)

    def euler_characteristic(self):
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector))

    def is_connected(self):
        return self.size == 0 or len(self.components()) == 1

    def components(self):
        seen = [-1] * self.size
        comps = []
        for s in range(self.size):
            if seen[s] >= 0:
                continue
            seen[s] = len(comps)
            comp = [s]
            todo = [s]
            while todo:
                t = todo.pop()
                for g in self.gluings[t]:
                    if g is not None and seen[g[0]] < 0:
                        seen[g[0]] = len(comps)
                        comp.append(g[0])
                        todo.append(g[0])
            comps.append(sorted(comp))
        return comps

    # -- homology -----------------------------------------------------

    def boundary_matrix(self, k):
        """Sparse matrix of d_k : C_k -> C_{k-1} as {(row, col): value}."""
        ent = {}
        if k <= 0 or k > self.dim:
            return ent
        lower = self.faces(k - 1)
        if k == self.dim:
            reps = [(t, identity(self.dim + 1)) for t in range(self.size)]
        else:
            reps = [c[0] for c in self.faces(k).classes]
        for j, (t, order) in enumerate(reps):
            for i in range(k + 1):
                sub = order[:i] + order[i + 1:]
                r, s = lower.locate(t, sub)
                v = ent.get((r, j), 0) + (-1) ** i * s
                if v:
                    ent[(r, j)] = v
                else:
                    ent.pop((r, j), None)
        return ent

    def _ranks(self, relative_vertices=()):
        f = self.f_vector
        out = {}
        for k in range(1, self.dim + 1):
            ent = self.boundary_matrix(k)
            if k == 1 and relative_vertices:
                drop = set(relative_vertices)
                ren, nr = {}, 0
                for v in range(f[0]):
                    if v not in drop:
                        ren[v] = nr
                        nr += 1
                ent = {(ren[r], c): x for (r, c), x in ent.items() if r in ren}
            out[k] = smith_factors(ent, f[k - 1], f[k])
        return out

    def homology(self):
        """Integral homology of the identified cell complex."""
        f = self.f_vector
        ranks = self._ranks()
        betti, tors = [], []
        for k in range(self.dim + 1):
            rk_out = ranks[k][0] if k >= 1 else 0
            rk_in, tor = ranks[k + 1] if k < self.dim else (0, [])
            betti.append(f[k] - rk_out - rk_in)
            tors.append(tuple(tor))
        return HomologyGroups(tuple(betti), tuple(tors))

    def truncated_homology(self, ideal=None):
        """Homology of the compact manifold obtained by deleting small open
        neighbourhoods of the ideal vertices.

        Computed by duality from the cohomology of the complex relative to
        the ideal vertices, so it assumes the truncated manifold is
        orientable.  With no ideal vertices this is ``homology()``.
        """
        if ideal is None:
            ideal = [v for v, kind in enumerate(self.classify_vertices()) if kind == "ideal"]
        if not ideal:
            return self.homology()
        f = list(self.f_vector)
        ranks = self._ranks(ideal)
        f[0] -= len(ideal)
        n = self.dim
        # relative cohomology H^j: coboundary delta_j is the transpose of d_{j+1}
        co_b, co_t = [], []
        for j in range(n + 1):
            rk_out = ranks[j + 1][0] if j < n else 0
            rk_in, tor = ranks[j] if j >= 1 else (0, [])
            co_b.append(f[j] - rk_out - rk_in)
            co_t.append(tuple(tor))
        return HomologyGroups(tuple(reversed(co_b)), tuple(reversed(co_t)))

    # -- fundamental group -------------------------------------------

    def fundamental_group(self, simplify=True):
        """Presentation from the dual 2-skeleton, optionally Tietze-reduced.

        Generators are facet gluings off a spanning tree of the dual graph;
        each interior codimension-2 face contributes the relator read by
        walking around it.
        """
        if not self.is_connected():
            raise ValueError("fundamental group needs a connected complex")
        n = self.dim
        tree = set()
        seen = {0} if self.size else set()
        todo = deque([0] if self.size else [])
        while todo:
            t = todo.popleft()
            for f, g in enumerate(self.gluings[t]):
                if g is not None and g[0] not in seen:
                    seen.add(g[0])
                    tree.add((t, f))
                    tree.add((g[0], g[1][f]))
                    todo.append(g[0])
        gen = {}
        for t, row in enumerate(self.gluings):
            for f, g in enumerate(row):
                if g is None or (t, f) in tree:
                    continue
                u, p = g
                if (t, f) < (u, p[f]):
                    k = len(gen) // 2 + 1
                    gen[(t, f)] = k
                    gen[(u, p[f])] = -k
        rels = []
        for emb in self.faces(n - 2).classes:
            t, order = emb[0]
            rest = [v for v in range(n + 1) if v not in order]
            start = (t, rest[0], _mask(order))
            word = []
            cur, out = t, rest[0]
            closed = True
            ridge = order
            for _ in range(len(emb)):
                g = self.gluings[cur][out]
                if g is None:
                    closed = False
                    break
                if (cur, out) in gen:
                    word.append(gen[(cur, out)])
                u, p = g
                ridge = tuple(p[v] for v in ridge)
                came = p[out]
                other = [v for v in range(n + 1) if v not in ridge and v != came]
                cur, out = u, other[0]
                if (cur, out, _mask(ridge)) == start:
                    break
            if closed and word:
                rels.append(word)
        pres = GroupPresentation(len(gen) // 2, rels)
        return tietze(pres) if simplify else pres

    # -- vertex links ------------------------------------------------

    def vertex_link(self, v):
        """The link of vertex class ``v`` as an (n-1)-dimensional complex.

        Each embedding ``(t, i)`` of the vertex contributes the facet of
        ``t`` opposite ``i``; its vertices are renumbered ``0..n-1`` in
        increasing order.
        """
        n = self.dim
        emb = [(t, order[0]) for t, order in self.faces(0).classes[v]]
        index = {e: j for j, e in enumerate(emb)}

        def local(i):
            return [x for x in range(n + 1) if x != i]

        g = []
        for t, i in emb:
            lv = local(i)
            row = [None] * n
            for a, f in enumerate(lv):
                x = self.gluings[t][f]
                if x is None:
                    continue
                u, p = x
                lu = local(p[i])
                pos = {w: b for b, w in enumerate(lu)}
                row[a] = (index[(u, p[i])], tuple(pos[p[w]] for w in lv))
            g.append(row)
        return Triangulation(g, n - 1)

    def classify_vertices(self):
        """Label each vertex 'internal', 'ideal' or 'boundary'.

        A closed vertex link is 'internal' when it has the homology of a
        sphere and, in dimension 3, its fundamental group presentation
        reduces to the trivial group.  Anything else is 'ideal'.  This is a
        necessary test only: no sphere recognition is attempted.
        """
        cache = self.__dict__.get("_vclass")
        if cache is None:
            n = self.dim
            sphere = tuple([1] + [0] * (n - 2) + [1])
            cache = []
            for v in range(len(self.faces(0))):
                lk = self.vertex_link(v)
                if not lk.is_closed():
                    cache.append("boundary")
                    continue
                h = lk.homology()
                ok = h.betti == sphere and h.torsion_free
                if ok and n == 4 and lk.size > 1:
                    ok = lk.fundamental_group().is_trivial()
                cache.append("internal" if ok else "ideal")
            self.__dict__["_vclass"] = cache
        return list(cache)

    def is_closed_manifold_candidate(self):
        return self.is_closed() and all(k == "internal" for k in self.classify_vertices())

    # -- graphs and signatures ---------------------------------------

    def dual_graph(self):
        """networkx MultiGraph: simplices as nodes, one edge per gluing."""
        import networkx as nx
        G = nx.MultiGraph()
        G.add_nodes_from(range(self.size))
        for t, row in enumerate(self.gluings):
            for f, g in enumerate(row):
                if g is None:
                    continue
                u, p = g
                if (t, f) <= (u, p[f]):
                    G.add_edge(t, u, facet=f, target_facet=p[f])
        return G

    def isosig(self):
        from .codec import encode
        return encode(self)

    def isomorphic(self, other):
        if self.dim != other.dim or self.size != other.size:
            return False
        if self.f_vector != other.f_vector:
            return False
        return self.isosig() == other.isosig()


def from_gem(gem):
    """Complex dual to a regular properly coloured graph.

    One simplex per graph vertex, with vertices labelled by colours; an edge
    of colour ``c`` glues the facets opposite ``c`` preserving labels.
    """
    n = gem.n_colours - 1
    ident = identity(n + 1)
    g = []
    for v in range(gem.order):
        row = []
        for c in range(n + 1):
            u = gem.neighbour(v, c)
            row.append(None if u is None else (u, ident))
        g.append(row)
    return Triangulation(g, n)
