"""Edge-coloured graphs and the diagram-to-gem construction.

A boundary gem is built from the self-framed diagram by placing one gadget
per crossing (see :mod:`kirbytri.gadgets`) and identifying hanging stubs along
the arcs.  Colour-4 edges are then added to get a 5-coloured gem whose
complex is the singular model of the 4-manifold.
"""
from dataclasses import dataclass

from . import gadgets
from .link_diagram import (DiagramError, one_handle_data, quadricolour_anchor,
                           self_frame)


class GemError(ValueError):
    pass


class ColouredGraph:
    """Regular edge-coloured multigraph with colour-indexed adjacency.

    ``adj[v][c]`` is the neighbour of ``v`` along colour ``c``, or None for a
    hanging stub while the graph is being assembled.
    """

    def __init__(self, n_colours, adj=()):
        self.n_colours = n_colours
        self.adj = [list(row) for row in adj]
        for row in self.adj:
            if len(row) != n_colours:
                raise GemError("adjacency row of wrong length")

    @property
    def order(self):
        return len(self.adj)

    def neighbour(self, v, c):
        return self.adj[v][c]

    def add_vertices(self, n):
        first = len(self.adj)
        self.adj.extend([None] * self.n_colours for _ in range(n))
        return first

    def join(self, u, w, c):
        if u == w:
            raise GemError("loop at vertex %d" % u)
        if self.adj[u][c] is not None or self.adj[w][c] is not None:
            raise GemError("colour %d already used at %d or %d" % (c, u, w))
        self.adj[u][c] = w
        self.adj[w][c] = u

    def open_stubs(self):
        return [(v, c) for v, row in enumerate(self.adj) for c, w in enumerate(row) if w is None]

    def is_regular(self):
        return not self.open_stubs()

    def edges(self, colours=None):
        """(u, w, c) with u < w, ordered by u then colour."""
        cs = range(self.n_colours) if colours is None else colours
        for u, row in enumerate(self.adj):
            for c in cs:
                w = row[c]
                if w is not None and u < w:
                    yield u, w, c

    def validate(self):
        for u, row in enumerate(self.adj):
            for c, w in enumerate(row):
                if w is None:
                    raise GemError("vertex %d has no colour-%d edge" % (u, c))
                if w == u or self.adj[w][c] != u:
                    raise GemError("colour-%d edge at %d is not symmetric" % (c, u))

    def residues(self, colours):
        """Connected components using only edges of the given colours."""
        colours = list(colours)
        seen = [False] * self.order
        out = []
        for s in range(self.order):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                v = stack.pop()
                for c in colours:
                    w = self.adj[v][c]
                    if w is not None and not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_bipartite(self):
        side = [None] * self.order
        for s in range(self.order):
            if side[s] is not None:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in self.adj[v]:
                    if w is None:
                        continue
                    if side[w] is None:
                        side[w] = 1 - side[v]
                        stack.append(w)
                    elif side[w] == side[v]:
                        return False
        return True

    def restricted(self, n_colours):
        """The graph on the first ``n_colours`` colours."""
        return ColouredGraph(n_colours, [row[:n_colours] for row in self.adj])

    def extended(self, n_colours):
        return ColouredGraph(n_colours, [row + [None] * (n_colours - len(row)) for row in self.adj])

    def __eq__(self, other):
        return isinstance(other, ColouredGraph) and self.n_colours == other.n_colours \
            and self.adj == other.adj

    def to_dot(self, name="gem"):
        styles = ["solid", "dashed", "dotted", "bold", "tapered"]
        palette = ["black", "red", "blue", "darkgreen", "orange"]
        lines = ["graph %s {" % name, "  node [shape=point];"]
        for v in range(self.order):
            lines.append("  %d;" % v)
        for u, w, c in self.edges():
            lines.append('  %d -- %d [color=%s, style=%s, label="%d"];'
                         % (u, w, palette[c % 5], styles[c % 5], c))
        lines.append("}")
        return "\n".join(lines) + "\n"


# -- boundary gem ---------------------------------------------------------

@dataclass(frozen=True)
class Block:
    crossing: int
    kind: str            # "true", "positive_curl", "negative_curl"
    first: int           # first vertex owned
    size: int
    ends: dict           # PD position -> {vertex: colours}

    @property
    def vertices(self):
        return range(self.first, self.first + self.size)


@dataclass(frozen=True)
class GadgetMap:
    blocks: tuple        # indexed by crossing

    def block_of(self, v):
        for b in self.blocks:
            if b.first <= v < b.first + b.size:
                return b
        raise KeyError(v)


def _curl_ends(d, x, table):
    k = d.curl_position(x)
    ext = [j for j in range(4) if j not in (k, (k + 1) % 4)]
    enter = d.entering(x)
    kin = [j for j in ext if j in enter][0]
    kout = [j for j in ext if j != kin][0]
    return {kin: table["in"], kout: table["out"]}


def boundary_graph(d):
    """4-coloured gem of the boundary 3-manifold of a self-framed diagram.

    Returns (graph, gadget map).  Vertices are allotted crossing by crossing
    in PD order.
    """
    g = ColouredGraph(4)
    blocks = []
    for info in d.classify_crossings():
        x = info.index
        if info.is_curl:
            table = gadgets.POSITIVE_CURL if info.sign > 0 else gadgets.NEGATIVE_CURL
            size = 4
            local_ends = _curl_ends(d, x, table)
        else:
            table = gadgets.TRUE_CROSSING.get(info.sign)
            if table is None:
                raise GemError("no gadget table for true crossings of sign %+d" % info.sign)
            size = 8
            local_ends = dict(enumerate(table["ends"]))
        first = g.add_vertices(size)
        for u, w, c in table["internal"]:
            g.join(first + u, first + w, c)
        ends = {k: {first + v: cs for v, cs in e.items()} for k, e in local_ends.items()}
        blocks.append(Block(x, info.kind, first, size, ends))
    # identify stubs along every arc: each arc leaves one end and enters another
    where = {}
    for b in blocks:
        for k in b.ends:
            where.setdefault(d.pd[b.crossing][k], []).append(b.ends[k])
    for arc, es in sorted(where.items()):
        if len(es) != 2:
            raise GemError("arc %d has %d gadget ends" % (arc, len(es)))
        e1, e2 = es
        for c in range(4):
            u = [v for v, cs in e1.items() if c in cs]
            w = [v for v, cs in e2.items() if c in cs]
            if len(u) != 1 or len(w) != 1:
                raise GemError("malformed stubs on arc %d" % arc)
            g.join(u[0], w[0], c)
    if not g.is_regular():
        raise GemError("unmatched hanging stubs: %r" % g.open_stubs()[:8])
    return g, GadgetMap(tuple(blocks))


# -- colour-4 edges ---------------------------------------------------------

@dataclass(frozen=True)
class Quadricolour:
    component: int
    anchor: tuple        # (C, X) crossings; X follows C along the component
    signs: tuple         # (sign of C, sign of X)
    vertices: tuple      # graph vertices touched by the substitution


def _local(gmap, C, X):
    return {"B": gmap.blocks[C].first, "A": gmap.blocks[X].first}


def find_quadricolours(g, gmap, d):
    """One quadricolour per framed component, at its anchor pair.

    The anchor comes from the diagram; here we check that the graph realises
    the expected local pattern (the two blocks are curls of the recorded
    signs, and the arc from C to X carries the four expected edges).
    """
    out = []
    for j in range(d.n_components):
        if d.decorations[j].dotted:
            continue
        a = quadricolour_anchor(d, j)
        if a is None:
            raise GemError("component %d has no quadricolour anchor" % j)
        C, X = a
        key = (d.sign(C), d.sign(X))
        pat = gadgets.QUADRICOLOUR.get(key)
        if pat is None or gmap.blocks[X].kind == "true":
            raise GemError("no quadricolour pattern for anchor kinds at %r" % (a,))
        base = _local(gmap, C, X)
        tb = gadgets.POSITIVE_CURL if key[0] > 0 else gadgets.NEGATIVE_CURL
        ta = gadgets.POSITIVE_CURL if key[1] > 0 else gadgets.NEGATIVE_CURL
        for vb, cbs in tb["out"].items():
            for c in cbs:
                va = [v for v, cs in ta["in"].items() if c in cs][0]
                if g.neighbour(base["B"] + vb, c) != base["A"] + va:
                    raise GemError("quadricolour pattern absent at crossings %r" % (a,))
        verts = tuple(sorted(base[s] + i for e in pat for s, i in e))
        out.append(Quadricolour(j, a, key, verts))
    return out


def attach_handles(g, gmap, quads, d, data=None):
    """5-coloured gem: colour-4 edges from quadricolour substitution, then
    completion inside the {DOUBLED, 4}-residues.

    Steps run in a fixed order and within a step by ascending vertex.
    """
    lam = g.extended(5)
    for q in quads:
        base = _local(gmap, *q.anchor)
        for (s1, i1), (s2, i2) in gadgets.QUADRICOLOUR[q.signs]:
            lam.join(base[s1] + i1, base[s2] + i2, 4)
    if d.n_dotted:
        _dotted_edges(lam, gmap, d, data)
    k = gadgets.DOUBLED
    for v in range(lam.order):
        if lam.adj[v][4] is None:
            w = lam.adj[v][k]
            if lam.adj[w][4] is None:
                lam.join(v, w, 4)
    missing = [v for v in range(lam.order) if lam.adj[v][4] is None]
    if missing:
        raise GemError("vertices left without a colour-4 edge: %r" % missing[:8])
    lam.validate()
    return lam


def _dotted_edges(lam, gmap, d, data):
    """Colour-4 edges along dotted components: each vertex at an arc end is
    joined to the vertex it shares that arc with.

    Only crossingless dotted circles (chains of curls) are supported; a
    dotted circle meeting other strands needs the true-crossing gadget.
    """
    for i in range(d.n_components):
        if not d.decorations[i].dotted:
            continue
        comp = d.components[i]
        if any(gmap.blocks[x].kind == "true" for x in comp.crossings()):
            raise GemError("dotted component %d crosses other strands; "
                           "only crossingless dotted circles are supported" % i)
        for arc in comp.arcs:
            ends = [b.ends[k] for b in gmap.blocks for k in b.ends if d.pd[b.crossing][k] == arc]
            if len(ends) != 2:
                continue                     # loop arc inside a curl
            e1, e2 = ends
            for v, cs in e1.items():
                w = [u for u, cs2 in e2.items() if cs2[0] in cs][0]
                lam.join(v, w, 4)


def build_gem(d, frame=True):
    """Full construction: (self-framed diagram, boundary gem, 5-coloured gem)."""
    if frame:
        d = self_frame(d)
    g, gmap = boundary_graph(d)
    data = one_handle_data(d) if d.n_dotted else None
    quads = find_quadricolours(g, gmap, d)
    lam = attach_handles(g, gmap, quads, d, data)
    return d, g, lam
