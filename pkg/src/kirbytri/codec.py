"""Isomorphism signatures.

The text format is the size-prefixed canonical gluing encoding used by the
common triangulation software for dimension 4, over the alphabet
``a-z A-Z 0-9 + -``.  Layout of one connected component:

* size ``n`` (one character, or ``-`` followed by a width char and ``n``
  written in that many chars when ``n >= 63``);
* facet actions, 2 bits each, three per character: 0 boundary, 1 glued to
  a new simplex, 2 glued to an already numbered simplex;
* for each action 2, the destination simplex (width chars);
* for each action 2, the gluing permutation index (two chars in
  dimension 4, one in dimension 3).

Permutation indices use lexicographic order over ``itertools.permutations``.
The canonical signature is the least string over every starting simplex and
starting vertex labelling.  Integers are written little-endian in base 64.
"""
from .perm import index_of, inverse, ordered
from .triangulation import Triangulation

ALPHABET = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-"
_VALUE = {c: i for i, c in enumerate(ALPHABET)}


class SignatureError(ValueError):
    pass


def _perm_chars(dim):
    return 1 if len(ordered(dim + 1)) <= 64 else 2


def _put(v, width):
    s = []
    for _ in range(width):
        s.append(ALPHABET[v & 63])
        v >>= 6
    return "".join(s)


class _Reader:
    def __init__(self, s):
        self.s = s
        self.pos = 0

    def done(self):
        return self.pos >= len(self.s)

    def read(self, width=1):
        if self.pos + width > len(self.s):
            raise SignatureError("truncated signature")
        v = 0
        for j in range(width):
            c = self.s[self.pos]
            if c not in _VALUE:
                raise SignatureError("bad character %r" % c)
            v |= _VALUE[c] << (6 * j)
            self.pos += 1
        return v


def _decode_component(rd, dim, offset, rows):
    nf = dim + 1
    perms = ordered(nf)
    pw = _perm_chars(dim)
    n = rd.read()
    width = 1
    if n == 63:
        width = rd.read()
        n = rd.read(width)
    if n == 0:
        raise SignatureError("empty component")
    acts = []
    need = nf * n
    covered = 0
    while covered < need:
        v = rd.read()
        for _ in range(3):
            if covered >= need:
                break
            a = v & 3
            v >>= 2
            if a == 3:
                raise SignatureError("bad facet action")
            acts.append(a)
            covered += 1 if a == 0 else 2
    if covered != need:
        raise SignatureError("facet actions do not cover all facets")
    joins = acts.count(2)
    dest = [rd.read(width) for _ in range(joins)]
    glu = [rd.read(pw) for _ in range(joins)]
    adj = [[None] * nf for _ in range(n)]
    filled = [[False] * nf for _ in range(n)]
    ap = 0
    nxt = 1
    jp = 0
    for t in range(n):
        for f in range(nf):
            if filled[t][f]:
                continue
            a = acts[ap]
            ap += 1
            filled[t][f] = True
            if a == 0:
                continue
            if a == 1:
                if nxt >= n:
                    raise SignatureError("too many simplices created")
                u = nxt
                nxt += 1
                p = tuple(range(nf))
            else:
                u = dest[jp]
                if glu[jp] >= len(perms) or u >= n:
                    raise SignatureError("inconsistent gluing record")
                p = perms[glu[jp]]
                jp += 1
            g = p[f]
            if filled[u][g] or (u == t and g == f):
                raise SignatureError("inconsistent gluing record")
            filled[u][g] = True
            adj[t][f] = (u + offset, p)
            adj[u][g] = (t + offset, inverse(p))
    if nxt != n:
        raise SignatureError("disconnected body")
    rows.extend(adj)


def decode(sig, dim=4):
    """Triangulation from a signature (components may be concatenated)."""
    if not sig:
        raise SignatureError("empty signature")
    rd = _Reader(sig.strip())
    rows = []
    while not rd.done():
        _decode_component(rd, dim, len(rows), rows)
    return Triangulation(rows, dim)


def _sig_from(gl, dim, start, perm, best):
    """Encoding for one starting choice, or None once it exceeds ``best``.

    ``perm`` maps the vertices of ``start`` to their canonical labels.
    """
    nf = dim + 1
    pidx = index_of(nf)
    n = len(gl)
    image = [-1] * n
    pre = [-1] * n
    vmap = [None] * n
    image[start] = 0
    vmap[start] = perm
    pre[0] = start
    acts = []
    dest = []
    glu = []
    nxt = 1
    for si in range(n):
        src = pre[si]
        if src < 0:
            return None
        vs = vmap[src]
        inv_vs = inverse(vs)
        for fi in range(nf):
            fs = inv_vs[fi]
            g = gl[src][fs]
            if g is None:
                acts.append(0)
                continue
            d, p = g
            if image[d] >= 0:
                if image[d] < si or (d == src and vs[p[fs]] < fi):
                    continue
                acts.append(2)
                dest.append(image[d])
                # canonical(d) o p o canonical(src)^-1
                vd = vmap[d]
                glu.append(pidx[tuple(vd[p[inv_vs[i]]] for i in range(nf))])
            else:
                image[d] = nxt
                pre[nxt] = d
                nxt += 1
                # choose d's labelling so this gluing reads as the identity
                vmap[d] = tuple(vs[x] for x in inverse(p))
                acts.append(1)
    width = 1
    if n < 63:
        head = ALPHABET[n]
    else:
        width = 1
        while n >= 1 << (6 * width):
            width += 1
        head = ALPHABET[63] + ALPHABET[width] + _put(n, width)
    body = []
    for i in range(0, len(acts), 3):
        v = 0
        for j, a in enumerate(acts[i:i + 3]):
            v |= a << (2 * j)
        body.append(ALPHABET[v])
    pw = _perm_chars(dim)
    s = head + "".join(body) + "".join(_put(d, width) for d in dest) \
        + "".join(_put(x, pw) for x in glu)
    return s


def _component_rows(tri, comp):
    ren = {t: i for i, t in enumerate(comp)}
    return [[None if g is None else (ren[g[0]], g[1]) for g in tri.gluings[t]] for t in comp]


def encode(tri):
    """Canonical isomorphism signature of ``tri``.

    Disconnected complexes are encoded component by component, with the
    component signatures sorted by (length, text) and concatenated.
    """
    if tri.size == 0:
        raise SignatureError("cannot encode an empty complex")
    parts = []
    for comp in tri.components():
        gl = _component_rows(tri, comp)
        best = None
        for t in range(len(gl)):
            for p in ordered(tri.dim + 1):
                c = _sig_from(gl, tri.dim, t, p, best)
                if c is not None and (best is None or c < best):
                    best = c
        parts.append(best)
    parts.sort(key=lambda s: (len(s), s))
    return "".join(parts)


# -- plain gluing files and DOT ------------------------------------------------

def to_trifile(tri):
    """JSON gluing table: ``gluings[t][f]`` is ``[u, perm]`` or null."""
    import json
    rows = [[None if g is None else [g[0], list(g[1])] for g in row] for row in tri.gluings]
    return json.dumps({"dim": tri.dim, "gluings": rows})


def from_trifile(text):
    import json
    try:
        obj = json.loads(text)
        rows = [[None if g is None else (int(g[0]), tuple(int(x) for x in g[1])) for g in row]
                for row in obj["gluings"]]
        dim = int(obj.get("dim", 4))
    except (ValueError, KeyError, TypeError, IndexError) as e:
        raise SignatureError("malformed gluing file: %s" % e)
    return Triangulation(rows, dim)


def export_dot(obj, name=None):
    """DOT text for a coloured graph (edge colours 0..n) or for the dual
    graph of a triangulation (nodes are simplex indices)."""
    if not isinstance(obj, Triangulation):
        return obj.to_dot(name or "gem")
    lines = ["graph %s {" % (name or "dual"), "  node [shape=circle];"]
    for t in range(obj.size):
        lines.append('  %d [label="%d"];' % (t, t))
    for t, row in enumerate(obj.gluings):
        for f, g in enumerate(row):
            if g is None:
                continue
            u, p = g
            if (t, f) <= (u, p[f]):
                lines.append('  %d -- %d [label="%d:%d"];' % (t, u, f, p[f]))
    lines.append("}")
    return "\n".join(lines) + "\n"
