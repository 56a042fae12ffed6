"""PD-coded Kirby diagrams.

Tuple convention: ``X(a, b, c, d)`` lists the four arc labels around a
crossing counterclockwise, starting from the incoming under-strand.  The
under-strand therefore runs ``a -> c``.  The crossing is positive when the
over-strand runs ``d -> b`` and negative when it runs ``b -> d``:

    over strand   sign
    d -> b        +1
    b -> d        -1

Components are oriented so that every under-strand enters at position 0.
A component with no undercrossing is oriented by increasing arc label at
its smallest arc.  Components are ordered by smallest arc label, except
that dotted components are moved (stably) to the front.
"""
from dataclasses import dataclass, field
import json
import re

_TUPLE = re.compile(r"X\s*[\(\[_]\s*([^\)\]]*)[\)\]]?")


class DiagramError(ValueError):
    """Malformed PD code or diagram file."""


@dataclass(frozen=True)
class Decoration:
    kind: str            # "dot" or "framing"
    value: int = 0

    @property
    def dotted(self):
        return self.kind == "dot"


DOT = Decoration("dot")


def framing(n):
    return Decoration("framing", int(n))


@dataclass(frozen=True)
class CrossingInfo:
    index: int
    kind: str            # "true", "positive_curl" or "negative_curl"
    sign: int
    components: tuple

    @property
    def is_curl(self):
        return self.kind != "true"


def parse_pd(text):
    """List of 4-tuples from ``X(a,b,c,d) X(...)`` notation.

    Also accepts ``X[a,b,c,d]``, ``X_a,b,c,d`` and a JSON list of lists.
    """
    text = text.strip()
    if text.startswith("["):
        try:
            raw = json.loads(text)
        except ValueError as e:
            raise DiagramError("bad PD list: %s" % e)
        tuples = [tuple(t) for t in raw]
    else:
        body = text.replace("PD", " ")
        chunks = _TUPLE.findall(body)
        leftover = _TUPLE.sub(" ", body).strip(" ,[]\n\t")
        if leftover:
            raise DiagramError("unexpected text in PD code: %r" % leftover[:20])
        tuples = []
        for ch in chunks:
            try:
                tuples.append(tuple(int(x) for x in ch.replace(" ", "").split(",") if x))
            except ValueError:
                raise DiagramError("non-integer arc label in %r" % ch)
    for t in tuples:
        if len(t) != 4:
            raise DiagramError("crossing %r does not have four arcs" % (t,))
        if any((not isinstance(a, int)) or a <= 0 for a in t):
            raise DiagramError("arc labels must be positive integers: %r" % (t,))
    return tuples


def format_pd(pd):
    return " ".join("X(%d,%d,%d,%d)" % tuple(t) for t in pd)


class Component:
    """One link component: the ordered list of passes through crossings.

    ``passes[i] = (crossing, enter_pos, exit_pos)`` and ``arcs[i]`` is the
    arc arriving at that pass.
    """

    def __init__(self, arcs, passes):
        self.arcs = tuple(arcs)
        self.passes = tuple(passes)

    @property
    def smallest_arc(self):
        return min(self.arcs)

    def crossings(self):
        return [p[0] for p in self.passes]


def _trace(pd):
    """Orient and split the PD code into components (unordered)."""
    occ = {}
    for x, t in enumerate(pd):
        for k, a in enumerate(t):
            occ.setdefault(a, []).append((x, k))
    for a, l in occ.items():
        if len(l) != 2:
            raise DiagramError("arc %d occurs %d times" % (a, len(l)))
    other = {}
    for a, (p, q) in occ.items():
        other[p] = q
        other[q] = p

    def walk(start):
        arcs, passes = [], []
        cur = start
        while True:
            x, k = cur
            out = (x, (k + 2) % 4)
            arcs.append(pd[x][k])
            passes.append((x, k, out[1]))
            cur = other[out]
            if cur == start:
                return arcs, passes
            if len(passes) > 4 * len(pd):
                raise DiagramError("arcs do not close into cycles")

    seen = set()
    comps = []
    for a in sorted(occ):
        if a in seen:
            continue
        cands = []
        for start in occ[a]:
            arcs, passes = walk(start)
            under_ok = all(k != 2 for _, k, _ in passes)
            cands.append((arcs, passes, under_ok))
        good = [c for c in cands if c[2]]
        unders = any(k in (0, 2) for _, k, _ in cands[0][1])
        if unders:
            if len(good) != 1:
                raise DiagramError("inconsistent under-strand orientation on arc %d" % a)
            arcs, passes, _ = good[0]
        else:
            # all overcrossings: orient by increasing label from the smallest arc
            best = None
            for arcs, passes, _ in cands:
                i = arcs.index(a)
                nxt = arcs[(i + 1) % len(arcs)]
                key = (nxt < a, nxt)
                if best is None or key < best[0]:
                    best = (key, arcs, passes)
            _, arcs, passes = best
        i = arcs.index(a)
        arcs = arcs[i:] + arcs[:i]
        passes = passes[i:] + passes[:i]
        comps.append(Component(arcs, passes))
        seen.update(arcs)
    return comps


class KirbyDiagram:
    """A PD-coded link with one decoration per component.

    Immutable: every editing operation returns a new diagram.
    """

    def __init__(self, pd, decorations=None, three_handles=0):
        pd = tuple(tuple(int(a) for a in t) for t in pd)
        self.pd = pd
        self.three_handles = int(three_handles)
        if self.three_handles < 0:
            raise DiagramError("three_handles must be non-negative")
        comps = _trace(pd) if pd else []
        comps.sort(key=lambda c: c.smallest_arc)
        if decorations is None:
            decorations = [None] * len(comps)
        decorations = list(decorations)
        if len(decorations) != len(comps):
            raise DiagramError("%d decorations for %d components" % (len(decorations), len(comps)))
        for i, d in enumerate(decorations):
            if d is None:
                decorations[i] = framing(0)
        # dotted components first, stable; relabel arcs so that the order by
        # smallest arc agrees
        order = sorted(range(len(comps)), key=lambda i: (not decorations[i].dotted, i))
        if order != list(range(len(comps))):
            ren = {}
            for i in order:
                for a in comps[i].arcs:
                    ren[a] = len(ren) + 1
            pd = tuple(tuple(ren[a] for a in t) for t in pd)
            self.pd = pd
            comps = sorted(_trace(pd), key=lambda c: c.smallest_arc)
            decorations = [decorations[i] for i in order]
        self.components = tuple(comps)
        self.decorations = tuple(decorations)
        self._comp_of_arc = {}
        for i, c in enumerate(self.components):
            for a in c.arcs:
                self._comp_of_arc[a] = i
        self._enter = {}
        for i, c in enumerate(self.components):
            for x, k, _ in c.passes:
                self._enter.setdefault(x, []).append(k)

    # -- basic structure -------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, KirbyDiagram) and self.pd == other.pd \
            and self.decorations == other.decorations \
            and self.three_handles == other.three_handles

    def __hash__(self):
        return hash((self.pd, self.decorations, self.three_handles))

    def __repr__(self):
        return "KirbyDiagram(%s)" % format_pd(self.pd)

    @property
    def n_components(self):
        return len(self.components)

    @property
    def n_dotted(self):
        return sum(1 for d in self.decorations if d.dotted)

    def component_of_arc(self, a):
        return self._comp_of_arc[a]

    def entering(self, x):
        """Positions at which strands enter crossing ``x``."""
        return tuple(self._enter[x])

    def sign(self, x):
        over_in = [k for k in self._enter[x] if k in (1, 3)][0]
        return 1 if over_in == 3 else -1

    def curl_position(self, x):
        """k if arms k and k+1 of crossing x are joined by a loop arc, else None."""
        t = self.pd[x]
        for k in range(4):
            if t[k] == t[(k + 1) % 4]:
                return k
        return None

    def crossing_components(self, x):
        t = self.pd[x]
        return (self._comp_of_arc[t[0]], self._comp_of_arc[t[1]])

    def classify_crossings(self):
        out = []
        for x in range(len(self.pd)):
            s = self.sign(x)
            if self.curl_position(x) is not None:
                kind = "positive_curl" if s > 0 else "negative_curl"
            else:
                kind = "true"
            under, over = self.crossing_components(x)
            out.append(CrossingInfo(x, kind, s, (under, over)))
        return out

    def _check_component(self, i):
        if not 0 <= i < self.n_components:
            raise DiagramError("no component %r" % (i,))

    def writhe(self, i):
        self._check_component(i)
        return sum(self.sign(x) for x in range(len(self.pd))
                   if self.crossing_components(x) == (i, i))

    def linking_number(self, i, j):
        self._check_component(i)
        self._check_component(j)
        if i == j:
            raise DiagramError("linking number needs two distinct components")
        tot = sum(self.sign(x) for x in range(len(self.pd))
                  if set(self.crossing_components(x)) == {i, j})
        return tot // 2

    def linking_matrix(self):
        """Linking numbers off the diagonal, writhes on it."""
        m = self.n_components
        return [[self.writhe(i) if i == j else self.linking_number(i, j)
                 for j in range(m)] for i in range(m)]

    def framings(self):
        return [None if d.dotted else d.value for d in self.decorations]

    def counts(self):
        """(true crossings, curls)."""
        info = self.classify_crossings()
        c = sum(1 for i in info if i.is_curl)
        return len(info) - c, c

    # -- editing --------------------------------------------------------

    def _rebuild(self, pd, decorations=None):
        """New diagram with canonically relabelled arcs, keeping component
        identity (components are matched through their first arcs)."""
        return KirbyDiagram(pd, decorations if decorations is not None else self.decorations,
                            self.three_handles)

    def default_curl_arc(self, i):
        """Arc following the smallest arc of component ``i``."""
        self._check_component(i)
        c = self.components[i]
        return c.arcs[1 % len(c.arcs)]

    def insert_curl(self, component, sign, position=None):
        """Add a Reidemeister-1 kink of the given sign on an arc of ``component``.

        ``position`` is an arc label of that component; the kink is placed at
        the head end of the arc.  Arcs are relabelled canonically afterwards.
        """
        if sign not in (1, -1):
            raise DiagramError("curl sign must be +1 or -1")
        arc = self.default_curl_arc(component) if position is None else position
        if self._comp_of_arc.get(arc) != component:
            raise DiagramError("arc %r is not on component %d" % (arc, component))
        c = self.components[component]
        i = c.arcs.index(arc)
        x, k, _ = c.passes[i]          # arc ends entering crossing x at position k
        pd = [list(t) for t in self.pd]
        top = max(max(t) for t in pd)
        b, loop = top + 1, top + 2
        pd[x][k] = b
        pd.append([arc, b, loop, loop] if sign > 0 else [arc, loop, loop, b])
        return self._relabelled(pd)

    def _relabelled(self, pd):
        """Relabel arcs 1.. along each component, components in current order.

        The new labelling starts each component at its old smallest arc, so
        component order and decorations are preserved.
        """
        tmp = KirbyDiagram(pd, None, self.three_handles)
        # match components of tmp to self by the smallest old arc
        firsts = [c.smallest_arc for c in self.components]
        where = {}
        for j, comp in enumerate(tmp.components):
            for i, a in enumerate(firsts):
                if a in comp.arcs:
                    where[i] = j
        ren = {}
        nxt = 1
        for i in range(self.n_components):
            comp = tmp.components[where[i]]
            s = comp.arcs.index(firsts[i])
            for a in comp.arcs[s:] + comp.arcs[:s]:
                ren[a] = nxt
                nxt += 1
        new = [tuple(ren[a] for a in t) for t in pd]
        return KirbyDiagram(new, self.decorations, self.three_handles)

    def with_decorations(self, decorations, three_handles=None):
        return KirbyDiagram(self.pd, decorations,
                            self.three_handles if three_handles is None else three_handles)

    def serialize(self):
        return format_pd(self.pd)

    def to_json(self):
        decs = []
        for i, d in enumerate(self.decorations):
            decs.append({"component": i, "kind": d.kind} if d.dotted
                        else {"component": i, "kind": "framing", "value": d.value})
        return json.dumps({"pd": [list(t) for t in self.pd], "decorations": decs,
                           "three_handles": self.three_handles}, indent=1)


def unknot(decoration):
    """Crossingless unknot, encoded with one curl whose sign follows the
    framing (positive for dots and non-negative framings)."""
    s = -1 if (not decoration.dotted and decoration.value < 0) else 1
    pd = [(1, 1, 2, 2)] if s > 0 else [(1, 2, 2, 1)]
    return KirbyDiagram(pd, [decoration])


def load_diagram(text):
    """Diagram from the JSON file format.

    ``{"pd": [[a,b,c,d], ...], "decorations": [{"component": i, "kind":
    "dot"|"framing", "value": n}], "three_handles": k}``.  Component indices
    refer to the order by smallest arc label.  An empty ``pd`` with one
    decoration is a crossingless unknot, encoded with a single curl.
    """
    try:
        obj = json.loads(text)
    except ValueError as e:
        raise DiagramError("diagram file is not valid JSON: %s" % e)
    if not isinstance(obj, dict) or "pd" not in obj:
        raise DiagramError("diagram file needs a 'pd' field")
    pd = obj["pd"]
    if isinstance(pd, str):
        pd = parse_pd(pd)
    decs_raw = obj.get("decorations", [])
    th = obj.get("three_handles", 0)
    if not pd:
        if len(decs_raw) != 1:
            raise DiagramError("an empty PD code must carry exactly one decoration")
        d = _decoration(decs_raw[0])
        return unknot(d).with_decorations([d], th)
    pd = [tuple(t) for t in pd]
    for t in pd:
        if len(t) != 4:
            raise DiagramError("crossing %r does not have four arcs" % (t,))
    n = len(_trace(pd))
    decs = [None] * n
    for d in decs_raw:
        i = d.get("component")
        if not isinstance(i, int) or not 0 <= i < n:
            raise DiagramError("bad component index %r" % (i,))
        decs[i] = _decoration(d)
    for i, d in enumerate(decs):
        if d is None:
            raise DiagramError("component %d has no decoration" % i)
    return KirbyDiagram(pd, decs, th)


def _decoration(d):
    kind = d.get("kind")
    if kind == "dot":
        return DOT
    if kind == "framing":
        if not isinstance(d.get("value"), int):
            raise DiagramError("framing needs an integer value")
        return framing(d["value"])
    raise DiagramError("unknown decoration kind %r" % (kind,))


# -- self-framing and quadricolour anchors ------------------------------------

def crossing_walk(d, i):
    """Crossings met along component ``i`` from its smallest arc, one entry per
    passage; a curl is met once (its two passages are merged).

    Entries are (crossing, under) where ``under`` tells whether the component
    passes under there (always True for a curl).
    """
    c = d.components[i]
    seq = []
    for x, k, _ in c.passes:
        if seq and seq[-1][0] == x and d.curl_position(x) is not None:
            continue
        seq.append((x, k in (0, 2)))
    if len(seq) > 1 and seq[0][0] == seq[-1][0] and d.curl_position(seq[0][0]) is not None:
        seq.pop()
    return seq


def quadricolour_anchor(d, i):
    """First anchor pair (C, X) along component ``i``, or None.

    C is a curl; X is the next crossing along the orientation and is either a
    curl of the same sign or a true crossing where the component passes under.
    Only the anchor kinds in ``ANCHOR_KINDS`` are considered.
    """
    walk = crossing_walk(d, i)
    n = len(walk)
    if n < 2:
        return None
    for j in range(n):
        (cx, _), (nx, under) = walk[j], walk[(j + 1) % n]
        if cx == nx or d.curl_position(cx) is None:
            continue
        if d.curl_position(nx) is not None:
            if d.sign(nx) == d.sign(cx):
                return cx, nx
        elif under and "undercrossing" in ANCHOR_KINDS:
            return cx, nx
    return None


ANCHOR_KINDS = ("same_sign_curls",)


def _curl_chain(d, i, signs, arc=None):
    """Insert consecutive curls with the given signs on component ``i``,
    starting at the head end of ``arc`` (default arc when None)."""
    if not signs:
        return d
    d = d._relabelled(d.pd)
    arc = d.default_curl_arc(i) if arc is None else arc
    for s in signs:
        d = d.insert_curl(i, s, arc)
        # the arc leaving the new kink is two labels further on
        arc = arc + 2
    return d


def self_frame(d):
    """Add curls so that each framed component has writhe equal to its framing
    and carries a quadricolour anchor.  Dotted components are brought to
    writhe 0, since their boundary contribution is a 0-framed circle.

    Idempotent.  Framing curls form one chain after the smallest arc; when no
    anchor exists afterwards a cancelling pair is added, its same-sign curl
    next to an existing curl.
    """
    for i in range(d.n_components):
        dec = d.decorations[i]
        if dec.dotted:
            w = d.writhe(i)
            d = _curl_chain(d, i, [-1 if w > 0 else 1] * abs(w))
            continue
        delta = dec.value - d.writhe(i)
        s = 1 if delta > 0 else -1
        d = _curl_chain(d, i, [s] * abs(delta))
        if quadricolour_anchor(d, i) is not None:
            continue
        curls = [x for x, _ in crossing_walk(d, i) if d.curl_position(x) is not None]
        if curls:
            # a same-sign twin right after the first curl, then its cancelling curl
            x = curls[0]
            s = d.sign(x)
            out = _arc_leaving(d, i, x)
            d = _curl_chain(d, i, [s, -s], out)
        else:
            d = _curl_chain(d, i, [1, 1, -1, -1])
    return d


def _arc_leaving(d, i, x):
    """The arc of component ``i`` leaving curl ``x`` (after its loop)."""
    c = d.components[i]
    t = d.pd[x]
    loop = t[d.curl_position(x)]
    return c.arcs[(c.arcs.index(loop) + 1) % len(c.arcs)]


def predict_pentachora(d):
    """Order of the gem built from the self-framed diagram ``d``: 8x + 4c."""
    x, c = d.counts()
    return 8 * x + 4 * c
# -- 1-handle data --------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    rule: str            # "i" (not a visibly unknotted circle) or "ii" (no cut)
    component: int
    crossings: tuple
    message: str


@dataclass(frozen=True)
class PositionReport:
    violations: tuple = ()

    @property
    def ok(self):
        return not self.violations

    def __str__(self):
        if self.ok:
            return "dotted components in standard position"
        return "\n".join("(%s) component %d: %s %s" % (v.rule, v.component, v.message,
                                                       list(v.crossings))
                         for v in self.violations)


def validate_dotted_position(d):
    """Check that every dotted component is in standard position.

    (i) the component has no true self-crossings (kinks are allowed, since a
    crossingless circle is encoded with one); (ii) read cyclically along the
    component, its over-crossings and under-crossings with framed strands form
    two contiguous blocks, so that one cut separates the over half from the
    under half.
    """
    out = []
    for i in range(d.n_components):
        if not d.decorations[i].dotted:
            continue
        selfx = sorted({x for x, _ in crossing_walk(d, i)
                        if d.crossing_components(x) == (i, i) and d.curl_position(x) is None})
        if selfx:
            out.append(Violation("i", i, tuple(selfx), "true self-crossings"))
        word = [(x, under) for x, under in crossing_walk(d, i)
                if d.crossing_components(x) != (i, i)]
        changes = sum(1 for j in range(len(word)) if word[j][1] != word[j - 1][1])
        if changes > 2:
            out.append(Violation("ii", i, tuple(x for x, _ in word),
                                 "over and under crossings alternate %d times" % changes))
    return PositionReport(tuple(out))


@dataclass(frozen=True)
class OneHandleData:
    """H[i] = (H_i, H_i') for dotted i; anchors[j] = (C_j, X_j), I[j] and Y[j]
    for framed j.  Crossings are PD indices."""
    H: dict
    anchors: dict
    I: dict
    Y: dict


def one_handle_data(d):
    """Crossing data for the colour-4 edges of the 1-handle construction.

    H_i, H_i' are the first and last crossings along dotted component i (from
    its smallest arc) at which it passes under.  For each framed component j
    with anchor (C_j, X_j), I_j holds its crossings with dotted components and
    Y_j collects crossings walking from C_j away from X_j, stopping once it
    contains I_j minus X_j.
    """
    rep = validate_dotted_position(d)
    if not rep.ok:
        raise DiagramError(str(rep))
    dotted = [i for i in range(d.n_components) if d.decorations[i].dotted]
    H = {}
    for i in dotted:
        unders = [x for x, under in crossing_walk(d, i)
                  if under and d.crossing_components(x)[1] != i]
        if unders:
            H[i] = (unders[0], unders[-1])
    anchors, I, Y = {}, {}, {}
    for j in range(d.n_components):
        if d.decorations[j].dotted:
            continue
        a = quadricolour_anchor(d, j)
        if a is None:
            raise DiagramError("component %d has no quadricolour anchor; self-frame it first" % j)
        anchors[j] = a
        C, X = a
        walk = [x for x, _ in crossing_walk(d, j)]
        Ij = frozenset(x for x in walk if set(d.crossing_components(x)) & set(dotted)
                       and d.crossing_components(x) != (j, j))
        I[j] = Ij
        need = Ij - {X}
        pos = walk.index(C)
        got = []
        for step in range(1, len(walk) + 1):
            if need <= set(got):
                break
            got.append(walk[(pos - step) % len(walk)])
        if not need <= set(got):
            raise DiagramError("walk from C_%d never collects I_%d" % (j, j))
        Y[j] = tuple(got)
    return OneHandleData(H, anchors, I, Y)
