"""Integer Smith normal form for sparse boundary matrices.

Boundary matrices of triangulations are very sparse and almost entirely
reducible by unit pivots.  We peel those off with exact row elimination and
hand whatever is left to sympy's dense Smith normal form.
"""
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors as _dense_factors


def _eliminate_units(rows, cols):
    """Remove unit pivots in place.  Returns how many were removed."""
    rank = 0
    while True:
        best = None
        for c, rs in cols.items():
            for r in rs:
                v = rows[r][c]
                if v == 1 or v == -1:
                    cost = (len(rows[r]) - 1) * (len(rs) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, r, c)
                        if cost == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            return rank
        _, pr, pc = best
        prow = rows.pop(pr)
        s = prow[pc]
        for r in list(cols[pc]):
            if r == pr:
                continue
            row = rows[r]
            f = row[pc] * s
            for c, v in prow.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    if c not in row:
                        cols[c].add(r)
                    row[c] = nv
                else:
                    if c in row:
                        del row[c]
                        cols[c].discard(r)
        for c in prow:
            cols[c].discard(pr)
            if not cols[c]:
                del cols[c]
        cols.pop(pc, None)
        rank += 1


def smith_factors(entries, nrows, ncols):
    """Rank and nontrivial invariant factors of an integer matrix.

    ``entries`` maps (row, col) to a nonzero int.  Returns ``(rank, torsion)``
    where torsion lists the invariant factors greater than one, ascending.
    """
    rows = {}
    cols = {}
    for (r, c), v in entries.items():
        if v:
            rows.setdefault(r, {})[c] = v
            cols.setdefault(c, set()).add(r)
    rank = _eliminate_units(rows, cols)
    rows = {r: row for r, row in rows.items() if row}
    if not rows:
        return rank, []
    rlist = sorted(rows)
    clist = sorted(cols)
    cpos = {c: i for i, c in enumerate(clist)}
    dense = [[0] * len(clist) for _ in rlist]
    for i, r in enumerate(rlist):
        for c, v in rows[r].items():
            dense[i][cpos[c]] = v
    dm = DomainMatrix([[ZZ(x) for x in row] for row in dense], (len(rlist), len(clist)), ZZ)
    torsion = []
    for f in _dense_factors(dm):
        f = abs(int(f))
        if f:
            rank += 1
            if f > 1:
                torsion.append(f)
    return rank, sorted(torsion)
