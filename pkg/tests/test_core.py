import random

import sympy
from hypothesis import given, settings, strategies as st

from kirbytri.perm import compose, identity, index_of, inverse, ordered, parity
from kirbytri.snf import smith_factors


def test_permutation_order_is_lexicographic():
    ps = ordered(5)
    assert len(ps) == 120
    assert list(ps) == sorted(ps)
    assert index_of(5)[identity(5)] == 0
    assert index_of(5)[(4, 3, 2, 1, 0)] == 119


@given(st.permutations(range(5)), st.permutations(range(5)))
def test_group_laws(a, b):
    a, b = tuple(a), tuple(b)
    assert compose(a, inverse(a)) == identity(5)
    assert inverse(compose(a, b)) == compose(inverse(b), inverse(a))
    assert parity(compose(a, b)) == parity(a) * parity(b)


def _oracle(rows):
    m = sympy.Matrix(rows)
    if m.rows == 0 or m.cols == 0:
        return 0, []
    from sympy.matrices.normalforms import smith_normal_form
    d = smith_normal_form(m, domain=sympy.ZZ)
    diag = [abs(int(d[i, i])) for i in range(min(d.shape))]
    nz = [x for x in diag if x]
    return len(nz), sorted(x for x in nz if x > 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 10 ** 6))
def test_smith_matches_sympy(r, c, seed):
    rng = random.Random(seed)
    rows = [[rng.choice([0, 0, 0, 1, -1, 2, 3, -4]) for _ in range(c)] for _ in range(r)]
    ent = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v}
    rank, tor = smith_factors(ent, r, c)
    orank, otor = _oracle(rows)
    assert rank == orank
    assert tor == otor


def test_smith_examples():
    assert smith_factors({}, 3, 3) == (0, [])
    assert smith_factors({(0, 0): 2, (1, 1): 3}, 2, 2) == (2, [6])
    assert smith_factors({(0, 0): 2, (0, 1): 4, (1, 0): 4, (1, 1): 8}, 2, 2) == (1, [2])
