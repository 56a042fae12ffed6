"""Small permutation helpers shared by the complex and codec code.

Permutations of ``range(n)`` are plain tuples ``p`` with ``p[i]`` the image
of ``i``.  Indices follow the lexicographic order produced by
``itertools.permutations``, which is also the order used in the isosig
gluing records.
"""
from functools import lru_cache
from itertools import permutations


@lru_cache(maxsize=None)
def ordered(n):
    """All permutations of range(n), lexicographically ordered."""
    return tuple(permutations(range(n)))


@lru_cache(maxsize=None)
def index_of(n):
    return {p: i for i, p in enumerate(ordered(n))}


def identity(n):
    return tuple(range(n))


def compose(a, b):
    """(a o b)(i) = a[b[i]]."""
    return tuple(a[i] for i in b)


def inverse(a):
    r = [0] * len(a)
    for i, x in enumerate(a):
        r[x] = i
    return tuple(r)


def parity(seq):
    """+1 for an even arrangement of distinct comparable items, else -1."""
    s = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
    return s
