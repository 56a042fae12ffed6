"""Wiring tables for the coloured gadgets (table version 1).

Each block is a small 4-coloured graph with hanging stubs.  ``internal`` lists
(u, w, colour) edges on local vertices; each arc end lists which local vertex
carries the stub of each colour, written as ``{vertex: (colour, colour)}``.
Two ends joined by an arc of the diagram are identified colour by colour.

Curl blocks own 4 vertices and have an ``in`` end (where the strand arrives)
and an ``out`` end.  True-crossing blocks own 8 vertices and have one end per
PD position 0..3.

The tables were reconstructed and checked against the homology of the
surgered 3-manifold (cokernel of the linking matrix) on curl chains, Hopf
links and trefoils; see tests/test_gem.py.
"""

VERSION = 1

POSITIVE_CURL = {
    "internal": ((0, 1, 0), (0, 3, 3), (1, 2, 2), (2, 3, 1)),
    "in": {0: (1, 2), 2: (0, 3)},
    "out": {1: (1, 3), 3: (0, 2)},
}

NEGATIVE_CURL = {
    "internal": ((1, 3, 0), (0, 2, 1), (1, 2, 2), (0, 3, 3)),
    "in": {0: (0, 2), 1: (1, 3)},
    "out": {2: (0, 3), 3: (1, 2)},
}

# sign -> {"internal": ..., "ends": (end0, end1, end2, end3)}
TRUE_CROSSING = {}

# Colour whose edges are doubled by colour 4 away from quadricolours.
DOUBLED = 1

# Colour-4 edges at a quadricolour made of two adjacent curls B then A (A
# follows B along the orientation), keyed by (sign of B, sign of A).  Vertices
# are ("A" | "B", local index).  The two block vertices not listed keep the
# doubled-colour rule.
QUADRICOLOUR = {
    (1, 1): ((("A", 0), ("A", 3)), (("A", 2), ("B", 3)), (("B", 1), ("B", 2))),
    (-1, -1): ((("A", 0), ("B", 2)), (("A", 1), ("A", 2)), (("B", 0), ("B", 3))),
}
