import pytest

from kirbytri.gem import ColouredGraph, GemError, boundary_graph, build_gem
from kirbytri.link_diagram import DOT, KirbyDiagram, framing, parse_pd, self_frame, unknot
from kirbytri.triangulation import from_gem


def test_join_rules():
    g = ColouredGraph(2)
    g.add_vertices(3)
    g.join(0, 1, 0)
    with pytest.raises(GemError):
        g.join(0, 2, 0)
    with pytest.raises(GemError):
        g.join(2, 2, 1)
    assert not g.is_regular()
    assert (1, 1) in g.open_stubs()


def test_residues_and_bipartite():
    g = ColouredGraph(2, [[1, 1], [0, 0]])
    g.validate()
    assert g.is_bipartite()
    assert g.residues([0]) == [[0, 1]]
    assert list(g.edges()) == [(0, 1, 0), (0, 1, 1)]


@pytest.mark.parametrize("k", [1, -1, 2, -2, 3, 5, -4])
def test_boundary_is_lens_space(k):
    d = self_frame(unknot(framing(k)))
    g, _ = boundary_graph(d)
    g.validate()
    assert g.is_bipartite()
    h = from_gem(g).homology()
    assert h.betti == (1, 0, 0, 1)
    assert h.torsion[1] == ((abs(k),) if abs(k) > 1 else ())


def test_boundary_framing_zero():
    g, _ = boundary_graph(self_frame(unknot(framing(0))))
    assert from_gem(g).homology().betti == (1, 1, 1, 1)


def test_cp2():
    d, g, lam = build_gem(unknot(framing(1)))
    assert g.order == lam.order == 12
    lam.validate()
    assert lam.is_bipartite()
    assert sum(1 for _ in lam.edges()) == 30
    assert all(sum(1 for _ in lam.edges([c])) == 6 for c in range(5))
    t = from_gem(lam)
    assert t.size == 12 and t.is_closed()
    assert all(k == "internal" for k in t.classify_vertices())
    h = t.homology()
    assert h.betti == (1, 0, 1, 0, 1) and h.torsion_free
    assert t.fundamental_group().is_trivial()


@pytest.mark.parametrize("k", [-1, 2, -2, 3, 0])
def test_disc_bundles(k):
    d, g, lam = build_gem(unknot(framing(k)))
    t = from_gem(lam)
    kinds = t.classify_vertices()
    want_ideal = 0 if abs(k) == 1 else 1
    assert kinds.count("ideal") == want_ideal
    assert t.truncated_homology().betti[:3] == (1, 0, 1)


def test_components_are_residues():
    d, g, _ = build_gem(unknot(framing(2)))
    assert len(g.residues([0, 2, 3])) == d.n_components == 1


def test_dotted_unknot_is_circle_times_ball():
    d, g, lam = build_gem(unknot(DOT))
    lam.validate()
    t = from_gem(lam)
    assert t.classify_vertices().count("ideal") == 1
    h = t.truncated_homology()
    assert h.betti == (1, 1, 0, 0, 0) and h.torsion_free
    ideal = t.classify_vertices().index("ideal")
    assert t.vertex_link(ideal).homology().betti == (1, 1, 1, 1)


def test_true_crossings_need_gadget():
    d = KirbyDiagram(parse_pd("X(1,4,2,3) X(3,2,4,1)"), [framing(0)] * 2)
    with pytest.raises(GemError):
        build_gem(d)


def test_dot_export():
    _, _, lam = build_gem(unknot(framing(1)))
    text = lam.to_dot()
    assert text.startswith("graph gem {") and text.count(" -- ") == 30
