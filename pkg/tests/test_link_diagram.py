import pytest
from hypothesis import given, settings, strategies as st

from kirbytri.link_diagram import (DOT, DiagramError, KirbyDiagram, framing,
                                   load_diagram, one_handle_data, parse_pd,
                                   predict_pentachora, quadricolour_anchor,
                                   self_frame, unknot, validate_dotted_position)

TREFOIL_POS = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"
TREFOIL_NEG = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
HOPF_NEG = "X(1,4,2,3) X(3,2,4,1)"
HOPF_POS = "X(1,3,2,4) X(3,1,4,2)"
T24 = "X(6,1,7,2) X(8,3,5,4) X(2,5,3,6) X(4,7,1,8)"


def test_parse_formats_agree():
    a = parse_pd(TREFOIL_NEG)
    assert parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]") == a
    assert parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]") == a


@pytest.mark.parametrize("text", ["X(1,2,3)", "X(1,1,1,1)", "X(1,2,3,4)", "nonsense"])
def test_parse_rejects_malformed(text):
    with pytest.raises(DiagramError):
        KirbyDiagram(parse_pd(text), [framing(0)])


@pytest.mark.parametrize("text,n_cross,n_comp", [
    (TREFOIL_NEG, 3, 1), (HOPF_NEG, 2, 2), ("X(1,1,2,2)", 1, 1)])
def test_component_counts(text, n_cross, n_comp):
    d = KirbyDiagram(parse_pd(text), [framing(0)] * n_comp)
    assert len(d.pd) == n_cross
    assert d.n_components == n_comp


def test_decoration_count_must_match():
    with pytest.raises(DiagramError):
        KirbyDiagram(parse_pd(HOPF_NEG), [framing(0)])


def test_signs_and_kinds():
    d = KirbyDiagram(parse_pd(TREFOIL_POS), [framing(0)])
    info = d.classify_crossings()
    assert [i.sign for i in info] == [1, 1, 1]
    assert all(i.kind == "true" for i in info)
    assert d.writhe(0) == 3
    k = KirbyDiagram(parse_pd("X(1,1,2,2)"), [framing(1)])
    assert [i.kind for i in k.classify_crossings()] == ["positive_curl"]
    assert k.writhe(0) == 1


def test_cancelling_kinks():
    d = unknot(framing(0)).insert_curl(0, -1)
    kinds = sorted(i.kind for i in d.classify_crossings())
    assert kinds == ["negative_curl", "positive_curl"]
    assert d.writhe(0) == 0


def test_hopf_linking():
    assert KirbyDiagram(parse_pd(HOPF_POS), [framing(0)] * 2).linking_number(0, 1) == 1
    d = KirbyDiagram(parse_pd(HOPF_NEG), [framing(0)] * 2)
    assert d.linking_number(0, 1) == -1
    assert d.insert_curl(0, 1).linking_number(0, 1) == -1


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 1), st.sampled_from([1, -1])), max_size=6))
def test_curl_insertion_changes_only_writhe(ops):
    d = KirbyDiagram(parse_pd(HOPF_NEG), [framing(0)] * 2)
    w = [0, 0]
    for comp, s in ops:
        d = d.insert_curl(comp, s)
        w[comp] += s
    assert d.linking_matrix() == [[w[0], -1], [-1, w[1]]]


@pytest.mark.parametrize("k,curls", [(1, 3), (-1, 3), (2, 2), (-2, 2), (3, 3), (0, 4)])
def test_self_frame_unknot(k, curls):
    d = self_frame(unknot(framing(k)))
    assert d.writhe(0) == k
    assert d.counts() == (0, curls)
    assert quadricolour_anchor(d, 0) is not None
    assert self_frame(d) == d


def test_self_frame_large_writhe():
    # writhe +3 trefoil at framing -1 needs four negative curls plus an anchor
    d = self_frame(KirbyDiagram(parse_pd(TREFOIL_POS), [framing(-1)]))
    assert d.writhe(0) == -1
    x, c = d.counts()
    assert x == 3 and c >= 4


def test_self_frame_fixed_point():
    d = self_frame(unknot(framing(2)))
    assert self_frame(d).pd == d.pd


@pytest.mark.parametrize("x,c,p", [(14, 9, 148), (12, 5, 116), (0, 3, 12)])
def test_predict_formula(x, c, p):
    assert 8 * x + 4 * c == p


def test_predict_cp2():
    assert predict_pentachora(self_frame(unknot(framing(1)))) == 12


def test_dotted_hopf_standard_position():
    d = KirbyDiagram(parse_pd(HOPF_NEG), [DOT, framing(0)])
    assert validate_dotted_position(d).ok
    data = one_handle_data(self_frame(d))
    assert set(data.H) == {0}
    assert len(data.I[1]) == 2


def test_alternating_strand_rejected():
    d = KirbyDiagram(parse_pd(T24), [DOT, framing(0)])
    rep = validate_dotted_position(d)
    assert not rep.ok
    assert [v.rule for v in rep.violations] == ["ii"]


def test_dotted_self_crossing_rejected():
    d = KirbyDiagram(parse_pd(TREFOIL_NEG), [DOT])
    assert "i" in [v.rule for v in validate_dotted_position(d).violations]


def test_no_dots_empty_data():
    data = one_handle_data(self_frame(unknot(framing(1))))
    assert data.H == {} and all(not v for v in data.I.values())


def test_load_diagram_roundtrip():
    d = KirbyDiagram(parse_pd(HOPF_NEG), [DOT, framing(3)])
    assert load_diagram(d.to_json()) == d
    with pytest.raises(DiagramError):
        load_diagram("{")
    with pytest.raises(DiagramError):
        load_diagram('{"pd": [], "decorations": []}')
