import io
import json

import pytest

from kirbytri.cli import INVALID, MALFORMED, OK, main
from kirbytri.codec import decode
from kirbytri.corpus import CORPUS


def run(argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    out = io.StringIO()
    rc = main(argv, out)
    return rc, out.getvalue()


def diagram(tmp_path, pd, decorations):
    p = tmp_path / "d.json"
    p.write_text(json.dumps({"pd": pd, "decorations": decorations}))
    return str(p)


@pytest.fixture
def cp2(tmp_path):
    return diagram(tmp_path, [[1, 1, 2, 2]], [{"component": 0, "kind": "framing", "value": 1}])


def test_build_cp2(cp2):
    rc, text = run(["build", "--input", cp2])
    assert rc == OK
    lines = dict(l.split(" ", 1) for l in text.splitlines())
    assert lines["predicted"] == lines["actual"] == "12"
    assert decode(lines["isosig"]).size == 12


def test_build_trifile_round_trip(cp2, tmp_path, monkeypatch):
    rc, text = run(["build", "--input", cp2, "--out", "trifile"])
    trifile = text.splitlines()[-1]
    rc, sig = run(["isosig", "encode", "-"], trifile, monkeypatch)
    assert rc == OK and decode(sig.strip()).size == 12


def test_bad_signature_is_malformed(capsys):
    rc, _ = run(["invariants", "--sig", "not*a*sig"])
    assert rc == MALFORMED
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "isosig"


def test_missing_file_is_malformed():
    assert run(["build", "--input", "/nonexistent/file.json"])[0] == MALFORMED


def test_validate_rejects_alternating_strand(tmp_path):
    pd = [[6, 1, 7, 2], [8, 3, 5, 4], [2, 5, 3, 6], [4, 7, 1, 8]]
    path = diagram(tmp_path, pd, [{"component": 0, "kind": "dot"},
                                  {"component": 1, "kind": "framing", "value": 0}])
    rc, text = run(["validate", "--input", path])
    assert rc == INVALID
    assert "components 2" in text


def test_crossing_diagram_is_invalid(tmp_path):
    path = diagram(tmp_path, [[1, 4, 2, 3], [3, 2, 4, 1]],
                   [{"component": 0, "kind": "framing", "value": 0},
                    {"component": 1, "kind": "framing", "value": 0}])
    assert run(["build", "--input", path])[0] == INVALID


def test_invariants_k3():
    rc, text = run(["invariants", "--sig", CORPUS["K3"], "--homology"])
    assert rc == OK
    assert "betti (1, 0, 22, 0, 1)" in text and "euler 24" in text


def test_simplify_is_deterministic():
    argv = ["simplify", "--sig", CORPUS["plug_P12"], "--rounds", "3", "--seed", "2"]
    a, b = run(argv), run(argv)
    assert a == b and a[0] == OK
    assert a[1].startswith("seed 2\n")


def test_simplify_bad_config():
    assert run(["simplify", "--sig", CORPUS["plug_P12"], "--rounds", "0"])[0] == MALFORMED


def test_export_dual_and_gem(cp2):
    rc, text = run(["export", "--dot", "--dual", "--sig", CORPUS["K3"]])
    assert rc == OK and text.count(" -- ") == 135
    rc, text = run(["export", "--dot", "--gem", "--input", cp2])
    assert rc == OK and text.count(" -- ") == 30
    assert run(["export", "--dot", "--gem", "--sig", CORPUS["K3"]])[0] == MALFORMED
