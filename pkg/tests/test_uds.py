import pytest

from kirbytri.codec import decode
from kirbytri.corpus import CORPUS
from kirbytri.moves import MoveKind, apply, enumerate_moves
from kirbytri.uds import (UdsConfig, replay, simplify, simplify_with_restarts,
                          vertex_reduction_pass)

from conftest import boundary_of_5_simplex


@pytest.fixture(scope="module")
def inflated():
    """Plug complex made larger by a few 2-4 moves."""
    t = decode(CORPUS["plug_P12"])
    for _ in range(3):
        t = apply(t, enumerate_moves(t, MoveKind.P24)[-1])
    return t


def test_config_validation():
    with pytest.raises(ValueError):
        UdsConfig(up_max=0)
    with pytest.raises(ValueError):
        UdsConfig(rounds=0)


def test_reduces_inflated(inflated):
    rep = simplify(inflated, UdsConfig(rounds=10, seed=1))
    assert rep.best.size < inflated.size
    assert rep.best.core_f_vector()[0] == inflated.core_f_vector()[0]
    assert rep.best.homology() == inflated.homology()


def test_trajectory_non_increasing(inflated):
    rep = simplify(inflated, UdsConfig(rounds=8, seed=2))
    ps = [f[2] for f in rep.trajectory]
    assert ps == sorted(ps, reverse=True)
    assert len(rep.trajectory) == rep.rounds_run


def test_trace_replays_to_best(inflated):
    rep = simplify(inflated, UdsConfig(rounds=6, seed=3))
    assert replay(inflated, rep.trace).isosig() == rep.best.isosig()


def test_deterministic_reports(inflated):
    cfg = UdsConfig(rounds=6, seed=4)
    assert simplify(inflated, cfg).to_text() == simplify(inflated, cfg).to_text()


def test_restarts_independent_of_workers(inflated):
    cfg = UdsConfig(rounds=3, seed=5, target_pentachora=6)
    a = simplify_with_restarts(inflated, cfg, 3, workers=1)
    b = simplify_with_restarts(inflated, cfg, 3, workers=2)
    assert a.to_text() == b.to_text()


def test_target_stops_early(inflated):
    rep = simplify(inflated, UdsConfig(rounds=50, seed=0, target_pentachora=inflated.size))
    assert rep.rounds_run == 0


def test_vertex_reduction_on_sphere():
    t = boundary_of_5_simplex()
    r = vertex_reduction_pass(t)
    assert r.core_f_vector()[0] < 6
    assert r.homology() == t.homology()
