"""Up-down simplification.

Each round climbs with random 2-4 moves, optionally moves sideways with 3-3
or 4-4 moves, then descends with 2-0 edge and 2-0 triangle moves for as long
as any apply.  The vertex count never changes during a run.

Randomness comes from ``random.Random(seed)`` (Mersenne Twister), so runs
are reproducible across platforms.  A random legal site is chosen by
shuffling the candidate sites and taking the first legal one, which is
uniform over the legal sites.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import random
import time

from .moves import MoveKind, MoveSite, _simulate, apply, candidate_sites


@dataclass(frozen=True)
class UdsConfig:
    up_max: int = 4
    side_max: int = 4
    rounds: int = 100
    seed: int = 0
    target_pentachora: int = None

    def __post_init__(self):
        for name in ("up_max", "side_max", "rounds"):
            if getattr(self, name) < 1:
                raise ValueError("%s must be at least 1" % name)


@dataclass
class UdsReport:
    best: object
    trajectory: list          # best core f-vector after each round
    trace: list               # moves leading from the input to ``best``
    seed: int
    rounds_run: int = 0
    wall_time: float = field(default=0.0, compare=False)

    def to_text(self):
        """Stable text form (wall time left out so runs compare byte for byte)."""
        lines = ["seed %d" % self.seed, "rounds %d" % self.rounds_run,
                 "best %s" % (self.best.core_f_vector(),),
                 "isosig %s" % self.best.isosig(), "trajectory"]
        lines += ["  %d %d %d" % f for f in self.trajectory]
        lines.append("trace %d" % len(self.trace))
        lines += ["  " + s.describe() for s in self.trace]
        return "\n".join(lines) + "\n"


def _random_move(tri, kinds, rng):
    cands = [s for k in kinds for s in candidate_sites(tri, k)]
    rng.shuffle(cands)
    for s in cands:
        out = _simulate(tri, s)
        if out is not None:
            return s, out
    return None


def _first_move(tri, kind):
    for s in candidate_sites(tri, kind):
        out = _simulate(tri, s)
        if out is not None:
            return s, out
    return None


def _descend(tri, trace):
    """2-0 edge and 2-0 triangle moves, alternating scans, until neither applies."""
    kinds = (MoveKind.TWO_ZERO_EDGE, MoveKind.TWO_ZERO_TRIANGLE)
    idle = 0
    i = 0
    while idle < 2:
        r = _first_move(tri, kinds[i % 2])
        i += 1
        if r is None:
            idle += 1
            continue
        idle = 0
        s, tri = r
        trace.append(s)
    return tri


def _descent_available(tri):
    return any(_first_move(tri, k) is not None
               for k in (MoveKind.TWO_ZERO_EDGE, MoveKind.TWO_ZERO_TRIANGLE))


def simplify(tri, cfg):
    """Run ``cfg.rounds`` rounds of up-down simplification from ``tri``."""
    t0 = time.perf_counter()
    rng = random.Random(cfg.seed)
    cur = tri
    trace = []
    best, best_len = tri, 0
    traj = []
    prefer33 = True
    rounds = 0
    cur = _descend(cur, trace)
    if cur.size < best.size:
        best, best_len = cur, len(trace)
    for r in range(cfg.rounds):
        if cfg.target_pentachora is not None and best.size <= cfg.target_pentachora:
            break
        rounds += 1
        # 1: climb, rung r of the ladder
        for _ in range(r % cfg.up_max + 1):
            m = _random_move(cur, (MoveKind.P24,), rng)
            if m is None:
                break
            trace.append(m[0])
            cur = m[1]
        # 2: sideways when no descent is available
        if not _descent_available(cur):
            j = rng.randint(1, cfg.side_max)
            order = (MoveKind.P33, MoveKind.P44) if prefer33 else (MoveKind.P44, MoveKind.P33)
            prefer33 = not prefer33
            for kind in order:
                done = 0
                for _ in range(j):
                    m = _random_move(cur, (kind,), rng)
                    if m is None:
                        break
                    trace.append(m[0])
                    cur = m[1]
                    done += 1
                if done:
                    break
        # 3: descend
        cur = _descend(cur, trace)
        if cur.size < best.size:
            best, best_len = cur, len(trace)
        traj.append(best.core_f_vector())
    return UdsReport(best, traj, trace[:best_len], cfg.seed, rounds,
                     time.perf_counter() - t0)


def replay(tri, trace):
    """Apply a recorded trace; raises IllegalMove if any step is illegal."""
    for s in trace:
        tri = apply(tri, s)
    return tri


def vertex_reduction_pass(tri):
    """Greedily apply edge collapses and 2-0 vertex moves until none apply."""
    while True:
        r = _first_move(tri, MoveKind.COLLAPSE_EDGE) or _first_move(tri, MoveKind.TWO_ZERO_VERTEX)
        if r is None:
            return tri
        tri = r[1]


def _run(args):
    tri, cfg = args
    return simplify(tri, cfg)


def simplify_with_restarts(tri, cfg, n_restarts, workers=1):
    """Independent runs with seeds seed, seed+1, ...; the winner has the
    fewest pentachora, ties going to the smaller signature."""
    if n_restarts < 1:
        raise ValueError("n_restarts must be at least 1")
    cfgs = [UdsConfig(cfg.up_max, cfg.side_max, cfg.rounds, cfg.seed + i, cfg.target_pentachora)
            for i in range(n_restarts)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            reports = list(ex.map(_run, [(tri, c) for c in cfgs]))
    else:
        reports = []
        for c in cfgs:
            reports.append(simplify(tri, c))
            if _hit(reports[-1], c):
                break
    # the same cut in both modes keeps the winner independent of workers
    for i, (rep, c) in enumerate(zip(reports, cfgs)):
        if _hit(rep, c):
            reports = reports[:i + 1]
            break
    return min(reports, key=lambda r: (r.best.size, r.best.isosig()))


def _hit(rep, cfg):
    return cfg.target_pentachora is not None and rep.best.size <= cfg.target_pentachora
