"""Command-line interface.

Exit codes: 0 success, 1 validation failure, 2 malformed input.
"""
import argparse
import json
import sys

from .codec import SignatureError, decode, encode, export_dot, from_trifile, to_trifile
from .gem import GemError, build_gem
from .link_diagram import (DiagramError, load_diagram, predict_pentachora,
                           self_frame, validate_dotted_position)
from .triangulation import from_gem
from .uds import UdsConfig, simplify_with_restarts, vertex_reduction_pass

OK, INVALID, MALFORMED = 0, 1, 2


class CliError(Exception):
    def __init__(self, code, kind, message):
        super().__init__(message)
        self.code = code
        self.kind = kind


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise CliError(MALFORMED, "io", str(e))


def _diagram(path):
    try:
        return load_diagram(_read(path))
    except DiagramError as e:
        raise CliError(MALFORMED, "diagram", str(e))


def _tri(sig):
    try:
        return decode(sig.strip())
    except (SignatureError, ValueError) as e:
        raise CliError(MALFORMED, "isosig", str(e))


def _pipeline(d):
    rep = validate_dotted_position(d)
    if not rep.ok:
        raise CliError(INVALID, "position", str(rep))
    try:
        framed, g, lam = build_gem(d)
    except (GemError, DiagramError) as e:
        raise CliError(INVALID, "gem", str(e))
    return framed, g, lam, from_gem(lam)


def cmd_build(a, out):
    d = _diagram(a.input)
    framed, _, _, tri = _pipeline(d)
    out.write("predicted %d\n" % predict_pentachora(framed))
    out.write("actual %d\n" % tri.size)
    out.write("f-vector %s\n" % (tri.f_vector,))
    if a.out == "trifile":
        out.write(to_trifile(tri) + "\n")
    else:
        out.write("isosig %s\n" % tri.isosig())


def cmd_simplify(a, out):
    tri = _tri(a.sig)
    if a.vertex_reduce:
        tri = vertex_reduction_pass(tri)
    try:
        cfg = UdsConfig(a.up_max, a.side_max, a.rounds, a.seed, a.target)
    except ValueError as e:
        raise CliError(MALFORMED, "config", str(e))
    rep = simplify_with_restarts(tri, cfg, a.restarts, a.workers)
    out.write(rep.to_text())


def cmd_invariants(a, out):
    tri = _tri(a.sig)
    everything = not (a.homology or a.pi1 or a.links)
    out.write("pentachora %d\n" % tri.size)
    out.write("f-vector %s\n" % (tri.f_vector,))
    if a.homology or everything:
        kinds = tri.classify_vertices()
        out.write("euler %d\n" % tri.euler_characteristic())
        h = tri.truncated_homology() if "ideal" in kinds else tri.homology()
        out.write("betti %s\n" % (h.betti,))
        out.write(str(h) + "\n")
    if a.pi1 or everything:
        out.write("pi1 %s\n" % tri.fundamental_group())
    if a.links or everything:
        for v, k in enumerate(tri.classify_vertices()):
            out.write("vertex %d %s\n" % (v, k))


def cmd_isosig(a, out):
    payload = _read(a.file)
    if a.action == "encode":
        try:
            tri = from_trifile(payload)
        except (SignatureError, ValueError) as e:
            raise CliError(MALFORMED, "trifile", str(e))
        out.write(encode(tri) + "\n")
    else:
        out.write(to_trifile(_tri(payload)) + "\n")


def cmd_export(a, out):
    if a.sig is not None:
        if a.gem:
            raise CliError(MALFORMED, "export", "--gem needs --input")
        out.write(export_dot(_tri(a.sig)))
        return
    if a.input is None:
        raise CliError(MALFORMED, "export", "give --sig or --input")
    _, _, lam, tri = _pipeline(_diagram(a.input))
    out.write(export_dot(tri) if a.dual else export_dot(lam))


def cmd_validate(a, out):
    d = _diagram(a.input)
    try:
        framed = self_frame(d)
    except DiagramError as e:
        raise CliError(INVALID, "framing", str(e))
    rep = validate_dotted_position(d)
    out.write("components %d\n" % d.n_components)
    out.write("dotted %d\n" % d.n_dotted)
    out.write("predicted %d\n" % predict_pentachora(framed))
    out.write(str(rep) + "\n")
    if not rep.ok:
        raise CliError(INVALID, "position", "dotted components are not in standard position")


def parser():
    p = argparse.ArgumentParser(prog="kirbytri", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="diagram -> triangulation")
    b.add_argument("--input", required=True)
    b.add_argument("--out", choices=("sig", "trifile"), default="sig")
    b.set_defaults(func=cmd_build)

    s = sub.add_parser("simplify", help="up-down simplification")
    s.add_argument("--sig", required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--up-max", type=int, default=4)
    s.add_argument("--side-max", type=int, default=4)
    s.add_argument("--rounds", type=int, default=100)
    s.add_argument("--restarts", type=int, default=1)
    s.add_argument("--target", type=int, default=None)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--vertex-reduce", action="store_true")
    s.set_defaults(func=cmd_simplify)

    i = sub.add_parser("invariants", help="homology, fundamental group, vertex links")
    i.add_argument("--sig", required=True)
    i.add_argument("--homology", action="store_true")
    i.add_argument("--pi1", action="store_true")
    i.add_argument("--links", action="store_true")
    i.set_defaults(func=cmd_invariants)

    g = sub.add_parser("isosig", help="convert between signatures and gluing files")
    g.add_argument("action", choices=("encode", "decode"))
    g.add_argument("file", nargs="?", default="-")
    g.set_defaults(func=cmd_isosig)

    e = sub.add_parser("export", help="DOT output")
    e.add_argument("--dot", action="store_true", required=True)
    kind = e.add_mutually_exclusive_group()
    kind.add_argument("--dual", action="store_true")
    kind.add_argument("--gem", action="store_true")
    src = e.add_mutually_exclusive_group(required=True)
    src.add_argument("--sig")
    src.add_argument("--input")
    e.set_defaults(func=cmd_export)

    v = sub.add_parser("validate", help="check a diagram file")
    v.add_argument("--input", required=True)
    v.set_defaults(func=cmd_validate)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    a = parser().parse_args(argv)
    try:
        a.func(a, out)
    except CliError as e:
        sys.stderr.write(json.dumps({"error": e.kind, "message": str(e)}) + "\n")
        return e.code
    return OK


if __name__ == "__main__":
    sys.exit(main())
