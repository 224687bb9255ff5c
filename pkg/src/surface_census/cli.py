"""Command-line front end.

Subcommands: validate, weights, components, compile, orbits, reduce,
census.  Exit codes: 0 success (and, for census, agreement), 1 on a
verification mismatch, 2 on usage errors.  The environment variable
SURFACE_CENSUS_UF_CAP overrides the union-find carrier-size cap.
"""

import argparse
import json
import os
import sys

from .census import METHODS, census as run_census, components as count_components
from .compiler import compile_surface
from .intervals import DEFAULT_ORBIT_CAP, count_orbits, parse_system, write_system
from .normal_surface import (SurfaceCoefficients, coordinates,
                             edge_weights, euler_characteristic, glue_components)
from .reduction import claim2_run
from .triangulation import build_paper_triangulation, export_tables, validate


def _uf_cap():
    raw = os.environ.get("SURFACE_CENSUS_UF_CAP")
    return int(raw) if raw else DEFAULT_ORBIT_CAP


def _add_uv(parser):
    parser.add_argument("--u", type=int, required=True)
    parser.add_argument("--v", type=int, required=True)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="surface-census",
        description="Count components of the normal surfaces uF + vG in the "
                    "K13n586 exterior and verify the genus census.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the built-in triangulation")
    p.add_argument("--export", action="store_true",
                   help="also print the gluing and edge tables")

    p = sub.add_parser("weights", help="edge weights of uF + vG")
    _add_uv(p)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("components", help="number of connected components")
    _add_uv(p)
    p.add_argument("--method", choices=("gluing", "unionfind", "reduction", "gcd"),
                   default="gcd")

    p = sub.add_parser("compile", help="emit the pairing system of uF + vG")
    _add_uv(p)
    p.add_argument("-o", "--output", default=None, help="output file (default stdout)")

    p = sub.add_parser("orbits", help="orbit count of a pairing-system file")
    p.add_argument("--input", required=True)
    p.add_argument("--method", choices=("unionfind",), default="unionfind")

    p = sub.add_parser("reduce", help="run the width-recurrence orbit count")
    _add_uv(p)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--accelerated", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("census", help="genus census vs the Euler totient")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="gcd")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    return parser


def _cmd_validate(args):
    tri = build_paper_triangulation()
    report = validate(tri)
    if args.export:
        print(export_tables(tri), end="")
    if report:
        for line in report:
            print("violation: %s" % line)
        return 1
    print("triangulation valid: 10 tetrahedra, 20 face classes, 10 edge classes")
    return 0


def _cmd_weights(args):
    tri = build_paper_triangulation()
    coeff = SurfaceCoefficients(args.u, args.v)
    nc = coordinates(coeff)
    w = edge_weights(nc, tri)
    if args.format == "json":
        print(json.dumps({"u": args.u, "v": args.v, "weights": list(w),
                          "total": sum(w),
                          "components": glue_components(nc, tri)[0],
                          "chi": euler_characteristic(nc, tri)}))
    else:
        for cls, wt in enumerate(w):
            print("e%d\t%d" % (cls, wt))
        print("total\t%d" % sum(w))
    return 0


def _cmd_components(args):
    tri = build_paper_triangulation()
    n = count_components(args.u, args.v, method=args.method, tri=tri,
                              uf_cap=_uf_cap())
    print(n)
    return 0


def _cmd_compile(args):
    tri = build_paper_triangulation()
    sys_ = compile_surface(coordinates(SurfaceCoefficients(args.u, args.v)), tri)
    text = write_system(sys_)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def _cmd_orbits(args):
    with open(args.input) as fh:
        sys_ = parse_system(fh.read())
    print(count_orbits(sys_, cap=_uf_cap()))
    return 0


def _cmd_reduce(args):
    count, trace = claim2_run((args.u, args.v), accelerated=args.accelerated)
    if args.format == "json":
        print(json.dumps({"u": args.u, "v": args.v, "orbits": count,
                          "trace": [{"step": s.index, "f": s.f_width,
                                     "g": s.g_width, "h": s.h_width,
                                     "move": s.move, "batch": s.batch}
                                    for s in trace]}))
        return 0
    if args.trace:
        for s in trace:
            print(s.format())
    print(count)
    return 0


def _cmd_census(args):
    rows = run_census(args.max_n, method=args.method)
    if args.format == "json":
        print(json.dumps([r.as_dict() for r in rows]))
    else:
        print("n\tcount\tphi\tagree")
        for r in rows:
            agree = "na" if r.agree is None else str(r.agree).lower()
            print("%d\t%d\t%d\t%s" % (r.n, r.count, r.phi, agree))
    bad = [r for r in rows if r.agree is False]
    return 1 if bad else 0


_COMMANDS = {
    "validate": _cmd_validate,
    "weights": _cmd_weights,
    "components": _cmd_components,
    "compile": _cmd_compile,
    "orbits": _cmd_orbits,
    "reduce": _cmd_reduce,
    "census": _cmd_census,
}


def run_cli(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def main():
    raise SystemExit(run_cli())


if __name__ == "__main__":
    main()
