"""Command-line interface.

Polytope arguments are a catalog name (M1..M12), a file in the
vertices-as-columns format, or ``-`` for standard input.  Results are
single JSON records or JSONL streams on stdout.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import canon, checks, hollowlab, lifts, textio
from .polytope import dilated_simplex, normalized_volume, unit_cube
from .width import lattice_width

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _named(name):
    if name in hollowlab.CATALOG_MATRICES:
        return hollowlab.catalog(name)
    small = {"square": lambda: unit_cube(2), "cube": lambda: unit_cube(3),
             "2simplex2": lambda: dilated_simplex(2, 2),
             "simplex2": lambda: dilated_simplex(2, 1),
             "hz": lifts.family_hz_base}
    if name in small:
        return small[name]()
    return None


def load_polytope(arg, stdin=None):
    """Resolve a polytope argument; ``None`` means standard input."""
    if arg is not None and arg != "-":
        P = _named(arg)
        if P is not None:
            return P
        if not os.path.exists(arg):
            raise InputError(f"{arg!r} is neither a catalog name nor a file")
        with open(arg) as fh:
            text = fh.read()
    else:
        text = (stdin or sys.stdin).read()
    try:
        return textio.parse_document(text).polytope()
    except textio.ParseError as e:
        raise InputError(f"parse error: {e}") from None
    except ValueError as e:
        raise InputError(str(e)) from None


def _emit(rec, out):
    out.write(json.dumps(rec, separators=(",", ":"), sort_keys=True) + "\n")


def cmd_width(args, out):
    P = load_polytope(args.input)
    _emit(lattice_width(P, method=args.method).as_record(), out)
    return EXIT_OK


def classify_record(P):
    return {"hollow": hollowlab.is_hollow(P), "empty": hollowlab.is_empty(P),
            "size": len(P.lattice_points), "volume": normalized_volume(P),
            "dim": P.intrinsic_dim, "width": lattice_width(P).value}


def cmd_classify(args, out):
    _emit(classify_record(load_polytope(args.input)), out)
    return EXIT_OK


def cmd_normal_form(args, out):
    P = load_polytope(args.input)
    _emit({"key": canon.canonical_form(P).hex()}, out)
    return EXIT_OK


def cmd_equiv(args, out):
    P1, P2 = load_polytope(args.first), load_polytope(args.second)
    ok, m = canon.equivalent(P1, P2)
    rec = {"equivalent": ok}
    if ok:
        rec["witness"] = {"linear": [list(r) for r in m.linear],
                          "translation": list(m.translation)}
    _emit(rec, out)
    return EXIT_OK


def cmd_census(args, out):
    bad = hollowlab.check_catalog()
    if bad:
        print(f"catalog check failed for {bad}", file=sys.stderr)
        return EXIT_FAIL
    seed = load_polytope(args.seed)
    recs = hollowlab.census_subpolytopes(seed, args.min_width,
                                         include_degenerate=args.include_degenerate,
                                         threads=args.threads)
    if args.out:
        hollowlab.write_census(recs, args.out)
    else:
        for r in recs:
            out.write(r.to_json() + "\n")
    return EXIT_OK


def cmd_family(args, out):
    if args.name == "reeve":
        P = lifts.family_reeve(args.r)
    elif args.name == "hz":
        P = lifts.family_hz_base()
    elif args.name == "bbk":
        P = lifts.family_bbk(args.N, args.a)
    elif args.name == "product":
        P = lifts.product_with_segment(load_polytope(args.base), args.W)
    else:
        P = lifts.bipyramid_lift(load_polytope(args.base), _ints(args.u), _ints(args.v),
                                 args.h)
    _emit(textio.polytope_record(P, family=args.name), out)
    return EXIT_OK


def _ints(s):
    try:
        return tuple(int(x) for x in s.split(","))
    except (AttributeError, ValueError):
        raise InputError(f"expected comma-separated integers, got {s!r}") from None


def cmd_lift(args, out):
    Q = load_polytope(args.base)
    for c in lifts.enumerate_tight_lifts(Q, args.height_bound, args.size_bound):
        rec = c.as_record()
        rec["empty"] = c.size == len(c.lift.total.vertices)
        _emit(rec, out)
    return EXIT_OK


def cmd_projections(args, out):
    P = load_polytope(args.input)
    for u, Q in hollowlab.hollow_projection_directions(P):
        _emit({"direction": list(u), "width": lattice_width(Q).value,
               "vertices": [list(v) for v in Q.vertices]}, out)
    return EXIT_OK


def cmd_verify(args, out):
    only = None if not args.only else {int(x) for x in args.only.split(",")}
    results = checks.run_all(only)
    for r in results:
        out.write(r.line() + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="latpoly", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("width", help="certified lattice width")
    s.add_argument("input", nargs="?")
    s.add_argument("--method", choices=("simplex", "polar"), default="simplex")
    s.set_defaults(fn=cmd_width)

    s = sub.add_parser("classify", help="hollow/empty/size/volume/dim/width")
    s.add_argument("input", nargs="?")
    s.set_defaults(fn=cmd_classify)

    s = sub.add_parser("normal-form", help="canonical key (hex)")
    s.add_argument("input", nargs="?")
    s.set_defaults(fn=cmd_normal_form)

    s = sub.add_parser("equiv", help="unimodular equivalence with witness")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(fn=cmd_equiv)

    s = sub.add_parser("census", help="subpolytope census of a seed")
    s.add_argument("--seed", required=True)
    s.add_argument("--min-width", type=int, required=True)
    s.add_argument("--out")
    s.add_argument("--threads", type=int, default=hollowlab.default_threads())
    s.add_argument("--include-degenerate", action="store_true")
    s.set_defaults(fn=cmd_census)

    s = sub.add_parser("family", help="generate a named family member")
    s.add_argument("name", choices=("reeve", "hz", "bbk", "product", "bipyramid"))
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--N", type=int, default=4)
    s.add_argument("--a", type=int, default=1)
    s.add_argument("--W", type=int, default=1)
    s.add_argument("--h", type=int, default=1)
    s.add_argument("--base", default="square")
    s.add_argument("--u", default="0,0")
    s.add_argument("--v", default="1,1")
    s.set_defaults(fn=cmd_family)

    s = sub.add_parser("lift", help="lift enumeration")
    lsub = s.add_subparsers(dest="lift_command", required=True)
    e = lsub.add_parser("enumerate", help="classes of tight lifts")
    e.add_argument("--base", required=True)
    e.add_argument("--height-bound", type=int, required=True)
    e.add_argument("--size-bound", type=int, required=True)
    e.set_defaults(fn=cmd_lift)

    s = sub.add_parser("projections", help="hollow lattice projections")
    s.add_argument("input", nargs="?")
    s.set_defaults(fn=cmd_projections)

    s = sub.add_parser("verify", help="run the reproduction checks")
    s.add_argument("--only", help="comma-separated check numbers")
    s.set_defaults(fn=cmd_verify)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.fn(args, out)
    except (InputError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:  # constraint violations from the library
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
