"""Command-line front end.

One flat verb per pipeline; every output is canonical JSON (sorted keys, no
whitespace, "num/den" rationals) written to -o or stdout, so runs with equal
inputs and seeds are byte-identical.  Errors leave as structured JSON on
stderr with exit codes: 1 validation, 2 verification failure, 3 exhausted
budget or failed construction.
"""

import argparse
import sys
from fractions import Fraction

from . import files
from .errors import StressMatroidError, VerificationFailed
from .exact_geom import Point, rat_str
from .gadget import (
    build_gadget,
    discover_circuits,
    gamma_prime,
    harmonic_gadget,
    k4_replace,
    matroid_invariance_harness,
    verify_gadget,
)
from .sign_matroid import matroid_from_framework, matroid_equal
from .stress_kernel import is_stressable, stress_basis
from .svg import emit_svg


def _write(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _emit(data, path):
    _write(files.canonical_json(data), path)


def _cmd_stresses(args):
    fw = files.framework_from_data(files.load_json(args.framework))
    basis = stress_basis(fw)
    data = files.basis_to_data(fw, basis)
    data["stressable"] = is_stressable(fw)
    _emit(data, args.output)
    return 0


def _cmd_matroid(args):
    fw = files.framework_from_data(files.load_json(args.framework))
    m = matroid_from_framework(fw, with_covectors=args.covectors, cap=args.cap)
    _emit(files.matroid_to_data(m), args.output)
    return 0


def _cmd_equal(args):
    m1 = files.matroid_from_data(files.load_json(args.first))
    m2 = files.matroid_from_data(files.load_json(args.second))
    correspondence = None
    if args.map and args.map != "id":
        raw = files.load_json(args.map)
        correspondence = dict(raw)
    result = matroid_equal(m1, m2, correspondence)
    _emit({"equal": result}, args.output)
    return 0 if result else 2


def _cmd_gadget_build(args):
    arr = files.arrangement_from_data(files.load_json(args.arrangement))
    layout = build_gadget(arr)
    _emit(files.layout_to_data(layout), args.output)
    return 0


def _cmd_gadget_verify(args):
    layout = files.layout_from_data(files.load_json(args.layout))
    report = verify_gadget(layout, seed=args.seed)
    try:
        classes = discover_circuits(layout)
        report["circuit_classes"] = {
            "a": classes["a"],
            "b": {str(i): c for i, c in classes["b"].items()},
            "c": {str(i): c for i, c in classes["c"].items()},
            "d": {str(i): c for i, c in classes["d"].items()},
        }
    except StressMatroidError as exc:
        report["circuit_classes"] = {"error": str(exc)}
    _emit(report, args.output)
    return 0 if report["passed"] else 2


def _cmd_invariance(args):
    arr = files.arrangement_from_data(files.load_json(args.arrangement))
    inequivalent = None
    if args.inequivalent:
        inequivalent = files.arrangement_from_data(
            files.load_json(args.inequivalent))
    report = matroid_invariance_harness(
        arr, args.trials, args.seed, inequivalent=inequivalent)
    _emit(report, args.output)
    ok = report["all_equal"] and report.get("inequivalent_differs", True)
    return 0 if ok else 2


def _cmd_k4replace(args):
    fw = files.framework_from_data(files.load_json(args.framework))
    out = k4_replace(fw, args.edge, args.side)
    _emit(files.framework_to_data(out), args.output)
    return 0


def _cmd_gammaprime(args):
    arr = files.arrangement_from_data(files.load_json(args.arrangement))
    fw, matroid = gamma_prime(arr)
    data = {
        "framework": files.framework_to_data(fw),
        "matroid": files.matroid_to_data(matroid),
        "stressable": is_stressable(fw),
    }
    _emit(data, args.output)
    return 0


def _cmd_harmonic(args):
    coords = [Fraction(x) for x in args.coords]
    p1 = Point(coords[0], coords[1])
    p2 = Point(coords[2], coords[3])
    p3 = Point(coords[4], coords[5])
    fw, distinguished, extras = harmonic_gadget(p1, p2, p3)
    data = {
        "framework": files.framework_to_data(fw),
        "distinguished": list(distinguished),
        "fourth_point": {
            "x": rat_str(fw.pos(distinguished[3]).x),
            "y": rat_str(fw.pos(distinguished[3]).y),
        },
        "cross_ratio": rat_str(extras["cross_ratio"]),
        "comparison": files.framework_to_data(extras["comparison"]),
        "matroids_differ": extras["matroids_differ"],
        "witness_support": extras["witness_support"],
        "witness": extras["witness"],
    }
    _emit(data, args.output)
    if not extras["matroids_differ"]:
        raise VerificationFailed("comparison matroid does not differ")
    return 0


def _cmd_svg(args):
    fw = files.framework_from_data(files.load_json(args.framework))
    s = None
    if args.stress:
        s = files.stress_from_data(files.load_json(args.stress), fw)
    _write(emit_svg(fw, s), args.output)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stressmatroid",
        description="Exact stress spaces and sign matroids of plane frameworks.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("-o", "--output", default=None, metavar="PATH")
        return p

    p = add("stresses", _cmd_stresses, "stress basis of a framework")
    p.add_argument("framework")

    p = add("matroid", _cmd_matroid, "sign matroid of a framework")
    p.add_argument("framework")
    p.add_argument("--covectors", action="store_true",
                   help="also enumerate all sign vectors")
    p.add_argument("--cap", type=int, default=None,
                   help="override the covector enumeration cap")

    p = add("equal", _cmd_equal, "compare two matroid files")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--map", default="id",
                   help='"id" or a JSON file mapping first labels to second')

    p = add("gadget-build", _cmd_gadget_build,
            "build the rhombus gadget over a line arrangement")
    p.add_argument("arrangement")

    p = add("gadget-verify", _cmd_gadget_verify,
            "re-check all structural claims of a built gadget")
    p.add_argument("layout")
    p.add_argument("--seed", type=int, default=7)

    p = add("invariance", _cmd_invariance,
            "matroid invariance under type-preserving perturbations")
    p.add_argument("arrangement")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inequivalent", default=None, metavar="PATH",
                   help="arrangement whose gadget matroid must differ")

    p = add("k4replace", _cmd_k4replace,
            "replace an edge by a K4-minus-edge patch")
    p.add_argument("framework")
    p.add_argument("--edge", required=True, help='edge key "u|v" or index')
    p.add_argument("--side", choices=("left", "right"), default="left")

    p = add("gammaprime", _cmd_gammaprime,
            "chains-only framework over an arrangement")
    p.add_argument("arrangement")

    p = add("harmonic", _cmd_harmonic,
            "harmonic-conjugate forcing configuration from three seeds")
    # tuple metavars on positionals break --help on some 3.10 builds
    p.add_argument("coords", nargs=6, metavar="COORD",
                   help="x1 y1 x2 y2 x3 y3 as rationals")

    p = add("svg", _cmd_svg, "render a framework, optionally with a stress")
    p.add_argument("framework")
    p.add_argument("--stress", default=None, metavar="PATH")

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StressMatroidError as exc:
        payload = {"error": exc.code, "message": exc.message}
        if exc.detail is not None:
            payload["detail"] = exc.detail
        sys.stderr.write(files.canonical_json(payload))
        return exc.exit_code
    except OSError as exc:
        sys.stderr.write(files.canonical_json(
            {"error": "io-error", "message": str(exc)}))
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(files.canonical_json(
            {"error": "invalid-input", "message": str(exc)}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
