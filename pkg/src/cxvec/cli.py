"""Command line entry point: ``cxvec solve | check | axioms``.

Exit codes: 0 all checks pass, 1 input error, 2 check failure,
3 unsupported physics (total internal reflection, non-TE, grazing).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import __version__
from .errors import CxvecError, Unsupported, UsageError
from .optics import check_triple, solve
from .scene import build_report, dumps, load_scene, load_triple, solved_block, triple_to_dict
from .suites import SUITES, run_suite

EXIT_OK, EXIT_INPUT, EXIT_CHECK, EXIT_UNSUPPORTED = 0, 1, 2, 3


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _tolerances(args, scene) -> tuple[float, float]:
    tg = scene.tol_geom if args.tol_geom is None else args.tol_geom
    tb = scene.tol_bc if args.tol_bc is None else args.tol_bc
    return tg, tb


def cmd_solve(args) -> int:
    scene = load_scene(args.scene)
    tol_geom, tol_bc = _tolerances(args, scene)
    sol = solve(scene.incident, scene.interface, scene.k0, scene.eta0, tol_geom)
    checks = check_triple(sol.triple, scene.interface, tol_geom, tol_bc, seed=args.seed)
    report = build_report(solved_block(sol), checks, args.seed, __version__, scene.digest)
    if args.triple_out:
        Path(args.triple_out).write_text(dumps(triple_to_dict(sol.triple)), encoding="utf-8")
    _emit(report.to_json(), args.output)
    return EXIT_OK if report.passed else EXIT_CHECK


def cmd_check(args) -> int:
    scene = load_scene(args.scene)
    tol_geom, tol_bc = _tolerances(args, scene)
    triple = load_triple(args.triple, scene.k0, scene.eta0)
    checks = check_triple(triple, scene.interface, tol_geom, tol_bc, seed=args.seed)
    report = build_report(None, checks, args.seed, __version__, scene.digest)
    _emit(report.to_json(), args.output)
    return EXIT_OK if report.passed else EXIT_CHECK


def parse_dims(text: str) -> range:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not m:
        raise UsageError(f"--dims: expected A..B, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2) or lo)
    if lo < 1 or hi < lo:
        raise UsageError(f"--dims: need 1 <= A <= B, got {text!r}")
    return range(lo, hi + 1)


def cmd_axioms(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}, all")
    if args.trials < 1:
        raise UsageError(f"--trials must be >= 1, got {args.trials}")
    dims = parse_dims(args.dims)
    failed = 0
    for name in names:
        for r in run_suite(name, args.seed, args.trials, dims):
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.suite}.{r.name}: {r.trials - r.failures}/{r.trials} passed, "
                  f"worst residual {r.worst_residual:.3e} (tol {r.tolerance:g})")
            for ce in r.counterexamples:
                print("  counterexample " + json.dumps(ce, sort_keys=True))
            failed += r.failures
    print(f"seed {args.seed}, trials {args.trials}, dims {dims.start}..{dims.stop - 1}: "
          f"{'no counterexamples' if failed == 0 else f'{failed} failing trials'}")
    return EXIT_OK if failed == 0 else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cxvec", description="Complex vector algebra and plane-wave interface checks")
    ap.add_argument("--version", action="version", version=f"cxvec {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def tol_flags(p):
        p.add_argument("--tol-geom", type=float, default=None, help="geometric tolerance (overrides the scene)")
        p.add_argument("--tol-bc", type=float, default=None, help="boundary-condition tolerance (overrides the scene)")
        p.add_argument("--seed", type=int, default=0, help="seed for sampling plane points and times")
        p.add_argument("-o", "--output", default=None, help="report path (default: stdout)")

    p = sub.add_parser("solve", help="solve a scene and verify the resulting triple")
    p.add_argument("scene")
    p.add_argument("--triple-out", default=None, help="also write the solved triple to this path")
    tol_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="verify a given triple against a scene")
    p.add_argument("scene")
    p.add_argument("triple")
    tol_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("axioms", help="run a randomized property suite")
    p.add_argument("suite", help=f"one of {', '.join(SUITES)}, all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--dims", default="1..8", help="dimension range A..B")
    p.set_defaults(func=cmd_axioms)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        # argparse uses 2 for usage errors; keep 2 for check failures only
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.func(args)
    except Unsupported as e:
        print(f"cxvec: unsupported: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (CxvecError, ValueError) as e:
        print(f"cxvec: input error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
