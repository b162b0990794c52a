"""``ljcalc`` command line: verify structures, reproduce named checks, print tables.

Exit codes: 0 pass, 1 a check failed, 2 bad input or arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import graded_cohomology as gc
from . import liealg, suites
from .expoly import parse_rational
from .jacobi import JacobiStructure, verify_jacobi

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text)


def load_structure(path: str) -> JacobiStructure:
    p = Path(path)
    if not p.is_file():
        raise InputError(f"no such file: {path}")
    try:
        data = json.loads(p.read_text())
        return JacobiStructure.from_json(data)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"malformed structure file {path}: {exc}") from exc


def load_algebra(spec: str) -> liealg.LieAlgebra:
    p = Path(spec)
    if p.suffix == ".json" or p.is_file():
        if not p.is_file():
            raise InputError(f"no such file: {spec}")
        try:
            g = liealg.LieAlgebra.from_json(json.loads(p.read_text()), p.stem)
        except (json.JSONDecodeError, KeyError, TypeError, ValueError, IndexError) as exc:
            raise InputError(f"malformed algebra file {spec}: {exc}") from exc
    else:
        try:
            g = liealg.builtin(spec)
        except (KeyError, ValueError) as exc:
            raise InputError(str(exc)) from exc
    try:
        g.check_jacobi()
    except liealg.JacobiIdentityError as exc:
        raise InputError(str(exc)) from exc
    return g


def parse_omega(text: str) -> dict:
    """``"1-3,2-4"`` or ``"2*1-2,-1*3-4"`` (1-based indices) as a 2-cochain."""
    out = {}
    try:
        for term in text.split(","):
            coeff, _, pair = term.strip().rpartition("*")
            i, j = (int(v) - 1 for v in pair.split("-"))
            c = parse_rational(coeff) if coeff else Fraction(1)
            if i > j:
                i, j, c = j, i, -c
            if i == j or i < 0:
                raise ValueError(f"bad index pair {pair}")
            out[(i, j)] = out.get((i, j), 0) + c
    except ValueError as exc:
        raise InputError(f"cannot parse --omega {text!r}: {exc}") from exc
    return {k: v for k, v in out.items() if v}


def cmd_verify(args) -> int:
    J = load_structure(args.file)
    rep = verify_jacobi(J)
    residuals = rep.residuals()
    obj = {"file": args.file, "status": "pass" if rep.passed else "fail", "residuals": residuals}
    text = f"{args.file}: {'PASS' if rep.passed else 'FAIL'}" + "".join(f"\n  {r}" for r in residuals)
    _emit(obj, args.format, text)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_reproduce(args) -> int:
    if args.name not in suites.REPRODUCE_NAMES:
        raise InputError(f"unknown check {args.name!r}; choose from {', '.join(suites.REPRODUCE_NAMES)}")
    rep = suites.reproduce(args.name, seed=args.seed, samples=args.samples)
    _emit(rep.to_json(), args.format, rep.render())
    return EXIT_OK if rep.status == "pass" else EXIT_FAIL


def _list_text(title: str, dims: list[int]) -> str:
    return f"{title}\n" + "\n".join(f"  k={k}: {d}" for k, d in enumerate(dims)) + f"\n  dims: {dims}"


def cmd_table(args) -> int:
    g = load_algebra(args.algebra)
    label = g.name or args.algebra
    if args.kind == "ce":
        dims = liealg.betti_numbers(g)
        _emit({"kind": "ce", "algebra": label, "dims": dims}, args.format, _list_text(f"CE cohomology of {label}", dims))
    elif args.kind == "nilmanifold-lj":
        try:
            Omega = parse_omega(args.omega) if args.omega else liealg.default_symplectic_cochain(g)
            dims = liealg.nilmanifold_lj_dims(g, Omega)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        _emit({"kind": "nilmanifold-lj", "algebra": label, "dims": dims}, args.format,
              _list_text(f"LJ dimensions for {label}", dims))
    else:
        if args.kmax < 0 or args.dmax < 0:
            raise InputError("--kmax and --dmax must be non-negative")
        op = gc.sigma_bar_operator(liealg.lie_poisson(g).lam)
        table = gc.cohomology_dims(op, range(args.kmax + 1), range(args.dmax + 1))
        width = max(3, *(len(str(v)) for v in table.dims.values()))
        head = "k\\d " + " ".join(f"{d:>{width}}" for d in table.ds)
        body = [f"{k:<3} " + " ".join(f"{v:>{width}}" for v in table.row(k)) for k in table.ks]
        _emit({"kind": "graded-lp", "algebra": label, "rows": table.rows()}, args.format,
              f"graded LP cohomology of {label}\n" + "\n".join([head] + body))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json"], default="table")
    parser = argparse.ArgumentParser(prog="ljcalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check the Jacobi identities of a structure file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce", parents=[common], help="run a named check")
    p.add_argument("name")
    p.add_argument("--seed", type=int, default=suites.DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("table", parents=[common], help="print a dimension table")
    p.add_argument("kind", choices=["ce", "graded-lp", "nilmanifold-lj"])
    p.add_argument("--algebra", required=True, help="built-in name or algebra JSON file")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--omega", help="symplectic 2-cochain for nilmanifold-lj, e.g. 1-3,2-4")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
