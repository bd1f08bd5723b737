"""Command-line front end.

Exit status: 0 on success, 1 on a missing file or a parse/semantic error,
2 on a numeric domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import obscure_state
from .dsl import ScriptError, execute, parse
from .errors import DomainError, ObscureError
from .membership import DEFAULT_TOL
from .report import Report, jsonable
from .selfcheck import run_checks

EXIT_OK, EXIT_USER, EXIT_DOMAIN = 0, 1, 2


def _emit(report: Report, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(report.to_json() + "\n")
    else:
        sys.stdout.write(report.to_text() + "\n")


def cmd_run(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.path}: {exc.strerror}", file=sys.stderr)
        return EXIT_USER
    try:
        program = parse(text)
        report = execute(program, model=args.model, tol=args.tolerance)
    except ScriptError as exc:
        print(f"{args.path}:{exc}", file=sys.stderr)
        return EXIT_USER
    except DomainError as exc:
        print(f"{args.path}: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ObscureError as exc:
        print(f"{args.path}: {exc}", file=sys.stderr)
        return EXIT_USER
    _emit(report, args.format)
    return EXIT_OK


def cmd_selfcheck(args) -> int:
    results = run_checks(args.tolerance)
    for r in results:
        print(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}")
    failed = [r.name for r in results if not r.passed]
    if failed:
        print(f"{len(failed)} check(s) failed: {', '.join(failed)}")
        return EXIT_USER
    print(f"all {len(results)} checks passed")
    return EXIT_OK


def cmd_bloch(args) -> int:
    try:
        params = obscure_state.BlochParams(args.theta, args.phi, args.theta_mu)
        st = obscure_state.from_bloch(params)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    report = Report("born")
    report.add(
        "bloch",
        {
            "quantum": st.quantum,
            "membership": st.membership,
            "probabilities": obscure_state.probabilities(st),
            "memberships": obscure_state.memberships(st),
            "norm": obscure_state.norm(st),
            "density": obscure_state.density2(st),
        },
    )
    _emit(report, args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="obscure-qubits", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute a script")
    run.add_argument("path")
    run.add_argument("--format", choices=("json", "text"), default="text")
    run.add_argument("--model", choices=("born", "arc", "circle-square"), default=None)
    run.add_argument("--tolerance", type=float, default=DEFAULT_TOL)
    run.add_argument("--seed", type=int, default=None, help="accepted and ignored")
    run.set_defaults(func=cmd_run)

    check = sub.add_parser("selfcheck", help="run the embedded reference checks")
    check.add_argument("--tolerance", type=float, default=1e-12)
    check.set_defaults(func=cmd_selfcheck)

    bloch = sub.add_parser("bloch", help="inspect a Bloch-parametrized product qubit")
    bloch.add_argument("theta", type=float)
    bloch.add_argument("phi", type=float)
    bloch.add_argument("theta_mu", type=float)
    bloch.add_argument("--format", choices=("json", "text"), default="text")
    bloch.set_defaults(func=cmd_bloch)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
