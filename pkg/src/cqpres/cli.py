"""Command-line entry point: ``cqpres analyze|chains|svg|selftest``.

Exit codes: 0 success, 2 bad input, 3 internal invariant violation, 4 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from .contfrac import enumerate_zero_chains, format_chain
from .invariants import CyclicQuotient, InvariantViolation, invariants
from .presolutions import admissible_chains
from .report import (
    build_report,
    chain_oracle_problems,
    check_report,
    dumps,
    oracle_problems,
    render_text,
)
from .selftest import run_sweep
from .svg import build_scene, render

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INVARIANT = 3
EXIT_USAGE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _verify(problems: list[str]) -> None:
    if problems:
        raise InvariantViolation("; ".join(problems))


def cmd_analyze(args) -> int:
    cq = CyclicQuotient(args.n, args.q)
    if args.verify:
        _verify(oracle_problems(cq))
    report = build_report(cq)
    check_report(report)
    text = dumps(report) if args.json else render_text(report)
    _emit(text, args.out)
    return EXIT_OK


def cmd_chains(args) -> int:
    if args.for_ is not None:
        if args.m is not None:
            raise UsageError("give either m or --for N Q, not both")
        cq = CyclicQuotient(*args.for_)
        inv = invariants(cq)
        if args.verify:
            _verify(oracle_problems(cq, inv))
        chains = admissible_chains(cq, inv)
    else:
        if args.m is None:
            raise UsageError("chain length m or --for N Q is required")
        if args.m < 1:
            raise ValueError("m must be at least 1")
        if args.verify:
            _verify(chain_oracle_problems(args.m))
        chains = enumerate_zero_chains(args.m)
    if args.count:
        text = f"{len(chains)}\n"
    elif args.json:
        text = json.dumps([[str(k) for k in c] for c in chains]) + "\n"
    else:
        text = "".join(format_chain(c) + "\n" for c in chains)
    _emit(text, args.out)
    return EXIT_OK


def cmd_svg(args) -> int:
    cq = CyclicQuotient(args.n, args.q)
    if args.verify:
        _verify(oracle_problems(cq))
    _emit(render(build_scene(cq, args.what)), args.out)
    return EXIT_OK


def cmd_selftest(args) -> int:
    start = time.perf_counter()
    result = run_sweep(args.max_n)
    elapsed = time.perf_counter() - start
    if args.json:
        text = json.dumps({
            "max_n": str(result.max_n),
            "cases": str(result.cases),
            "passed": result.passed,
            "problems": result.problems,
        }, indent=2) + "\n"
    else:
        lines = [f"checked {result.cases} singularities with n <= {result.max_n} in {elapsed:.1f}s"]
        for name, problems in result.problems.items():
            lines.append(f"{name}: {'ok' if not problems else f'{len(problems)} failures'}")
            lines.extend(f"  {p}" for p in problems[:20])
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    if not result.passed:
        return EXIT_INVARIANT
    return EXIT_OK


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--verify", action="store_true",
                        help="cross-check against the brute-force oracles first")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    parser = _Parser(prog="cqpres",
                     description="Resolutions and P-resolutions of cyclic quotient surface singularities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="full report for Y(n,q)")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("chains", parents=[common], help="zero chains of length m, or admissible chains of Y(n,q)")
    p.add_argument("m", type=int, nargs="?")
    p.add_argument("--for", dest="for_", type=int, nargs=2, metavar=("N", "Q"))
    p.add_argument("--count", action="store_true", help="print only the number of chains")
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("svg", parents=[common], help="SVG picture of a fan")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--what", default="maximal",
                   help="minimal | maximal | presolution:<chain> | mres:<chain>")
    p.set_defaults(func=cmd_svg)

    p = sub.add_parser("selftest", parents=[common], help="consistency sweep over all Y(n,q) with n <= MAX_N")
    p.add_argument("--max-n", type=int, default=60)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cqpres: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"cqpres: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"cqpres: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
