"""Command-line interface: ``rbd <command> ...`` or ``python -m rbdalg <command> ...``.

State bit strings and probability files list components in ascending index
order.  Exit codes: 0 success, 1 domain failure (unequal diagrams, law
violation), 2 usage or parse error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

from rbdalg.canonical import NodeStore, canonicalize, enumerate_classes, export_adjacency
from rbdalg.diagram import GeneratingSet, StateAssignment, evaluate, truth_table
from rbdalg.errors import CapExceededError, DiagramError
from rbdalg.laws import check_diagram_algebra, check_reliability_algebra, check_structure_homomorphism, witness_state
from rbdalg.parser import parse
from rbdalg.reliability import (
    ReliabilityAssignment,
    reliability_bruteforce,
    reliability_exact,
    reliability_montecarlo,
    reliability_polynomial,
)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
TABLE_PRINT_CAP = 10

ORDERING_NOTE = "Components are ordered by ascending index (A1 before A2 ...) in state strings and tables."


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return format(x, ".15g")


def _read_probs(path: str) -> ReliabilityAssignment:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read probability file: {exc}") from None
    try:
        return ReliabilityAssignment.parse(text)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_eval(args) -> int:
    d = parse(args.expr)
    g = GeneratingSet.for_diagrams(d)
    bits = args.state
    if len(bits) != len(g) or set(bits) - {"0", "1"}:
        raise UsageError(f"state must be {len(g)} bits (one per component of {', '.join(map(str, g)) or 'none'})")
    s = StateAssignment({c: int(b) for c, b in zip(g, bits)})
    print(evaluate(d, s))
    return EXIT_OK


def cmd_table(args) -> int:
    d = parse(args.expr)
    table = truth_table(d, cap=TABLE_PRINT_CAP)
    print("".join(map(str, table)))
    return EXIT_OK


def cmd_equal(args) -> int:
    d1, d2 = parse(args.expr1), parse(args.expr2)
    g = GeneratingSet.for_diagrams(d1, d2)
    store = NodeStore(g)
    if canonicalize(d1, store=store) == canonicalize(d2, store=store):
        print("EQUAL")
        return EXIT_OK
    try:
        witness = witness_state(d1, d2, g)
    except CapExceededError:
        witness = None
    print("NOT EQUAL" + (f" state={witness}" if witness is not None else ""))
    return EXIT_DOMAIN


def cmd_canon(args) -> int:
    print(export_adjacency(canonicalize(parse(args.expr))))
    return EXIT_OK


def _monte_carlo(d, p, samples, seed) -> int:
    report = reliability_montecarlo(d, p, samples=samples, seed=seed)
    print(
        f"estimate={_fmt(report.estimate)} standard_error={_fmt(report.standard_error)} "
        f"samples={report.samples} seed={report.seed}"
    )
    return EXIT_OK


def cmd_rel(args) -> int:
    d = parse(args.expr)
    p = _read_probs(args.probs)
    if args.method == "mc":
        return _monte_carlo(d, p, args.samples, args.seed)
    compute = reliability_exact if args.method == "exact" else reliability_bruteforce
    print(_fmt(compute(d, p)))
    return EXIT_OK


def cmd_simulate(args) -> int:
    return _monte_carlo(parse(args.expr), _read_probs(args.probs), args.samples, args.seed)


def cmd_poly(args) -> int:
    print(reliability_polynomial(parse(args.expr)))
    return EXIT_OK


def cmd_enum(args) -> int:
    print(enumerate_classes(args.n).count)
    return EXIT_OK


def cmd_laws(args) -> int:
    if args.target == "diagrams":
        reports = check_diagram_algebra(args.trials, args.seed, args.components)
    elif args.target == "reliability":
        reports = check_reliability_algebra(args.trials, args.seed, args.components)
    else:
        reports = [check_structure_homomorphism(args.trials, args.seed, args.components)]
    for report in reports:
        print(report)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_DOMAIN


def _uint64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rbd",
        description="Reliability block diagrams: evaluation, equality, reliability and algebra checks.",
        epilog=ORDERING_NOTE + " Expression syntax: A<k>, 1, 0, ~ (complement), * or & (series), + or | (parallel).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate the structure function", epilog=ORDERING_NOTE)
    p.add_argument("expr")
    p.add_argument("state", help="one bit per distinct component, ascending index order")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="print the truth table (little-endian state order)", epilog=ORDERING_NOTE)
    p.add_argument("expr")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("equal", help="decide equality as Boolean terms (exit 1 if unequal)", epilog=ORDERING_NOTE)
    p.add_argument("expr1")
    p.add_argument("expr2")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("canon", help="print the canonical form as an adjacency list")
    p.add_argument("expr")
    p.set_defaults(func=cmd_canon)

    probs_help = "file of 'A<k> = <probability>' lines ('-' for stdin)"
    p = sub.add_parser("rel", help="reliability of a diagram")
    p.add_argument("expr")
    p.add_argument("probs", help=probs_help)
    p.add_argument("--method", choices=("exact", "brute", "mc"), default="exact")
    p.add_argument("--samples", type=_positive, default=100_000)
    p.add_argument("--seed", type=_uint64, default=0)
    p.set_defaults(func=cmd_rel)

    p = sub.add_parser("simulate", help="Monte Carlo reliability (same as rel --method mc)")
    p.add_argument("expr")
    p.add_argument("probs", help=probs_help)
    p.add_argument("--samples", type=_positive, default=100_000)
    p.add_argument("--seed", type=_uint64, default=0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("poly", help="reliability polynomial")
    p.add_argument("expr")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("enum", help="count mutually nonequal diagrams over n components (n <= 4)")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("laws", help="run a Boolean-algebra law suite (exit 1 on any failure)")
    p.add_argument("target", choices=("diagrams", "reliability", "phi"))
    p.add_argument("--trials", type=_positive, default=500)
    p.add_argument("--seed", type=_uint64, default=1)
    p.add_argument("--components", type=int, default=4)
    p.set_defaults(func=cmd_laws)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, DiagramError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
