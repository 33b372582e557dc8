"""Command-line front end: ``defectlab compute | crosscheck | examples``."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .budget import DEFAULT_NODES, Budget
from .errors import ParseError
from .fixtures import EXAMPLES, example, expected_table, random_cayley, random_config
from .formats import FORMATS, parse_input
from .report import FAIL, compute_all

EXIT_OK, EXIT_IDENTITY, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _budget(args) -> Budget:
    return Budget(max_nodes=args.budget, time_limit=args.time_limit)


def cmd_compute(args) -> int:
    if args.example:
        try:
            A = example(args.example).config
        except KeyError as exc:
            print(f"error: {exc.args[0]}", file=sys.stderr)
            return EXIT_INPUT
    else:
        try:
            if args.input in (None, "-"):
                src = sys.stdin.read()
            else:
                with open(args.input, encoding="utf-8") as fh:
                    src = fh.read()
            A = parse_input(src, args.format, args.rows_are_points)
        except (OSError, ParseError, ValueError) as exc:
            print(f"error: {args.input or '<stdin>'}: {exc}", file=sys.stderr)
            return EXIT_INPUT
    rep = compute_all(A, _budget(args), args.threads)
    print(rep.to_json() if args.report == "json" else rep.to_table())
    if not rep.ok:
        return EXIT_IDENTITY
    if rep.budget_exhausted:
        return EXIT_BUDGET
    return EXIT_OK


def _factor_sizes(rng: random.Random, n: int) -> list[int]:
    # factors of two or three points; n = 3 gives a single factor
    sizes = []
    while n - sum(sizes) >= 4:
        sizes.append(rng.randint(2, 3))
    sizes.append(max(2, n - sum(sizes)))
    return sizes


def cmd_crosscheck(args) -> int:
    rng = random.Random(args.seed)
    failures = skipped = 0
    start = time.monotonic()
    for t in range(args.trials):
        n = rng.randint(3, args.n)
        d = rng.randint(1, min(5, n - 2))
        seed = rng.randrange(2**31)
        try:
            if t % 2:
                A = random_cayley(_factor_sizes(rng, n), rng.randint(1, 2), seed)
            else:
                A = random_config(n, d, seed)
        except ValueError:
            print(f"trial {t}: no instance for n={n}, d={d}, seed={seed}; skipped")
            skipped += 1
            continue
        rep = compute_all(A, _budget(args), args.threads)
        bad = [i for i in rep.identities if i.status == FAIL]
        if bad:
            failures += 1
            print(f"trial {t} (n={n}, d={d}, seed={seed}): " + "; ".join(f"{i.name}: {i.lhs} != {i.rhs}" for i in bad))
    took = time.monotonic() - start
    ran = args.trials - skipped
    print(f"{ran - failures}/{ran} trials passed ({skipped} skipped) in {took:.1f}s")
    return EXIT_IDENTITY if failures else EXIT_OK


def cmd_examples(args) -> int:
    if args.json:
        print(json.dumps(expected_table(), indent=2))
        return EXIT_OK
    for row in expected_table():
        vals = ", ".join(f"{k}={v}" for k, v in row["expected"].items())
        print(f"{row['name']:8s} {row['description']}")
        print(f"         expected: {vals}")
        for k, how in row["provenance"].items():
            print(f"         {k}: {how}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="defectlab", description="Dual defect of point configurations, four ways.")
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: $DEFECTLAB_THREADS or 1)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute all invariants of one configuration")
    src = c.add_mutually_exclusive_group()
    src.add_argument("--input", "-i", help="input file ('-' or omitted: stdin)")
    src.add_argument("--example", "-e", choices=sorted(EXAMPLES), type=str.upper)
    c.add_argument("--format", "-f", choices=FORMATS, default="text")
    c.add_argument("--report", "-r", choices=("json", "table"), default="json")
    c.add_argument("--budget", type=int, default=DEFAULT_NODES, help="node cap for the rho search")
    c.add_argument("--time-limit", type=float, default=None, help="wall-clock cap in seconds for the rho search")
    c.add_argument("--rows-are-points", action="store_true", help="input rows are points (transpose on read)")
    c.set_defaults(func=cmd_compute)

    x = sub.add_parser("crosscheck", help="random identity-chain suite")
    x.add_argument("--n", type=int, default=8, help="maximum number of points")
    x.add_argument("--trials", type=int, default=200)
    x.add_argument("--seed", type=int, default=0)
    x.add_argument("--budget", type=int, default=DEFAULT_NODES)
    x.add_argument("--time-limit", type=float, default=None)
    x.set_defaults(func=cmd_crosscheck)

    e = sub.add_parser("examples", help="list the named examples")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_examples)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
