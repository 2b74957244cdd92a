"""Command-line front end.

Exit codes: 0 yes / valid, 2 no (recognize, oracle), 1 invalid input,
usage error or failed verification.
"""
from __future__ import annotations

import argparse
import csv
import re
import sys
from pathlib import Path

from minorder.digraph import DigraphError, parse_digraph, random_reflexive, serialize_digraph
from minorder.implication import InvertiblePairCertificate
from minorder.oracle import OracleLimitError, brute_force_invertible_pairs, brute_force_min_ordering, exhaustive_driver
from minorder.orientation import MinOrdering
from minorder.recognize import BENCH_COLUMNS, BenchConfig, bench, recognize
from minorder.twosat import build_formula
from minorder.verify import forbidden_pattern, invertible_pair_problem

EXIT_YES = 0
EXIT_ERROR = 1
EXIT_NO = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(args):
    return parse_digraph(_read(args.file), add_loops=args.add_loops)


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def cmd_recognize(args) -> int:
    H = _load(args)
    result = recognize(H)
    _emit(result.to_text(certificate=args.certificate))
    if args.stats:
        _emit(result.stats.bounds_text())
    return EXIT_YES if result.is_yes else EXIT_NO


def _parse_order(text: str) -> list[int]:
    body = re.sub(r"^\s*MIN-ORDERING:?", "", text.strip())
    try:
        return [int(tok) for tok in body.split()]
    except ValueError:
        raise UsageError("ordering file must list vertex indices") from None


def cmd_verify_order(args) -> int:
    H = _load(args)
    order = _parse_order(_read(args.orderfile))
    try:
        bad = forbidden_pattern(H, order)
    except ValueError as exc:
        _emit(f"INVALID: {exc}")
        return EXIT_ERROR
    if bad is not None:
        u, v, w = bad
        _emit(f"INVALID: forbidden pattern {u} < {v} < {w}")
        return EXIT_ERROR
    _emit("VALID")
    return EXIT_YES


def cmd_verify_pair(args) -> int:
    H = _load(args)
    try:
        cert = InvertiblePairCertificate.from_text(_read(args.certfile), H.n)
    except ValueError as exc:
        _emit(f"INVALID: {exc}")
        return EXIT_ERROR
    problem = invertible_pair_problem(H, cert)
    if problem is not None:
        _emit(f"INVALID: {problem}")
        return EXIT_ERROR
    _emit("VALID")
    return EXIT_YES


def cmd_gen(args) -> int:
    H = random_reflexive(args.n, args.p, args.seed)
    _emit(serialize_digraph(H, include_loops=not args.add_loops_implied))
    return EXIT_YES


def cmd_oracle(args) -> int:
    H = _load(args)
    order = brute_force_min_ordering(H)
    if order is not None:
        _emit(MinOrdering(order).to_text())
        return EXIT_YES
    u, v = min(brute_force_invertible_pairs(H))
    _emit(f"INVERTIBLE-PAIR: {u} {v}")
    return EXIT_NO


def cmd_selftest(args) -> int:
    for n in range(1, args.n + 1):
        _emit(str(exhaustive_driver(n)))
    _emit("SELFTEST OK")
    return EXIT_YES


def cmd_bench(args) -> int:
    config = BenchConfig(sizes=args.sizes, p=args.p, seed=args.seed, reps=args.reps)
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=BENCH_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in bench(config):
            writer.writerow({k: f"{v:.6f}" if isinstance(v, float) and k.startswith("t_") else v for k, v in row.items()})
            out.flush()
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_YES


def cmd_export_cnf(args) -> int:
    H = _load(args)
    _emit(build_formula(H).to_dimacs())
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="minorder", description="Recognize adjusted interval digraphs (min orderings).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_file(p):
        p.add_argument("file", metavar="FILE", help="edge-list file, '-' for stdin")
        p.add_argument("--add-loops", action="store_true", help="add a loop on every vertex")
        return p

    p = with_file(sub.add_parser("recognize", help="min ordering or invertible pair"))
    p.add_argument("--certificate", action="store_true", help="print the walk certificate")
    p.add_argument("--stats", action="store_true", help="print sizes against their bounds")
    p.set_defaults(func=cmd_recognize)

    p = with_file(sub.add_parser("verify-order", help="check a min ordering"))
    p.add_argument("orderfile", metavar="ORDERFILE")
    p.set_defaults(func=cmd_verify_order)

    p = with_file(sub.add_parser("verify-pair", help="check an invertible-pair certificate"))
    p.add_argument("certfile", metavar="CERTFILE")
    p.set_defaults(func=cmd_verify_pair)

    p = sub.add_parser("gen", help="random reflexive digraph")
    p.add_argument("n", type=int)
    p.add_argument("p", type=float)
    p.add_argument("seed", type=int)
    p.add_argument("--add-loops-implied", action="store_true",
                   help="omit loops; read back with --add-loops")
    p.set_defaults(func=cmd_gen)

    p = with_file(sub.add_parser("oracle", help="brute-force answer for small inputs"))
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("selftest", help="exhaustive cross-check on all small digraphs")
    p.add_argument("--n", type=int, default=4, choices=range(1, 5), metavar="N")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("bench", help="time recognition on random instances (CSV)")
    p.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256])
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_bench)

    p = with_file(sub.add_parser("export-cnf", help="DIMACS CNF of the pair formula"))
    p.set_defaults(func=cmd_export_cnf)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DigraphError, OracleLimitError, ValueError) as exc:
        sys.stderr.write(f"minorder: error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
