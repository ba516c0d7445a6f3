"""Command-line interface.

Subcommands: check, bounds-table, extract, exact, gen, compare.  Exit
codes: 0 success, 1 semantic negative (predicate fails, certificate not
guaranteed, inexact search, underfilled generation), 2 usage or parse
errors.  Output is byte-deterministic for fixed inputs; HYPERIND_THREADS
caps internal parallelism without changing any output byte.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .algorithms import exact_alpha, greedy_extract
from .bounds import (
    as_ratio,
    bound_table,
    caro_tuza_total,
    chishti_bound,
    potential,
    table_to_csv,
    table_to_json,
)
from .core import format_hg, read_hg
from .errors import (
    BadSpec,
    BadUniformity,
    EmptyEdge,
    HgFormatError,
    HyperindError,
    InvalidVertex,
    NegativeDegree,
)
from .generators import FAMILIES, InstanceSpec, generate
from .properties import property_report

__all__ = ["main"]

_DEFAULT_EXACT_BUDGET = 10**6


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path: str):
    try:
        return read_hg(path)
    except (HgFormatError, InvalidVertex, EmptyEdge) as exc:
        raise _Fail(2, f"cannot parse {path}: {exc}") from exc
    except OSError as exc:
        raise _Fail(2, f"cannot read {path}: {exc}") from exc


def _emit(text: str, output: str) -> None:
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _threads_from_env() -> int:
    raw = os.environ.get("HYPERIND_THREADS", "")
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError as exc:
        raise _Fail(2, f"HYPERIND_THREADS must be an integer, got {raw!r}") from exc


def cmd_check(args: argparse.Namespace) -> int:
    h = _load(args.file)
    report = property_report(h)
    _emit(report.to_json() + "\n", args.output)
    return 0 if report.hypotheses_hold() else 1


def cmd_bounds_table(args: argparse.Namespace) -> int:
    rows = bound_table(
        args.r,
        args.d_max,
        m=args.m,
        tol=args.tol,
        max_workers=_threads_from_env(),
    )
    if args.format == "csv":
        text = table_to_csv(rows)
    else:
        text = table_to_json(rows, args.r, args.m, args.tol) + "\n"
    _emit(text, args.output)
    return 0


def cmd_extract(args: argparse.Namespace) -> int:
    h = _load(args.file)
    cert = greedy_extract(h, args.r, unsafe=args.unsafe)
    _emit(cert.to_json() + "\n", args.output)
    return 0 if cert.guaranteed else 1


def cmd_exact(args: argparse.Namespace) -> int:
    h = _load(args.file)
    result = exact_alpha(h, budget=args.budget)
    payload = {
        "alpha": result.alpha,
        "independent_set": list(result.independent_set),
        "exact": result.exact,
        "nodes": result.nodes,
    }
    _emit(json.dumps(payload, separators=(", ", ": ")) + "\n", args.output)
    return 0 if result.exact else 1


def cmd_gen(args: argparse.Namespace) -> int:
    spec = InstanceSpec(
        family=args.family, n=args.n, r=args.r, m=args.m, seed=args.seed
    )
    h, complete = generate(spec)
    _emit(format_hg(h), args.output)
    if args.output != "-":
        sidecar = {
            "spec": json.loads(spec.to_json()),
            "n": h.n,
            "m": h.m,
            "complete": complete,
        }
        with open(args.output + ".json", "w", encoding="utf-8", newline="") as fh:
            fh.write(json.dumps(sidecar, separators=(", ", ": ")) + "\n")
    if not complete:
        print(
            f"warning: reached only {h.m} of {args.m} edges before the "
            f"rejection cap",
            file=sys.stderr,
        )
        return 1
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    h = _load(args.file)
    cert = greedy_extract(h, args.r)  # enforces the hypotheses
    pot = potential(h, args.r)
    ct = caro_tuza_total(h, args.r)
    cz = chishti_bound(h, args.r, tol=args.tol)
    if h.n <= 30 or args.budget is not None:
        budget = args.budget if args.budget is not None else _DEFAULT_EXACT_BUDGET
        res = exact_alpha(h, budget=budget)
        exact_txt = str(res.alpha) if res.exact else f">={res.alpha}"
    else:
        exact_txt = "n/a"
    line = (
        f"n={h.n} m={h.m} "
        f"potential={as_ratio(pot)} potential_float={float(pot):.6f} "
        f"caro_tuza={as_ratio(ct)} caro_tuza_float={float(ct):.6f} "
        f"chishti={cz:.6f} "
        f"greedy={len(cert.independent_set)} exact={exact_txt}\n"
    )
    _emit(line, args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hyperind",
        description=(
            "Independent sets in uniform linear triangle-free hypergraphs: "
            "structural checks, degree-sequence bounds, certified greedy "
            "extraction, exact search, and instance generation."
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="print the predicate report of a .hg file")
    c.add_argument("file", help=".hg input path")
    c.add_argument("-o", "--output", default="-", help="output path ('-' = stdout)")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("bounds-table", help="tabulate all four bound functions")
    c.add_argument("--r", type=int, required=True, help="uniformity (>= 2)")
    c.add_argument("--d-max", type=int, required=True, help="largest degree")
    c.add_argument("--m", type=int, default=1, help="neighborhood-degree parameter")
    c.add_argument("--tol", type=float, default=1e-9, help="quadrature tolerance")
    c.add_argument("--format", choices=("csv", "json"), default="csv")
    c.add_argument("-o", "--output", default="-", help="output path ('-' = stdout)")
    c.set_defaults(func=cmd_bounds_table)

    c = sub.add_parser("extract", help="greedy extraction with certificate")
    c.add_argument("file", help=".hg input path")
    c.add_argument("--r", type=int, required=True, help="uniformity (>= 2)")
    c.add_argument(
        "--unsafe",
        action="store_true",
        help="run even when preconditions fail (certificate not guaranteed)",
    )
    c.add_argument("-o", "--output", default="-", help="output path ('-' = stdout)")
    c.set_defaults(func=cmd_extract)

    c = sub.add_parser("exact", help="branch-and-bound independence number")
    c.add_argument("file", help=".hg input path")
    c.add_argument(
        "--budget",
        type=int,
        default=None,
        help="node limit (unlimited when omitted); exceeding it flags the result",
    )
    c.add_argument("-o", "--output", default="-", help="output path ('-' = stdout)")
    c.set_defaults(func=cmd_exact)

    c = sub.add_parser("gen", help="write a generated instance as .hg")
    c.add_argument("--family", choices=FAMILIES, required=True)
    c.add_argument("--n", type=int, default=0, help="vertices (random family)")
    c.add_argument("--r", type=int, default=3, help="uniformity")
    c.add_argument(
        "--m",
        type=int,
        default=0,
        help="edge target (random) or edge count k (named families)",
    )
    c.add_argument("--seed", type=int, default=0, help="RNG seed (random family)")
    c.add_argument(
        "-o",
        "--output",
        default="-",
        help="output path ('-' = stdout); a file also gets a .json sidecar",
    )
    c.set_defaults(func=cmd_gen)

    c = sub.add_parser("compare", help="bounds vs greedy vs exact on one instance")
    c.add_argument("file", help=".hg input path")
    c.add_argument("--r", type=int, required=True, help="uniformity (>= 2)")
    c.add_argument("--tol", type=float, default=1e-9, help="quadrature tolerance")
    c.add_argument(
        "--budget",
        type=int,
        default=None,
        help="run exact search with this node limit even when n > 30",
    )
    c.add_argument("-o", "--output", default="-", help="output path ('-' = stdout)")
    c.set_defaults(func=cmd_compare)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (BadSpec, BadUniformity, NegativeDegree, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HyperindError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
