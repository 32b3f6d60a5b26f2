"""Command-line front end.

    ppdiamond count --k 1 --n 6
    ppdiamond table --k 2 --max-n 50 --format csv
    ppdiamond verify --k 2 --max-n 450

Exit codes: 0 success, 1 usage error, 2 verification failure or
non-integral intermediate, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Sequence

from .diamond import (
    build_params,
    count_compressed,
    counts_via_shifts,
    diamond_polypart_bernoulli,
    diamond_polypart_compressed,
    diamond_quasipoly,
    diamond_waves,
)
from .errors import BudgetExceeded, NonIntegralResult
from .exact import rational_str
from .oracles import DEFAULT_NODE_BUDGET, diamond_series, enumerate_diamonds, iter_diamonds
from .partition import DEFAULT_TUPLE_BUDGET
from .verify import COMPRESSED_MAX_K, QUASIPOLY_MAX_D, run_verification

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_BUDGET = 0, 1, 2, 3

METHODS = ("auto", "enumerate", "series", "shifts", "quasipoly", "compressed")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _env_budget() -> int | None:
    raw = os.environ.get("DIAMOND_BUDGET")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"DIAMOND_BUDGET must be an integer, got {raw!r}")


def _budgets(args) -> tuple[int, int]:
    env = _env_budget()
    node = args.node_cap or env or DEFAULT_NODE_BUDGET
    tup = args.tuple_cap or env or DEFAULT_TUPLE_BUDGET
    return node, tup


def resolve_method(k: int, n_max: int, method: str) -> str:
    """Pick the cheapest applicable method for ``auto``; validate the rest."""
    params = build_params(k)
    if method == "auto":
        if n_max > 10**6 and params.D <= QUASIPOLY_MAX_D:
            return "quasipoly"
        return "shifts"
    if method == "quasipoly" and params.D > QUASIPOLY_MAX_D:
        raise UsageError(f"quasipoly method supports D[k] <= {QUASIPOLY_MAX_D}")
    if method == "compressed" and k > COMPRESSED_MAX_K:
        raise UsageError(f"compressed method supports k <= {COMPRESSED_MAX_K}")
    return method


def _one_count(job: tuple[int, int, str, int, int]) -> int:
    k, n, method, node_cap, tuple_cap = job
    params = build_params(k)
    if method == "enumerate":
        return enumerate_diamonds(k, n, node_cap)
    if method == "compressed":
        return count_compressed(params, n, budget=tuple_cap)
    if method == "quasipoly":
        q = diamond_quasipoly(params)
        return q.count(n) if n >= q.valid_from else counts_via_shifts(params, n)[n]
    raise ValueError(method)


def compute_counts(
    k: int, ns: Sequence[int], method: str, node_cap: int, tuple_cap: int, jobs: int = 1
) -> list[int]:
    if not ns:
        return []
    top = max(ns)
    if method == "series":
        c = diamond_series(k, top)
        return [c[n] for n in ns]
    if method == "shifts":
        c = counts_via_shifts(build_params(k), top)
        return [c[n] for n in ns]
    work = [(k, n, method, node_cap, tuple_cap) for n in ns]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_one_count, work))
    return [_one_count(w) for w in work]


def _poly_json(p) -> list[str]:
    return [rational_str(x) for x in p]


def _poly_text(p) -> str:
    terms = []
    for m in range(len(p) - 1, -1, -1):
        c = Fraction(p[m])
        if not c:
            continue
        mono = "" if m == 0 else ("n" if m == 1 else f"n^{m}")
        coef = rational_str(c)
        terms.append(f"({coef})*{mono}" if mono else f"({coef})")
    return " + ".join(terms) or "0"


def _emit_rows(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "count", "method"])
        for r in rows:
            w.writerow([r["n"], r["count"], r["method"]])
    else:
        for r in rows:
            out.write(f"{r['n']} {r['count']}\n")


def cmd_params(args, out) -> int:
    data = build_params(args.k).to_json()
    if args.format == "json":
        json.dump(data, out, indent=2)
        out.write("\n")
    else:
        for key, val in data.items():
            out.write(f"{key}: {val}\n")
    return EXIT_OK


def cmd_count(args, out) -> int:
    if args.n is None:
        raise UsageError("count needs --n")
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    node_cap, tuple_cap = _budgets(args)
    method = resolve_method(args.k, args.n, args.method)
    [value] = compute_counts(args.k, [args.n], method, node_cap, tuple_cap)
    if args.witnesses:
        for d in iter_diamonds(args.k, args.n, node_cap):
            out.write(",".join(map(str, d)) + "\n")
        return EXIT_OK
    if args.format == "json":
        json.dump({"k": args.k, "n": args.n, "count": str(value), "method": method}, out)
        out.write("\n")
    elif args.format == "csv":
        _emit_rows([{"n": args.n, "count": value, "method": method}], "csv", out)
    else:
        out.write(f"{value}\n")
        print(f"method: {method}", file=sys.stderr)
    return EXIT_OK


def cmd_table(args, out) -> int:
    lo = args.min_n
    hi = args.max_n if args.max_n is not None else args.n
    if hi is None or lo < 0 or hi < lo:
        raise UsageError("table needs 0 <= --min-n <= --max-n")
    node_cap, tuple_cap = _budgets(args)
    method = resolve_method(args.k, hi, args.method)
    ns = list(range(lo, hi + 1))
    values = compute_counts(args.k, ns, method, node_cap, tuple_cap, args.jobs)
    rows = [{"n": n, "count": str(v) if args.format == "json" else v, "method": method}
            for n, v in zip(ns, values)]
    _emit_rows(rows, args.format, out)
    return EXIT_OK


def cmd_quasipoly(args, out) -> int:
    params = build_params(args.k)
    if params.D > QUASIPOLY_MAX_D:
        raise UsageError(f"quasipoly supports D[k] <= {QUASIPOLY_MAX_D}")
    json.dump(diamond_quasipoly(params).to_json(), out)
    out.write("\n")
    return EXIT_OK


def cmd_polypart(args, out) -> int:
    params = build_params(args.k)
    a = diamond_polypart_compressed(params)
    b = diamond_polypart_bernoulli(params)
    equal = a == b
    if args.format == "json":
        json.dump({"k": args.k, "compressed": _poly_json(a), "bernoulli": _poly_json(b),
                   "equal": equal}, out)
        out.write("\n")
    else:
        out.write(f"compressed: {_poly_text(a)}\n")
        out.write(f"bernoulli:  {_poly_text(b)}\n")
        out.write(f"equal: {str(equal).lower()}\n")
    return EXIT_OK if equal else EXIT_VERIFY


def cmd_waves(args, out) -> int:
    if args.k > 2:
        raise UsageError("waves supports k <= 2")
    params = build_params(args.k)
    waves = diamond_waves(params)
    top = args.max_n if args.max_n is not None else 3 * max(waves)
    exact = counts_via_shifts(params, top)
    residual = [sum(w.value(n) for w in waves.values()) - exact[n] for n in range(top + 1)]
    ok = not any(residual)
    if args.format == "json":
        json.dump({"k": args.k, "waves": {str(j): w.to_json() for j, w in waves.items()},
                   "residual_max_n": top, "residual_zero": ok}, out)
        out.write("\n")
    else:
        for j, w in waves.items():
            for c, row in enumerate(w.coeffs):
                out.write(f"W_{j}[n={c} mod {j}]: {_poly_text(row)}\n")
        out.write(f"sum_j W_j - D_k = 0 for n in 0..{top}: {str(ok).lower()}\n")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_verify(args, out) -> int:
    node_cap, _ = _budgets(args)
    top = args.max_n if args.max_n is not None else 450
    checks = run_verification(args.k, top, node_cap)
    if args.format == "json":
        json.dump([{"name": c.name, "status": c.status, "detail": c.detail} for c in checks], out,
                  indent=2)
        out.write("\n")
    else:
        for c in checks:
            out.write(c.line() + "\n")
    return EXIT_VERIFY if any(c.passed is False for c in checks) else EXIT_OK


COMMANDS = {
    "params": cmd_params,
    "count": cmd_count,
    "table": cmd_table,
    "quasipoly": cmd_quasipoly,
    "polypart": cmd_polypart,
    "waves": cmd_waves,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ppdiamond", description="Exact counts of plane partition diamonds.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int)
        p.add_argument("--min-n", type=int, default=0)
        p.add_argument("--max-n", type=int)
        p.add_argument("--method", choices=METHODS, default="auto")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--node-cap", type=int, help="enumeration node budget")
        p.add_argument("--tuple-cap", type=int, help="tuple-iteration budget")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--witnesses", action="store_true",
                       help="count: stream every diamond as comma-separated values")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.k < 1:
            raise UsageError("--k must be >= 1")
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"ppdiamond: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"ppdiamond: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NonIntegralResult as exc:
        print(f"ppdiamond: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY


def run_to_string(argv: Sequence[str]) -> tuple[int, str]:
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
