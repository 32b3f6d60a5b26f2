"""Cross-method verification for one diamond length k.

Each check compares independently computed exact values and reports a
``Check``; nothing here rounds or tolerates a difference.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .diamond import (
    build_params,
    compressed_quasipoly,
    counts_via_shifts,
    diamond_polypart_bernoulli,
    diamond_polypart_compressed,
    diamond_quasipoly,
    diamond_waves,
    phi,
    phi_inv,
)
from .errors import DiamondError
from .oracles import DEFAULT_NODE_BUDGET, diamond_series, enumerate_diamonds, restricted_series

__all__ = ["Check", "run_verification", "QUASIPOLY_MAX_D", "COMPRESSED_MAX_K"]

# beyond these sizes the closed forms are still correct but slow in pure Python
QUASIPOLY_MAX_D = 2520
COMPRESSED_MAX_K = 2
WAVES_MAX_K = 2
POLYPART_MAX_K = 3


@dataclass
class Check:
    name: str
    passed: bool | None  # None means skipped
    detail: str = ""
    seconds: float = 0.0

    @property
    def status(self) -> str:
        return {True: "PASS", False: "FAIL", None: "SKIP"}[self.passed]

    def line(self) -> str:
        tail = f": {self.detail}" if self.detail else ""
        return f"{self.status} {self.name}{tail}"


def _first_mismatch(a, b, start: int = 0):
    for n in range(start, min(len(a), len(b))):
        if a[n] != b[n]:
            return n
    return None


def _run(name: str, fn: Callable[[], tuple[bool | None, str]]) -> Check:
    t0 = time.perf_counter()
    try:
        passed, detail = fn()
    except DiamondError as exc:
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return Check(name, passed, detail, time.perf_counter() - t0)


def run_verification(
    k: int, max_n: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> list[Check]:
    params = build_params(k)
    series = diamond_series(k, max_n, "raw")
    shifts = counts_via_shifts(params, max_n)
    checks: list[Check] = []

    def structure():
        ok = all(phi_inv(params, phi(params, j)) == j for j in range(1, params.beta + 1))
        ok &= [phi(params, j) for j in range(1, params.beta + 1)] == list(params.value_set)
        doubled = sorted(list(params.value_set) + [3 * i - 1 for i in range(1, params.alpha + 1)])
        ok &= sorted(params.seq.parts) == doubled
        ok &= len(params.shifts) == 2 ** (k - params.alpha)
        ok &= max(params.shifts) == params.n0
        return ok, f"beta={params.beta} D={params.D} n0={params.n0}"

    checks.append(_run("structure", structure))

    def raw_vs_reduced():
        bad = _first_mismatch(series, diamond_series(k, max_n, "reduced"))
        return bad is None, "" if bad is None else f"first mismatch at n={bad}"

    checks.append(_run("series raw = reduced", raw_vs_reduced))

    def series_vs_shifts():
        bad = _first_mismatch(series, shifts)
        return bad is None, f"n<={max_n}" if bad is None else f"first mismatch at n={bad}"

    checks.append(_run("series = shifts", series_vs_shifts))

    if k == 1:
        def macmahon():
            bad = _first_mismatch(shifts, restricted_series((1, 2, 2, 3), max_n))
            return bad is None, "" if bad is None else f"first mismatch at n={bad}"

        checks.append(_run("MacMahon p_(1,2,2,3) = shifts", macmahon))

    def enumeration():
        top = min(max_n, 25)
        if k > 2:
            return None, "enumeration runs for k <= 2 only"
        counts = [enumerate_diamonds(k, n, node_budget) for n in range(top + 1)]
        bad = _first_mismatch(counts, series)
        return bad is None, f"n<={top}" if bad is None else f"first mismatch at n={bad}"

    checks.append(_run("enumeration = series", enumeration))

    def quasipoly():
        if params.D > QUASIPOLY_MAX_D:
            return None, f"D={params.D} too large"
        q = diamond_quasipoly(params)
        vals = [q.value(n) for n in range(max_n + 1)]
        bad = _first_mismatch(vals, shifts, params.n0)
        return bad is None, f"n0={params.n0}<=n<={max_n}" if bad is None else f"mismatch at n={bad}"

    checks.append(_run("quasipoly = shifts", quasipoly))

    def compressed():
        if k > COMPRESSED_MAX_K:
            return None, f"k={k} too large"
        q = compressed_quasipoly(params)
        vals = [q.value(n) for n in range(max_n + 1)]
        bad = _first_mismatch(vals, shifts)
        return bad is None, f"n<={max_n}" if bad is None else f"mismatch at n={bad}"

    checks.append(_run("compressed = shifts", compressed))

    def polypart():
        if k > POLYPART_MAX_K:
            return None, f"k={k} too large"
        a = diamond_polypart_compressed(params)
        b = diamond_polypart_bernoulli(params)
        return a == b, f"degree {len(a) - 1}"

    checks.append(_run("polypart compressed = bernoulli", polypart))

    def waves():
        if k > WAVES_MAX_K:
            return None, f"k={k} too large"
        ws = diamond_waves(params)
        top = min(max_n, 100)
        vals = [sum(w.value(n) for w in ws.values()) for n in range(top + 1)]
        bad = _first_mismatch(vals, shifts)
        return bad is None, f"j in {sorted(ws)}, n<={top}" if bad is None else f"mismatch at n={bad}"

    checks.append(_run("wave sum = shifts", waves))
    return checks
