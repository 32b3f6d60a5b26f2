"""Ground truth that shares no code with the closed forms: depth-first
enumeration of diamond sequences and truncated power-series expansion of the
generating products.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import BudgetExceeded

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "is_diamond",
    "iter_diamonds",
    "enumerate_diamonds",
    "diamond_series",
    "restricted_series",
]

DEFAULT_NODE_BUDGET = 10**7


def is_diamond(values: Sequence[int], k: int) -> bool:
    """Check the dominance inequalities directly on a 0-based list."""
    if k < 1 or len(values) != 3 * k + 1 or any(v < 0 for v in values):
        return False
    for i in range(k):
        top, left, right, bottom = values[3 * i : 3 * i + 4]
        if not (top >= left and top >= right and left >= bottom and right >= bottom):
            return False
    return True


def iter_diamonds(k: int, n: int, budget: int = DEFAULT_NODE_BUDGET) -> Iterator[tuple[int, ...]]:
    """Yield every diamond of length k and sum n in lexicographic DFS order.

    Entries are assigned in order a_1, a_2, ...; each one is bounded by the
    entries dominating it, and by what is left of n.  Every entry after a
    top a_{3i+1} is at most that top, which gives the remaining-sum cut.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 0:
        return
    size = 3 * k + 1
    vals = [0] * size
    nodes = 0

    def upper(pos: int) -> int:
        # pos is 0-based; pos % 3 == 0 is a top (except pos 0), else a side
        if pos == 0:
            return n
        if pos % 3 == 0:
            return min(vals[pos - 2], vals[pos - 1])
        return vals[pos - 1 - (pos % 3 - 1)]

    def walk(pos: int, left: int, top: int) -> Iterator[tuple[int, ...]]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"enumeration exceeded {budget} nodes")
        if pos == size:
            if left == 0:
                yield tuple(vals)
            return
        hi = min(upper(pos), left)
        remaining = size - pos - 1
        for v in range(hi + 1):
            cap = v if pos % 3 == 0 else top
            if left - v > remaining * cap:
                continue
            vals[pos] = v
            yield from walk(pos + 1, left - v, cap)
        vals[pos] = 0

    yield from walk(0, n, n)


def enumerate_diamonds(k: int, n: int, budget: int = DEFAULT_NODE_BUDGET) -> int:
    return sum(1 for _ in iter_diamonds(k, n, budget))


def _times_one_plus(c: list[int], e: int) -> None:
    for s in range(len(c) - 1, e - 1, -1):
        c[s] += c[s - e]


def _over_one_minus(c: list[int], e: int) -> None:
    for s in range(e, len(c)):
        c[s] += c[s - e]


def diamond_series(k: int, N: int, form: str = "raw") -> list[int]:
    """Coefficients c_0..c_N of the diamond generating function.

    ``raw`` expands prod_{i<=k}(1+q^(3i-1)) / prod_{i<=3k+1}(1-q^i);
    ``reduced`` expands the form where the factors (1+q^(3i-1)) with
    6i-2 <= 3k+1 have been cancelled against (1-q^(6i-2)).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if N < 0:
        return []
    c = [1] + [0] * N
    if form == "raw":
        for i in range(1, k + 1):
            _times_one_plus(c, 3 * i - 1)
        for i in range(1, 3 * k + 2):
            _over_one_minus(c, i)
    elif form == "reduced":
        alpha = (k + 1) // 2
        for i in range(alpha + 1, k + 1):
            _times_one_plus(c, 3 * i - 1)
        for i in range(1, alpha + 1):
            _over_one_minus(c, 3 * i - 1)
        for i in range(1, 3 * k + 2):
            if i % 6 != 4:
                _over_one_minus(c, i)
    else:
        raise ValueError(f"unknown series form {form!r}")
    return c


def restricted_series(parts: Sequence[int], N: int) -> list[int]:
    """Coefficients of prod 1/(1 - q^a) up to q^N.

    Each factor is written out as the geometric series 1 + q^a + q^2a + ...
    and multiplied in by truncated convolution, so this never runs the
    coin-counting recurrence it is used to check.
    """
    if N < 0:
        return []
    c = [1] + [0] * N
    for a in parts:
        if a < 1:
            raise ValueError("parts must be positive")
        out = [0] * (N + 1)
        for i, x in enumerate(c):
            if x:
                for s in range(i, N + 1, a):
                    out[s] += x
        c = out
    return c
