"""Exact number-theoretic primitives: Stirling and Bernoulli numbers, lcm,
and small helpers for dense polynomials with rational coefficients.

Polynomials are tuples of ``Fraction`` in ascending powers of ``n``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, lcm
from typing import Iterable, Sequence

Poly = tuple  # tuple[Fraction, ...], ascending powers

__all__ = [
    "unsigned_stirling_first",
    "stirling_row",
    "bernoulli",
    "lcm_of_set",
    "rational_str",
    "parse_rational",
    "poly_eval",
    "poly_add",
    "poly_scale",
    "poly_shift",
    "poly_trim",
    "rising_product_coeffs",
]


@lru_cache(maxsize=None)
def stirling_row(r: int) -> tuple[int, ...]:
    """Row ``r`` of unsigned Stirling numbers of the first kind, indexed 0..r."""
    if r < 0:
        raise ValueError("r must be >= 0")
    row = (1,)
    for m in range(1, r + 1):
        prev = row + (0,)
        row = tuple(
            (prev[k - 1] if k >= 1 else 0) + (m - 1) * prev[k] for k in range(m + 1)
        )
    return row


def unsigned_stirling_first(r: int, k: int) -> int:
    """c(r, k): coefficient of n^k in the rising factorial n(n+1)...(n+r-1)."""
    if r < 1 or not 1 <= k <= r:
        raise ValueError(f"need 1 <= k <= r, got r={r}, k={k}")
    return stirling_row(r)[k]


@lru_cache(maxsize=None)
def _bernoulli_table(m: int) -> tuple[Fraction, ...]:
    table = [Fraction(1)]
    for t in range(1, m + 1):
        # sum_{i=0}^{t} C(t+1, i) B_i = 0
        s = sum(comb(t + 1, i) * table[i] for i in range(t))
        table.append(-s / (t + 1))
    return tuple(table)


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m with B_1 = -1/2."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m >= 3 and m % 2:
        return Fraction(0)
    return _bernoulli_table(m)[m]


def lcm_of_set(values: Iterable[int]) -> int:
    vals = list(values)
    if not vals:
        raise ValueError("lcm of an empty set")
    if any(v < 1 for v in vals):
        raise ValueError("lcm_of_set expects positive integers")
    return lcm(*vals)


def rational_str(x: Fraction | int) -> str:
    """Canonical "p/q" string; plain "p" for integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def poly_trim(p: Sequence[Fraction]) -> Poly:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(Fraction(c) for c in p) if p else (Fraction(0),)


def poly_eval(p: Sequence[Fraction], n: int | Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * n + c
    return acc


def poly_add(p: Sequence[Fraction], q: Sequence[Fraction]) -> Poly:
    size = max(len(p), len(q))
    return tuple(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(size)
    )


def poly_scale(p: Sequence[Fraction], c: Fraction | int) -> Poly:
    return tuple(c * x for x in p)


def poly_shift(p: Sequence[Fraction], m: int) -> Poly:
    """Coefficients of q(n) = p(n - m)."""
    out = [Fraction(0)] * len(p)
    for i, c in enumerate(p):
        if not c:
            continue
        # (n - m)^i = sum_t C(i, t) n^t (-m)^(i-t)
        for t in range(i + 1):
            out[t] += c * comb(i, t) * (-m) ** (i - t)
    return tuple(out)


def rising_product_coeffs(r: int) -> tuple[int, ...]:
    """Coefficients of x -> (x+1)(x+2)...(x+r-1), ascending powers 0..r-1.

    The coefficient of x^k is c(r, k+1).
    """
    row = stirling_row(r)
    return tuple(row[k + 1] for k in range(r))
