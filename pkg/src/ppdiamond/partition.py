"""The restricted partition function p_a(n) and its quasi-polynomial structure.

p_a(n) counts solutions of a_1 x_1 + ... + a_r x_r = n in nonnegative
integers.  With D a common multiple of the parts and s = sum a_i j_i over the
box 0 <= j_i < D/a_i, every closed form below is assembled from the per-residue
power sums of s (see :mod:`ppdiamond.moments`):

    p_a(n) = 1/(r-1)! * sum_{s = n mod D} prod_{l=1}^{r-1} ((n - s)/D + l)

Expanding the product through unsigned Stirling numbers turns the tuple sum
into a linear combination of those power sums.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd, prod
from typing import Sequence

from .cyclotomic import CyclotomicNumber, cyc_to_rational, root_of_unity
from .errors import BudgetExceeded, NonIntegralResult
from .exact import (
    bernoulli,
    lcm_of_set,
    poly_scale,
    poly_trim,
    rising_product_coeffs,
)
from .moments import Profile, ResidueMoments, box_profile, moments_from_profiles, total_moments
from .quasipoly import QuasiPolynomial

__all__ = [
    "PartSequence",
    "WaveSet",
    "DEFAULT_TUPLE_BUDGET",
    "partition_counts_dp",
    "partition_count_dp",
    "residue_moments",
    "coefficient_row",
    "quasipoly_from_moments",
    "partition_count_explicit",
    "polynomial_part_product",
    "polynomial_part_bernoulli",
    "sylvester_wave",
    "wave_set",
]

DEFAULT_TUPLE_BUDGET = 10**8


@dataclass(frozen=True)
class PartSequence:
    parts: tuple[int, ...]
    D: int = 0

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if not parts:
            raise ValueError("a part sequence needs at least one part")
        if any(x < 1 for x in parts):
            raise ValueError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)
        if not self.D:
            object.__setattr__(self, "D", lcm_of_set(parts))
        if self.D < 1 or any(self.D % x for x in parts):
            raise ValueError(f"D={self.D} is not a common multiple of {parts}")

    @classmethod
    def of(cls, *parts: int, D: int = 0) -> "PartSequence":
        return cls(tuple(parts), D)

    @property
    def r(self) -> int:
        return len(self.parts)

    def profiles(self) -> list[Profile]:
        return [box_profile(a, self.D // a) for a in self.parts]

    def box_size(self) -> int:
        return prod(self.D // a for a in self.parts)

    def divisors(self) -> list[int]:
        return sorted({d for a in self.parts for d in range(1, a + 1) if a % d == 0})


def partition_counts_dp(a: PartSequence | Sequence[int], N: int) -> list[int]:
    """[p_a(0), ..., p_a(N)] by the coin-counting recurrence."""
    parts = a.parts if isinstance(a, PartSequence) else tuple(a)
    if N < 0:
        return []
    ways = [1] + [0] * N
    for part in parts:
        for s in range(part, N + 1):
            ways[s] += ways[s - part]
    return ways


def partition_count_dp(a: PartSequence | Sequence[int], n: int) -> int:
    if n < 0:
        return 0
    return partition_counts_dp(a, n)[n]


def residue_moments(
    a: PartSequence,
    pmax: int,
    weights: Sequence[Sequence[int] | None] | None = None,
) -> ResidueMoments:
    """Residue table S[c][p] for the box of ``a``, optionally weighted.

    ``weights[i]``, when given, replaces the unit profile of variable i; its
    length sets that variable's range.
    """
    if pmax > a.r:
        raise ValueError(f"pmax={pmax} exceeds r={a.r}")
    profiles = a.profiles()
    if weights is not None:
        if len(weights) != a.r:
            raise ValueError("one weight profile per part is required")
        profiles = [
            p if w is None else Profile(p.step, tuple(w)) for p, w in zip(profiles, weights)
        ]
    return moments_from_profiles(profiles, a.D, pmax)


def coefficient_row(moments: Sequence[int], D: int, r: int) -> tuple[Fraction, ...]:
    """Powers of n in 1/(r-1)! * sum_tuples prod_{l=1}^{r-1} ((n - s)/D + l).

    ``moments[p]`` is the (restricted) sum of s^p over the tuples in play.
    """
    rising = rising_product_coeffs(r)
    scale = factorial(r - 1)
    row = []
    for m in range(r):
        acc = Fraction(0)
        for k in range(m, r):
            term = rising[k] * comb(k, m) * moments[k - m]
            acc += Fraction(-term if (k - m) % 2 else term, D**k)
        row.append(acc / scale)
    return tuple(row)


def quasipoly_from_moments(a: PartSequence, S: ResidueMoments | None = None) -> QuasiPolynomial:
    """Full quasi-polynomial of p_a, one coefficient row per residue mod D."""
    if S is None:
        S = residue_moments(a, a.r - 1)
    rows = tuple(coefficient_row(S.S[c], a.D, a.r) for c in range(a.D))
    return QuasiPolynomial(a.D, a.r - 1, rows, 0)


def partition_count_explicit(
    a: PartSequence, n: int, budget: int = DEFAULT_TUPLE_BUDGET
) -> int:
    """p_a(n) by walking the congruence-restricted tuple box directly."""
    if n < 0:
        return 0
    size = a.box_size()
    if size > budget:
        raise BudgetExceeded(f"tuple box has {size} points, budget is {budget}")
    D, r = a.D, a.r
    total = Fraction(0)
    ranges = [range(0, D, x) for x in a.parts]
    for values in itertools.product(*ranges):
        s = sum(values)
        if (n - s) % D:
            continue
        x = Fraction(n - s, D)
        term = Fraction(1)
        for ell in range(1, r):
            term *= x + ell
        total += term
    total /= factorial(r - 1)
    if total.denominator != 1:
        raise NonIntegralResult(f"explicit formula gave {total} for n={n}")
    return total.numerator


def polynomial_part_product(a: PartSequence) -> tuple[Fraction, ...]:
    """Polynomial part as the D-average of the quasi-polynomial branches."""
    M = total_moments(a.profiles(), a.r - 1)
    return poly_trim(poly_scale(coefficient_row(M, a.D, a.r), Fraction(1, a.D)))


def _exp_bernoulli_series(part: int, order: int) -> list[Fraction]:
    # sum_i B_i part^i x^i / i!, truncated at x^order
    return [bernoulli(i) * Fraction(part**i, factorial(i)) for i in range(order + 1)]


def polynomial_part_bernoulli(a: PartSequence) -> tuple[Fraction, ...]:
    """Polynomial part from products of Bernoulli generating series."""
    r = a.r
    top = r - 1
    series = [Fraction(1)] + [Fraction(0)] * top
    for part in a.parts:
        factor = _exp_bernoulli_series(part, top)
        series = [
            sum((series[i] * factor[u - i] for i in range(u + 1)), Fraction(0))
            for u in range(top + 1)
        ]
    coeffs = [Fraction(0)] * r
    for u in range(r):
        sign = -1 if u % 2 else 1
        coeffs[top - u] = sign * series[u] / factorial(top - u)
    return poly_trim(poly_scale(coeffs, Fraction(1, prod(a.parts))))


# --- Sylvester waves -------------------------------------------------------

WAVE_VARIANTS = ("corrected", "single", "printed")


def _units(j: int) -> list[int]:
    return [v for v in range(j) if gcd(v, j) == 1]


def sylvester_wave(
    a: PartSequence,
    j: int,
    variant: str = "corrected",
    S: ResidueMoments | None = None,
) -> QuasiPolynomial:
    """The period-j wave W_j(n, a).

    With T[l][p] the power sums of s over tuples with s = l (mod j) and
    G[l] = coefficient_row(T[l]) / D, the wave at n = c (mod j) is

        corrected:  sum_l G[l] * sum_{nu in (Z/j)^*} rho_j^(nu (l - c))
        single:     sum_l G[l] * rho_j^(l - c)        (one conjugate only)
        printed:    sum_l G[l] * rho_j^l              (no dependence on n)

    Only ``corrected`` is a true wave for every j; ``single`` agrees with it
    for j <= 2 and is not even real for j >= 3.  Each coefficient is reduced
    in Q(rho_j) and must come out rational.
    """
    if variant not in WAVE_VARIANTS:
        raise ValueError(f"unknown wave variant {variant!r}")
    if j < 1 or not any(x % j == 0 for x in a.parts):
        raise ValueError(f"{j} divides no part of {a.parts}")
    if S is None:
        S = residue_moments(a, a.r - 1)
    T = S.fold(j)
    G = [poly_scale(coefficient_row(T[ell], a.D, a.r), Fraction(1, a.D)) for ell in range(j)]

    if variant == "corrected":
        kernel = [
            sum((root_of_unity(j, nu * x) for nu in _units(j)), CyclotomicNumber.rational(j, 0))
            for x in range(j)
        ]
        weight = lambda ell, c: kernel[(ell - c) % j]  # noqa: E731
    elif variant == "single":
        weight = lambda ell, c: root_of_unity(j, ell - c)  # noqa: E731
    else:
        weight = lambda ell, c: root_of_unity(j, ell)  # noqa: E731

    rows = []
    for c in range(j):
        row = []
        for m in range(a.r):
            acc = CyclotomicNumber.rational(j, 0)
            for ell in range(j):
                if G[ell][m]:
                    acc = acc + weight(ell, c) * G[ell][m]
            row.append(cyc_to_rational(acc))
        rows.append(tuple(row))
    return QuasiPolynomial(j, a.r - 1, tuple(rows), 0).trimmed()


@dataclass(frozen=True)
class WaveSet:
    base: PartSequence
    waves: dict

    def value(self, n: int) -> Fraction:
        return sum((w.value(n) for w in self.waves.values()), Fraction(0))


def wave_set(a: PartSequence, variant: str = "corrected") -> WaveSet:
    S = residue_moments(a, a.r - 1)
    return WaveSet(a, {j: sylvester_wave(a, j, variant, S) for j in a.divisors()})
