"""Plane partition diamonds of length k.

The generating function of D_k(n) has numerator prod (1 + q^(3i-1)) over
i = 1..k.  For i <= alpha_k = floor((k+1)/2) the factor cancels into
(1 - q^(6i-2)), which leaves

    D_k(n) = sum_{m in shifts} p_{a[k]}(n - m)

where a[k] replaces every part j = 4 (mod 6) of (1, ..., 3k+1) by j/2, and
each shift is the sum of 3i - 1 over a subset of {alpha_k + 1, ..., k}.
Everything in this module builds on that decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial

from .errors import BudgetExceeded, NonIntegralResult
from .exact import lcm_of_set, poly_add, poly_scale, poly_shift, poly_trim
from .moments import Profile, ResidueMoments, moments_from_profiles, total_moments
from .partition import (
    DEFAULT_TUPLE_BUDGET,
    PartSequence,
    coefficient_row,
    partition_counts_dp,
    polynomial_part_bernoulli,
    quasipoly_from_moments,
    residue_moments,
    sylvester_wave,
)
from .quasipoly import QuasiPolynomial

__all__ = [
    "DiamondParams",
    "build_params",
    "phi",
    "phi_inv",
    "count_via_shifts",
    "counts_via_shifts",
    "diamond_quasipoly",
    "first_agreement_index",
    "weight_s",
    "compressed_profiles",
    "count_compressed",
    "compressed_quasipoly",
    "diamond_polypart_compressed",
    "diamond_polypart_bernoulli",
    "diamond_wave",
    "diamond_waves",
]


def _ceil_div(x: int, y: int) -> int:
    return -((-x) // y)


def _phi(j: int) -> int:
    return j + _ceil_div(j - 3, 5)


def _phi_inv(v: int) -> int:
    return v - _ceil_div(v - 3, 6)


@dataclass(frozen=True)
class DiamondParams:
    k: int
    alpha: int
    beta: int
    seq: PartSequence
    value_set: tuple[int, ...]
    D: int
    n0: int
    shifts: tuple[int, ...]
    bprime: frozenset[int]
    epsilon: tuple[int, ...] = field(repr=False)  # epsilon[j - 1] for j = 1..beta
    subset_start: int = 0

    def eps(self, j: int) -> int:
        return self.epsilon[j - 1]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "alpha": self.alpha,
            "beta": self.beta,
            "seq": list(self.seq.parts),
            "value_set": list(self.value_set),
            "D": str(self.D),
            "n0": self.n0,
            "shifts": list(self.shifts),
            "bprime": sorted(self.bprime),
            "epsilon": list(self.epsilon),
            "phi": [_phi(j) for j in range(1, self.beta + 1)],
        }


@lru_cache(maxsize=None)
def build_params(k: int, subset_start: int | None = None) -> DiamondParams:
    """Derived constants of the length-k diamond.

    ``subset_start`` is the smallest index allowed in the subsets J that
    produce the shifts; it defaults to alpha_k + 1.  Passing alpha_k
    reproduces a misprinted variant and exists only for regression tests.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    alpha = (k + 1) // 2
    beta = 5 * alpha - 2 if k % 2 else 5 * alpha + 1
    seq = tuple(j // 2 if j % 6 == 4 else j for j in range(1, 3 * k + 2))
    value_set = tuple(j for j in range(1, 3 * k + 2) if j % 6 != 4)
    D = lcm_of_set(value_set)
    n0 = (k - alpha) * (3 * k + 3 * alpha + 1) // 2
    start = alpha + 1 if subset_start is None else subset_start
    pool = [3 * i - 1 for i in range(start, k + 1)]
    shifts = sorted(sum(c) for size in range(len(pool) + 1) for c in combinations(pool, size))
    bprime = frozenset(_phi_inv(3 * i - 1) for i in range(1, alpha + 1))
    epsilon = tuple(2 if j in bprime else 1 for j in range(1, beta + 1))
    return DiamondParams(
        k=k,
        alpha=alpha,
        beta=beta,
        seq=PartSequence(seq, D),
        value_set=value_set,
        D=D,
        n0=n0,
        shifts=tuple(shifts),
        bprime=bprime,
        epsilon=epsilon,
        subset_start=start,
    )


def phi(params: DiamondParams, j: int) -> int:
    if not 1 <= j <= params.beta:
        raise ValueError(f"j={j} outside 1..{params.beta}")
    return _phi(j)


def phi_inv(params: DiamondParams, v: int) -> int:
    if v not in params.value_set:
        raise ValueError(f"{v} is not in the value set of k={params.k}")
    return _phi_inv(v)


# --- subset-shift decomposition ----------------------------------------------


def counts_via_shifts(params: DiamondParams, N: int) -> list[int]:
    """[D_k(0), ..., D_k(N)] from shifted restricted partition counts."""
    p = partition_counts_dp(params.seq, N)
    return [sum(p[n - m] for m in params.shifts if m <= n) for n in range(N + 1)]


def count_via_shifts(params: DiamondParams, n: int) -> int:
    if n < 0:
        return 0
    return counts_via_shifts(params, n)[n]


@lru_cache(maxsize=None)
def _seq_moments(params: DiamondParams) -> ResidueMoments:
    return residue_moments(params.seq, params.seq.r - 1)


@lru_cache(maxsize=None)
def diamond_quasipoly(params: DiamondParams) -> QuasiPolynomial:
    """Quasi-polynomial of period D[k] and degree 3k, valid from n0(k)."""
    base = quasipoly_from_moments(params.seq, _seq_moments(params))
    total = None
    for m in params.shifts:
        part = base.shifted(m)
        total = part if total is None else total + part
    return QuasiPolynomial(total.period, total.degree, total.coeffs, params.n0)


def first_agreement_index(params: DiamondParams, limit: int) -> int:
    """Smallest n0' such that the quasi-polynomial matches D_k on [n0', limit]."""
    q = diamond_quasipoly(params)
    exact = counts_via_shifts(params, limit)
    first = limit + 1
    for n in range(limit, -1, -1):
        if q.value(n) != exact[n]:
            break
        first = n
    return first


# --- compressed formula ------------------------------------------------------


def _half_width(params: DiamondParams, j: int) -> int:
    return params.D // _phi(j) - 1


def weight_s(params: DiamondParams, t, mode: str = "min") -> int:
    """Multiplicity of a compressed t-vector.

    A duplicated value v contributes t = u + u' with 0 <= u, u' <= D/v - 1,
    which happens 1 + min(t, 2(D/v - 1) - t) times.  ``mode="max"`` is the
    misprinted variant, kept for regression tests only.
    """
    if mode not in ("min", "max"):
        raise ValueError(f"unknown weight mode {mode!r}")
    if len(t) != params.beta:
        raise ValueError(f"expected {params.beta} entries, got {len(t)}")
    pick = min if mode == "min" else max
    w = 1
    for j, tj in enumerate(t, start=1):
        h = _half_width(params, j)
        if not 0 <= tj <= params.eps(j) * h:
            raise ValueError(f"t_{j}={tj} outside 0..{params.eps(j) * h}")
        if j in params.bprime:
            w *= 1 + pick(tj, 2 * h - tj)
    return w


def compressed_profiles(params: DiamondParams, mode: str = "min") -> list[Profile]:
    """Per-coordinate value/weight profiles of the compressed t-box."""
    pick = min if mode == "min" else max
    out = []
    for j in range(1, params.beta + 1):
        h = _half_width(params, j)
        if j in params.bprime:
            weights = tuple(1 + pick(t, 2 * h - t) for t in range(2 * h + 1))
        else:
            weights = (1,) * (h + 1)
        out.append(Profile(_phi(j), weights))
    return out


def _compressed_box_size(params: DiamondParams) -> int:
    size = 1
    for j in range(1, params.beta + 1):
        size *= params.eps(j) * _half_width(params, j) + 1
    return size


def _count_compressed_naive(
    params: DiamondParams, n: int, mode: str, bound: int, budget: int
) -> int:
    size = _compressed_box_size(params)
    if size > budget:
        raise BudgetExceeded(f"compressed box has {size} points, budget is {budget}")
    D = params.D
    steps = [_phi(j) for j in range(1, params.beta + 1)]
    ranges = [range(params.eps(j) * _half_width(params, j) + 1) for j in range(1, params.beta + 1)]
    total = Fraction(0)
    for t in product(*ranges):
        s = sum(x * v for x, v in zip(t, steps))
        w = None
        for m in params.shifts:
            if (n - s - m) % D:
                continue
            if w is None:
                w = weight_s(params, t, mode)
            x = Fraction(n - s - m, D)
            term = Fraction(w)
            for ell in range(1, bound + 1):
                term *= x + ell
            total += term
    return _as_count(total / factorial(3 * params.k), n)


def _as_count(value: Fraction, n: int) -> int:
    if value.denominator != 1 or value < 0:
        raise NonIntegralResult(f"compressed formula gave {value} at n={n}")
    return value.numerator


@lru_cache(maxsize=None)
def compressed_quasipoly(
    params: DiamondParams, mode: str = "min", bound: int | None = None
) -> QuasiPolynomial:
    """The compressed formula as a quasi-polynomial, via weighted moments."""
    bound = 3 * params.k if bound is None else bound
    S = moments_from_profiles(compressed_profiles(params, mode), params.D, bound)
    # coefficient_row divides by bound!; the formula's prefactor is 1/(3k)!
    scale = Fraction(factorial(bound), factorial(3 * params.k))
    rows = tuple(
        poly_scale(coefficient_row(S.S[c], params.D, bound + 1), scale)
        for c in range(params.D)
    )
    base = QuasiPolynomial(params.D, bound, rows, 0)
    total = None
    for m in params.shifts:
        part = base.shifted(m)
        total = part if total is None else total + part
    return QuasiPolynomial(total.period, total.degree, total.coeffs, 0)


def count_compressed(
    params: DiamondParams,
    n: int,
    *,
    mode: str = "min",
    bound: int | None = None,
    method: str = "auto",
    budget: int = DEFAULT_TUPLE_BUDGET,
) -> int:
    """D_k(n) from the compressed t-vector formula.

    ``method="naive"`` walks the t-box (k = 1 only, in practice);
    ``"moments"`` folds the weighted coordinates into residue moments.
    ``mode`` and ``bound`` select misprinted variants for regression tests.
    """
    if n < 0:
        return 0
    bound = 3 * params.k if bound is None else bound
    if method == "auto":
        method = "naive" if params.k == 1 else "moments"
    if method == "naive":
        return _count_compressed_naive(params, n, mode, bound, budget)
    if method != "moments":
        raise ValueError(f"unknown method {method!r}")
    return _as_count(compressed_quasipoly(params, mode, bound).value(n), n)


# --- polynomial part ---------------------------------------------------------


def _sum_over_shifts(params: DiamondParams, poly) -> tuple[Fraction, ...]:
    total = (Fraction(0),)
    for m in params.shifts:
        total = poly_add(total, poly_shift(poly, m))
    return poly_trim(total)


@lru_cache(maxsize=None)
def diamond_polypart_compressed(params: DiamondParams) -> tuple[Fraction, ...]:
    """Polynomial part of D_k from the unrestricted weighted t-box."""
    r = 3 * params.k + 1
    M = total_moments(compressed_profiles(params), r - 1)
    base = poly_scale(coefficient_row(M, params.D, r), Fraction(1, params.D))
    return _sum_over_shifts(params, base)


@lru_cache(maxsize=None)
def diamond_polypart_bernoulli(params: DiamondParams) -> tuple[Fraction, ...]:
    return _sum_over_shifts(params, polynomial_part_bernoulli(params.seq))


# --- waves -------------------------------------------------------------------


@lru_cache(maxsize=None)
def diamond_wave(params: DiamondParams, j: int, variant: str = "corrected") -> QuasiPolynomial:
    """W_j(k, n): the period-j wave of a[k], summed over the shifts."""
    base = sylvester_wave(params.seq, j, variant, _seq_moments(params))
    total = None
    for m in params.shifts:
        part = base.shifted(m)
        total = part if total is None else total + part
    return QuasiPolynomial(total.period, total.degree, total.coeffs, 0).trimmed()


def diamond_waves(params: DiamondParams, variant: str = "corrected") -> dict[int, QuasiPolynomial]:
    return {j: diamond_wave(params, j, variant) for j in params.seq.divisors()}
