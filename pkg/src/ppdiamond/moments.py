"""Per-residue power sums over bounded tuple boxes.

For variables i with step v_i and weight profile w_i(t), t = 0..len(w_i)-1,
the table

    S[c][p] = sum over tuples (t_1, ..., t_r) with s = sum v_i t_i = c (mod M)
              of  w_1(t_1) ... w_r(t_r) * s^p

is the raw material for every closed-form coefficient in this package.  The
naive box has prod len(w_i) points (about 7e12 for the length-2 diamond), so
it is never walked.  Two independent routes are provided:

* ``residue_moments``: build the exact (weighted) distribution of the sum s by
  polynomial convolution, then bucket it by s mod M.
* ``total_moments``: the M = 1 case, folded variable by variable with the
  binomial transform sum_q C(p, q) v^(p-q) S[q].
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

__all__ = [
    "Profile",
    "ResidueMoments",
    "box_profile",
    "sum_distribution",
    "moments_from_profiles",
    "total_moments",
]


@dataclass(frozen=True)
class Profile:
    """One variable: value ``step * t`` with multiplicity ``weights[t]``."""

    step: int
    weights: tuple[int, ...]

    def __post_init__(self):
        if self.step < 1:
            raise ValueError("step must be positive")
        if not self.weights:
            raise ValueError("empty weight profile")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")

    @property
    def is_box(self) -> bool:
        return all(w == 1 for w in self.weights)


def box_profile(step: int, count: int) -> Profile:
    return Profile(step, (1,) * count)


@dataclass(frozen=True)
class ResidueMoments:
    D: int
    pmax: int
    S: tuple[tuple[int, ...], ...]

    def total(self, p: int) -> int:
        return sum(row[p] for row in self.S)

    def fold(self, j: int) -> tuple[tuple[int, ...], ...]:
        """Collapse residues mod D to residues mod j (j must divide D)."""
        if self.D % j:
            raise ValueError(f"{j} does not divide {self.D}")
        out = [[0] * (self.pmax + 1) for _ in range(j)]
        for c, row in enumerate(self.S):
            tgt = out[c % j]
            for p, x in enumerate(row):
                tgt[p] += x
        return tuple(tuple(r) for r in out)


def _convolve_box(dist: list[int], step: int, count: int) -> list[int]:
    # multiply by (1 - q^(step*count)) / (1 - q^step)
    span = step * count
    out = dist + [0] * (span - step)
    size = len(out)
    for s in range(size - 1, span - 1, -1):
        out[s] -= out[s - span]
    for s in range(step, size):
        out[s] += out[s - step]
    return out


def _convolve_sparse(dist: list[int], prof: Profile) -> list[int]:
    span = prof.step * (len(prof.weights) - 1)
    out = [0] * (len(dist) + span)
    nz = [(i, x) for i, x in enumerate(dist) if x]
    for t, w in enumerate(prof.weights):
        if not w:
            continue
        off = t * prof.step
        for i, x in nz:
            out[i + off] += w * x
    return out


def sum_distribution(profiles: Sequence[Profile]) -> list[int]:
    """dist[s] = total weight of tuples whose value sum is s."""
    dist = [1]
    for prof in profiles:
        if prof.is_box:
            dist = _convolve_box(dist, prof.step, len(prof.weights))
        else:
            dist = _convolve_sparse(dist, prof)
    return dist


def moments_from_profiles(
    profiles: Sequence[Profile], modulus: int, pmax: int
) -> ResidueMoments:
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if pmax < 0:
        raise ValueError("pmax must be >= 0")
    dist = sum_distribution(profiles)
    S = [[0] * (pmax + 1) for _ in range(modulus)]
    for s, cnt in enumerate(dist):
        if not cnt:
            continue
        row = S[s % modulus]
        x = cnt
        for p in range(pmax + 1):
            row[p] += x
            x *= s
    return ResidueMoments(modulus, pmax, tuple(tuple(r) for r in S))


def total_moments(profiles: Sequence[Profile], pmax: int) -> tuple[int, ...]:
    """M[p] = sum over all tuples of weight * s^p, by binomial folding."""
    M = [1] + [0] * pmax
    for prof in profiles:
        mu = [0] * (pmax + 1)
        for t, w in enumerate(prof.weights):
            if not w:
                continue
            v = prof.step * t
            x = w
            for p in range(pmax + 1):
                mu[p] += x
                x *= v
        M = [
            sum(comb(p, q) * M[q] * mu[p - q] for q in range(p + 1))
            for p in range(pmax + 1)
        ]
    return tuple(M)
