from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NonIntegralResult
from .exact import poly_eval, poly_shift, rational_str

__all__ = ["QuasiPolynomial"]


@dataclass(frozen=True)
class QuasiPolynomial:
    """n -> sum_m coeffs[n mod period][m] * n^m, asserted for n >= valid_from."""

    period: int
    degree: int
    coeffs: tuple[tuple[Fraction, ...], ...]
    valid_from: int = 0

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        if len(self.coeffs) != self.period:
            raise ValueError("one coefficient row per residue class is required")
        if any(len(row) != self.degree + 1 for row in self.coeffs):
            raise ValueError("every row must have degree + 1 entries")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction]], valid_from: int = 0):
        width = max(len(r) for r in rows)
        padded = tuple(
            tuple(Fraction(x) for x in r) + (Fraction(0),) * (width - len(r))
            for r in rows
        )
        return cls(len(padded), width - 1, padded, valid_from)

    def branch(self, n: int) -> tuple[Fraction, ...]:
        return self.coeffs[n % self.period]

    def value(self, n: int) -> Fraction:
        """Evaluate without checking valid_from."""
        return poly_eval(self.coeffs[n % self.period], n)

    def __call__(self, n: int) -> Fraction:
        if n < self.valid_from:
            raise ValueError(f"n={n} is below valid_from={self.valid_from}")
        return self.value(n)

    def count(self, n: int) -> int:
        v = self(n)
        if v.denominator != 1:
            raise NonIntegralResult(f"quasi-polynomial value {v} at n={n}")
        return v.numerator

    def shifted(self, m: int) -> "QuasiPolynomial":
        """n -> self(n - m), re-expanded in powers of n."""
        rows = tuple(
            poly_shift(self.coeffs[(c - m) % self.period], m) for c in range(self.period)
        )
        return QuasiPolynomial(self.period, self.degree, rows, self.valid_from + m)

    def __add__(self, other: "QuasiPolynomial") -> "QuasiPolynomial":
        if other.period != self.period:
            raise ValueError("can only add quasi-polynomials of equal period")
        deg = max(self.degree, other.degree)
        pad = lambda r: r + (Fraction(0),) * (deg + 1 - len(r))  # noqa: E731
        rows = tuple(
            tuple(x + y for x, y in zip(pad(a), pad(b)))
            for a, b in zip(self.coeffs, other.coeffs)
        )
        return QuasiPolynomial(self.period, deg, rows, max(self.valid_from, other.valid_from))

    def trimmed(self) -> "QuasiPolynomial":
        """Drop top powers that vanish in every residue class."""
        deg = self.degree
        while deg > 0 and all(row[deg] == 0 for row in self.coeffs):
            deg -= 1
        rows = tuple(row[: deg + 1] for row in self.coeffs)
        return QuasiPolynomial(self.period, deg, rows, self.valid_from)

    def leading_coefficients(self) -> tuple[Fraction, ...]:
        return tuple(row[self.degree] for row in self.coeffs)

    def is_polynomial(self) -> bool:
        return all(row == self.coeffs[0] for row in self.coeffs)

    def to_json(self) -> dict:
        return {
            "period": self.period,
            "degree": self.degree,
            "valid_from": self.valid_from,
            "coeffs": [[rational_str(x) for x in row] for row in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "QuasiPolynomial":
        rows = tuple(tuple(Fraction(x) for x in row) for row in obj["coeffs"])
        return cls(int(obj["period"]), int(obj["degree"]), rows, int(obj["valid_from"]))
