"""Exact arithmetic in the cyclotomic field Q(rho_j), rho_j = exp(2*pi*i/j).

Elements are stored in the power basis 1, rho, ..., rho^(phi(j)-1), reduced
modulo the j-th cyclotomic polynomial, so equality and rationality are plain
coefficient checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

__all__ = [
    "CyclotomicNumber",
    "OrderMismatch",
    "NotRational",
    "cyclotomic_polynomial",
    "root_of_unity",
    "cyc_to_rational",
    "cyc_arith",
]


class OrderMismatch(ValueError):
    pass


class NotRational(ValueError):
    pass


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _int_poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic; ascending coefficients
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for t in range(dd + 1):
                num[i - dd + t] -= c * den[t]
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(j: int) -> tuple[int, ...]:
    """Phi_j as ascending integer coefficients (monic, degree phi(j))."""
    if j < 1:
        raise ValueError("order must be >= 1")
    poly = [-1] + [0] * (j - 1) + [1]  # x^j - 1
    for d in _divisors(j)[:-1]:
        poly = _int_poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class CyclotomicNumber:
    order: int
    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_poly(cls, order: int, poly) -> "CyclotomicNumber":
        """Reduce an arbitrary polynomial in rho_j modulo Phi_j."""
        phi = cyclotomic_polynomial(order)
        deg = len(phi) - 1
        work = [Fraction(c) for c in poly]
        for i in range(len(work) - 1, deg - 1, -1):
            c = work[i]
            if c:
                for t in range(deg + 1):
                    work[i - deg + t] -= c * phi[t]
        work = (work + [Fraction(0)] * deg)[:deg]
        return cls(order, tuple(work))

    @classmethod
    def rational(cls, order: int, value: Scalar) -> "CyclotomicNumber":
        deg = len(cyclotomic_polynomial(order)) - 1
        return cls(order, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise OrderMismatch(f"orders {self.order} and {other.order} differ")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for t, b in enumerate(other.coeffs):
                    if b:
                        prod[i + t] += a * b
        return CyclotomicNumber.from_poly(self.order, prod)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are only supported for roots of unity")
        result = CyclotomicNumber.rational(self.order, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __repr__(self) -> str:
        terms = [f"({c})*r^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"Cyc{self.order}[{' + '.join(terms) or '0'}]"


def root_of_unity(j: int, e: int) -> CyclotomicNumber:
    """rho_j^e, with e taken modulo j (so negative exponents are allowed)."""
    if j < 1:
        raise ValueError("order must be >= 1")
    e %= j
    return CyclotomicNumber.from_poly(j, [0] * e + [1])


def cyc_to_rational(x: CyclotomicNumber) -> Fraction:
    if not x.is_rational():
        raise NotRational(f"{x!r} is not rational")
    return x.coeffs[0]


def cyc_arith(a: CyclotomicNumber, b: CyclotomicNumber, op: str) -> CyclotomicNumber:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")
