"""Exact arithmetic with sums of roots of unity.

Elements of Z[zeta_n] are stored as integer coefficient vectors reduced
modulo the n-th cyclotomic polynomial, so equality of two expressions in
n-th roots of unity is equality of tuples.  No floating point enters any
equality decision; numeric() exists only for sign disambiguation and
display, with errors far below the gaps it has to resolve.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import cache

from .arith import divisors


@cache
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial.

    Computed by exact division: x**n - 1 = prod of Phi_d over d | n.

    >>> cyclotomic_polynomial(8)
    (1, 0, 0, 0, 1)
    """
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            poly = _divide_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _divide_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # exact division of integer polynomials, den monic
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + dd]
        out[i] = q
        if q:
            for k in range(dd + 1):
                num[i + k] -= q * den[k]
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return out


def _reduce(coeffs: list[int], n: int) -> tuple[int, ...]:
    """Reduce an exponent-coefficient vector modulo Phi_n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    work = list(coeffs)
    for i in range(len(work) - 1, deg - 1, -1):
        q = work[i]
        if q:
            for k in range(deg + 1):
                work[i - deg + k] -= q * phi[k]
    work = work[:deg]
    work += [0] * (deg - len(work))
    return tuple(work)


@dataclass(frozen=True)
class CycInt:
    """An element of Z[zeta_order], canonical coefficients of length
    deg(Phi_order)."""

    order: int
    coeffs: tuple[int, ...]

    @staticmethod
    def from_exponent_counts(order: int, counts: dict[int, int]) -> CycInt:
        """sum over exponents e of counts[e] * zeta_order**e."""
        vec = [0] * order
        for e, c in counts.items():
            vec[e % order] += c
        return CycInt(order, _reduce(vec, order))

    @staticmethod
    def root_of_unity(order: int, e: int) -> CycInt:
        return CycInt.from_exponent_counts(order, {e: 1})

    @staticmethod
    def integer(order: int, value: int) -> CycInt:
        return CycInt.from_exponent_counts(order, {0: value})

    def _require_same(self, other: CycInt) -> None:
        if self.order != other.order:
            raise ValueError("mixed cyclotomic orders")

    def __add__(self, other: CycInt) -> CycInt:
        self._require_same(other)
        return CycInt(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: CycInt) -> CycInt:
        self._require_same(other)
        return CycInt(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: CycInt) -> CycInt:
        self._require_same(other)
        conv = [0] * self.order
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[(i + j) % self.order] += a * b
        return CycInt(self.order, _reduce(conv, self.order))

    def scaled(self, k: int) -> CycInt:
        return CycInt(self.order, tuple(k * a for a in self.coeffs))

    def conjugate(self) -> CycInt:
        counts: dict[int, int] = {}
        for i, a in enumerate(self.coeffs):
            if a:
                counts[(self.order - i) % self.order] = counts.get((self.order - i) % self.order, 0) + a
        return CycInt.from_exponent_counts(self.order, counts)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_integer(self) -> int | None:
        """The value as a rational integer, or None if it is not one."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def numeric(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(a * z**i for i, a in enumerate(self.coeffs) if a)
