"""Frobenius-Perron dimensions with exact integrality certificates.

The numeric side is plain power iteration; the certified side works in
exact integer arithmetic with the characteristic polynomial, so that
"(dim X)**2 is the integer s" is a proof, not a float comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .arith import prime_power_base
from .errors import CertificationError, ConvergenceError
from .fusion_ring import FusionRing

MAX_ITERATIONS = 100_000


def perron_root(matrix: list[list[int]], tolerance: float) -> float:
    """Largest eigenvalue of a nonnegative integer matrix.

    Power iteration runs on M + I: the shift makes every diagonal block
    aperiodic, so the Rayleigh quotients settle instead of oscillating,
    and the all-ones start vector overlaps every block.  Stops when two
    successive Rayleigh quotients differ by less than tolerance / 10.
    """
    r = len(matrix)
    shifted = [[matrix[i][j] + int(i == j) for j in range(r)] for i in range(r)]
    v = [1.0] * r
    last = None
    for _ in range(MAX_ITERATIONS):
        w = [sum(shifted[i][j] * v[j] for j in range(r)) for i in range(r)]
        rayleigh = sum(wi * vi for wi, vi in zip(w, v)) / sum(vi * vi for vi in v)
        top = max(w)
        v = [wi / top for wi in w]
        if last is not None and abs(rayleigh - last) < tolerance / 10:
            return rayleigh - 1.0
        last = rayleigh
    raise ConvergenceError(f"power iteration did not converge in {MAX_ITERATIONS} steps")


def charpoly(matrix: list[list[int]]) -> list[int]:
    """Characteristic polynomial of an integer matrix, exact, ascending
    coefficients, monic of degree r.

    Faddeev-LeVerrier recurrence: every division by k is exact over the
    integers, which the remainder check enforces.
    """
    r = len(matrix)
    coeffs = [0] * r + [1]  # fill c_{r-1} .. c_0 below
    m = [[0] * r for _ in range(r)]
    for k in range(1, r + 1):
        # m <- matrix @ (m + c_{k-1} I); at k=1 this is matrix itself
        prev_c = coeffs[r - k + 1] if k > 1 else 1
        work = [[m[i][j] + (prev_c if i == j else 0) for j in range(r)] for i in range(r)]
        m = [
            [sum(matrix[i][t] * work[t][j] for t in range(r)) for j in range(r)]
            for i in range(r)
        ]
        tr = sum(m[i][i] for i in range(r))
        if tr % k != 0:
            raise ArithmeticError("trace recurrence left a nonzero remainder")
        coeffs[r - k] = -tr // k
    return coeffs


def poly_eval(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _shares_sqrt_root(coeffs: list[int], s: int) -> bool:
    """Does sqrt(s) solve the polynomial, decided in integer arithmetic?

    Perfect square s: evaluate at isqrt(s).  Otherwise x**2 - s is
    irreducible, so sqrt(s) is a root iff x**2 - s divides the
    polynomial; reduce modulo x**2 - s by substituting x**2 -> s.
    """
    t = isqrt(s)
    if t * t == s:
        return poly_eval(coeffs, t) == 0
    even = sum(c * s ** (i // 2) for i, c in enumerate(coeffs) if i % 2 == 0)
    odd = sum(c * s ** (i // 2) for i, c in enumerate(coeffs) if i % 2 == 1)
    return even == 0 and odd == 0


@dataclass(frozen=True)
class FPDimData:
    """Numeric dimensions plus their exact certificates.

    exact_square[i] = s means the certified statement dim(X_i)**2 = s;
    None means no integer certificate exists at this tolerance.  total
    carries float error up to rank * tolerance * (2 max dim + 1).
    """

    dims: tuple[float, ...]
    exact_square: tuple[int | None, ...]
    total: float
    total_exact: int | None
    integral: bool
    weakly_integral: bool
    tolerance: float


def fp_dim_data(ring: FusionRing, tolerance: float = 1e-12) -> FPDimData:
    if not 0 < tolerance <= 1e-6:
        raise ValueError(f"tolerance {tolerance} outside the supported range (0, 1e-6]")
    dims: list[float] = []
    squares: list[int | None] = []
    integral = True
    for i in range(ring.rank):
        mat = ring.left_matrix(i)
        d = perron_root(mat, tolerance)
        dims.append(d)
        s = round(d * d)
        cert: int | None = None
        if s >= 1 and abs(d * d - s) <= max(tolerance, 4.0 * abs(d) * tolerance):
            poly = charpoly(mat)
            if _shares_sqrt_root(poly, s):
                cert = s
            elif abs(d - s**0.5) <= tolerance:
                raise CertificationError(
                    f"dim of X_{i} is numerically near sqrt({s}) but the exact root check fails"
                )
        squares.append(cert)
        t = isqrt(s) if cert is not None else 0
        if cert is None or t * t != cert:
            integral = False
    total = sum(d * d for d in dims)
    total_exact = sum(squares) if all(s is not None for s in squares) else None
    return FPDimData(
        dims=tuple(dims),
        exact_square=tuple(squares),
        total=total,
        total_exact=total_exact,
        integral=integral,
        weakly_integral=total_exact is not None,
        tolerance=tolerance,
    )


@dataclass(frozen=True)
class PrimePowerDims:
    """Outcome of the single-prime dimension test.

    pointed means every dimension is 1, where any prime works; prime is
    then None by convention.
    """

    prime: int | None
    pointed: bool


def simple_dims_prime_power(data: FPDimData) -> PrimePowerDims | None:
    """The unique prime p with every certified square a power of p.

    Requires every dimension to carry a certificate; returns None when
    the squares involve two or more primes.
    """
    if not all(s is not None for s in data.exact_square):
        raise CertificationError("prime-power test needs certificates for every dimension")
    if all(s == 1 for s in data.exact_square):
        return PrimePowerDims(prime=None, pointed=True)
    primes = set()
    for s in data.exact_square:
        if s != 1:
            p = prime_power_base(s)
            if p is None:
                return None
            primes.add(p)
    if len(primes) != 1:
        return None
    return PrimePowerDims(prime=primes.pop(), pointed=False)
