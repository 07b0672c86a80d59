"""Cyclotomic polynomials, their values, and the strong primitive part.

``phi_star`` is the production path.  ``phi_star_oracle`` and
``phi_star_subgroup_oracle`` follow the definitions literally and exist only
to cross-check it; nothing in the enumeration code calls them.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from typing import List, Sequence, Tuple

from .intarith import (
    divisors,
    is_prime_power,
    largest_prime_factor,
    moebius,
    two_adic_split,
)


class Branch(enum.Enum):
    N_EQUALS_1 = "N_EQUALS_1"
    N_EQUALS_2 = "N_EQUALS_2"
    R_COPRIME = "R_COPRIME"
    R_DIVIDES = "R_DIVIDES"


@dataclass(frozen=True)
class CyclotomicPolynomial:
    n: int
    coefficients: Tuple[int, ...]  # ascending degree

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coefficients):
            acc = acc * x + a
        return acc


@dataclass(frozen=True)
class PhiStarResult:
    n: int
    q: int
    phi_n: int
    phi_star: int
    branch: Branch


def _check_args(n: int, q: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")


def poly_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_divmod_monic(num: Sequence[int], den: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Divide ``num`` by the monic ``den``; both in ascending order."""
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    dq = len(den) - 1
    if len(rem) - 1 < dq:
        return [0], rem
    quot = [0] * (len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if c:
            quot[i - dq] = c
            for j in range(dq + 1):
                rem[i - dq + j] -= c * den[j]
    rem = rem[:dq] or [0]
    return quot, rem


def x_pow_minus_one(n: int) -> List[int]:
    return [-1] + [0] * (n - 1) + [1]


@lru_cache(maxsize=None)
def _coeffs(n: int) -> Tuple[int, ...]:
    poly = x_pow_minus_one(n)
    for d in divisors(n)[:-1]:
        poly, rem = poly_divmod_monic(poly, _coeffs(d))
        assert not any(rem)
    return tuple(poly)


def cyclotomic_coeffs(n: int) -> CyclotomicPolynomial:
    """Coefficients of Phi_n(X), by dividing X^n - 1 by Phi_d(X), d | n, d < n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return CyclotomicPolynomial(n, _coeffs(n))


def cyclotomic_eval(n: int, q: int) -> int:
    """Exact Phi_n(q) from the Moebius product over the divisors of n."""
    _check_args(n, q)
    num = den = 1
    for d in divisors(n):
        mu = moebius(d)
        if mu == 1:
            num *= q ** (n // d) - 1
        elif mu == -1:
            den *= q ** (n // d) - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def phi_star(n: int, q: int) -> PhiStarResult:
    """Largest divisor of Phi_n(q) coprime to q^k - 1 for every 1 <= k < n."""
    _check_args(n, q)
    if n == 1:
        return PhiStarResult(n, q, q - 1, q - 1, Branch.N_EQUALS_1)
    if n == 2:
        return PhiStarResult(n, q, q + 1, two_adic_split(q + 1)[1], Branch.N_EQUALS_2)
    value = cyclotomic_eval(n, q)
    r = largest_prime_factor(n)
    if value % r:
        return PhiStarResult(n, q, value, value, Branch.R_COPRIME)
    return PhiStarResult(n, q, value, value // r, Branch.R_DIVIDES)


def phi_star_value(n: int, q: int) -> int:
    return phi_star(n, q).phi_star


def phi_star_oracle(n: int, q: int) -> int:
    """Phi_n(q) with every prime shared with prod_{1<=k<n}(q^k - 1) removed.

    Slow; for cross-checking only.
    """
    _check_args(n, q)
    a = cyclotomic_coeffs(n)(q)
    b = prod(q ** k - 1 for k in range(1, n))
    g = gcd(a, b)
    while g > 1:
        a //= g
        g = gcd(a, b)
    return a


def phi_star_subgroup_oracle(n: int, q: int) -> int:
    """Largest divisor m of q^n - 1 with gcd(m, q^d - 1) = 1 for d | n, d < n.

    This is the order of the largest subgroup of GF(q^n)^* meeting every
    proper subfield's multiplicative group trivially.
    """
    _check_args(n, q)
    if not is_prime_power(q):
        raise ValueError(f"q must be a prime power, got {q}")
    a = q ** n - 1
    b = prod(q ** d - 1 for d in divisors(n)[:-1])
    g = gcd(a, b)
    while g > 1:
        a //= g
        g = gcd(a, b)
    return a
