"""Integer primitives: divisors, Moebius, totient, primality, prime powers."""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator, List, Optional, Tuple

# Bases 2..41 make the strong-pseudoprime test exact below
# 3317044064679887385961981 (> 2**81).  Above that bound the answer is a
# 13-base probable-prime verdict: no counterexample is known, none is proven
# impossible.
MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
MR_DETERMINISTIC_LIMIT = 3317044064679887385961981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@dataclass(frozen=True)
class PrimePower:
    """An integer ``value == base ** exponent`` with ``base`` prime."""

    value: int
    base: int
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 1 or self.base ** self.exponent != self.value:
            raise ValueError(f"{self.base}^{self.exponent} != {self.value}")
        if not is_prime(self.base):
            raise ValueError(f"{self.base} is not prime")

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        if self.exponent == 1:
            return str(self.base)
        return f"{self.base}^{self.exponent}"


def _require_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")


def factorize(n: int) -> List[Tuple[int, int]]:
    """Prime factorization of n by trial division, as sorted (p, e) pairs."""
    _require_positive(n)
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    d = 5
    step = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return out


def moebius(n: int) -> int:
    _require_positive(n)
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    _require_positive(n)
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def divisors(n: int) -> List[int]:
    """Divisors of n in ascending order."""
    _require_positive(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def is_prime(x: int) -> bool:
    """Strong-pseudoprime test over ``MR_WITNESSES``.

    Exact for ``x < MR_DETERMINISTIC_LIMIT``; above it the answer is that of
    a 13-base Miller-Rabin test.
    """
    if x < 2:
        return False
    for p in _SMALL_PRIMES:
        if x % p == 0:
            return x == p
    if x < 47 * 47:
        return True
    d = x - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_WITNESSES:
        y = pow(a, d, x)
        if y == 1 or y == x - 1:
            continue
        for _ in range(s - 1):
            y = y * y % x
            if y == x - 1:
                break
        else:
            return False
    return True


def iroot(x: int, e: int) -> int:
    """floor(x ** (1/e)) for x >= 0, e >= 1, in exact integer arithmetic."""
    if x < 0 or e < 1:
        raise ValueError("iroot needs x >= 0 and e >= 1")
    if e == 1 or x < 2:
        return x
    if e == 2:
        return isqrt(x)
    r = 1 << -(-x.bit_length() // e)  # r**e >= x
    while True:
        nr = ((e - 1) * r + x // r ** (e - 1)) // e
        if nr >= r:
            break
        r = nr
    while r ** e > x:
        r -= 1
    while (r + 1) ** e <= x:
        r += 1
    return r


def prime_power_decompose(x: int) -> Optional[PrimePower]:
    """Return ``PrimePower`` for x = p**e (e maximal), or None."""
    if x <= 1:
        raise ValueError(f"x must be >= 2, got {x}")
    for p in _SMALL_PRIMES:
        if x % p == 0:
            y, e = x, 0
            while y % p == 0:
                y //= p
                e += 1
            return PrimePower(x, p, e) if y == 1 else None
    if is_prime(x):
        return PrimePower(x, x, 1)
    # no prime factor below 53 here, so any base is >= 53 > 2**5
    for e in range(x.bit_length() // 5, 1, -1):
        r = iroot(x, e)
        if r ** e == x and is_prime(r):
            return PrimePower(x, r, e)
    return None


def is_prime_power(x: int) -> bool:
    return x >= 2 and prime_power_decompose(x) is not None


def next_prime_power(x: int) -> PrimePower:
    """Smallest prime power strictly greater than x."""
    y = max(x, 1) + 1
    while True:
        pp = prime_power_decompose(y)
        if pp is not None:
            return pp
        y += 1


def prime_powers(start: int = 1) -> Iterator[PrimePower]:
    """Prime powers greater than ``start`` in ascending order."""
    x = start
    while True:
        pp = next_prime_power(x)
        yield pp
        x = pp.value


def two_adic_split(x: int) -> Tuple[int, int]:
    """Split x as (2-part, odd part)."""
    _require_positive(x, "x")
    two = x & -x
    return two, x // two


def largest_prime_factor(n: int) -> int:
    """Largest prime dividing n; 0 when n == 1 (no prime divisor)."""
    _require_positive(n)
    if n == 1:
        return 0
    return factorize(n)[-1][0]
