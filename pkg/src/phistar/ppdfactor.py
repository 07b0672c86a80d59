"""Factor Phi*_n(q) into primitive prime divisors i*n + 1."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .cyclotomic import phi_star_value
from .intarith import MR_DETERMINISTIC_LIMIT, is_prime

DEFAULT_BUDGET = 10 ** 7


class FactorizationBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class PpdFactorization:
    """Phi*_n(q) = prod (i*n + 1) ** m_i over ``exponents`` = ((i, m_i), ...)."""

    n: int
    q: int
    exponents: Tuple[Tuple[int, int], ...]

    @property
    def indices(self) -> List[int]:
        """The multiset I with repetitions expanded, ascending."""
        return [i for i, m in self.exponents for _ in range(m)]

    @property
    def primes(self) -> List[int]:
        return [i * self.n + 1 for i, _ in self.exponents]

    def value(self) -> int:
        out = 1
        for i, m in self.exponents:
            out *= (i * self.n + 1) ** m
        return out

    @classmethod
    def from_indices(cls, n: int, q: int, indices: Iterable[int]) -> "PpdFactorization":
        counts: dict = {}
        for i in indices:
            counts[i] = counts.get(i, 0) + 1
        return cls(n, q, tuple(sorted(counts.items())))


def factor_value(n: int, value: int, budget: int = DEFAULT_BUDGET,
                 verify: bool = False) -> Tuple[Tuple[int, int], ...]:
    """Factor ``value``, all of whose prime factors are 1 mod n.

    Trial-divides by every i*n + 1 while its square is at most the cofactor.
    A cofactor below the deterministic primality limit that tests prime ends
    the scan early; the result is identical, only the scan is shorter.
    """
    exps = []
    r = value
    i = 0
    steps = 0
    settled = r < MR_DETERMINISTIC_LIMIT and is_prime(r)
    while r > 1 and not settled:
        i += 1
        p = i * n + 1
        if p * p > r:
            break
        steps += 1
        if steps > budget:
            raise FactorizationBudgetExceeded(
                f"more than {budget} trial divisors for n={n} "
                f"({len(str(value))}-digit value)")
        if r % p == 0:
            m = 0
            while r % p == 0:
                r //= p
                m += 1
            exps.append((i, m))
            settled = r < MR_DETERMINISTIC_LIMIT and is_prime(r)
    if r > 1:
        j, rem = divmod(r - 1, n)
        if rem:
            raise ValueError(f"cofactor {r} is not 1 mod {n}")
        if verify and not is_prime(r):
            raise AssertionError(f"cofactor {r} is not prime")
        exps.append((j, 1))
    return tuple(exps)


def factor_ppd(n: int, q: int, budget: int = DEFAULT_BUDGET, verify: bool = False,
               value: Optional[int] = None) -> PpdFactorization:
    """Prime factorization of Phi*_n(q) as a multiset of indices i.

    ``value`` may be passed when Phi*_n(q) is already known.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if value is None:
        value = phi_star_value(n, q)
    return PpdFactorization(n, q, factor_value(n, value, budget, verify))


def multiset_notation(f: PpdFactorization) -> str:
    if not f.exponents:
        return "-"
    return ",".join(str(i) for i in f.indices)
