"""Enumerate pairs (n, q) with Phi_n(q) or Phi*_n(q) at most c * n**k.

Three searches:

* ``enumerate_M``        -- Phi_n(q) <= c n^k, n >= 3, with an analytic stopping
                            point ``termination_n`` past which no n can qualify.
* ``enumerate_Mstar_ge3`` -- Phi*_n(q) <= c n^k, n >= 3, obtained by filtering
                            the M search run at exponent k + 1.
* ``enumerate_Mstar_2``   -- n = 2, split into R, S and the prime part T
                            capped at a ceiling B.

Floating point only decides which n are examined.  Every emitted pair is
checked against the bound in exact rational arithmetic.
"""
from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from .cyclotomic import cyclotomic_eval, phi_star
from .intarith import (
    PrimePower,
    euler_phi,
    is_prime,
    prime_powers,
    two_adic_split,
)
from .ppdfactor import DEFAULT_BUDGET, PpdFactorization, factor_ppd

# slack on the step-4 test g(n) < 0; only widens the candidate window
G_EPSILON = 1e-6

Number = Union[int, float, str, Fraction]


def as_fraction(x: Number) -> Fraction:
    # str() first so 0.1 means 1/10, not its binary expansion
    if isinstance(x, float):
        return Fraction(str(x))
    return Fraction(x)


@dataclass(frozen=True)
class BoundSpec:
    """The bound c * n**k and the constants of the termination test."""

    c: Fraction
    k: Fraction

    def __init__(self, c: Number, k: Number) -> None:
        c, k = as_fraction(c), as_fraction(k)
        if c <= 0 or k <= 0:
            raise ValueError(f"c and k must be positive, got c={c}, k={k}")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "k", k)

    def __reduce__(self):
        return (BoundSpec, (self.c, self.k))

    @cached_property
    def s(self) -> float:
        return 2 + math.log2(self.c)

    @cached_property
    def t(self) -> float:
        return (self.s + float(self.k)) / math.log(2)

    @cached_property
    def u(self) -> float:
        return float(self.k) / math.log(2) ** 2

    @cached_property
    def b(self) -> float:
        return math.exp(1 - self.t / (2 * self.u))

    def g(self, x: float) -> float:
        lx = math.log(x)
        return x - self.s - self.t * lx - self.u * lx * lx

    def g_prime(self, x: float) -> float:
        return 1 - self.t / x - 2 * self.u * math.log(x) / x

    def with_k(self, k: Number) -> "BoundSpec":
        return BoundSpec(self.c, k)

    def within(self, value: int, n: int) -> bool:
        """Exactly decide value <= c * n**k."""
        return _compare(value, self.c, n, self.k) <= 0

    def below(self, value: int, n: int) -> bool:
        """Exactly decide value < c * n**k."""
        return _compare(value, self.c, n, self.k) < 0

    def floor(self, n: int) -> int:
        """Largest integer v with v <= c * n**k."""
        v = max(int(float(self.c) * float(n) ** float(self.k)), 0)
        while not self.within(v, n):
            v -= 1
        while self.within(v + 1, n):
            v += 1
        return v


def _compare(value: int, c: Fraction, n: int, k: Fraction) -> int:
    """Sign of value - c * n**k, exact for rational c and k."""
    a, b = k.numerator, k.denominator
    # value**b vs c**b * n**a, all positive
    lhs = value ** b * c.denominator ** b
    rhs = c.numerator ** b * n ** a
    return (lhs > rhs) - (lhs < rhs)


class SetTag(enum.Enum):
    M = "M"
    MSTAR_GE3 = "MSTAR_GE3"
    R2 = "R"
    S2 = "S"
    T2 = "T"


@dataclass(frozen=True)
class PairRow:
    n: int
    q: PrimePower
    phi_n: int
    phi_star: int
    factorization: Optional[PpdFactorization] = None


@dataclass
class PairSet:
    tag: SetTag
    rows: List[PairRow] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.rows.sort(key=lambda r: (r.n, r.q.value))

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def pairs(self) -> List[Tuple[int, int]]:
        return [(r.n, r.q.value) for r in self.rows]


@dataclass
class Mstar2Result:
    R: PairSet
    S: PairSet
    T: PairSet

    def union(self) -> List[Tuple[PairRow, SetTag]]:
        tagged = [(row, ps.tag) for ps in (self.R, self.S, self.T) for row in ps]
        tagged.sort(key=lambda rt: rt[0].q.value)
        return tagged


def termination_n(bound: BoundSpec) -> int:
    """Smallest n >= 3 with n > b, g(n) > 0 and g'(n) > 0."""
    n = max(3, math.floor(bound.b) + 1)
    while not (bound.g(n) > 0 and bound.g_prime(n) > 0):
        n += 1
    return n


def candidate_ns(bound: BoundSpec) -> List[int]:
    """The n examined by the M search: g(n) < 0 and 2^(phi(n)-2) < c n^k."""
    stop = termination_n(bound)
    out = []
    for n in range(3, stop):
        if bound.g(n) < G_EPSILON and bound.below(2 ** (euler_phi(n) - 2), n):
            out.append(n)
    return out


def _m_rows_for_n(n: int, bound: BoundSpec) -> List[Tuple[PrimePower, int]]:
    # Phi_n(q) increases with q, so stop at the first prime power over the bound
    out = []
    for q in prime_powers(1):
        value = cyclotomic_eval(n, q.value)
        if not bound.within(value, n):
            break
        out.append((q, value))
    return out


def _map(fn: Callable, items: Sequence, jobs: int) -> List:
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=1))


class _MWorker:
    def __init__(self, bound: BoundSpec, factor: bool, budget: int) -> None:
        self.bound = bound
        self.factor = factor
        self.budget = budget

    def __call__(self, n: int) -> List[PairRow]:
        rows = []
        for q, value in _m_rows_for_n(n, self.bound):
            star = phi_star(n, q.value).phi_star
            f = factor_ppd(n, q.value, self.budget, value=star) if self.factor else None
            rows.append(PairRow(n, q, value, star, f))
        return rows


class _MstarWorker:
    def __init__(self, bound: BoundSpec, budget: int) -> None:
        self.bound = bound
        self.wide = bound.with_k(bound.k + 1)
        self.budget = budget

    def __call__(self, n: int) -> List[PairRow]:
        rows = []
        for q, value in _m_rows_for_n(n, self.wide):
            star = phi_star(n, q.value).phi_star
            if self.bound.within(star, n):
                f = factor_ppd(n, q.value, self.budget, value=star)
                rows.append(PairRow(n, q, value, star, f))
        return rows


def _flatten(chunks: Iterable[List[PairRow]]) -> List[PairRow]:
    return [row for chunk in chunks for row in chunk]


def enumerate_M(bound: BoundSpec, jobs: int = 1, factor: bool = False,
                budget: int = DEFAULT_BUDGET) -> PairSet:
    """All (n, q), n >= 3, q a prime power, with Phi_n(q) <= c n^k."""
    ns = candidate_ns(bound)
    return PairSet(SetTag.M, _flatten(_map(_MWorker(bound, factor, budget), ns, jobs)))


def enumerate_Mstar_ge3(c: Number, k: Number, jobs: int = 1,
                        budget: int = DEFAULT_BUDGET) -> PairSet:
    """All (n, q), n >= 3, q a prime power, with Phi*_n(q) <= c n^k.

    Since n * Phi*_n(q) >= Phi_n(q) for n >= 3, every such pair lies in
    M(c, k + 1); the search runs over that set and filters.
    """
    bound = BoundSpec(c, k)
    ns = candidate_ns(bound.with_k(bound.k + 1))
    return PairSet(SetTag.MSTAR_GE3, _flatten(_map(_MstarWorker(bound, budget), ns, jobs)))


def _row2(q: PrimePower, budget: int) -> PairRow:
    star = two_adic_split(q.value + 1)[1]
    return PairRow(2, q, q.value + 1, star, factor_ppd(2, q.value, budget, value=star))


def alternating_sum(p: int, length: int) -> int:
    """sum_{i < length} (-p)**i"""
    return sum((-p) ** i for i in range(length))


def enumerate_Mstar_2(c: Number, k: Number, B: int,
                      budget: int = DEFAULT_BUDGET) -> Mstar2Result:
    """Prime powers q with Phi*_2(q) <= c 2^k: the sets R, S, and T (q <= B)."""
    if B <= 0:
        raise ValueError(f"B must be positive, got {B}")
    bound = BoundSpec(c, k)
    v = bound.floor(2)  # Phi*_2(q) <= c 2^k  <=>  Phi*_2(q) <= v

    r_rows = []
    q = 2
    while q + 1 <= v:
        r_rows.append(_row2(PrimePower(q, 2, q.bit_length() - 1), budget))
        q *= 2
    for pp in prime_powers(2):
        if (pp.value + 1) // 2 > v:
            break
        if pp.value % 4 == 1:
            r_rows.append(_row2(pp, budget))

    t_rows = []
    for p in range(3, B + 1, 4):
        if is_prime(p) and two_adic_split(p + 1)[1] <= v:
            t_rows.append(_row2(PrimePower(p, p, 1), budget))

    # q = p^l, l >= 3 odd, p = 3 mod 4 prime; the odd cofactor of q + 1 is at
    # least the alternating sum > 2 p^(l-2), so 2 p^(l-2) <= v bounds p and l.
    s_rows = []
    ell = 3
    while 2 * 3 ** (ell - 2) <= v:
        p = 3
        while 2 * p ** (ell - 2) <= v:
            if is_prime(p) and alternating_sum(p, ell) <= v:
                q = p ** ell
                if two_adic_split(q + 1)[1] <= v:
                    s_rows.append(_row2(PrimePower(q, p, ell), budget))
            p += 4
        ell += 2

    return Mstar2Result(
        PairSet(SetTag.R2, r_rows),
        PairSet(SetTag.S2, s_rows),
        PairSet(SetTag.T2, t_rows),
    )
