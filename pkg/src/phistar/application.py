"""Rows whose Phi*_n(q) divides (n+1)^3 (2n+1)(3n+1)(4n+1), with degree bounds.

For such (n, q) a faithful Alt(c)/Sym(c) module of dimension d <= 4n forces the
degree c into an interval [c0, c1]; this module computes the arithmetic side
only.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .enumeration import PairRow, enumerate_Mstar_ge3
from .intarith import PrimePower
from .ppdfactor import PpdFactorization

# largest multiplicity allowed for each index i
SHAPE_LIMITS = {1: 3, 2: 1, 3: 1, 4: 1}
MIN_DEGREE = 15


@dataclass(frozen=True)
class ClassificationRow:
    n: int
    q: PrimePower
    I: PpdFactorization
    c0: Optional[int] = None
    c1: Optional[int] = None


def delta(c: int, q: PrimePower) -> int:
    """1 if the characteristic of q does not divide c, else 2."""
    if c < 1:
        raise ValueError(f"c must be >= 1, got {c}")
    return 2 if c % q.base == 0 else 1


def has_theorem2_shape(f: PpdFactorization) -> bool:
    return all(m <= SHAPE_LIMITS.get(i, 0) for i, m in f.exponents)


def theorem2_filter(rows: Iterable[PairRow]) -> List[ClassificationRow]:
    """Keep rows with Phi*_n(q) = prod_{i<=4} (in+1)^{m_i}, m_1 <= 3, m_2..4 <= 1."""
    out = []
    for row in rows:
        if row.n >= 3 and row.factorization is not None and has_theorem2_shape(row.factorization):
            out.append(ClassificationRow(row.n, row.q, row.factorization))
    return out


def degree_interval(row: ClassificationRow) -> Tuple[int, int]:
    """(c0, c1) = (max(r, 15), 4n + delta(4n + 2, q)), r the largest prime of Phi*_n(q)."""
    if row.n <= 3:
        raise ValueError(f"degree interval needs n >= 4, got n={row.n}")
    r = max(row.I.primes, default=0)
    return max(r, MIN_DEGREE), 4 * row.n + delta(4 * row.n + 2, row.q)


def with_interval(row: ClassificationRow) -> ClassificationRow:
    if row.n < 4:
        return row
    c0, c1 = degree_interval(row)
    return ClassificationRow(row.n, row.q, row.I, c0, c1)


def classify(jobs: int = 1) -> List[ClassificationRow]:
    """Every n >= 3 row of the restricted-factorization classification."""
    rows = enumerate_Mstar_ge3(16, 7, jobs=jobs)
    return [with_interval(r) for r in theorem2_filter(rows)]
