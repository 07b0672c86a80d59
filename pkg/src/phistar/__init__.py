"""Exact arithmetic for Phi*_n(q), the largest strong primitive divisor of q^n - 1."""
from .cyclotomic import (
    Branch,
    PhiStarResult,
    cyclotomic_coeffs,
    cyclotomic_eval,
    phi_star,
    phi_star_oracle,
    phi_star_subgroup_oracle,
)
from .enumeration import (
    BoundSpec,
    enumerate_M,
    enumerate_Mstar_2,
    enumerate_Mstar_ge3,
    termination_n,
)
from .intarith import PrimePower, is_prime, prime_power_decompose
from .ppdfactor import PpdFactorization, factor_ppd, multiset_notation

__version__ = "0.1.0"
