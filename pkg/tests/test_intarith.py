from math import gcd, log2

import pytest
from hypothesis import given, strategies as st

from phistar.intarith import (
    PrimePower,
    divisors,
    euler_phi,
    iroot,
    is_prime,
    largest_prime_factor,
    moebius,
    next_prime_power,
    prime_power_decompose,
    two_adic_split,
)

LIMIT = 10 ** 6


@pytest.fixture(scope="module")
def sieve():
    flags = bytearray([1]) * (LIMIT + 1)
    flags[0] = flags[1] = 0
    for p in range(2, int(LIMIT ** 0.5) + 1):
        if flags[p]:
            flags[p * p::p] = bytearray(len(range(p * p, LIMIT + 1, p)))
    return flags


@pytest.fixture(scope="module")
def prime_power_flags(sieve):
    flags = bytearray(LIMIT + 1)
    for p in range(2, LIMIT + 1):
        if sieve[p]:
            x = p
            while x <= LIMIT:
                flags[x] = 1
                x *= p
    return flags


def trial_is_prime(x):
    if x < 2:
        return False
    d = 2
    while d * d <= x:
        if x % d == 0:
            return False
        d += 1
    return True


@pytest.mark.parametrize("n, expected", [(1, 1), (6, 1), (12, 0), (30, -1), (7, -1)])
def test_moebius_examples(n, expected):
    assert moebius(n) == expected


def test_euler_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(12) == sum(1 for a in range(1, 13) if gcd(a, 12) == 1) == 4


def test_divisors_examples():
    assert divisors(1) == [1]
    assert divisors(6) == [1, 2, 3, 6]
    assert divisors(20) == [d for d in range(1, 21) if 20 % d == 0] == [1, 2, 4, 5, 10, 20]


@pytest.mark.parametrize("fn", [moebius, euler_phi, divisors, largest_prime_factor])
def test_rejects_zero(fn):
    with pytest.raises(ValueError):
        fn(0)


def test_is_prime_examples():
    assert is_prime(3583) and trial_is_prime(3583)
    assert not is_prime(2047) and 23 * 89 == 2047
    assert not is_prime(1)
    assert not is_prime(0)


def test_is_prime_known_pseudoprimes():
    # strong pseudoprimes to several small bases, and a Carmichael number
    for x in (2047, 1373653, 25326001, 3215031751, 2152302898747, 3474749660383,
              341550071728321, 3825123056546413051, 561):
        assert not is_prime(x)
    assert is_prime(2 ** 61 - 1)
    assert is_prime(2 ** 89 - 1)
    assert not is_prime((2 ** 61 - 1) * (2 ** 31 - 1))


def test_is_prime_matches_sieve(sieve):
    bad = [x for x in range(LIMIT + 1) if is_prime(x) != bool(sieve[x])]
    assert bad == []


def test_moebius_sum_identity():
    for n in range(1, 10 ** 4 + 1):
        assert sum(moebius(d) for d in divisors(n)) == (1 if n == 1 else 0), n


def test_totient_sum_identity():
    for n in range(1, 10 ** 4 + 1):
        assert sum(euler_phi(d) for d in divisors(n)) == n, n


def test_totient_lower_bound():
    for n in range(1, 10 ** 4 + 1):
        assert euler_phi(n) >= n / (log2(n) + 1), n


@pytest.mark.parametrize("x, base, exp", [(8, 2, 3), (27, 3, 3), (2, 2, 1), (64, 2, 6),
                                          (3583, 3583, 1), (53 ** 3, 53, 3)])
def test_prime_power_decompose(x, base, exp):
    assert prime_power_decompose(x) == PrimePower(x, base, exp)


@pytest.mark.parametrize("x", [6, 12, 36, 100, 53 * 59, 53 ** 2 * 59])
def test_prime_power_decompose_none(x):
    assert prime_power_decompose(x) is None


def test_prime_power_decompose_rejects_small():
    for x in (0, 1):
        with pytest.raises(ValueError):
            prime_power_decompose(x)


def test_next_prime_power_examples():
    assert next_prime_power(1).value == 2
    assert next_prime_power(7).value == 8
    assert next_prime_power(9).value == 11
    seq, x = [], 1
    for _ in range(10):
        x = next_prime_power(x).value
        seq.append(x)
    assert seq == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def test_next_prime_power_matches_sieve(prime_power_flags):
    # walking the chain visits every prime power <= LIMIT and nothing else
    visited = []
    x = 1
    while x <= LIMIT:
        x = next_prime_power(x).value
        visited.append(x)
    expected = [y for y in range(2, LIMIT + 1) if prime_power_flags[y]]
    assert visited[:-1] == expected
    assert visited[-1] > LIMIT and prime_power_decompose(visited[-1]) is not None


def test_decompose_matches_sieve(prime_power_flags):
    for x in range(2, 20000):
        assert (prime_power_decompose(x) is not None) == bool(prime_power_flags[x]), x


@pytest.mark.parametrize("x, expected", [(18, (2, 9)), (72, (8, 9)), (7, (1, 7)), (1, (1, 1))])
def test_two_adic_split(x, expected):
    assert two_adic_split(x) == expected


def test_two_adic_split_rejects_zero():
    with pytest.raises(ValueError):
        two_adic_split(0)


@given(st.integers(min_value=1, max_value=2 ** 200))
def test_two_adic_split_property(x):
    two, odd = two_adic_split(x)
    assert two * odd == x and odd % 2 == 1 and two & (two - 1) == 0


@pytest.mark.parametrize("n, expected", [(6, 3), (20, 5), (1, 0), (97, 97), (2 ** 10, 2)])
def test_largest_prime_factor(n, expected):
    assert largest_prime_factor(n) == expected


@given(st.integers(min_value=0, max_value=2 ** 300), st.integers(min_value=1, max_value=40))
def test_iroot_property(x, e):
    r = iroot(x, e)
    assert r ** e <= x < (r + 1) ** e


@given(st.sampled_from([2, 3, 5, 7, 53, 101, 65537, 2 ** 31 - 1]), st.integers(1, 12))
def test_prime_power_round_trip(p, e):
    pp = prime_power_decompose(p ** e)
    assert (pp.base, pp.exponent) == (p, e)


def test_prime_power_validation():
    with pytest.raises(ValueError):
        PrimePower(12, 2, 2)
    with pytest.raises(ValueError):
        PrimePower(36, 6, 2)
