import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from legendre_ternary.arith import factorize, is_prime
from legendre_ternary.hasse import TernaryForm, solvable_mod_prime_power
from legendre_ternary.symbols import REAL, Place, hilbert_symbol, jacobi_symbol, legendre_symbol

ODD_PRIMES_2000 = [p for p in range(3, 2000, 2) if is_prime(p)]
PLACES = [REAL, Place(2), Place(3), Place(5), Place(7)]
nonzero = st.integers(-500, 500).filter(bool)


def residue_table_symbol(a, p):
    if a % p == 0:
        return 0
    return 1 if a % p in {x * x % p for x in range(1, p)} else -1


def eq3_jacobi(a, n):
    out = 1
    for p, e in factorize(n):
        out *= residue_table_symbol(a, p) ** e
    return out


def test_place():
    assert REAL.is_real and str(REAL) == "real"
    assert sorted([Place(5), REAL, Place(2)]) == [REAL, Place(2), Place(5)]
    assert Place.parse("real") == REAL and Place.parse("7") == Place(7)
    with pytest.raises(ValueError):
        Place(4)


def test_legendre_examples():
    assert legendre_symbol(14, 7) == 0
    assert residue_table_symbol(2, 7) == legendre_symbol(2, 7) == 1
    assert residue_table_symbol(2, 3) == legendre_symbol(2, 3) == -1


@pytest.mark.parametrize("p", [2, 1, 9, -3])
def test_legendre_rejects(p):
    with pytest.raises(ValueError):
        legendre_symbol(1, p)


@pytest.mark.parametrize("p", ODD_PRIMES_2000[:30])
def test_legendre_matches_residue_table(p):
    for a in range(-p, 2 * p):
        assert legendre_symbol(a, p) == residue_table_symbol(a, p)


def test_jacobi_examples():
    assert jacobi_symbol(5, 1) == 1
    assert eq3_jacobi(2, 15) == jacobi_symbol(2, 15) == 1
    assert jacobi_symbol(-1, 7) == -1


@pytest.mark.parametrize("n", [0, -3, 4])
def test_jacobi_rejects(n):
    with pytest.raises(ValueError):
        jacobi_symbol(1, n)


def test_jacobi_agrees_with_legendre():
    for p in ODD_PRIMES_2000:
        for a in range(-1999, 2000):
            if jacobi_symbol(a, p) != legendre_symbol(a, p):
                pytest.fail(f"({a}/{p})")


@given(st.integers(-10**12, 10**12), st.integers(0, 10**6))
def test_jacobi_zero_iff_shared_factor(a, k):
    n = 2 * k + 1
    assert (jacobi_symbol(a, n) == 0) == (math.gcd(a, n) != 1)


@given(st.integers(0, 5000), st.integers(0, 5000))
def test_jacobi_reciprocity(i, j):
    m, n = 2 * i + 1, 2 * j + 1
    if math.gcd(m, n) == 1:
        sign = -1 if m % 4 == 3 and n % 4 == 3 else 1
        assert jacobi_symbol(m, n) * jacobi_symbol(n, m) == sign


def test_hilbert_examples():
    assert hilbert_symbol(5, 9, Place(7)) == 1
    assert hilbert_symbol(3, 3, Place(2)) == -1
    assert hilbert_symbol(3, 2, Place(2)) == -1
    assert {x * x % 5 for x in range(5)} == {0, 1, 4}
    assert hilbert_symbol(2, 5, Place(5)) == -1
    assert hilbert_symbol(-1, -1, REAL) == -1


def test_hilbert_rejects_zero():
    with pytest.raises(ValueError):
        hilbert_symbol(0, 3, Place(3))


@given(nonzero, nonzero, st.sampled_from(PLACES))
def test_hilbert_symmetric(m, n, v):
    assert hilbert_symbol(m, n, v) == hilbert_symbol(n, m, v)


@given(nonzero, nonzero, st.integers(-50, 50).filter(bool), st.sampled_from(PLACES))
def test_hilbert_square_absorption(m, n, k, v):
    assert hilbert_symbol(m, n * k * k, v) == hilbert_symbol(m, n, v)


@given(nonzero, nonzero, nonzero, st.sampled_from(PLACES))
def test_hilbert_bilinear(k, m, n, v):
    assert hilbert_symbol(k, m * n, v) == hilbert_symbol(k, m, v) * hilbert_symbol(k, n, v)


@given(nonzero, st.sampled_from(PLACES))
def test_hilbert_diagonal(m, v):
    assert hilbert_symbol(m, m, v) == hilbert_symbol(m, -1, v)
    assert hilbert_symbol(m, -m, v) == 1


def _strip_p_squares(m, p):
    while m % (p * p) == 0:
        m //= p * p
    return m


@pytest.mark.parametrize("p", [2, 3, 5])
def test_hilbert_definitional_small(p):
    k = 6 if p == 2 else 3
    for m in range(-12, 13):
        for n in range(-12, 13):
            if m and n:
                form = TernaryForm(_strip_p_squares(m, p), _strip_p_squares(n, p), -1)
                expected = 1 if solvable_mod_prime_power(form, p, k) else -1
                assert hilbert_symbol(m, n, Place(p)) == expected, (m, n, p)


def test_hilbert_reciprocity_sample():
    rng = random.Random(7)
    for _ in range(500):
        m, n = (rng.choice([-1, 1]) * rng.randint(1, 10**4) for _ in range(2))
        primes = {2} | set(factorize(m).primes) | set(factorize(n).primes)
        prod = hilbert_symbol(m, n, REAL)
        for p in primes:
            prod *= hilbert_symbol(m, n, Place(p))
        assert prod == 1, (m, n)
