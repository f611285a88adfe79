import itertools

import pytest

from legendre_ternary.arith import factorize
from legendre_ternary.hasse import (
    LocalVerdict,
    TernaryForm,
    hasse_invariant,
    is_normalized,
    local_report,
    locally_solvable,
    oracle_exponent,
    relevant_places,
    solvable_mod_prime_power,
)
from legendre_ternary.legendre import condition_a, iter_normalized_triples
from legendre_ternary.symbols import REAL, Place

F = TernaryForm


def cube_search(f, p, k):
    """Plain triple loop over [0, p^k)^3."""
    q = p**k
    for x, y, z in itertools.product(range(q), repeat=3):
        if (x % p or y % p or z % p) and f(x, y, z) % q == 0:
            return True
    return False


@pytest.fixture(scope="module")
def triples25():
    return list(iter_normalized_triples(25))


def test_form_basics():
    f = F(1, 2, -3)
    assert f.coefficients == (1, 2, -3)
    assert f(1, 1, 1) == 0
    assert list(f) == [1, 2, -3]
    with pytest.raises(ValueError):
        F(1, 0, 2)


def test_hasse_invariant_examples():
    assert hasse_invariant(F(1, 1, 1), Place(3)) == 1
    assert hasse_invariant(F(1, 1, 1), Place(2)) == 1
    assert hasse_invariant(F(3, 3, 3), Place(2)) == 1
    # mod-64 oracle: no primitive zero, so S_2 differs from (-1,-1)_2 = -1
    assert not solvable_mod_prime_power(F(3, 3, 3), 2, 6)


def test_locally_solvable_examples():
    v = locally_solvable(F(1, 1, -3), Place(3))
    assert not v.solvable and not cube_search(F(1, 1, -3), 3, 3)
    assert locally_solvable(F(1, 1, -2), Place(2)).solvable
    assert not locally_solvable(F(1, 1, 1), REAL).solvable


def test_local_verdict_reference():
    v = LocalVerdict(Place(2), -1, -1)
    assert v.solvable
    assert not LocalVerdict(REAL, 1, -1).solvable


@pytest.mark.parametrize(
    "coeffs, places",
    [
        ((1, 1, -1), [REAL, Place(2)]),
        ((1, 1, -3), [REAL, Place(2), Place(3)]),
        ((2, 3, -5), [REAL, Place(2), Place(3), Place(5)]),
    ],
)
def test_relevant_places(coeffs, places):
    assert relevant_places(F(*coeffs)) == places


@pytest.mark.parametrize("coeffs", [(4, 1, -1), (2, 2, -3), (3, 1, -6)])
def test_relevant_places_rejects_unnormalized(coeffs):
    assert not is_normalized(F(*coeffs))
    with pytest.raises(ValueError):
        relevant_places(F(*coeffs))


def test_local_report_examples():
    assert all(v.solvable for v in local_report(F(1, 1, -2)))
    bad = {v.place for v in local_report(F(1, 1, -3)) if not v.solvable}
    assert bad == {Place(2), Place(3)}
    assert all(v.solvable for v in local_report(F(2, 3, -5)))


def test_solvable_mod_prime_power_examples():
    assert solvable_mod_prime_power(F(1, 1, -1), 2, 6)
    assert not solvable_mod_prime_power(F(1, 1, -3), 3, 3)
    assert solvable_mod_prime_power(F(1, 1, 1), 5, 3)
    assert F(1, 1, 1)(3, 4, 0) % 125 != 0 and F(1, 1, 1)(3, 4, 0) % 25 == 0


def test_solvable_mod_prime_power_rejects():
    with pytest.raises(ValueError):
        solvable_mod_prime_power(F(1, 1, 1), 2, 0)
    with pytest.raises(ValueError):
        solvable_mod_prime_power(F(1, 1, 1), 4, 2)
    with pytest.raises(ValueError):
        solvable_mod_prime_power(F(1, 1, 1), 101, 4)


@pytest.mark.parametrize("p, k", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)])
def test_slice_search_matches_cube_search(p, k):
    for coeffs in itertools.product([1, 2, 3, -1, -2, -3, 5, -5, 6, -7], repeat=3):
        f = F(*coeffs)
        assert solvable_mod_prime_power(f, p, k) == cube_search(f, p, k), (coeffs, p, k)


def test_hasse_matches_prime_power_oracle(triples25):
    for f in triples25:
        for v in relevant_places(f)[1:]:
            expected = solvable_mod_prime_power(f, v.p, oracle_exponent(v.p))
            assert locally_solvable(f, v).solvable == expected, (f, v)


def test_unramified_odd_primes_are_trivial(triples25):
    for f in triples25[::7]:
        abc = f.a * f.b * f.c
        for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
            if abc % p:
                assert hasse_invariant(f, Place(p)) == 1
                assert locally_solvable(f, Place(p)).solvable


def test_real_place_is_condition_a(triples25):
    for f in triples25:
        assert locally_solvable(f, REAL).solvable == condition_a(f)


def test_hasse_product_formula(triples25):
    for f in triples25:
        prod = 1
        for v in relevant_places(f):
            prod *= hasse_invariant(f, v)
        assert prod == 1, f


def test_hasse_product_formula_unnormalized():
    for coeffs in [(12, 18, -7), (4, 9, 25), (-8, 27, 50)]:
        f = F(*coeffs)
        places = {2} | {p for m in coeffs for p in factorize(m).primes}
        prod = hasse_invariant(f, REAL)
        for p in places:
            prod *= hasse_invariant(f, Place(p))
        assert prod == 1
