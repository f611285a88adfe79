"""Local solvability of ax^2 + by^2 + cz^2 = 0 through the Hasse invariant.

A diagonal ternary form has a nontrivial zero over Q_v exactly when its
Hasse invariant S_v(f) equals (-1, -1)_v.  ``solvable_mod_prime_power``
decides the same thing by exhaustive search and is kept free of any
symbol computations so it can serve as an oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from legendre_ternary.arith import factorize, is_prime
from legendre_ternary.symbols import REAL, Place, hilbert_symbol

__all__ = [
    "TernaryForm",
    "LocalVerdict",
    "is_normalized",
    "hasse_invariant",
    "locally_solvable",
    "relevant_places",
    "local_report",
    "solvable_mod_prime_power",
    "oracle_exponent",
]

SEARCH_BUDGET = 10**8


@dataclass(frozen=True)
class TernaryForm:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0 or self.c == 0:
            raise ValueError(f"coefficients must be nonzero, got {self.coefficients}")

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __call__(self, x: int, y: int, z: int) -> int:
        return self.a * x * x + self.b * y * y + self.c * z * z

    def __iter__(self):
        return iter(self.coefficients)

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


@dataclass(frozen=True)
class LocalVerdict:
    place: Place
    hasse: int
    reference: int

    @property
    def solvable(self) -> bool:
        return self.hasse == self.reference


def is_normalized(f: TernaryForm) -> bool:
    """Squarefree, pairwise coprime coefficients."""
    a, b, c = f.coefficients
    if math.gcd(a, b) != 1 or math.gcd(b, c) != 1 or math.gcd(c, a) != 1:
        return False
    return all(e == 1 for m in (a, b, c) for _, e in factorize(m))


def hasse_invariant(f: TernaryForm, v: Place) -> int:
    a, b, c = f.coefficients
    h = hilbert_symbol
    return (
        h(a, -1, v) * h(b, -1, v) * h(c, -1, v)
        * h(a, b, v) * h(b, c, v) * h(c, a, v)
    )


def locally_solvable(f: TernaryForm, v: Place) -> LocalVerdict:
    return LocalVerdict(v, hasse_invariant(f, v), hilbert_symbol(-1, -1, v))


def relevant_places(f: TernaryForm) -> list[Place]:
    """The real place, 2, and every odd prime dividing abc.

    All other places see S_p(f) = 1 = (-1, -1)_p for a normalized form.
    """
    if not is_normalized(f):
        raise ValueError(f"form {f} is not squarefree and pairwise coprime")
    primes = {2}
    for m in f.coefficients:
        primes.update(factorize(m).primes)
    return [REAL] + [Place(p) for p in sorted(primes)]


def local_report(f: TernaryForm) -> list[LocalVerdict]:
    return [locally_solvable(f, v) for v in relevant_places(f)]


def oracle_exponent(p: int) -> int:
    """Modulus exponent at which primitive solvability mod p^k decides Q_p-solvability
    for squarefree coefficients."""
    return 6 if p == 2 else 3


def solvable_mod_prime_power(
    f: TernaryForm, p: int, k: int, budget: int = SEARCH_BUDGET
) -> bool:
    """Is there (x, y, z), not all divisible by p, with f(x, y, z) = 0 mod p^k?

    Scaling by the inverse of a unit coordinate sends any primitive solution
    to one with x, y or z equal to 1, so those three slices are searched
    exhaustively instead of the full cube.
    """
    if k < 1:
        raise ValueError(f"exponent must be positive, got {k}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q = p**k
    if q * p * p > budget:
        raise ValueError(f"search modulus {p}^{k} exceeds budget {budget}")
    a, b, c = (m % q for m in f.coefficients)
    sq = np.arange(q, dtype=np.int64) ** 2 % q
    for lead, u, w in ((a, b, c), (b, c, a), (c, a, b)):
        # lead * 1 + u*s^2 + w*t^2 = 0: is -(lead + u s^2) among the values w t^2?
        hit = np.zeros(q, dtype=bool)
        hit[w * sq % q] = True
        if hit[(-(lead + u * sq)) % q].any():
            return True
    return False
