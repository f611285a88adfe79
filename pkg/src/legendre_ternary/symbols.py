"""Legendre, Jacobi and Hilbert symbols.

Symbol values are plain ints in {-1, 0, 1}.  The Hilbert symbol is built
from its unit and prime base cases through bilinearity, symmetry and
``(m, m)_p = (m, -1)_p``; it never returns 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from legendre_ternary.arith import is_prime

__all__ = ["Place", "REAL", "legendre_symbol", "jacobi_symbol", "hilbert_symbol"]


@dataclass(frozen=True)
class Place:
    """A place of Q: ``p=None`` is the real place, otherwise the prime p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"finite place needs a prime, got {self.p}")

    @classmethod
    def finite(cls, p: int) -> Place:
        return cls(p)

    @property
    def is_real(self) -> bool:
        return self.p is None

    def sort_key(self) -> tuple[int, int]:
        return (0, 0) if self.p is None else (1, self.p)

    def __lt__(self, other: Place) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "real" if self.p is None else str(self.p)

    @classmethod
    def parse(cls, text: str) -> Place:
        text = text.strip().lower()
        if text in ("real", "inf", "oo"):
            return REAL
        return cls(int(text))


REAL = Place()


def _check_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"expected an odd prime, got {p}")


def legendre_symbol(m: int, p: int) -> int:
    """(m/p) by Euler's criterion."""
    _check_odd_prime(p)
    r = pow(m, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def jacobi_symbol(a: int, n: int) -> int:
    """(a/n) for positive odd n, without factoring n.

    Reduces the numerator modulo the denominator, pulls out factors of 2
    with the supplementary law and flips with reciprocity.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"Jacobi denominator must be a positive odd integer, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _split(m: int, p: int) -> tuple[int, int]:
    """Return (valuation mod 2, p-free part) of m at p."""
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v % 2, m


def _units_2(u: int, w: int) -> int:
    # (u, w)_2 for odd u, w
    return -1 if u % 4 == 3 and w % 4 == 3 else 1


def _two_unit_2(u: int) -> int:
    # (2, u)_2 for odd u
    return -1 if u % 8 in (3, 5) else 1


def _prime_times_unit(p: int, u: int, w: int) -> int:
    """(p*u, w)_p for units u, w at p."""
    if p == 2:
        return _two_unit_2(w) * _units_2(u, w)
    return legendre_symbol(w, p)


def hilbert_symbol(m: int, n: int, v: Place) -> int:
    """(m, n)_v for nonzero integers m, n."""
    if m == 0 or n == 0:
        raise ValueError("Hilbert symbol arguments must be nonzero")
    if v.p is None:
        return -1 if m < 0 and n < 0 else 1
    p = v.p
    alpha, u = _split(m, p)
    beta, w = _split(n, p)
    if alpha and beta:
        # (pu, pw) = (pu, -pu)(pu, -w/u) = (pu, -uw)
        return _prime_times_unit(p, u, -u * w)
    if alpha:
        return _prime_times_unit(p, u, w)
    if beta:
        return _prime_times_unit(p, w, u)
    if p == 2:
        return _units_2(u, w)
    return 1
