"""Exact integer primitives: gcd, powers, factorization, modular square roots, CRT."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce

__all__ = [
    "Factorization",
    "gcd",
    "mod_pow",
    "is_prime",
    "factorize",
    "squarefree_decompose",
    "sqrt_mod_prime",
    "crt_combine",
]

TRIAL_DIVISION_LIMIT = 1 << 16

# Miller-Rabin with these bases is exact below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_EXACT_BELOW = 3_317_044_064_679_887_385_961_981
_MR_EXTRA_BASES = (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@dataclass(frozen=True)
class Factorization:
    """Signed prime factorization; ``factors`` holds (prime, exponent) with primes increasing."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        n = self.sign
        for p, e in self.factors:
            n *= p**e
        return n

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)


def gcd(m: int, n: int) -> int:
    return math.gcd(m, n)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """``base**exp % modulus`` for ``exp >= 0`` and ``modulus >= 1``."""
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    if exp < 0:
        raise ValueError(f"exponent must be nonnegative, got {exp}")
    return pow(base, exp, modulus)


def _strong_probable_prime(n: int, base: int, d: int, s: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test; exact for n below 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES if n < _MR_EXACT_BELOW else _MR_BASES + _MR_EXTRA_BASES
    return all(_strong_probable_prime(n, a, d, s) for a in bases)


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``.

    Seeds are fixed so the output is reproducible.
    """
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        f = lambda v: (v * v + c) % n  # noqa: E731
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = f(y)
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = f(y)
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = f(ys)
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")


def _factor_large(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _factor_large(d, out)
    _factor_large(n // d, out)


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Factor a nonzero integer by trial division, then Pollard-Brent rho."""
    if n == 0:
        raise ValueError("cannot factorize 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    found: dict[int, int] = {}
    d = 2
    while d <= TRIAL_DIVISION_LIMIT and d * d <= n:
        while n % d == 0:
            found[d] = found.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        if d * d > n:
            found[n] = found.get(n, 0) + 1
        else:
            _factor_large(n, found)
    return Factorization(sign, tuple(sorted(found.items())))


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Split ``n = s**2 * f`` with ``s > 0`` and ``f`` squarefree of the same sign as ``n``."""
    if n == 0:
        raise ValueError("cannot decompose 0")
    fac = factorize(n)
    s, f = 1, fac.sign
    for p, e in fac:
        s *= p ** (e // 2)
        if e % 2:
            f *= p
    return s, f


def sqrt_mod_prime(a: int, p: int) -> int | None:
    """Smaller square root of ``a`` modulo the odd prime ``p``, or None for a non-residue."""
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"modulus must be an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        # Tonelli-Shanks
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
    return min(r, p - r)


def crt_combine(residues: list[int], moduli: list[int]) -> int:
    """Unique r in [0, prod(moduli)) with r = residues[i] (mod moduli[i])."""
    if not moduli or len(residues) != len(moduli):
        raise ValueError("residues and moduli must be nonempty and of equal length")
    if any(m < 1 for m in moduli):
        raise ValueError("moduli must be positive")
    for i, mi in enumerate(moduli):
        for mj in moduli[i + 1 :]:
            if math.gcd(mi, mj) != 1:
                raise ValueError(f"moduli {mi} and {mj} are not coprime")
    total = reduce(lambda x, y: x * y, moduli, 1)
    r = 0
    for ri, mi in zip(residues, moduli):
        rest = total // mi
        r += ri * rest * pow(rest, -1, mi) if mi > 1 else 0
    return r % total
