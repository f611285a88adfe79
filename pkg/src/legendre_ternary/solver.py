"""Bounded brute-force search for primitive zeros of ax^2 + by^2 + cz^2."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import TYPE_CHECKING, NamedTuple, Sequence

from legendre_ternary.hasse import TernaryForm

if TYPE_CHECKING:
    from legendre_ternary.legendre import Transform

__all__ = ["Solution", "find_witness", "verify_solution", "pull_back", "search_bounds"]

SEARCH_BUDGET = 10**9


class Solution(NamedTuple):
    x: int
    y: int
    z: int

    def primitive(self) -> Solution:
        g = math.gcd(self.x, self.y, self.z)
        if g == 0:
            return self
        return Solution(self.x // g, self.y // g, self.z // g)


def _ceil_sqrt(n: int) -> int:
    return 0 if n == 0 else math.isqrt(n - 1) + 1


def search_bounds(f: TernaryForm, bound_scale: Fraction | int | float | str = 1) -> tuple[int, int, int]:
    """Holzer-type box ceil(sqrt|bc|), ceil(sqrt|ca|), ceil(sqrt|ab|), scaled."""
    s = Fraction(bound_scale)
    if s <= 0:
        raise ValueError(f"bound_scale must be positive, got {bound_scale}")
    a, b, c = (abs(m) for m in f.coefficients)
    return tuple(math.ceil(_ceil_sqrt(n) * s) for n in (b * c, c * a, a * b))


def find_witness(
    f: TernaryForm,
    bound_scale: Fraction | int | float | str = 1,
    budget: int = SEARCH_BUDGET,
) -> Solution | None:
    """First primitive zero in order of (|z|, |y|, |x|), nonnegative representative.

    x is solved for directly from (y, z), so only the y-z box is walked.
    """
    bx, by, bz = search_bounds(f, bound_scale)
    if (by + 1) * (bz + 1) > budget:
        raise ValueError(f"search box {by + 1}x{bz + 1} exceeds budget {budget}")
    a, b, c = f.coefficients
    for z in range(bz + 1):
        cz = c * z * z
        for y in range(by + 1):
            if y == 0 and z == 0:
                continue
            t = -(b * y * y + cz)
            if t % a:
                continue
            q = t // a
            if q < 0:
                continue
            x = math.isqrt(q)
            if x * x == q and x <= bx and math.gcd(x, y, z) == 1:
                return Solution(x, y, z)
    return None


def verify_solution(f: TernaryForm, s: Sequence[int]) -> bool:
    x, y, z = s
    return (x, y, z) != (0, 0, 0) and f(x, y, z) == 0


def pull_back(t: Transform, s: Sequence[int]) -> Solution:
    """Map a zero of a normalized form to a primitive zero of the form it came from."""
    x, y, z = s
    return Solution(t.mx * x, t.my * y, t.mz * z).primitive()
