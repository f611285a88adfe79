"""Legendre's criterion for ax^2 + by^2 + cz^2 = 0 and the decision engine.

For nonzero, squarefree, pairwise coprime a, b, c the equation has a
nontrivial rational zero iff (A) the coefficients do not share one sign
and (B) -bc, -ca, -ab are squares modulo |a|, |b|, |c|.  ``decide``
checks this against the local Hasse-invariant route and refuses to answer
if they disagree.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from legendre_ternary.arith import crt_combine, factorize, sqrt_mod_prime, squarefree_decompose
from legendre_ternary.hasse import LocalVerdict, TernaryForm, is_normalized, local_report
from legendre_ternary.solver import Solution, find_witness, pull_back, verify_solution
from legendre_ternary.symbols import jacobi_symbol, legendre_symbol

__all__ = [
    "InconsistencyError",
    "Transform",
    "NormalizedForm",
    "ResidueCondition",
    "ConditionBReport",
    "DecisionReport",
    "normalize",
    "condition_a",
    "condition_b",
    "exception_class_odd",
    "exception_class_even",
    "even_last_permutation",
    "permute",
    "canonical_signs",
    "jacobi_product_factors",
    "jacobi_product_closed_form",
    "condition_b_jacobi_product",
    "decide",
    "iter_normalized_triples",
]

# (a mod 8, b mod 8) classes with S_2 = +1 when c = 2c', keyed by c' mod 4
EVEN_EXCEPTIONS = {
    1: frozenset({(1, 1), (1, 3), (3, 1), (3, 7), (5, 5), (5, 7), (7, 3), (7, 5)}),
    3: frozenset({(1, 3), (1, 5), (3, 1), (3, 3), (5, 1), (5, 7), (7, 5), (7, 7)}),
}


class InconsistencyError(RuntimeError):
    """The residue criterion and the local route gave different answers."""


@dataclass(frozen=True)
class Transform:
    """Multipliers taking a zero of the normalized form to a zero of the original."""

    mx: int = 1
    my: int = 1
    mz: int = 1


@dataclass(frozen=True)
class NormalizedForm:
    form: TernaryForm
    transform: Transform = Transform()


@dataclass(frozen=True)
class ResidueCondition:
    """Is ``target`` a square modulo ``modulus``?  Only odd primes of the modulus constrain."""

    modulus: int
    target: int
    legendre: tuple[tuple[int, int], ...]
    witness: int | None

    @property
    def holds(self) -> bool:
        return all(v == 1 for _, v in self.legendre)

    @property
    def odd_modulus(self) -> int:
        return self.modulus // 2 if self.modulus % 2 == 0 else self.modulus


@dataclass(frozen=True)
class ConditionBReport:
    entries: tuple[ResidueCondition, ResidueCondition, ResidueCondition]

    @property
    def holds(self) -> bool:
        return all(e.holds for e in self.entries)


@dataclass(frozen=True)
class DecisionReport:
    input: TernaryForm
    normalized: NormalizedForm
    permutation: tuple[int, int, int]
    condition_a: bool
    condition_b: ConditionBReport
    local: tuple[LocalVerdict, ...]
    solvable: bool
    witness: Solution | None = None

    @property
    def canonical(self) -> TernaryForm:
        return permute(self.normalized.form, self.permutation)


def normalize(a: int, b: int, c: int) -> NormalizedForm:
    """Reduce to squarefree, pairwise coprime coefficients.

    Square factors s^2 of one coefficient are absorbed into the other two
    variables; a prime p shared by two coefficients is moved onto the
    third (p*a'x^2 + p*b'y^2 + cz^2 = 0 iff a'X^2 + b'Y^2 + pcZ^2 = 0).
    """
    coeffs = [a, b, c]
    if 0 in coeffs:
        raise ValueError(f"coefficients must be nonzero, got {tuple(coeffs)}")
    mult = [1, 1, 1]
    changed = True
    while changed:
        changed = False
        for i in range(3):
            s, core = squarefree_decompose(coeffs[i])
            if s > 1:
                coeffs[i] = core
                for j in range(3):
                    if j != i:
                        mult[j] *= s
                changed = True
        for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            g = math.gcd(coeffs[i], coeffs[j])
            if g > 1:
                p = factorize(g).primes[0]
                coeffs[i] //= p
                coeffs[j] //= p
                coeffs[k] *= p
                mult[k] *= p
                changed = True
                break
    return NormalizedForm(TernaryForm(*coeffs), Transform(*mult))


def condition_a(f: TernaryForm) -> bool:
    return min(f.coefficients) < 0 < max(f.coefficients)


def _residue_condition(modulus: int, target: int) -> ResidueCondition:
    odd_primes = [p for p in factorize(modulus).primes if p != 2]
    symbols = tuple((p, legendre_symbol(target, p)) for p in odd_primes)
    witness = None
    if all(v == 1 for _, v in symbols):
        if odd_primes:
            roots = [sqrt_mod_prime(target, p) for p in odd_primes]
            witness = crt_combine(roots, odd_primes)
        else:
            witness = 0
    return ResidueCondition(modulus, target, symbols, witness)


def condition_b(f: TernaryForm) -> ConditionBReport:
    if not is_normalized(f):
        raise ValueError(f"form {f} is not squarefree and pairwise coprime")
    a, b, c = f.coefficients
    return ConditionBReport(
        (
            _residue_condition(abs(a), -b * c),
            _residue_condition(abs(b), -c * a),
            _residue_condition(abs(c), -a * b),
        )
    )


def exception_class_odd(f: TernaryForm) -> bool:
    """All-odd coefficients congruent to one another mod 4 (the 2-adic obstruction)."""
    if any(m % 2 == 0 for m in f.coefficients):
        raise ValueError(f"form {f} has an even coefficient")
    if not is_normalized(f):
        raise ValueError(f"form {f} is not squarefree and pairwise coprime")
    a, b, c = f.coefficients
    return a % 4 == b % 4 == c % 4


def even_last_permutation(f: TernaryForm) -> tuple[int, int, int]:
    """Index order placing the even coefficient (if any) last, others kept in order."""
    coeffs = f.coefficients
    evens = [i for i in range(3) if coeffs[i] % 2 == 0]
    if not evens:
        return (0, 1, 2)
    e = evens[0]
    return tuple([i for i in range(3) if i != e] + [e])


def permute(f: TernaryForm, perm: tuple[int, int, int]) -> TernaryForm:
    coeffs = f.coefficients
    return TernaryForm(*(coeffs[i] for i in perm))


def exception_class_even(f: TernaryForm) -> bool:
    """With c = 2c' the even coefficient: (a, b mod 8) in the table for c' mod 4."""
    if sum(m % 2 == 0 for m in f.coefficients) != 1:
        raise ValueError(f"form {f} must have exactly one even coefficient")
    if not is_normalized(f):
        raise ValueError(f"form {f} is not squarefree and pairwise coprime")
    a, b, c = permute(f, even_last_permutation(f)).coefficients
    return (a % 8, b % 8) in EVEN_EXCEPTIONS[(c // 2) % 4]


def canonical_signs(f: TernaryForm) -> tuple[int, int, int]:
    """Positive (A, B, C) with -A, -B, C a sign-arranged copy of f or of -f.

    The two coefficients sharing a sign come first, in their original order.
    """
    if not condition_a(f):
        raise ValueError(f"form {f} has coefficients of a single sign")
    coeffs = f.coefficients
    if sum(m < 0 for m in coeffs) == 1:
        coeffs = tuple(-m for m in coeffs)
    neg = [-m for m in coeffs if m < 0]
    (pos,) = [m for m in coeffs if m > 0]
    return neg[0], neg[1], pos


def _odd(n: int) -> int:
    return n // 2 if n % 2 == 0 else n


def _pieces(n: int) -> list[int]:
    return [2, n // 2] if n % 2 == 0 else [n]


def jacobi_product_factors(f: TernaryForm) -> list[tuple[int, int, int]]:
    """The Jacobi factors obtained by splitting each residue condition multiplicatively.

    For the arrangement -A x^2 - B y^2 + C z^2, the conditions are
    BC square mod A, AC square mod B and -AB square mod C, each taken modulo
    the odd part.  Returns (numerator, denominator, value) triples.
    """
    if not is_normalized(f):
        raise ValueError(f"form {f} is not squarefree and pairwise coprime")
    A, B, C = canonical_signs(f)
    rows = ((_odd(A), [B, C]), (_odd(B), [A, C]), (_odd(C), [-1, A, B]))
    out = []
    for den, nums in rows:
        for num in nums:
            for piece in ([-1] if num == -1 else _pieces(num)):
                out.append((piece, den, jacobi_symbol(piece, den)))
    return out


def jacobi_product_closed_form(f: TernaryForm) -> int:
    """Value of the factor product predicted by reciprocity and the supplementary laws.

    Uses only residues mod 4 and 8; no symbol is evaluated.
    """
    if not is_normalized(f):
        raise ValueError(f"form {f} is not squarefree and pairwise coprime")
    A, B, C = canonical_signs(f)
    odd = [_odd(A), _odd(B), _odd(C)]
    sign = 1
    for m, n in itertools.combinations(odd, 2):
        if m % 4 == 3 and n % 4 == 3:
            sign = -sign
    if odd[2] % 4 == 3:
        sign = -sign
    # (2/den) appears once for every even numerator alongside that denominator
    rows = {0: (B, C), 1: (A, C), 2: (A, B)}
    for idx, nums in rows.items():
        if any(n % 2 == 0 for n in nums) and odd[idx] % 8 in (3, 5):
            sign = -sign
    return sign


def condition_b_jacobi_product(f: TernaryForm) -> int:
    """Product of the Jacobi factors of the residue conditions; +1 whenever (B) holds."""
    if not condition_a(f):
        raise ValueError(f"form {f} violates condition (A)")
    if not condition_b(f).holds:
        raise ValueError(f"form {f} violates condition (B)")
    return math.prod(v for _, _, v in jacobi_product_factors(f))


def decide(
    a: int,
    b: int,
    c: int,
    *,
    witness: bool = True,
    bound_scale: Fraction | int | float | str = 1,
) -> DecisionReport:
    """Decide whether ax^2 + by^2 + cz^2 = 0 has a nonzero rational solution.

    Raises InconsistencyError if the residue criterion and the local route
    disagree, or if a witness fails to verify against the original form.
    """
    original = TernaryForm(a, b, c)
    nf = normalize(a, b, c)
    perm = even_last_permutation(nf.form)
    canon = permute(nf.form, perm)
    cond_a = condition_a(canon)
    cond_b = condition_b(canon)
    local = tuple(local_report(canon))
    solvable = cond_a and cond_b.holds
    if solvable != all(v.solvable for v in local):
        raise InconsistencyError(
            f"{original}: residue criterion says {solvable}, local route says {not solvable}"
        )
    sol = None
    if solvable and witness:
        found = find_witness(canon, bound_scale)
        if found is not None:
            unpermuted = [0, 0, 0]
            for i, src in enumerate(perm):
                unpermuted[src] = found[i]
            sol = pull_back(nf.transform, unpermuted)
            if not verify_solution(original, sol):
                raise InconsistencyError(f"{original}: witness {sol} does not verify")
    return DecisionReport(original, nf, perm, cond_a, cond_b, local, solvable, sol)


def iter_normalized_triples(bound: int) -> Iterator[TernaryForm]:
    """All squarefree, pairwise coprime (a, b, c) with 1 <= |a|, |b|, |c| <= bound."""
    values = [
        s * m
        for m in range(1, bound + 1)
        if all(e == 1 for _, e in factorize(m))
        for s in (1, -1)
    ]
    for a, b, c in itertools.product(values, repeat=3):
        if math.gcd(a, b) == 1 and math.gcd(b, c) == 1 and math.gcd(c, a) == 1:
            yield TernaryForm(a, b, c)
