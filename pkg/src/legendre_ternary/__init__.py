"""Rational solvability of diagonal ternary quadratic forms ax^2 + by^2 + cz^2 = 0.

Two independent decision routes are provided: Legendre's residue criterion
and the local route through Hilbert symbols and the Hasse invariant.  A
bounded brute-force search supplies witnesses and ground truth.
"""

from legendre_ternary.arith import (
    Factorization,
    crt_combine,
    factorize,
    gcd,
    is_prime,
    mod_pow,
    sqrt_mod_prime,
    squarefree_decompose,
)
from legendre_ternary.hasse import (
    LocalVerdict,
    TernaryForm,
    hasse_invariant,
    local_report,
    locally_solvable,
    relevant_places,
    solvable_mod_prime_power,
)
from legendre_ternary.legendre import (
    ConditionBReport,
    DecisionReport,
    InconsistencyError,
    NormalizedForm,
    ResidueCondition,
    Transform,
    condition_a,
    condition_b,
    condition_b_jacobi_product,
    decide,
    exception_class_even,
    exception_class_odd,
    normalize,
)
from legendre_ternary.solver import Solution, find_witness, pull_back, verify_solution
from legendre_ternary.symbols import REAL, Place, hilbert_symbol, jacobi_symbol, legendre_symbol

__version__ = "0.1.0"

__all__ = [
    "ConditionBReport",
    "DecisionReport",
    "Factorization",
    "InconsistencyError",
    "LocalVerdict",
    "NormalizedForm",
    "Place",
    "REAL",
    "ResidueCondition",
    "Solution",
    "TernaryForm",
    "Transform",
    "condition_a",
    "condition_b",
    "condition_b_jacobi_product",
    "crt_combine",
    "decide",
    "exception_class_even",
    "exception_class_odd",
    "factorize",
    "find_witness",
    "gcd",
    "hasse_invariant",
    "hilbert_symbol",
    "is_prime",
    "jacobi_symbol",
    "legendre_symbol",
    "local_report",
    "locally_solvable",
    "mod_pow",
    "normalize",
    "pull_back",
    "relevant_places",
    "solvable_mod_prime_power",
    "sqrt_mod_prime",
    "squarefree_decompose",
    "verify_solution",
]
