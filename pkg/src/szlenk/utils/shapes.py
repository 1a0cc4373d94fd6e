"""Recognizers for the ordinal shapes w^e and w^(w^gamma * n) used by the index formulas and rewrite rules."""

from typing import Optional, Tuple

from ..ordinals import Ordinal, mul, omega_pow, ordinal, terms


def omega_log(a: Ordinal) -> Optional[Ordinal]:
    """e if a = w^e (additively indecomposable), else None. Atoms are their own logarithm."""
    a_terms = terms(a)
    if len(a_terms) == 1 and a_terms[0][1] == 1:
        return a_terms[0][0]
    return None


def tower_shape(a: Ordinal) -> Optional[Tuple[Ordinal, int]]:
    """(gamma, n) if a = w^(w^gamma * n) with n >= 1, else None."""
    exponent = omega_log(a)
    if exponent is None:
        return None
    exponent_terms = terms(exponent)
    if len(exponent_terms) != 1:
        return None
    gamma, n = exponent_terms[0]
    return gamma, n


def tower_gamma(a: Ordinal) -> Optional[Ordinal]:
    """gamma if a = w^(w^gamma), else None."""
    shape = tower_shape(a)
    if shape is None or shape[1] != 1:
        return None
    return shape[0]


def tower(gamma: Ordinal, n: int = 1) -> Ordinal:
    """w^(w^gamma * n)."""
    return omega_pow(mul(omega_pow(gamma), ordinal(n)))
