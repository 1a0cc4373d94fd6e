"""
Szlenk and w*-dentability indices of C([0, alpha]).

For alpha >= w let gamma be the unique ordinal with
    w^(w^gamma) <= alpha < w^(w^(gamma+1)).
Then Sz(C([0, alpha])) = w^(gamma+1) and Dz(C([0, alpha])) = w^(1+gamma+1).
For finite alpha the space is finite dimensional and Sz = 1; Dz is left undefined
there because only "Dz(X) <= w iff X is superreflexive" is known, which does not
pin a value.

gamma is computed structurally as deg(deg(alpha)) and then checked against the
bracket, so an arithmetic bug surfaces as an error instead of a wrong index.
"""

import logging
from typing import Optional, Tuple

from .errors import OrdinalDomainError
from .ordinals import OMEGA, ONE, Ordinal, add, deg, leading_coefficient, omega_pow
from .utils.serialization import OrdinalField, Record
from .utils.shapes import tower

logger = logging.getLogger(__name__)


class IndexReport(Record):
    alpha: OrdinalField
    szlenk: OrdinalField
    gamma: Optional[OrdinalField] = None
    dentability: Optional[OrdinalField] = None
    bracket_low: Optional[OrdinalField] = None
    bracket_high: Optional[OrdinalField] = None


def gamma_of(alpha: Ordinal) -> Ordinal:
    """The gamma with w^(w^gamma) <= alpha < w^(w^(gamma+1))."""
    if alpha < OMEGA:
        raise OrdinalDomainError(f"gamma-bracket defined for infinite ordinals only (got {alpha}).")
    gamma = deg(deg(alpha))
    low, high = tower(gamma), tower(add(gamma, ONE))
    if not (low <= alpha < high):
        logger.error(f"Bracket check failed for alpha={alpha}: gamma={gamma}, bracket=[{low}, {high}).")
        raise AssertionError(f"gamma={gamma} does not bracket {alpha}.")
    return gamma


def szlenk_index(alpha: Ordinal) -> Ordinal:
    if alpha < OMEGA:
        return ONE
    return omega_pow(add(gamma_of(alpha), ONE))


def dentability_index(alpha: Ordinal) -> Ordinal:
    if alpha < OMEGA:
        raise OrdinalDomainError(
            f"The w*-dentability index is only determined for alpha >= w (got {alpha})."
        )
    # 1 + gamma collapses to gamma once gamma >= w; the engine does that.
    return omega_pow(add(add(ONE, gamma_of(alpha)), ONE))


def index_report(alpha: Ordinal) -> IndexReport:
    if alpha < OMEGA:
        return IndexReport(alpha=alpha, szlenk=ONE)
    gamma = gamma_of(alpha)
    return IndexReport(
        alpha=alpha,
        gamma=gamma,
        szlenk=szlenk_index(alpha),
        dentability=dentability_index(alpha),
        bracket_low=tower(gamma),
        bracket_high=tower(add(gamma, ONE)),
    )


def enclosing_power(alpha: Ordinal) -> Tuple[Ordinal, int]:
    """
    (gamma, n) with n the least integer such that alpha < w^(w^gamma * n).

    C([0, alpha]) then embeds in C0([0, w^(w^gamma * n)]), which sits inside
    c0(w^(w^gamma), C0([0, w^(w^gamma * n)])); that is where the upper bound
    of the Szlenk formula comes from.
    """
    gamma = gamma_of(alpha)
    n = leading_coefficient(deg(alpha)) + 1
    if not alpha < tower(gamma, n):
        raise AssertionError(f"w^(w^{gamma}*{n}) does not enclose {alpha}.")
    return gamma, n


def szlenk_index_from_height(height: Ordinal) -> Ordinal:
    """Sz(C(K)) for a scattered compact K of Cantor-Bendixson height `height`."""
    if height < ONE:
        raise OrdinalDomainError("A nonempty compact space has height at least 1.")
    if height == ONE:
        return ONE
    return omega_pow(add(deg(height), ONE))


def dentability_index_from_height(height: Ordinal) -> Ordinal:
    if height <= ONE:
        raise OrdinalDomainError(f"Dz is only determined for infinite K (height >= 2, got {height}).")
    return omega_pow(add(add(ONE, deg(height)), ONE))
