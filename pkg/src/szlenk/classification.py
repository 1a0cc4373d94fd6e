"""
Bessaga-Pelczynski classification of the spaces C([0, alpha]), w <= alpha < w_1.

C([0, alpha]) ~ C([0, beta]) (alpha <= beta) iff beta < alpha^w, and every such space
is isomorphic to C([0, w^(w^gamma)]) for exactly one countable gamma. The statement
fails in general beyond w_1, so uncountable arguments are refused; compare the
indices there instead.
"""

import logging

from .errors import OrdinalDomainError
from .indices import gamma_of
from .ordinals import OMEGA, Ordinal, is_countable, power
from .utils.serialization import OrdinalField, Record
from .utils.shapes import tower

logger = logging.getLogger(__name__)


class IsoVerdict(Record):
    isomorphic: bool
    witness_low: OrdinalField
    witness_pow: OrdinalField
    gamma_a: OrdinalField
    gamma_b: OrdinalField


def _check_domain(value: Ordinal, name: str) -> None:
    if value < OMEGA:
        raise OrdinalDomainError(f"{name} = {value} is finite; the classification covers w <= {name} < w_1.")
    if not is_countable(value):
        raise OrdinalDomainError(
            f"{name} = {value} is uncountable; the Bessaga-Pelczynski classification does not hold in general for {name} >= w_1."
        )


def isomorphic(alpha: Ordinal, beta: Ordinal) -> IsoVerdict:
    _check_domain(alpha, "alpha")
    _check_domain(beta, "beta")
    low, high = (alpha, beta) if alpha <= beta else (beta, alpha)
    witness = power(low, OMEGA)
    verdict = IsoVerdict(
        isomorphic=high < witness,
        witness_low=low,
        witness_pow=witness,
        gamma_a=gamma_of(alpha),
        gamma_b=gamma_of(beta),
    )
    logger.debug(f"isomorphic({alpha}, {beta}) = {verdict.isomorphic} (alpha^w = {witness})")
    return verdict


def canonical_representative(alpha: Ordinal) -> Ordinal:
    """w^(w^gamma), the representative of alpha's isomorphism class."""
    _check_domain(alpha, "alpha")
    representative = tower(gamma_of(alpha))
    if not isomorphic(alpha, representative).isomorphic:
        raise AssertionError(f"{representative} is not in the class of {alpha}.")
    return representative


def c_equals_c0(alpha: Ordinal) -> bool:
    """C([0, alpha]) ~ C0([0, alpha]) exactly when alpha is infinite."""
    return alpha >= OMEGA
