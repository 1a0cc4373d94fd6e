"""
Cantor-Bendixson derivatives of the ordinal intervals [0, alpha].

The xi-th derived set of [0, alpha] (xi >= 1) is exactly the set of nonzero multiples
of w^xi that are <= alpha, i.e. {w^xi * eta : 1 <= eta <= q} with q the quotient of
alpha by w^xi. A descriptor stores that q as `order_type`; the stage-0 descriptor is
flagged `whole_interval` and stores alpha itself, standing for all of [0, alpha].

Restricted to Dirac functionals, the Szlenk derivation on the dual ball is this
derivation (the embedding [0, alpha] -> C([0, alpha])* is an order-w* homeomorphism),
so delta_lambda survives exactly as many stages as the CB rank of lambda, which is
the smallest exponent of lambda's normal form. For lambda = w^zeta that is zeta; the
general case is a definition here, checked against the concrete oracle below w^4.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from pydantic import computed_field

from .errors import OrdinalDomainError
from .indices import szlenk_index_from_height
from .oracle import MAX_DEGREE, SmallOrdinal, small
from .ordinals import ONE, ZERO, Ordinal, add, deg, is_zero, omega_pow, trailing_exponent
from .utils.serialization import OrdinalField, Record

logger = logging.getLogger(__name__)

MAX_ORACLE_STAGES = 4


class DerivedSetDescriptor(Record):
    alpha: OrdinalField
    xi: OrdinalField
    order_type: OrdinalField
    whole_interval: bool = False

    @computed_field
    @property
    def empty(self) -> bool:
        return not self.whole_interval and is_zero(self.order_type)

    @computed_field
    @property
    def description(self) -> str:
        if self.whole_interval:
            return f"[0, {self.alpha}]"
        if self.empty:
            return "empty"
        return f"{{{omega_pow(self.xi)}*eta : 1 <= eta <= {self.order_type}}}"


class HeightReport(Record):
    alpha: OrdinalField
    height: OrdinalField
    height_degree: OrdinalField
    szlenk_from_height: OrdinalField


def cb_derivative(alpha: Ordinal, xi: Ordinal) -> DerivedSetDescriptor:
    if is_zero(xi):
        return DerivedSetDescriptor(alpha=alpha, xi=ZERO, order_type=alpha, whole_interval=True)
    quotient, _ = divmod(alpha, omega_pow(xi))
    return DerivedSetDescriptor(alpha=alpha, xi=xi, order_type=quotient)


def derive_descriptor(descriptor: DerivedSetDescriptor, xi: Ordinal) -> DerivedSetDescriptor:
    """The xi-th derived set of an already derived set; lands on stage descriptor.xi + xi."""
    if is_zero(xi):
        return descriptor
    if descriptor.whole_interval:
        return cb_derivative(descriptor.alpha, xi)
    # {w^eta * theta : 1 <= theta <= q} is homeomorphic to [1, q]
    quotient, _ = divmod(descriptor.order_type, omega_pow(xi))
    return DerivedSetDescriptor(alpha=descriptor.alpha, xi=add(descriptor.xi, xi), order_type=quotient)


def cb_height(alpha: Ordinal) -> Ordinal:
    """Least xi whose derived set is empty. [0, 0] is a single point, so its height is 1."""
    if is_zero(alpha):
        return ONE
    return add(deg(alpha), ONE)


def height_report(alpha: Ordinal) -> HeightReport:
    height = cb_height(alpha)
    return HeightReport(
        alpha=alpha,
        height=height,
        height_degree=deg(height),
        szlenk_from_height=szlenk_index_from_height(height),
    )


def dirac_rank(lam: Ordinal) -> Ordinal:
    """Number of derivation stages delta_lambda survives. Points 0 and successors are isolated."""
    if is_zero(lam):
        return ZERO
    return trailing_exponent(lam)


# --- Concrete oracle below w^4 ---

@dataclass(frozen=True)
class OracleStage:
    """
    One stage of the concrete derivation of [0, alpha].

    Stage k >= 1 is {x : 0 < x <= alpha, coefficients of x below degree k all zero};
    `order_type` is the largest index q of its points w^k * eta. `points` lists
    the set explicitly whenever it is finite.
    """

    stage: int
    order_type: SmallOrdinal
    whole_interval: bool
    points: Optional[Tuple[SmallOrdinal, ...]]

    @property
    def empty(self) -> bool:
        return not self.whole_interval and self.order_type.is_zero()


def _is_isolated(point: SmallOrdinal, stage: int) -> bool:
    """Inside stage `stage`, a point is isolated iff it is 0 or its degree-`stage` coefficient is nonzero."""
    return point.is_zero() or point[stage] != 0


def _limits(q: SmallOrdinal) -> SmallOrdinal:
    """Index set of the limit points of [1, q]: w * eta' <= q iff eta' <= q div w."""
    return SmallOrdinal((0,) + q.coeffs[:MAX_DEGREE])


def _multiple(k: int, eta: int) -> SmallOrdinal:
    coeffs = [0] * (MAX_DEGREE + 1)
    coeffs[MAX_DEGREE - k] = eta
    return SmallOrdinal(tuple(coeffs))


def _stage_zero(alpha: SmallOrdinal) -> OracleStage:
    points = None
    if alpha.degree <= 0:
        points = tuple(small(c0=n) for n in range(alpha[0] + 1))
    return OracleStage(stage=0, order_type=alpha, whole_interval=True, points=points)


def _remove_isolated(previous: OracleStage) -> OracleStage:
    """
    Drop the isolated points of one stage.

    The points of stage k-1 are w^(k-1) * eta for eta in [1, q] (or [0, alpha] at stage 0),
    and such a point is isolated exactly when eta is 0 or a successor. The survivors are
    re-indexed by eta div w, so the next order type is read off the previous one alone.
    """
    k = previous.stage + 1
    order_type = _limits(previous.order_type)
    points = None
    if order_type.degree <= 0:
        points = tuple(_multiple(k, eta) for eta in range(1, order_type[0] + 1))
    if previous.points is not None:
        survivors = tuple(p for p in previous.points if not _is_isolated(p, previous.stage))
        if points is not None and survivors != points:
            raise AssertionError(f"Stage {k} disagrees with explicit removal from stage {previous.stage}.")
    return OracleStage(stage=k, order_type=order_type, whole_interval=False, points=points)


def concrete_derivative_oracle(alpha: SmallOrdinal, steps: int) -> List[OracleStage]:
    """Stages 0..steps of the derivation of [0, alpha], computed on coefficient vectors."""
    if not 0 <= steps <= MAX_ORACLE_STAGES:
        raise OrdinalDomainError(f"The concrete oracle runs 0 to {MAX_ORACLE_STAGES} stages (got {steps}).")
    stages = [_stage_zero(alpha)]
    for _ in range(steps):
        stages.append(_remove_isolated(stages[-1]))
    logger.debug(f"Oracle derivation of {alpha.coeffs}: {[s.order_type.coeffs for s in stages]}")
    return stages


def oracle_dirac_rank(point: SmallOrdinal) -> int:
    """Stages survived by the point, by repeated membership tests against the stage constraints."""
    rank = 0
    while rank < MAX_DEGREE + 1 and not _is_isolated(point, rank):
        rank += 1
    return rank
