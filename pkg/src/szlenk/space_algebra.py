"""
Symbolic Banach-space expressions and a traced rewrite system on them.

A SpaceExpr is one of

    C(alpha)           C([0, alpha])
    C0(alpha)          C0([0, alpha]), the functions vanishing at alpha
    DirectSum(parts)   finite direct sum, at least two parts
    C0Sum(kappa, X)    c0(kappa, X), the c0-sum of copies of X indexed by [0, kappa)

Rules, each an isomorphism:

    R1  C0(xi*zeta) -> C0(zeta) (+) c0(zeta, C0(xi))      0 < zeta <= xi, w <= xi
        produced only for C0(w^(w^g*n)), n >= 2, with xi = w^(w^g*(n-1)), zeta = w^(w^g)
    R2  C0(k) (+) c0(k, C0(k)) -> c0(k, C0(k))            k = w^(w^g)
    R3  c0(k, c0(k, X)) -> c0(k, X)                        k >= w
    R4  C(alpha) -> C0(alpha)                              alpha >= w

`normalize` applies them leftmost-innermost to a fixpoint. Every step strictly
decreases `termination_measure`:

    mu = sum over C(alpha) leaves with alpha >= w of (1 + w(alpha))
       + sum over C0(alpha) leaves of w(alpha)
       + sum over DirectSum nodes of (parts - 1)
       + number of C0Sum nodes

with w(w^(w^g*n)) = 3(n - 1) for n >= 2 and 0 otherwise. R1 trades 3(n-1) for
3(n-2) + 2, R2 drops one part, R3 one C0Sum, R4 the leading 1.

For C0(w^(w^g*n)) the trace holds n-1 steps each of R1 and R2 and n-2 of R3.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Annotated, Callable, Dict, Iterator, List, Optional, Tuple

from pydantic import PlainSerializer

from . import config
from .classification import c_equals_c0
from .errors import OrdinalDomainError, RewriteLimitError, SzlenkError
from .indices import gamma_of, szlenk_index
from .ordinals import OMEGA, ONE, Ordinal, add, is_finite, is_zero, maximum, mul, omega_pow
from .utils.serialization import OrdinalField, Record
from .utils.shapes import tower, tower_gamma, tower_shape

logger = logging.getLogger(__name__)

Position = Tuple[int, ...]


class SpaceExpr:
    __slots__ = ()

    def __str__(self) -> str:
        from .notation import format_space

        return format_space(self)

    def __repr__(self) -> str:
        return f"SpaceExpr('{self}')"


def _positive(value: Ordinal, name: str) -> None:
    if not isinstance(value, Ordinal):
        raise OrdinalDomainError(f"{name} must be an ordinal, got {value!r}.")
    if is_zero(value):
        raise OrdinalDomainError(f"{name} must be > 0.")


@dataclass(frozen=True, repr=False)
class C(SpaceExpr):
    alpha: Ordinal

    def __post_init__(self):
        _positive(self.alpha, "alpha")


@dataclass(frozen=True, repr=False)
class C0(SpaceExpr):
    alpha: Ordinal

    def __post_init__(self):
        _positive(self.alpha, "alpha")


@dataclass(frozen=True, repr=False)
class DirectSum(SpaceExpr):
    parts: Tuple[SpaceExpr, ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise OrdinalDomainError("A direct sum needs at least two parts.")
        for part in self.parts:
            if not isinstance(part, SpaceExpr):
                raise OrdinalDomainError(f"Not a space expression: {part!r}")


@dataclass(frozen=True, repr=False)
class C0Sum(SpaceExpr):
    kappa: Ordinal
    inner: SpaceExpr

    def __post_init__(self):
        _positive(self.kappa, "kappa")
        if not isinstance(self.inner, SpaceExpr):
            raise OrdinalDomainError(f"Not a space expression: {self.inner!r}")


def direct_sum(*parts: SpaceExpr) -> SpaceExpr:
    """Direct sum of the parts; a single part is returned as is."""
    if len(parts) == 1:
        return parts[0]
    return DirectSum(tuple(parts))


SpaceField = Annotated[SpaceExpr, PlainSerializer(str, return_type=str)]


# --- Tree access ---

def children(expr: SpaceExpr) -> Tuple[SpaceExpr, ...]:
    if isinstance(expr, DirectSum):
        return expr.parts
    if isinstance(expr, C0Sum):
        return (expr.inner,)
    return ()


def with_children(expr: SpaceExpr, kids: Tuple[SpaceExpr, ...]) -> SpaceExpr:
    if isinstance(expr, DirectSum):
        return DirectSum(kids)
    if isinstance(expr, C0Sum):
        return C0Sum(expr.kappa, kids[0])
    return expr


def subterm_at(expr: SpaceExpr, position: Position) -> SpaceExpr:
    for index in position:
        kids = children(expr)
        if not 0 <= index < len(kids):
            raise OrdinalDomainError(f"No subterm at position {list(position)} of {expr}.")
        expr = kids[index]
    return expr


def replace_at(expr: SpaceExpr, position: Position, replacement: SpaceExpr) -> SpaceExpr:
    if not position:
        return replacement
    kids = list(children(expr))
    head, rest = position[0], position[1:]
    if not 0 <= head < len(kids):
        raise OrdinalDomainError(f"No subterm at position {list(position)} of {expr}.")
    kids[head] = replace_at(kids[head], rest, replacement)
    return with_children(expr, tuple(kids))


def leaves(expr: SpaceExpr) -> Iterator[SpaceExpr]:
    if isinstance(expr, (C, C0)):
        yield expr
        return
    for kid in children(expr):
        yield from leaves(kid)


def parameters(expr: SpaceExpr) -> Iterator[Ordinal]:
    """Every ordinal parameter of the tree, C0Sum indices included."""
    if isinstance(expr, (C, C0)):
        yield expr.alpha
        return
    if isinstance(expr, C0Sum):
        yield expr.kappa
    for kid in children(expr):
        yield from parameters(kid)


# --- Rules ---

def _produce_bp(expr: SpaceExpr) -> Optional[SpaceExpr]:
    if not isinstance(expr, C0):
        return None
    shape = tower_shape(expr.alpha)
    if shape is None or shape[1] < 2:
        return None
    gamma, n = shape
    xi, zeta = tower(gamma, n - 1), tower(gamma)
    return DirectSum((C0(zeta), C0Sum(zeta, C0(xi))))


def _verify_bp(before: SpaceExpr, after: SpaceExpr) -> bool:
    if not isinstance(before, C0) or not isinstance(after, DirectSum) or len(after.parts) != 2:
        return False
    head, tail = after.parts
    if not isinstance(head, C0) or not isinstance(tail, C0Sum) or not isinstance(tail.inner, C0):
        return False
    zeta, xi = head.alpha, tail.inner.alpha
    if tail.kappa != zeta:
        return False
    return zeta <= xi and xi >= OMEGA and mul(xi, zeta) == before.alpha


def _absorbs(left: SpaceExpr, right: SpaceExpr) -> bool:
    return (
        isinstance(left, C0)
        and tower_gamma(left.alpha) is not None
        and right == C0Sum(left.alpha, C0(left.alpha))
    )


def _produce_absorption(expr: SpaceExpr) -> Optional[SpaceExpr]:
    if not isinstance(expr, DirectSum):
        return None
    parts = expr.parts
    for i in range(len(parts) - 1):
        if _absorbs(parts[i], parts[i + 1]):
            return direct_sum(*parts[:i], *parts[i + 1:])
    return None


def _verify_absorption(before: SpaceExpr, after: SpaceExpr) -> bool:
    if not isinstance(before, DirectSum):
        return False
    parts = before.parts
    return any(
        _absorbs(parts[i], parts[i + 1]) and after == direct_sum(*parts[:i], *parts[i + 1:])
        for i in range(len(parts) - 1)
    )


def _produce_flattening(expr: SpaceExpr) -> Optional[SpaceExpr]:
    if (
        isinstance(expr, C0Sum)
        and isinstance(expr.inner, C0Sum)
        and expr.inner.kappa == expr.kappa
        and expr.kappa >= OMEGA
    ):
        return C0Sum(expr.kappa, expr.inner.inner)
    return None


def _verify_flattening(before: SpaceExpr, after: SpaceExpr) -> bool:
    if not isinstance(before, C0Sum) or not isinstance(before.inner, C0Sum):
        return False
    kappa = before.kappa
    return before.inner.kappa == kappa and kappa >= OMEGA and after == C0Sum(kappa, before.inner.inner)


def _produce_vanishing(expr: SpaceExpr) -> Optional[SpaceExpr]:
    if isinstance(expr, C) and c_equals_c0(expr.alpha):
        return C0(expr.alpha)
    return None


def _verify_vanishing(before: SpaceExpr, after: SpaceExpr) -> bool:
    return isinstance(before, C) and before.alpha >= OMEGA and after == C0(before.alpha)


@dataclass(frozen=True)
class Rule:
    name: str
    schema: str
    apply: Callable[[SpaceExpr], Optional[SpaceExpr]]
    verify: Callable[[SpaceExpr, SpaceExpr], bool]


RULES: Dict[str, Rule] = {
    rule.name: rule
    for rule in (
        Rule("R1", "C0(xi*zeta) -> C0(zeta) (+) c0(zeta, C0(xi)), 0 < zeta <= xi, w <= xi", _produce_bp, _verify_bp),
        Rule("R2", "C0(k) (+) c0(k, C0(k)) -> c0(k, C0(k)), k = w^(w^g)", _produce_absorption, _verify_absorption),
        Rule("R3", "c0(k, c0(k, X)) -> c0(k, X), k >= w", _produce_flattening, _verify_flattening),
        Rule("R4", "C(alpha) -> C0(alpha), alpha >= w", _produce_vanishing, _verify_vanishing),
    )
}


def rule_schemas() -> Dict[str, str]:
    return {name: rule.schema for name, rule in RULES.items()}


def apply_rule(name: str, expr: SpaceExpr) -> Optional[SpaceExpr]:
    """Apply one rule at the root of expr; None when it does not match."""
    if name not in RULES:
        raise OrdinalDomainError(f"Unknown rule {name!r}; expected one of {', '.join(RULES)}.")
    return RULES[name].apply(expr)


# --- Traces ---

class RewriteStep(Record):
    rule: str
    position: Tuple[int, ...]
    before: SpaceField
    after: SpaceField


class RewriteTrace(Record):
    source: SpaceField
    steps: Tuple[RewriteStep, ...]
    result: SpaceField


def normalize(expr: SpaceExpr) -> Tuple[SpaceExpr, RewriteTrace]:
    steps: List[RewriteStep] = []
    result = _normalize_at(expr, (), steps)
    logger.debug(f"normalize({expr}) = {result} in {len(steps)} steps")
    return result, RewriteTrace(source=expr, steps=tuple(steps), result=result)


def _normalize_at(expr: SpaceExpr, position: Position, steps: List[RewriteStep]) -> SpaceExpr:
    kids = children(expr)
    if kids:
        expr = with_children(
            expr, tuple(_normalize_at(kid, position + (i,), steps) for i, kid in enumerate(kids))
        )
    for rule in RULES.values():
        rewritten = rule.apply(expr)
        if rewritten is None:
            continue
        if len(steps) >= config.MAX_REWRITE_STEPS:
            raise RewriteLimitError(f"normalize exceeded {config.MAX_REWRITE_STEPS} rewrite steps.")
        steps.append(RewriteStep(rule=rule.name, position=position, before=expr, after=rewritten))
        logger.debug(f"{rule.name} @ {list(position)}: {expr} => {rewritten}")
        return _normalize_at(rewritten, position, steps)
    return expr


def check_trace(trace: RewriteTrace) -> bool:
    """Replay the trace from its source, checking each step against its rule's schema."""
    tree = trace.source
    for number, step in enumerate(trace.steps, start=1):
        rule = RULES.get(step.rule)
        if rule is None:
            logger.warning(f"Step {number}: unknown rule {step.rule!r}.")
            return False
        try:
            current = subterm_at(tree, step.position)
            if current != step.before:
                logger.warning(f"Step {number}: expected {step.before} at {list(step.position)}, found {current}.")
                return False
            if not rule.verify(step.before, step.after):
                logger.warning(f"Step {number}: {step.before} => {step.after} is not an instance of {rule.name}.")
                return False
            tree = replace_at(tree, step.position, step.after)
        except SzlenkError as e:
            logger.warning(f"Step {number}: {e}")
            return False
    if tree != trace.result:
        logger.warning(f"Trace ends in {tree}, not the claimed {trace.result}.")
        return False
    return True


def decompose_bp(xi: Ordinal, zeta: Ordinal) -> Tuple[SpaceExpr, RewriteTrace]:
    """C0(xi*zeta) ~ C0(zeta) (+) c0(zeta, C0(xi)), as a one-step trace."""
    if is_zero(zeta):
        raise OrdinalDomainError("0 < zeta fails: zeta = 0.")
    if not zeta <= xi:
        raise OrdinalDomainError(f"zeta <= xi fails: zeta = {zeta}, xi = {xi}.")
    if not xi >= OMEGA:
        raise OrdinalDomainError(f"w <= xi fails: xi = {xi}.")
    source = C0(mul(xi, zeta))
    result = DirectSum((C0(zeta), C0Sum(zeta, C0(xi))))
    step = RewriteStep(rule="R1", position=(), before=source, after=result)
    return result, RewriteTrace(source=source, steps=(step,), result=result)


def _weight(alpha: Ordinal) -> int:
    shape = tower_shape(alpha)
    if shape is None or shape[1] < 2:
        return 0
    return 3 * (shape[1] - 1)


def termination_measure(expr: SpaceExpr) -> int:
    if isinstance(expr, C):
        return 1 + _weight(expr.alpha) if expr.alpha >= OMEGA else 0
    if isinstance(expr, C0):
        return _weight(expr.alpha)
    own = len(expr.parts) - 1 if isinstance(expr, DirectSum) else 1
    return own + sum(termination_measure(kid) for kid in children(expr))


# --- Szlenk bounds ---

class IndexBounds(Record):
    lower: OrdinalField
    upper: OrdinalField
    exact: bool
    justification: str


def _enclosing_gamma(kappa: Ordinal) -> Ordinal:
    """Least g with kappa <= w^(w^g)."""
    gamma = gamma_of(kappa)
    return gamma if kappa == tower(gamma) else add(gamma, ONE)


def _kappas(expr: SpaceExpr) -> Iterator[Ordinal]:
    if isinstance(expr, C0Sum):
        yield expr.kappa
    for kid in children(expr):
        yield from _kappas(kid)


def _recognized_upper(expr: SpaceExpr) -> Optional[Ordinal]:
    if isinstance(expr, (C, C0)):
        return szlenk_index(expr.alpha)
    if isinstance(expr, C0Sum) and isinstance(expr.inner, (C, C0)):
        gamma = tower_gamma(expr.kappa)
        if gamma is not None and gamma_of(expr.inner.alpha) == gamma:
            return omega_pow(add(gamma, ONE))
        return None
    if isinstance(expr, DirectSum):
        values = [_recognized_upper(part) for part in expr.parts]
        if all(value is not None for value in values):
            return maximum(*values)
    return None


def szlenk_bounds(expr: SpaceExpr) -> IndexBounds:
    params = list(parameters(expr))
    if all(is_finite(p) for p in params):
        return IndexBounds(lower=ONE, upper=ONE, exact=True, justification="finite-dimensional")
    finite = [p for p in params if p < OMEGA]
    if finite:
        raise OrdinalDomainError(
            f"Parameters must all be >= w or all be finite; {expr} mixes in {', '.join(map(str, finite))}."
        )
    lower = maximum(*(szlenk_index(leaf.alpha) for leaf in leaves(expr)))
    normal, _ = normalize(expr)
    upper = _recognized_upper(normal)
    justification = "normal form"
    if upper is None:
        # everything embeds in c0(w^(w^g), C0(w^(w^g*n))) for g = the largest gamma below
        gammas = [gamma_of(leaf.alpha) for leaf in leaves(normal)]
        gammas += [_enclosing_gamma(kappa) for kappa in _kappas(normal)]
        upper = omega_pow(add(maximum(*gammas), ONE))
        justification = "containment"
    if not lower <= upper:
        raise AssertionError(f"Bounds out of order for {expr}: {lower} > {upper}.")
    bounds = IndexBounds(lower=lower, upper=upper, exact=lower == upper, justification=justification)
    logger.debug(f"szlenk_bounds({expr}) = [{lower}, {upper}] via {justification}")
    return bounds
