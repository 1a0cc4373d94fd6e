"""
Canonical Cantor-normal-form ordinals.

Covers every ordinal below epsilon_0 together with the symbolic atoms W1, W2, ...
(read as the uncountable initial ordinals; the arithmetic only uses that each one
is an epsilon-number larger than everything built without it).

An `Ordinal` is exactly one of

    Zero()                   0
    EpsAtom(k)               the k-th atom W_k
    Cnf(terms)               w^e1*c1 + ... + w^en*cn,  e1 > ... > en,  ci >= 1

Canonicity makes structural equality coincide with ordinal equality:
finite n is always Cnf(((Zero(), n),)), and the single term (EpsAtom(k), 1) is never
stored as a Cnf because w^W_k = W_k; `_from_terms` is the only place terms become
values and it enforces both rules.

All algorithms work on the uniform term view `_terms`, in which an atom is the
one-term sum w^W_k * 1.

The Python operators are wired to the ordinal operations, so `a + b`, `a * b`,
`a ** b`, `divmod(a, d)`, `a < b` behave as ordinal arithmetic. Plain ints are
accepted on either side and read as finite ordinals. Convention: 0 ** 0 == 1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Tuple

from . import config
from .errors import OrdinalDomainError, OrdinalOverflowError

logger = logging.getLogger(__name__)


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @property
    def symbol(self) -> str:
        return {Ordering.LESS: "<", Ordering.EQUAL: "=", Ordering.GREATER: ">"}[self]


class Ordinal:
    """Base class of the three canonical shapes. Instances are immutable."""

    __slots__ = ()

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else add(self, other)

    def __radd__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else add(other, self)

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else mul(self, other)

    def __rmul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else mul(other, self)

    def __pow__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else power(self, other)

    def __rpow__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else power(other, self)

    def __divmod__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else left_divmod(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __lt__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else compare(self, other) < 0

    def __le__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else compare(self, other) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else compare(self, other) > 0

    def __ge__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else compare(self, other) >= 0

    def __bool__(self) -> bool:
        return not isinstance(self, Zero)

    def __str__(self) -> str:
        from .notation import format_ordinal

        return format_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal('{self}')"


@dataclass(frozen=True, repr=False)
class Zero(Ordinal):
    pass


@dataclass(frozen=True, repr=False)
class EpsAtom(Ordinal):
    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise OrdinalDomainError(f"Atom index must be a positive integer, got {self.k!r}.")


@dataclass(frozen=True, repr=False)
class Cnf(Ordinal):
    terms: Tuple[Tuple[Ordinal, int], ...]

    def __post_init__(self):
        if not self.terms:
            raise OrdinalDomainError("A Cnf needs at least one term; use Zero() for 0.")
        for _, coefficient in self.terms:
            if coefficient < 1:
                raise OrdinalDomainError(f"Coefficients must be >= 1, got {coefficient}.")
            _coefficient(coefficient)
        if len(self.terms) == 1 and isinstance(self.terms[0][0], EpsAtom) and self.terms[0][1] == 1:
            raise OrdinalDomainError("w^Wk is the atom Wk itself and must be stored as EpsAtom.")


Term = Tuple[Ordinal, int]


def _coerce(value) -> Ordinal | None:
    if isinstance(value, Ordinal):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return ordinal(value)
    return None


def _coefficient(c: int) -> int:
    if c > config.MAX_COEFFICIENT:
        logger.debug(f"Coefficient overflow: {c.bit_length()} bits, limit {config.COEFFICIENT_BITS}")
        raise OrdinalOverflowError(
            f"Coefficient {c} exceeds the {config.COEFFICIENT_BITS}-bit coefficient range."
        )
    return c


ZERO = Zero()


def ordinal(n: int) -> Ordinal:
    """The finite ordinal n."""
    if n < 0:
        raise OrdinalDomainError(f"Ordinals are non-negative, got {n}.")
    if n == 0:
        return ZERO
    return Cnf(((ZERO, _coefficient(n)),))


def omega_atom(k: int) -> EpsAtom:
    """The k-th epsilon-number atom W_k."""
    return EpsAtom(k)


ONE = ordinal(1)
OMEGA = Cnf(((ONE, 1),))


def _terms(a: Ordinal) -> Tuple[Term, ...]:
    if isinstance(a, Zero):
        return ()
    if isinstance(a, EpsAtom):
        return ((a, 1),)
    return a.terms


def _from_terms(terms: Iterable[Term]) -> Ordinal:
    terms = tuple(terms)
    if not terms:
        return ZERO
    if len(terms) == 1 and isinstance(terms[0][0], EpsAtom) and terms[0][1] == 1:
        return terms[0][0]
    return Cnf(terms)


def _sign(x: int) -> Ordering:
    return Ordering.GREATER if x > 0 else Ordering.LESS if x < 0 else Ordering.EQUAL


# --- Predicates and accessors ---

def is_zero(a: Ordinal) -> bool:
    return isinstance(a, Zero)


def is_finite(a: Ordinal) -> bool:
    return isinstance(a, Zero) or (isinstance(a, Cnf) and len(a.terms) == 1 and is_zero(a.terms[0][0]))


def to_int(a: Ordinal) -> int:
    if not is_finite(a):
        raise OrdinalDomainError(f"{a} is not a finite ordinal.")
    return 0 if is_zero(a) else a.terms[0][1]


def is_successor(a: Ordinal) -> bool:
    terms = _terms(a)
    return bool(terms) and is_zero(terms[-1][0])


def is_limit(a: Ordinal) -> bool:
    return bool(a) and not is_successor(a)


def is_countable(a: Ordinal) -> bool:
    """True iff no atom occurs anywhere in a, exponents included."""
    if isinstance(a, EpsAtom):
        return False
    return all(is_countable(e) for e, _ in _terms(a))


def deg(a: Ordinal) -> Ordinal:
    """Leading exponent. deg(W_k) = W_k, deg(n) = 0 for finite n >= 1."""
    if is_zero(a):
        raise OrdinalDomainError("deg(0) is undefined.")
    return _terms(a)[0][0]


def leading_coefficient(a: Ordinal) -> int:
    if is_zero(a):
        raise OrdinalDomainError("0 has no leading coefficient.")
    return _terms(a)[0][1]


def trailing_exponent(a: Ordinal) -> Ordinal:
    """Smallest exponent of the normal form, i.e. the Cantor-Bendixson rank of a as a point."""
    if is_zero(a):
        raise OrdinalDomainError("0 has no trailing exponent.")
    return _terms(a)[-1][0]


def terms(a: Ordinal) -> Tuple[Term, ...]:
    """Public term view (an atom reads as the single term (W_k, 1))."""
    return _terms(a)


def check_canonical(a: Ordinal) -> bool:
    """Validate every canonical-form invariant recursively; raises OrdinalDomainError on violation."""
    if isinstance(a, (Zero, EpsAtom)):
        return True
    if not isinstance(a, Cnf) or not a.terms:
        raise OrdinalDomainError(f"Not an ordinal value: {a!r}")
    previous = None
    for exponent, coefficient in a.terms:
        check_canonical(exponent)
        if not isinstance(coefficient, int) or coefficient < 1:
            raise OrdinalDomainError(f"Bad coefficient {coefficient!r}.")
        _coefficient(coefficient)
        if previous is not None and compare(previous, exponent) <= 0:
            raise OrdinalDomainError(f"Exponents not strictly decreasing: {previous} then {exponent}.")
        previous = exponent
    if len(a.terms) == 1 and isinstance(a.terms[0][0], EpsAtom) and a.terms[0][1] == 1:
        raise OrdinalDomainError("Single term (Wk, 1) must be the atom itself.")
    return True


# --- Order ---

def compare(a: Ordinal, b: Ordinal) -> Ordering:
    if a is b:
        return Ordering.EQUAL
    if isinstance(a, EpsAtom) and isinstance(b, EpsAtom):
        return _sign(a.k - b.k)
    ta, tb = _terms(a), _terms(b)
    for (ea, ca), (eb, cb) in zip(ta, tb):
        order = compare(ea, eb)
        if order:
            return order
        if ca != cb:
            return _sign(ca - cb)
    return _sign(len(ta) - len(tb))


def maximum(*values: Ordinal) -> Ordinal:
    best = values[0]
    for value in values[1:]:
        if compare(value, best) > 0:
            best = value
    return best


# --- Arithmetic ---

def add(a: Ordinal, b: Ordinal) -> Ordinal:
    tb = _terms(b)
    if not tb:
        return a
    ta = _terms(a)
    if not ta:
        return b
    lead_exponent, lead_coefficient = tb[0]
    kept = []
    for exponent, coefficient in ta:
        order = compare(exponent, lead_exponent)
        if order > 0:
            kept.append((exponent, coefficient))
        elif order == 0:
            kept.append((exponent, _coefficient(coefficient + lead_coefficient)))
            kept.extend(tb[1:])
            return _from_terms(kept)
        else:
            break
    kept.extend(tb)
    return _from_terms(kept)


def sub(a: Ordinal, b: Ordinal) -> Ordinal:
    """Left subtraction: the unique x with b + x = a. Requires b <= a."""
    ta, tb = _terms(a), _terms(b)
    for i, ((ea, ca), (eb, cb)) in enumerate(zip(ta, tb)):
        order = compare(ea, eb)
        if order < 0 or (order == 0 and ca < cb):
            break
        if order > 0:
            return _from_terms(ta[i:])
        if ca > cb:
            return _from_terms(((ea, ca - cb),) + ta[i + 1:])
    else:
        if len(tb) <= len(ta):
            return _from_terms(ta[len(tb):])
    raise OrdinalDomainError(f"Cannot subtract {b} from the smaller ordinal {a}.")


def mul(a: Ordinal, b: Ordinal) -> Ordinal:
    ta, tb = _terms(a), _terms(b)
    if not ta or not tb:
        return ZERO
    degree, lead = ta[0]
    product = []
    for exponent, coefficient in tb:
        if is_zero(exponent):
            # a * c only scales the leading coefficient
            product.append((degree, _coefficient(lead * coefficient)))
            product.extend(ta[1:])
        else:
            # a * w^e = w^(deg(a) + e)
            product.append((add(degree, exponent), coefficient))
    return _from_terms(product)


def omega_pow(e: Ordinal) -> Ordinal:
    """w^e; fixes every atom."""
    if isinstance(e, EpsAtom):
        return e
    return _from_terms(((e, 1),))


def power(a: Ordinal, b: Ordinal) -> Ordinal:
    """a^b via a^(b1 + b2) = a^b1 * a^b2 over the terms of b. 0^0 = 1."""
    tb = _terms(b)
    if not tb:
        return ONE
    if is_zero(a):
        return ZERO
    if a == ONE:
        return ONE
    result = ONE
    for exponent, coefficient in tb:
        result = mul(result, _power_of_term(a, exponent, coefficient))
    return result


def _power_of_term(a: Ordinal, e: Ordinal, c: int) -> Ordinal:
    """a^(w^e * c) for a >= 2."""
    if is_zero(e):
        return _power_finite(a, c)
    if is_finite(a):
        # n^w = w and n^(w^(1+x)) = w^(w^x)
        return omega_pow(mul(omega_pow(sub(e, ONE)), ordinal(c)))
    # a^(w^e) = w^(deg(a) * w^e)
    return omega_pow(mul(deg(a), mul(omega_pow(e), ordinal(c))))


def _power_finite(a: Ordinal, c: int) -> Ordinal:
    if is_finite(a):
        base = to_int(a)
        if c * (base.bit_length() - 1) >= config.COEFFICIENT_BITS:
            raise OrdinalOverflowError(f"{base}^{c} exceeds the {config.COEFFICIENT_BITS}-bit coefficient range.")
        return ordinal(base**c)
    count = len(_terms(a))
    if is_successor(a):
        # every factor past the first contributes its k - 1 infinite terms
        count = c * (count - 1) + 1
    if count > config.MAX_TERMS:
        logger.debug(f"Refusing ({a})^{c}: {count} terms, limit {config.MAX_TERMS}")
        raise OrdinalOverflowError(f"({a})^{c} would have {count} terms, more than the limit of {config.MAX_TERMS}.")
    result, square = ONE, a
    while c:
        if c & 1:
            result = mul(result, square)
        c >>= 1
        if c:
            square = mul(square, square)
    return result


def left_divmod(a: Ordinal, d: Ordinal) -> Tuple[Ordinal, Ordinal]:
    """(q, r) with a = d*q + r and r < d. Also reachable as divmod(a, d)."""
    if is_zero(d):
        raise OrdinalDomainError("Division by the zero ordinal.")
    delta, lead = _terms(d)[0]
    quotient = []
    rest = a
    while compare(rest, d) >= 0:
        rest_terms = _terms(rest)
        exponent, coefficient = rest_terms[0]
        if compare(exponent, delta) > 0:
            # d * w^f * c = w^(delta + f) * c absorbs the whole leading term
            quotient.append((sub(exponent, delta), coefficient))
            rest = _from_terms(rest_terms[1:])
            continue
        n = coefficient // lead
        multiple = mul(d, ordinal(n))
        if compare(multiple, rest) > 0:
            n -= 1
            multiple = mul(d, ordinal(n))
        if n:
            quotient.append((ZERO, n))
            rest = sub(rest, multiple)
        break
    return _from_terms(quotient), rest
