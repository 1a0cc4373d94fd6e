"""
Hand-specialized arithmetic on ordinals below w^4, used as ground truth in tests.

A SmallOrdinal is the coefficient vector (c3, c2, c1, c0) of w^3*c3 + w^2*c2 + w*c1 + c0.
Nothing here calls the general engine except the two embedding helpers; the closed
forms below were derived directly from the recursive definitions
    a + 0 = a,  a + (b+1) = (a+b) + 1,  a + sup B = sup (a + B)
    a * 0 = 0,  a * (b+1) = a*b + a,    a * sup B = sup (a * B)
specialized to degree <= 3.

Addition. Let j be the leading degree of b (b != 0). Every term of a below w^j is
swallowed by w^j (x + w^j = w^j for x < w^j), the w^j coefficients add, and b's
lower coefficients are copied:
    (a + b)[k] = a[k]          for k > j
    (a + b)[j] = a[j] + b[j]
    (a + b)[k] = b[k]          for k < j

Multiplication. Let d be the leading degree of a (a != 0). a * w^i = w^(d+i) for i >= 1
(sup of a*n, each below w^(d+1)), and a * n scales only a's leading coefficient
(a*n = w^d*(a[d]*n) + lower part of a). Left-distributing over b:
    (a * b)[k] = b[k - d]      for k > d
    (a * b)[d] = a[d] * b[0]
    (a * b)[k] = a[k] if b[0] > 0 else 0      for k < d
with an overflow error whenever some b[i] > 0 has d + i > 3.
"""

from dataclasses import dataclass
from typing import Iterator, Tuple

from . import config
from .errors import OrdinalDomainError, OrdinalOverflowError
from .ordinals import OMEGA, ZERO, Ordering, Ordinal, add, deg, is_finite, mul, ordinal, terms, to_int

MAX_DEGREE = 3


@dataclass(frozen=True)
class SmallOrdinal:
    """(c3, c2, c1, c0), highest degree first."""

    coeffs: Tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.coeffs) != MAX_DEGREE + 1:
            raise OrdinalDomainError(f"SmallOrdinal needs {MAX_DEGREE + 1} coefficients, got {len(self.coeffs)}.")
        for c in self.coeffs:
            if c < 0:
                raise OrdinalDomainError(f"Negative coefficient {c}.")
            if c > config.MAX_COEFFICIENT:
                raise OrdinalOverflowError(f"Coefficient {c} exceeds the coefficient range.")

    def __getitem__(self, degree: int) -> int:
        return self.coeffs[MAX_DEGREE - degree]

    @property
    def degree(self) -> int:
        """Leading degree; -1 for zero."""
        for k in range(MAX_DEGREE, -1, -1):
            if self[k]:
                return k
        return -1

    def is_zero(self) -> bool:
        return self.degree < 0


def small(c3: int = 0, c2: int = 0, c1: int = 0, c0: int = 0) -> SmallOrdinal:
    return SmallOrdinal((c3, c2, c1, c0))


def _from_degrees(by_degree: dict) -> SmallOrdinal:
    return SmallOrdinal(tuple(by_degree.get(k, 0) for k in range(MAX_DEGREE, -1, -1)))


def _checked(c: int) -> int:
    if c > config.MAX_COEFFICIENT:
        raise OrdinalOverflowError(f"Oracle coefficient {c} exceeds the coefficient range.")
    return c


def o_compare(a: SmallOrdinal, b: SmallOrdinal) -> Ordering:
    if a.coeffs == b.coeffs:
        return Ordering.EQUAL
    return Ordering.LESS if a.coeffs < b.coeffs else Ordering.GREATER


def o_add(a: SmallOrdinal, b: SmallOrdinal) -> SmallOrdinal:
    j = b.degree
    if j < 0:
        return a
    result = {}
    for k in range(MAX_DEGREE + 1):
        if k > j:
            result[k] = a[k]
        elif k == j:
            result[k] = _checked(a[k] + b[k])
        else:
            result[k] = b[k]
    return _from_degrees(result)


def o_mul(a: SmallOrdinal, b: SmallOrdinal) -> SmallOrdinal:
    d = a.degree
    if d < 0 or b.is_zero():
        return small()
    for i in range(1, MAX_DEGREE + 1):
        if b[i] and d + i > MAX_DEGREE:
            raise OrdinalOverflowError(f"Product degree {d + i} exceeds the oracle range.")
    result = {}
    for k in range(MAX_DEGREE + 1):
        if k > d:
            result[k] = b[k - d]
        elif k == d:
            result[k] = _checked(a[d] * b[0])
        else:
            result[k] = a[k] if b[0] else 0
    return _from_degrees(result)


def successor(a: SmallOrdinal) -> SmallOrdinal:
    return SmallOrdinal(a.coeffs[:-1] + (_checked(a.coeffs[-1] + 1),))


def to_ordinal(a: SmallOrdinal) -> Ordinal:
    """Embed into the general engine."""
    value = ZERO
    for k in range(MAX_DEGREE, -1, -1):
        if a[k]:
            value = add(value, mul(_omega_to(k), ordinal(a[k])))
    return value


def from_ordinal(value: Ordinal) -> SmallOrdinal:
    """Inverse of to_ordinal on ordinals below w^4."""
    result = {}
    for exponent, coefficient in terms(value):
        if not is_finite(exponent) or to_int(exponent) > MAX_DEGREE:
            raise OrdinalDomainError(f"{value} is outside the oracle range (below w^{MAX_DEGREE + 1}).")
        result[to_int(exponent)] = coefficient
    return _from_degrees(result)


def _omega_to(k: int) -> Ordinal:
    value = ordinal(1)
    for _ in range(k):
        value = mul(value, OMEGA)
    return value


def grid(max_coefficient: int, max_degree: int = MAX_DEGREE) -> Iterator[SmallOrdinal]:
    """Every vector of degree <= max_degree with coefficients in [0, max_coefficient]."""
    span = range(max_coefficient + 1)
    for c3 in span if max_degree >= 3 else (0,):
        for c2 in span if max_degree >= 2 else (0,):
            for c1 in span if max_degree >= 1 else (0,):
                for c0 in span:
                    yield SmallOrdinal((c3, c2, c1, c0))


def in_range(value: Ordinal) -> bool:
    return not value or (is_finite(deg(value)) and to_int(deg(value)) <= MAX_DEGREE)
