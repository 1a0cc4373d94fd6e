import pytest
from hypothesis import given, settings

from szlenk.classification import c_equals_c0, canonical_representative, isomorphic
from szlenk.errors import OrdinalDomainError
from szlenk.indices import gamma_of, szlenk_index
from szlenk.notation import parse_ordinal
from szlenk.ordinals import OMEGA, omega_atom, omega_pow, ordinal
from szlenk.utils.shapes import tower
from tests.strategies import bracketed


def test_omega_and_omega_times_two():
    verdict = isomorphic(OMEGA, OMEGA * 2)
    assert verdict.isomorphic
    assert verdict.witness_low == OMEGA
    assert verdict.witness_pow == omega_pow(OMEGA)


def test_argument_order_does_not_matter():
    alpha, beta = parse_ordinal("w^w"), parse_ordinal("w^2*3 + 1")
    forward, backward = isomorphic(alpha, beta), isomorphic(beta, alpha)
    assert forward.isomorphic == backward.isomorphic is False
    assert forward.witness_low == backward.witness_low == parse_ordinal("w^2*3 + 1")
    assert forward.gamma_a == backward.gamma_b


def test_boundary_of_a_class():
    # w^w is the first ordinal outside the class of w
    assert isomorphic(OMEGA, parse_ordinal("w^9*4 + 1")).isomorphic
    assert not isomorphic(OMEGA, omega_pow(OMEGA)).isomorphic


@pytest.mark.parametrize("alpha", [ordinal(5), omega_atom(1), parse_ordinal("W1*w + 1")])
def test_outside_countable_infinite_range(alpha):
    with pytest.raises(OrdinalDomainError):
        isomorphic(alpha, OMEGA)
    with pytest.raises(OrdinalDomainError):
        canonical_representative(alpha)


def test_uncountable_message():
    with pytest.raises(OrdinalDomainError, match="does not hold in general"):
        isomorphic(OMEGA, omega_atom(2))


@pytest.mark.parametrize(
    "alpha, representative",
    [("w*7 + 3", "w"), ("w^5", "w"), ("w^w*2", "w^w"), ("w^(w^2 + w)", "w^(w^2)"), ("w^(w^w*3)", "w^(w^w)")],
)
def test_canonical_representative(alpha, representative):
    assert canonical_representative(parse_ordinal(alpha)) == parse_ordinal(representative)


def test_c_equals_c0():
    assert c_equals_c0(OMEGA)
    assert c_equals_c0(omega_atom(1))
    assert not c_equals_c0(ordinal(4))


@given(bracketed(), bracketed())
@settings(max_examples=500)
def test_classes_are_gamma_brackets(first, second):
    (alpha, _), (beta, _) = first, second
    verdict = isomorphic(alpha, beta)
    assert verdict.isomorphic == (gamma_of(alpha) == gamma_of(beta))
    if verdict.isomorphic:
        assert szlenk_index(alpha) == szlenk_index(beta)


@given(bracketed())
def test_representative_shares_gamma(sample):
    alpha, gamma = sample
    representative = canonical_representative(alpha)
    assert representative == tower(gamma)
    assert isomorphic(alpha, representative).isomorphic
