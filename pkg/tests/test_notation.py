import pytest
from hypothesis import given

from szlenk.errors import ExpressionSyntaxError, OrdinalOverflowError
from szlenk.notation import (
    BinOp,
    Num,
    Omega,
    format_ordinal,
    format_space,
    parse_ordinal,
    parse_ordinal_ast,
    parse_space,
    tokenize,
)
from szlenk.ordinals import OMEGA, ONE, ZERO, Cnf, omega_atom, omega_pow, ordinal
from szlenk.space_algebra import C, C0, C0Sum, DirectSum
from tests.strategies import ordinals, space_expressions


def test_reads_a_normal_form():
    value = parse_ordinal("w^(w^2)*3 + w*5 + 7")
    assert value == Cnf(((omega_pow(ordinal(2)), 3), (ONE, 5), (ZERO, 7)))
    assert format_ordinal(value) == "w^(w^2)*3 + w*5 + 7"


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1 + w", "w"),
        ("w + 1", "w + 1"),
        ("2*w", "w"),
        ("w*2", "w*2"),
        ("(w + 1)*w", "w^2"),
        ("w^w^w", "w^(w^w)"),
        ("(w^w)^w", "w^(w^2)"),
        ("2^w", "w"),
        ("0", "0"),
        ("W1", "W1"),
        ("w^W1", "W1"),
        ("W1*w + W2", "W2"),
        ("W1*2 + 1", "W1*2 + 1"),
        ("w^(W1 + 1)", "w^(W1 + 1)"),
        ("ω·2 + Ω₁", "W1"),
        ("  w ^ 2   *3 ", "w^2*3"),
    ],
)
def test_evaluation_and_canonical_rendering(text, expected):
    assert format_ordinal(parse_ordinal(text)) == expected


def test_precedence_in_the_tree():
    assert parse_ordinal_ast("w + w*2^3") == BinOp("+", Omega(), BinOp("*", Omega(), BinOp("^", Num(2), Num(3))))
    assert parse_ordinal_ast("2^3^2") == BinOp("^", Num(2), BinOp("^", Num(3), Num(2)))


def test_tokenizer_positions():
    tokens = tokenize("C0(w) (+) c0(W12, C(3))")
    assert [(t.kind, t.position) for t in tokens[:5]] == [
        ("ident", 0),
        ("op", 2),
        ("omega", 3),
        ("op", 4),
        ("dsum", 6),
    ]
    assert tokens[-1].kind == "end"


@pytest.mark.parametrize(
    "text, position",
    [("w^^2", 2), ("w +", 3), ("(w + 1", 6), ("w $ 2", 2), ("w 2", 2), ("W", 0), ("W0", 0)],
)
def test_syntax_errors_carry_positions(text, position):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_ordinal(text)
    assert info.value.position == position
    assert f"at position {position}" in str(info.value)


def test_second_caret_is_reported():
    with pytest.raises(ExpressionSyntaxError, match="expected an ordinal, found '\\^' at position 2"):
        parse_ordinal("w^^2")


def test_oversized_literal():
    with pytest.raises(OrdinalOverflowError, match="exceeds the 64-bit range"):
        parse_ordinal("18446744073709551616")
    assert parse_ordinal("18446744073709551615") == ordinal(2**64 - 1)


def test_space_grammar():
    expr = parse_space("C(w) (+) C0(w^2) ⊕ c0(w, C0(1) (+) C0(2))")
    assert expr == DirectSum(
        (
            C(OMEGA),
            C0(omega_pow(ordinal(2))),
            C0Sum(OMEGA, DirectSum((C0(ONE), C0(ordinal(2))))),
        )
    )
    assert format_space(expr) == "C(w) (+) C0(w^2) (+) c0(w, C0(1) (+) C0(2))"


def test_parenthesized_sums_stay_nested():
    expr = parse_space("(C0(w) (+) C0(1)) (+) C(W1)")
    assert expr == DirectSum((DirectSum((C0(OMEGA), C0(ONE))), C(omega_atom(1))))
    assert format_space(expr) == "(C0(w) (+) C0(1)) (+) C(W1)"


@pytest.mark.parametrize("text", ["C0(w", "c0(w C0(w))", "C0(w) (+)", "D(w)", "C0(w) C0(w)"])
def test_space_syntax_errors(text):
    with pytest.raises(ExpressionSyntaxError):
        parse_space(text)


@given(ordinals)
def test_ordinal_round_trip(value):
    assert parse_ordinal(format_ordinal(value)) == value


@given(space_expressions)
def test_space_round_trip(expr):
    assert parse_space(format_space(expr)) == expr
