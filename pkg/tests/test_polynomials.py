import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import forms
from egh_liaison.errors import NotHomogeneousError, ParseError
from egh_liaison.polyalg import (
    DEGREVLEX,
    LEX,
    Ideal,
    Polynomial,
    RingContext,
    format_polynomial,
    parse_ideal_text,
    parse_polynomial,
)
from egh_liaison.polyalg.ring import degrevlex_key, elimination_order

R3 = RingContext(3)


def test_ring_defaults_and_validation():
    assert R3.var_names == ("x1", "x2", "x3")
    assert R3.characteristic == 32003
    assert R3.header() == "ring 3 32003 x1 x2 x3"
    with pytest.raises(ValueError):
        RingContext(2, characteristic=32004)
    with pytest.raises(ValueError):
        RingContext(2, ("a", "a"))
    with pytest.raises(ValueError):
        RingContext(0)


def test_degrevlex_breaks_ties_on_last_variable():
    # x1*x3 > x2^2 in lex, but degrevlex looks at the smallest variable first
    monos = [(1, 0, 1), (0, 2, 0), (2, 0, 0), (0, 0, 2)]
    got = sorted(monos, key=degrevlex_key, reverse=True)
    assert got == [(2, 0, 0), (0, 2, 0), (1, 0, 1), (0, 0, 2)]


def test_elimination_order_prefers_the_block():
    key = elimination_order(1).key_function()
    assert key((1, 0, 0)) > key((0, 5, 5))


def test_parse_example_terms():
    f = parse_polynomial("x1^2 - 3*x2*x3", R3)
    assert f.terms == {(2, 0, 0): 1, (0, 1, 1): 32000}


def test_parse_zero_and_whitespace():
    assert not parse_polynomial("0", R3)
    assert parse_polynomial(" x1 *  x2 ", R3) == parse_polynomial("x1*x2", R3)
    assert not parse_polynomial("x1 - x1", R3)


def test_parse_unbalanced_paren_offset():
    with pytest.raises(ParseError) as exc:
        parse_polynomial("x1*(x2", R3)
    assert exc.value.position == 6


@pytest.mark.parametrize("text", ["y1", "x1 +", "2x1", "x1^^2", "x1^-1", ")"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_polynomial(text, R3)


def test_division_needs_unit_constant():
    f = parse_polynomial("x1/2", R3)
    assert f.terms == {(1, 0, 0): 16002}
    with pytest.raises(ParseError):
        parse_polynomial("x1/32003", R3)


def test_ideal_file_format():
    text = "# a comment\nring 3 32003 a b c\na^2 - b*c  # trailing\n\nb*c\n"
    parsed = parse_ideal_text(text)
    assert parsed.ring.var_names == ("a", "b", "c")
    assert [format_polynomial(g) for g in parsed.generators] == ["a^2 + 32002*b*c", "b*c"]


def test_ideal_file_errors_carry_line():
    with pytest.raises(ParseError) as exc:
        parse_ideal_text("ring 2 32003 x y\nx^2\nz\n")
    assert exc.value.line == 3
    with pytest.raises(ParseError):
        parse_ideal_text("x1^2\n")
    with pytest.raises(ParseError):
        parse_ideal_text("ring 2 10 x y\n")


def test_inhomogeneous_generators_rejected():
    with pytest.raises(NotHomogeneousError):
        Ideal.from_strings(R3, ["x1^2 + x2"])


def test_canonical_printing():
    f = parse_polynomial("x3^2 + 2*x1*x2 - x2^2", R3)
    assert format_polynomial(f) == "2*x1*x2 + 32002*x2^2 + x3^2"
    assert format_polynomial(Polynomial.zero(R3)) == "0"
    assert format_polynomial(Polynomial.constant(R3, -1)) == "32002"


def test_leading_monomial_orders():
    f = parse_polynomial("x1*x3 + x2^2", R3)
    assert f.leading_monomial(DEGREVLEX) == (0, 2, 0)
    assert f.leading_monomial(LEX) == (1, 0, 1)


def test_exact_division():
    f = parse_polynomial("x1^2 - x2^2", R3)
    assert f.exact_divide(parse_polynomial("x1 + x2", R3)) == parse_polynomial("x1 - x2", R3)
    with pytest.raises(ArithmeticError):
        f.exact_divide(parse_polynomial("x3", R3))


@given(forms(R3, max_degree=4, max_terms=6))
def test_parser_round_trip(f):
    assert parse_polynomial(format_polynomial(f), R3) == f


@given(forms(R3), forms(R3), forms(R3))
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Polynomial.zero(R3)


@given(st.integers(0, 5), forms(R3, max_degree=2))
def test_power_matches_repeated_product(k, f):
    prod = Polynomial.constant(R3, 1)
    for _ in range(k):
        prod = prod * f
    assert f ** k == prod
