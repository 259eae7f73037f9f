import pytest
from hypothesis import given, strategies as st

from formata.errors import CycleParseError, DomainError
from formata.perms import Perm, format_group_text, parse_cycles, parse_group_text


perms8 = st.permutations(range(8)).map(lambda xs: Perm(tuple(xs)))


def test_identity_and_call():
    e = Perm.identity(5)
    assert e.is_identity()
    assert [e(i) for i in range(5)] == [0, 1, 2, 3, 4]


def test_product_convention_left_to_right():
    p = parse_cycles("(0 1)", 3)
    q = parse_cycles("(1 2)", 3)
    # (p * q)(0) = q(p(0)) = q(1) = 2
    assert (p * q)(0) == 2
    assert (q * p)(0) == 1


def test_validation():
    with pytest.raises(DomainError):
        Perm((0, 0, 1))
    with pytest.raises(DomainError):
        Perm((1, 2))


@given(perms8, perms8, perms8)
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms8)
def test_inverse(p):
    assert (p * p.inverse()).is_identity()
    assert (p.inverse() * p).is_identity()


@given(perms8, perms8)
def test_conjugation_matches_definition(p, g):
    assert p.conj(g) == g.inverse() * p * g


@given(perms8)
def test_order_is_exponent(p):
    n = p.order()
    q = Perm.identity(8)
    for _ in range(n):
        q = q * p
    assert q.is_identity()
    assert n >= 1


def test_cycle_parsing_basics():
    p = parse_cycles("(0 1)(2 3)", 4)
    assert p.images == (1, 0, 3, 2)
    assert parse_cycles("()", 4).is_identity()
    assert parse_cycles("(0 1 2)", 5).images == (1, 2, 0, 3, 4)


def test_cycle_parsing_errors():
    with pytest.raises(CycleParseError):
        parse_cycles("(0 9)", 4)
    with pytest.raises(CycleParseError):
        parse_cycles("(0 0)", 4)
    with pytest.raises(CycleParseError):
        parse_cycles("(0 x)", 4)
    with pytest.raises(CycleParseError):
        parse_cycles("junk (0 1)", 4)
    with pytest.raises(CycleParseError):
        parse_cycles("", 4)


@given(perms8)
def test_cycle_string_round_trip(p):
    assert parse_cycles(p.cycle_string(), 8) == p


def test_group_file_round_trip():
    text = "degree 4\n(0 1)\n(0 1 2 3)\n"
    degree, gens = parse_group_text(text)
    assert degree == 4
    assert format_group_text(degree, gens) == text


def test_group_file_comments_and_errors():
    degree, gens = parse_group_text("# a comment\ndegree 3\n\n(0 1)\n# more\n(0 1 2)\n")
    assert degree == 3 and len(gens) == 2
    with pytest.raises(CycleParseError):
        parse_group_text("(0 1)\n")
    with pytest.raises(CycleParseError):
        parse_group_text("degree 0\n")
