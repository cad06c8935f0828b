import pytest
from hypothesis import given, strategies as st

from fixity import families as fam
from fixity.cyclo import CycloMatrix, CyclotomicNumber, zeta
from fixity.words import (
    Commutator,
    Conjugate,
    Gen,
    MalformedWord,
    One,
    Power,
    Product,
    evaluate,
    failed_relations,
    parse_relations,
    parse_word,
    verify_presentation,
)


def gens3():
    x = fam.shift(3, 1, 3)
    y = CycloMatrix.diagonal([zeta(3, i) for i in range(3)])
    return {"x": x, "y": y}


def test_parse_shapes():
    assert parse_word("x") == Gen("x")
    assert parse_word("1") == One()
    assert parse_word("x y") == Product((Gen("x"), Gen("y")))
    assert parse_word("x*y") == Product((Gen("x"), Gen("y")))
    assert parse_word("x^-2") == Power(Gen("x"), -2)
    assert parse_word("x^y") == Conjugate(Gen("x"), Gen("y"))
    assert parse_word("[x,y,x]") == Commutator((Gen("x"), Gen("y"), Gen("x")))
    assert parse_word("(x y)^3") == Power(Product((Gen("x"), Gen("y"))), 3)


def test_relation_chain_splits_into_consecutive_equalities():
    rels = parse_relations("a = b = c")
    assert [(r.lhs, r.rhs) for r in rels] == [(Gen("a"), Gen("b")), (Gen("b"), Gen("c"))]
    (bare,) = parse_relations("x^3")
    assert bare.rhs == One()


@pytest.mark.parametrize("bad", ["", "x^", "[x]", "(x", "x = ", "2", "x ^ ^ y", "x)"])
def test_malformed(bad):
    with pytest.raises(MalformedWord):
        parse_relations(bad)


def test_unknown_generator():
    with pytest.raises(MalformedWord):
        evaluate(parse_word("z"), gens3())


def test_commutator_conventions():
    g = gens3()
    x, y = g["x"], g["y"]
    xi, yi = x.inverse(), y.inverse()
    assert evaluate(parse_word("[x,y]"), g) == xi @ yi @ x @ y
    assert evaluate(parse_word("[x,y]"), g, "right") == x @ y @ xi @ yi
    assert evaluate(parse_word("x^y"), g) == yi @ x @ y
    with pytest.raises(ValueError):
        evaluate(parse_word("[x,y]"), g, "sideways")


def test_left_normed_commutator():
    g = gens3()
    inner = evaluate(parse_word("[x,y]"), g)
    outer = evaluate(parse_word("[[x,y],x]"), g)
    assert evaluate(parse_word("[x,y,x]"), g) == outer
    assert outer == inner.inverse() @ g["x"].inverse() @ inner @ g["x"]


def test_presentation_checks():
    g = gens3()
    assert verify_presentation(g, ["x^3 = y^3 = [x,y]^3 = 1", "[x,y,x] = [x,y,y] = 1"])
    assert failed_relations(g, ["x^2 = 1", "x y = y x"]) == ["x^2 = 1", "x y = y x"]


@given(st.integers(-7, 7), st.integers(-7, 7))
def test_powers_add(a, b):
    g = gens3()
    word_a = f"x^{a}" if a >= 0 else f"x^-{-a}"
    word_b = f"x^{b}" if b >= 0 else f"x^-{-b}"
    lhs = evaluate(parse_word(f"{word_a} {word_b}"), g)
    total = a + b
    word_t = f"x^{total}" if total >= 0 else f"x^-{-total}"
    assert lhs == evaluate(parse_word(word_t), g)


def test_one_is_identity():
    g = {"a": CycloMatrix.diagonal([CyclotomicNumber.rational(-1)])}
    assert verify_presentation(g, ["a^2 = 1 = a a"])
