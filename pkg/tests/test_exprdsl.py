"""Expression DSL: grammar, errors, evaluation, round-trip."""

import random

import pytest

from quasicyc.exprdsl import (
    Add,
    ArityError,
    CoordOutOfRange,
    ExprSyntaxError,
    Lit,
    Mul,
    Neg,
    Paren,
    Sub,
    Var,
    eval_expr,
    parse_expr,
    render_expr,
)

OCTONION_EXPR = "i1*(j1+j2+j3)+i2*(j2+j3)+i3*j3+j1*i2*i3+i1*j2*i3+i1*i2*j3"


def test_parse_basic_shapes():
    assert parse_expr("i2*j1", 2, 2) == Mul(Var(0, 2), Var(1, 1))
    assert parse_expr("1+2-3", 2, 1) == Sub(Add(Lit(1), Lit(2)), Lit(3))
    assert parse_expr("-i1", 2, 1) == Neg(Var(0, 1))
    assert parse_expr("(i1+j1)*k1", 3, 1) == Mul(Paren(Add(Var(0, 1), Var(1, 1))), Var(2, 1))
    assert parse_expr("  i1 * j1  ", 2, 1) == Mul(Var(0, 1), Var(1, 1))


def test_parse_full_octonion_exponent():
    ast = parse_expr(OCTONION_EXPR, 2, 3)
    assert eval_expr(ast, ((1, 0, 0), (1, 0, 0))) == 1


def test_syntax_error_position():
    with pytest.raises(ExprSyntaxError) as e:
        parse_expr("i1+", 2, 1)
    assert e.value.position == 3
    with pytest.raises(ExprSyntaxError) as e:
        parse_expr("i1 j1", 2, 1)
    assert e.value.position == 3
    with pytest.raises(ExprSyntaxError):
        parse_expr("(i1", 2, 1)
    with pytest.raises(ExprSyntaxError):
        parse_expr("i", 2, 1)
    with pytest.raises(ExprSyntaxError):
        parse_expr("x1", 2, 1)


def test_arity_and_coord_errors():
    with pytest.raises(ArityError):
        parse_expr("k1", 2, 3)
    with pytest.raises(CoordOutOfRange):
        parse_expr("i4", 2, 3)
    with pytest.raises(CoordOutOfRange):
        parse_expr("j0", 2, 3)
    with pytest.raises(ArityError):
        parse_expr("i1", 4, 3)


def test_eval_examples():
    ast = parse_expr("i2*j1", 2, 2)
    assert eval_expr(ast, ((0, 1), (1, 0))) == 1
    assert eval_expr(ast, ((0, 0), (0, 0))) == 0
    oct_ast = parse_expr(OCTONION_EXPR, 2, 3)
    assert eval_expr(oct_ast, ((0, 0, 0), (0, 0, 0))) == 0
    torus = parse_expr("i2*j1", 2, 2)
    assert eval_expr(torus, ((-1, -1), (1, 0))) == -1


def _gen_factor(rng, depth):
    roll = rng.random()
    if depth <= 0 or roll < 0.4:
        return Lit(rng.randint(0, 9)) if rng.random() < 0.5 else Var(
            rng.randint(0, 1), rng.randint(1, 3)
        )
    if roll < 0.6:
        return Neg(_gen_factor(rng, depth - 1))
    return Paren(_gen_expr(rng, depth - 1))


def _gen_term(rng, depth):
    node = _gen_factor(rng, depth)
    for _ in range(rng.randint(0, 2)):
        node = Mul(node, _gen_factor(rng, depth))
    return node


def _gen_expr(rng, depth):
    node = _gen_term(rng, depth)
    for _ in range(rng.randint(0, 2)):
        nxt = _gen_term(rng, depth)
        node = Add(node, nxt) if rng.random() < 0.5 else Sub(node, nxt)
    return node


def test_parse_render_round_trip_200():
    rng = random.Random(7)
    for _ in range(200):
        ast = _gen_expr(rng, 3)
        assert parse_expr(render_expr(ast), 2, 3) == ast


def test_eval_additive_in_subtrees():
    rng = random.Random(11)
    args = ((2, -1, 3), (0, 4, -2))
    for _ in range(100):
        a, b = _gen_expr(rng, 2), _gen_expr(rng, 2)
        assert eval_expr(Add(a, b), args) == eval_expr(a, args) + eval_expr(b, args)
        assert eval_expr(Sub(a, b), args) == eval_expr(a, args) - eval_expr(b, args)
