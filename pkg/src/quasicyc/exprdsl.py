"""Tiny integer polynomial DSL over the coordinates of 2 or 3 group arguments.

Grammar (whitespace insignificant, single-token lookahead):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := integer | var | '-' factor | '(' expr ')'
    var    := ('i' | 'j' | 'k') digits

'i'/'j'/'k' name the first/second/third group argument; the digits are a
1-based coordinate index.  Evaluation substitutes torsion coordinates as
canonical residues and free coordinates as integers, and returns a raw
integer; any modular reduction of the result belongs to the caller.
"""

from __future__ import annotations

from dataclasses import dataclass


class ExprSyntaxError(ValueError):
    def __init__(self, position: int, expected: set[str], found: str):
        self.position = position
        self.expected = set(expected)
        self.found = found
        super().__init__(
            f"at offset {position}: expected {' or '.join(sorted(expected))}, found {found}"
        )


class ArityError(ValueError):
    """Variable refers to an argument beyond the expression's arity."""


class CoordOutOfRange(ValueError):
    """Variable coordinate index exceeds the group's coordinate count."""


_ARG_NAMES = ("i", "j", "k")


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Var:
    arg: int    # 0-based argument index
    coord: int  # 1-based coordinate index


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Paren:
    inner: object


# -- parser -------------------------------------------------------------------

class _Tokens:
    def __init__(self, src: str):
        self.toks: list[tuple[str, object, int]] = []  # (kind, value, position)
        pos = 0
        while pos < len(src):
            ch = src[pos]
            if ch.isspace():
                pos += 1
                continue
            if ch in "+-*()":
                self.toks.append((ch, ch, pos))
                pos += 1
                continue
            if ch.isdigit():
                start = pos
                while pos < len(src) and src[pos].isdigit():
                    pos += 1
                self.toks.append(("int", int(src[start:pos]), start))
                continue
            if ch in _ARG_NAMES:
                start = pos
                pos += 1
                dstart = pos
                while pos < len(src) and src[pos].isdigit():
                    pos += 1
                if pos == dstart:
                    raise ExprSyntaxError(dstart, {"digit"}, _describe(src, dstart))
                self.toks.append(
                    ("var", (_ARG_NAMES.index(ch), int(src[dstart:pos])), start)
                )
                continue
            raise ExprSyntaxError(pos, {"integer", "variable", "(", "-"}, repr(ch))
        self.toks.append(("end", None, len(src)))
        self.idx = 0

    def peek(self):
        return self.toks[self.idx]

    def next(self):
        t = self.toks[self.idx]
        self.idx += 1
        return t


def _describe(src: str, pos: int) -> str:
    return repr(src[pos]) if pos < len(src) else "end of input"


def parse_expr(src: str, arity: int, coords: int):
    """Parse src; validate variables against arity and coordinate count."""
    if arity not in (2, 3):
        raise ArityError(f"arity must be 2 or 3, got {arity}")
    toks = _Tokens(src)
    ast = _parse_expr(toks)
    kind, _, pos = toks.peek()
    if kind != "end":
        raise ExprSyntaxError(pos, {"+", "-", "*", "end of input"}, kind)
    _validate(ast, arity, coords)
    return ast


def _parse_expr(toks):
    node = _parse_term(toks)
    while toks.peek()[0] in ("+", "-"):
        op, _, _ = toks.next()
        rhs = _parse_term(toks)
        node = Add(node, rhs) if op == "+" else Sub(node, rhs)
    return node


def _parse_term(toks):
    node = _parse_factor(toks)
    while toks.peek()[0] == "*":
        toks.next()
        node = Mul(node, _parse_factor(toks))
    return node


def _parse_factor(toks):
    kind, value, pos = toks.peek()
    if kind == "int":
        toks.next()
        return Lit(value)
    if kind == "var":
        toks.next()
        return Var(*value)
    if kind == "-":
        toks.next()
        return Neg(_parse_factor(toks))
    if kind == "(":
        toks.next()
        inner = _parse_expr(toks)
        k2, _, p2 = toks.peek()
        if k2 != ")":
            raise ExprSyntaxError(p2, {")"}, k2)
        toks.next()
        return Paren(inner)
    raise ExprSyntaxError(pos, {"integer", "variable", "(", "-"}, kind)


def _validate(node, arity: int, coords: int):
    if isinstance(node, Var):
        if node.arg >= arity:
            raise ArityError(
                f"variable {_ARG_NAMES[node.arg]}{node.coord} needs arity {node.arg + 1}"
            )
        if not 1 <= node.coord <= coords:
            raise CoordOutOfRange(
                f"coordinate {node.coord} out of range 1..{coords}"
            )
    elif isinstance(node, (Add, Sub, Mul)):
        _validate(node.left, arity, coords)
        _validate(node.right, arity, coords)
    elif isinstance(node, Neg):
        _validate(node.operand, arity, coords)
    elif isinstance(node, Paren):
        _validate(node.inner, arity, coords)


# -- evaluation -----------------------------------------------------------------

def eval_expr(ast, args) -> int:
    """Evaluate at a tuple of group-element coordinate tuples."""
    if isinstance(ast, Lit):
        return ast.value
    if isinstance(ast, Var):
        if ast.arg >= len(args):
            raise ArityError(f"expression needs {ast.arg + 1} arguments, got {len(args)}")
        return args[ast.arg][ast.coord - 1]
    if isinstance(ast, Add):
        return eval_expr(ast.left, args) + eval_expr(ast.right, args)
    if isinstance(ast, Sub):
        return eval_expr(ast.left, args) - eval_expr(ast.right, args)
    if isinstance(ast, Mul):
        return eval_expr(ast.left, args) * eval_expr(ast.right, args)
    if isinstance(ast, Neg):
        return -eval_expr(ast.operand, args)
    if isinstance(ast, Paren):
        return eval_expr(ast.inner, args)
    raise TypeError(f"not an AST node: {ast!r}")


# -- rendering --------------------------------------------------------------------

def render_expr(ast) -> str:
    if isinstance(ast, Lit):
        return str(ast.value)
    if isinstance(ast, Var):
        return f"{_ARG_NAMES[ast.arg]}{ast.coord}"
    if isinstance(ast, Add):
        return f"{render_expr(ast.left)} + {render_expr(ast.right)}"
    if isinstance(ast, Sub):
        return f"{render_expr(ast.left)} - {render_expr(ast.right)}"
    if isinstance(ast, Mul):
        return f"{render_expr(ast.left)}*{render_expr(ast.right)}"
    if isinstance(ast, Neg):
        return f"-{render_expr(ast.operand)}"
    if isinstance(ast, Paren):
        return f"({render_expr(ast.inner)})"
    raise TypeError(f"not an AST node: {ast!r}")
