"""Recursive-descent parser and evaluator for rational q-expressions.

Grammar (whitespace-insensitive)::

    expr    := term (('+'|'-') term)*
    term    := factor (('*'|'/') factor)*
    factor  := base ('^' uint)?
    base    := '(' expr ')' | 'q' | uint | builtin
    builtin := '#' identifier

`^` binds tighter than `*`/`/`, which bind tighter than `+`/`-`.  A divisor
factor must be, syntactically, a product of terms of the form (1 - q^a)^e
with a, e >= 1; anything else is rejected at parse time with the position of
the offending factor.  Builtin names refer to registered series (for example
#e2p4, #binaryprod, #b12) and are resolved at evaluation time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Union

from .errors import ParseError
from .series import TruncatedSeries


@dataclass(frozen=True)
class Lit:
    value: int
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Var:
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class SeriesRef:
    name: str
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Div:
    numerator: "Node"
    factors: tuple[tuple[int, int], ...]  # ((a, e), ...) meaning (1 - q^a)^e
    pos: int = field(default=-1, compare=False)


Node = Union[Lit, Var, SeriesRef, Add, Sub, Mul, Pow, Div]

_T_INT = "int"
_T_NAME = "builtin"
_T_Q = "q"
_T_END = "end"


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    toks: list[tuple[str, object, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*/^()":
            toks.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            toks.append((_T_INT, int(text[start:i]), start))
            continue
        if ch == "q" and (i + 1 == n or not (text[i + 1].isalnum() or text[i + 1] == "_")):
            toks.append((_T_Q, "q", i))
            i += 1
            continue
        if ch == "#":
            start = i
            i += 1
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            if j == i:
                raise ParseError("'#' must be followed by a series name", start)
            toks.append((_T_NAME, text[i:j], start))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    toks.append((_T_END, None, n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, object, int]:
        return self.toks[self.i]

    def advance(self) -> tuple[str, object, int]:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str) -> tuple[str, object, int]:
        t = self.peek()
        if t[0] != kind:
            raise ParseError(f"got {t[0]!r}", t[2], expected=(kind,))
        return self.advance()

    def parse(self) -> Node:
        node = self.expr()
        t = self.peek()
        if t[0] != _T_END:
            raise ParseError(f"trailing input {t[0]!r}", t[2], expected=("end of input",))
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[0] in "+-":
            op = self.advance()[0]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek()[0] in "*/":
            op, _, pos = self.advance()
            rhs_pos = self.peek()[2]
            rhs = self.factor()
            if op == "*":
                node = Mul(node, rhs)
            else:
                node = Div(node, _denominator_factors(rhs, rhs_pos), rhs_pos)
        return node

    def factor(self) -> Node:
        node = self.base()
        if self.peek()[0] == "^":
            self.advance()
            t = self.expect(_T_INT)
            node = Pow(node, t[1])
        return node

    def base(self) -> Node:
        kind, value, pos = self.peek()
        if kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if kind == _T_Q:
            self.advance()
            return Var(pos)
        if kind == _T_INT:
            self.advance()
            return Lit(value, pos)
        if kind == _T_NAME:
            self.advance()
            return SeriesRef(value, pos)
        raise ParseError(f"got {kind!r}", pos, expected=("(", "q", "integer", "#name"))


def _denominator_factors(node: Node, pos: int) -> tuple[tuple[int, int], ...]:
    """Validate a divisor factor as a product of (1 - q^a)^e and flatten it."""
    if isinstance(node, Pow):
        if node.exponent < 1:
            raise ParseError("denominator exponent must be >= 1", pos)
        inner = _denominator_factors(node.base, pos)
        return tuple((a, e * node.exponent) for a, e in inner)
    if isinstance(node, Mul):
        return _denominator_factors(node.left, pos) + _denominator_factors(node.right, pos)
    if isinstance(node, Sub) and isinstance(node.left, Lit) and node.left.value == 1:
        rhs = node.right
        if isinstance(rhs, Var):
            return ((1, 1),)
        if isinstance(rhs, Pow) and isinstance(rhs.base, Var) and rhs.exponent >= 1:
            return ((rhs.exponent, 1),)
    raise ParseError("denominator must be a product of (1 - q^a)^e factors", pos)


def parse_expr(text: str) -> Node:
    """Parse expression text to an AST; raises ParseError with a position."""
    return _Parser(text).parse()


BuiltinMap = Mapping[str, Callable[[int, int | None], TruncatedSeries]]


def eval_expr(
    expr: Node,
    order: int,
    modulus: int | None = None,
    builtins: BuiltinMap | None = None,
) -> TruncatedSeries:
    """Expand the expression to a truncated series over the requested ring."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if builtins is None:
        from .registry import SERIES_BUILTINS

        builtins = SERIES_BUILTINS

    def ev(node: Node) -> TruncatedSeries:
        if isinstance(node, Lit):
            return TruncatedSeries.constant(node.value, order, modulus)
        if isinstance(node, Var):
            return TruncatedSeries.monomial(1, order, modulus)
        if isinstance(node, SeriesRef):
            fn = builtins.get(node.name)
            if fn is None:
                raise ParseError(f"unknown series name '#{node.name}'", node.pos)
            s = fn(order, modulus)
            if s.modulus != modulus or s.order < order:
                raise ValueError(f"builtin '#{node.name}' returned an incompatible series")
            return s.truncate(order) if s.order > order else s
        if isinstance(node, Add):
            return ev(node.left) + ev(node.right)
        if isinstance(node, Sub):
            return ev(node.left) - ev(node.right)
        if isinstance(node, Mul):
            return ev(node.left) * ev(node.right)
        if isinstance(node, Pow):
            return ev(node.base) ** node.exponent
        if isinstance(node, Div):
            s = ev(node.numerator)
            for a, e in node.factors:
                s = s.divide_one_minus(a, e)
            return s
        raise TypeError(f"unknown node {node!r}")

    return ev(expr)


_PREC_ADD, _PREC_MUL, _PREC_POW, _PREC_ATOM = 0, 1, 2, 3


def _fmt(node: Node, ctx: int) -> str:
    if isinstance(node, Lit):
        return str(node.value)
    if isinstance(node, Var):
        return "q"
    if isinstance(node, SeriesRef):
        return "#" + node.name
    if isinstance(node, Add):
        s = f"{_fmt(node.left, _PREC_ADD)}+{_fmt(node.right, _PREC_MUL)}"
        return f"({s})" if ctx > _PREC_ADD else s
    if isinstance(node, Sub):
        s = f"{_fmt(node.left, _PREC_ADD)}-{_fmt(node.right, _PREC_MUL)}"
        return f"({s})" if ctx > _PREC_ADD else s
    if isinstance(node, Mul):
        s = f"{_fmt(node.left, _PREC_MUL)}*{_fmt(node.right, _PREC_POW)}"
        return f"({s})" if ctx > _PREC_MUL else s
    if isinstance(node, Pow):
        return f"{_fmt(node.base, _PREC_ATOM)}^{node.exponent}"
    if isinstance(node, Div):
        den = "*".join(f"(1-q^{a})" + (f"^{e}" if e > 1 else "") for a, e in node.factors)
        if len(node.factors) > 1:
            den = f"({den})"
        s = f"{_fmt(node.numerator, _PREC_MUL)}/{den}"
        return f"({s})" if ctx > _PREC_MUL else s
    raise TypeError(f"unknown node {node!r}")


def format_expr(node: Node) -> str:
    """Render an AST back to grammar-conformant text; parse(format(x)) == x."""
    return _fmt(node, _PREC_ADD)
