"""Parser for identities such as ``tan(3pi/11) + 4 sin(2pi/11) = sqrt(11)``.

Grammar::

    equation := expr ['=' expr]
    expr     := term (('+' | '-') term)*
    term     := factor (['*'] factor | '/' factor)*
    factor   := number | 'pi' | func '(' expr ')' | '(' expr ')' | '-' factor
    func     := 'sin' | 'cos' | 'tan' | 'sqrt'

A factor directly following another factor is an implicit product, so
``4 sin(x)`` and ``3pi/11`` both work.
"""

from __future__ import annotations

import math
import operator
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .gauss import SurdTarget, squarefree_decompose
from .trig import Kind, TrigTerm
from .verify import Identity

__all__ = [
    "ParseError",
    "UnsupportedExpression",
    "Num",
    "Pi",
    "Func",
    "BinOp",
    "Neg",
    "Equation",
    "LinearForm",
    "parse",
    "lower",
    "parse_identity",
    "evaluate",
    "render_identity",
    "render_terms",
]


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class UnsupportedExpression(ValueError):
    pass


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Pi:
    pass


@dataclass(frozen=True)
class Func:
    name: str
    arg: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Equation:
    left: "Node"
    right: "Node"


Node = Union[Num, Pi, Func, BinOp, Neg]

FUNCTIONS = ("sin", "cos", "tan", "sqrt")

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?|\.\d+)|(?P<name>[A-Za-z]+|π)|(?P<op>[-+*/()=]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text[pos:]) - len(text[pos:].lstrip()) + pos
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, text, pos = self.peek()
        if text != value or kind == "end":
            where = "end of input" if kind == "end" else repr(text)
            raise ParseError(f"expected {value!r}, found {where}", pos)
        self.take()

    def equation(self):
        left = self.expr()
        kind, text, pos = self.peek()
        if text == "=" and kind == "op":
            self.take()
            right = self.expr()
            node = Equation(left, right)
        else:
            node = left
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", pos)
        return node

    def expr(self):
        node = self.term()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.take()
                node = BinOp(text, node, self.term())
            else:
                return node

    def _starts_factor(self) -> bool:
        kind, text, _ = self.peek()
        return kind in ("num", "name") or (kind == "op" and text == "(")

    def term(self):
        node = self.factor()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "*/":
                self.take()
                node = BinOp(text, node, self.factor())
            elif self._starts_factor():
                node = BinOp("*", node, self.factor())
            else:
                return node

    def factor(self):
        kind, text, pos = self.take()
        if kind == "num":
            return Num(Fraction(text))
        if kind == "name":
            name = text.lower()
            if name in ("pi", "π"):
                return Pi()
            if name in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Func(name, arg)
            raise ParseError(f"unknown name {text!r}", pos)
        if kind == "op" and text == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "op" and text == "-":
            return Neg(self.factor())
        where = "end of input" if kind == "end" else repr(text)
        raise ParseError(f"unexpected {where}", pos)


def parse(text: str):
    """Parse an expression or an equation ``lhs = rhs`` into an AST."""
    return _Parser(text).equation()


# evaluation


_ARITH = {"+": operator.add, "-": operator.sub, "*": operator.mul, "/": operator.truediv}


def evaluate(node) -> float:
    """Double-precision value of an expression AST (not a proof of anything)."""
    if isinstance(node, Num):
        return float(node.value)
    if isinstance(node, Pi):
        return math.pi
    if isinstance(node, Neg):
        return -evaluate(node.operand)
    if isinstance(node, BinOp):
        a, b = evaluate(node.left), evaluate(node.right)
        return _ARITH[node.op](a, b)
    if isinstance(node, Func):
        return getattr(math, node.name)(evaluate(node.arg))
    if isinstance(node, Equation):
        raise TypeError("cannot evaluate an equation; evaluate each side")
    raise TypeError(f"not an expression node: {node!r}")


# lowering to linear combinations


@dataclass
class _Lin:
    """Sum of rational*pi, rational*trig and rational*sqrt(m) parts; the
    rational constant is stored as surds[1]."""

    pi: Fraction = Fraction(0)
    trig: dict = field(default_factory=dict)
    surds: dict = field(default_factory=dict)

    def is_scalar(self) -> bool:
        return not self.pi and not self.trig

    def rational(self) -> Fraction | None:
        if self.is_scalar() and set(self.surds) <= {1}:
            return self.surds.get(1, Fraction(0))
        return None

    def scaled(self, c: Fraction) -> "_Lin":
        return _Lin(
            self.pi * c,
            _drop_zero({k: v * c for k, v in self.trig.items()}),
            _drop_zero({k: v * c for k, v in self.surds.items()}),
        )


def _drop_zero(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _merge(a: dict, b: dict, sign: int) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + sign * v
    return _drop_zero(out)


def _surd_product(a: dict, b: dict) -> dict:
    out: dict = {}
    for m1, q1 in a.items():
        for m2, q2 in b.items():
            s, m = squarefree_decompose(m1 * m2)
            out[m] = out.get(m, Fraction(0)) + q1 * q2 * s
    return _drop_zero(out)


def _describe(node) -> str:
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Pi):
        return "pi"
    if isinstance(node, Neg):
        return f"-{_describe(node.operand)}"
    if isinstance(node, Func):
        return f"{node.name}({_describe(node.arg)})"
    if isinstance(node, BinOp):
        return f"({_describe(node.left)} {node.op} {_describe(node.right)})"
    return repr(node)


def _lin(node) -> _Lin:
    if isinstance(node, Num):
        return _Lin(surds=_drop_zero({1: node.value}))
    if isinstance(node, Pi):
        return _Lin(pi=Fraction(1))
    if isinstance(node, Neg):
        return _lin(node.operand).scaled(Fraction(-1))
    if isinstance(node, BinOp):
        a, b = _lin(node.left), _lin(node.right)
        if node.op in "+-":
            sign = 1 if node.op == "+" else -1
            return _Lin(a.pi + sign * b.pi, _merge(a.trig, b.trig, sign), _merge(a.surds, b.surds, sign))
        if node.op == "*":
            ra, rb = a.rational(), b.rational()
            if ra is not None:
                return b.scaled(ra)
            if rb is not None:
                return a.scaled(rb)
            if a.is_scalar() and b.is_scalar():
                return _Lin(surds=_surd_product(a.surds, b.surds))
            raise UnsupportedExpression(f"unsupported expression: nonlinear product {_describe(node)}")
        # division: only by a single rational or surd monomial
        if b.is_scalar() and len(b.surds) == 1:
            (m, q), = b.surds.items()
            if m == 1:
                return a.scaled(1 / q)
            if not a.is_scalar():
                raise UnsupportedExpression(f"unsupported expression: trig term divided by a surd in {_describe(node)}")
            # 1/(q sqrt m) = sqrt(m)/(q m)
            return _Lin(surds=_surd_product(a.surds, {m: 1 / (q * m)}))
        if b.is_scalar() and not b.surds:
            raise UnsupportedExpression(f"division by zero in {_describe(node)}")
        raise UnsupportedExpression(f"unsupported expression: division by {_describe(node.right)}")
    if isinstance(node, Func):
        arg = _lin(node.arg)
        if node.name == "sqrt":
            r = arg.rational()
            if r is None:
                raise UnsupportedExpression(f"unsupported expression: sqrt of non-rational {_describe(node.arg)}")
            if r < 0:
                raise UnsupportedExpression(f"unsupported expression: sqrt of negative number {r}")
            t = SurdTarget.sqrt_of(r)
            return _Lin(surds=_drop_zero({t.m: t.q}))
        if arg.trig or arg.surds:
            raise UnsupportedExpression(
                f"angle {_describe(node.arg)} is not a rational multiple of pi"
            )
        r = arg.pi
        return _Lin(trig={(Kind(node.name), r.numerator, r.denominator): Fraction(1)})
    raise TypeError(f"not an expression node: {node!r}")


@dataclass(frozen=True)
class LinearForm:
    """A lowered expression: ``sum(terms) + surd``."""

    terms: tuple[TrigTerm, ...]
    surd: SurdTarget

    def value(self) -> float:
        return math.fsum(t.value() for t in self.terms) + self.surd.value()


def _trig_terms(lin: _Lin) -> list[TrigTerm]:
    return [TrigTerm(c, kind, a, n) for (kind, a, n), c in lin.trig.items()]


def _constant_term(c: Fraction) -> list[TrigTerm]:
    # a rational constant c is carried as c*cos(0)
    return [TrigTerm(c, Kind.COS, 0, 1)] if c else []


def _single_surd(surds: dict, node) -> SurdTarget:
    irrational = {m: q for m, q in surds.items() if m != 1}
    if len(irrational) > 1:
        raise UnsupportedExpression(
            f"unsupported expression: several distinct surds in {_describe(node)}"
        )
    if irrational:
        (m, q), = irrational.items()
        return SurdTarget(q, m)
    return SurdTarget(surds.get(1, Fraction(0)), 1)


def lower(ast) -> Identity | SurdTarget | LinearForm:
    """Flatten an AST.

    An equation becomes an :class:`Identity` with every trig term and the
    rational constant on the left and the surd on the right.  A bare
    expression becomes a :class:`SurdTarget` when it has no trig part,
    otherwise a :class:`LinearForm`.
    """
    if isinstance(ast, Equation):
        left, right = _lin(ast.left), _lin(ast.right)
        if left.pi or right.pi:
            raise UnsupportedExpression("unsupported expression: bare multiple of pi outside a function")
        surds = _merge(right.surds, left.surds, -1)
        irrational = {m: q for m, q in surds.items() if m != 1}
        if irrational:
            rhs = _single_surd(irrational, ast)
            const = -surds.get(1, Fraction(0))
        else:
            rhs = SurdTarget(surds.get(1, Fraction(0)), 1)
            const = Fraction(0)
        terms = _trig_terms(left) + [t.scaled(-1) for t in _trig_terms(right)] + _constant_term(const)
        return Identity(tuple(terms), rhs)
    lin = _lin(ast)
    if lin.pi:
        raise UnsupportedExpression("unsupported expression: bare multiple of pi outside a function")
    if not lin.trig and len(lin.surds) <= 1:
        return _single_surd(lin.surds, ast)
    irrational = {m: q for m, q in lin.surds.items() if m != 1}
    surd = _single_surd(irrational, ast)
    terms = _trig_terms(lin) + _constant_term(lin.surds.get(1, Fraction(0)))
    return LinearForm(tuple(terms), surd)


def parse_identity(text: str) -> Identity:
    ast = parse(text)
    if not isinstance(ast, Equation):
        raise ParseError("expected an equation 'lhs = rhs'", len(text))
    return lower(ast)


# rendering


def _angle(a: int, n: int) -> str:
    if a == 0:
        return "0"
    num = "pi" if a == 1 else ("-pi" if a == -1 else f"{a}pi")
    return num if n == 1 else f"{num}/{n}"


def _scaled_text(c: Fraction, body: str) -> str:
    # body is '' for a bare number
    if not body:
        return str(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c} {body}"


def render_terms(terms) -> str:
    parts = []
    for t in terms:
        if t.kind is Kind.COS and t.a == 0:
            text = _scaled_text(t.coeff, "")
        else:
            text = _scaled_text(t.coeff, f"{t.kind.value}({_angle(t.a, t.n)})")
        parts.append(text)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def render_surd(s: SurdTarget) -> str:
    if s.m == 1:
        return str(s.q)
    return _scaled_text(s.q, f"sqrt({s.m})")


def render_identity(ident: Identity) -> str:
    return f"{render_terms(ident.lhs)} = {render_surd(ident.rhs)}"
