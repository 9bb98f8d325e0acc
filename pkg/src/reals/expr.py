"""Expression language for the ``reals`` command line.

Grammar::

    expr    := 'let' IDENT '=' expr 'in' expr | sum
    sum     := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | primary
    primary := RATIONAL | DECIMAL | IDENT | IDENT '(' args ')' | '(' expr ')'

``3/4`` written without spaces is a single rational literal. A minus sign
directly in front of a literal is part of the literal; anywhere else it is
the nines complement, and ``x - y`` means ``x + psi(y)``. Division by ``/``
needs a nonzero literal divisor so that the positivity witness can be read
off it; other divisions go through ``div(x, y, m)`` or ``recip(x; m)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .arithmetic import ResolutionBudget, add, divide, mul, reciprocal
from .errors import RealsError
from .limits import inf_finite, sup_finite
from .rational import Truncation, is_finite_decimal
from .stream import (
    Comparison,
    DecimalStream,
    IntervalEnclosure,
    RationalStream,
    abs_,
    compare_upto,
    from_rational,
    psi,
    resolve,
    sign,
    sqrt_stream,
)


class ParseError(RealsError):
    """Syntax error or statically rejected expression."""

    def __init__(self, message: str, position: int | None = None) -> None:
        self.message = message
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


# ---- syntax tree -------------------------------------------------------------


@dataclass(frozen=True)
class Rat:
    num: int
    den: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


@dataclass(frozen=True)
class Int:
    n: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.n)

    def __str__(self) -> str:
        return str(self.n)


@dataclass(frozen=True)
class Dec:
    """``[-]whole.frac(rep)``, kept as written."""

    negative: bool
    whole: str
    frac: str
    rep: str = ""

    @property
    def value(self) -> Fraction:
        head = int(self.whole + self.frac)
        v = Fraction(head, 10 ** len(self.frac))
        if self.rep:
            s = len(self.rep)
            v += Fraction(int(self.rep), 10 ** len(self.frac) * (10**s - 1))
        return -v if self.negative else v

    @property
    def nines(self) -> bool:
        return bool(self.rep) and set(self.rep) == {"9"}

    def __str__(self) -> str:
        rep = f"({self.rep})" if self.rep else ""
        return f"{'-' if self.negative else ''}{self.whole}.{self.frac}{rep}"


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Neg:
    operand: Expr

    def __str__(self) -> str:
        return f"-({self.operand})"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Expr
    right: Expr
    witness: int | None = None

    def __str__(self) -> str:
        return f"({self.left} {self.op} {self.right})"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple[Expr, ...]
    witness: int | None = None

    def __str__(self) -> str:
        inner = ", ".join(map(str, self.args))
        if self.witness is not None:
            inner += f"; {self.witness}"
        return f"{self.name}({inner})"


@dataclass(frozen=True)
class Let:
    name: str
    bound: Expr
    body: Expr

    def __str__(self) -> str:
        return f"(let {self.name} = {self.bound} in {self.body})"


Expr = Union[Rat, Int, Dec, Var, Neg, BinOp, Call, Let]
Literal = (Rat, Int, Dec)

FUNCTIONS = {
    "psi": (1, 1),
    "abs": (1, 1),
    "sign": (1, 1),
    "recip": (1, 2),
    "div": (2, 3),
    "sup": (1, None),
    "inf": (1, None),
    "sqrt": (1, 1),
    "cmp": (2, 2),
}
KEYWORDS = {"let", "in"}


# ---- tokenizer -----------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<rat>\d+/\d+(?![\d.(]))
  | (?P<dec>\d+\.(?:\d+(?:\(\d+\))?|\(\d+\)))
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_]\w*)
  | (?P<op>[-+*/(),;=])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> Iterator[Token]:
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            yield Token(m.lastgroup, m.group(), pos)
        pos = m.end()
    yield Token("end", "", pos)


# ---- parser ----------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = list(tokenize(text))
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text:
            found = self.tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", self.tok.pos)
        return self.take()

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return e

    def expr(self) -> Expr:
        if self.tok.text == "let":
            self.take()
            name = self.take()
            if name.kind != "ident" or name.text in KEYWORDS or name.text in FUNCTIONS:
                raise ParseError(f"cannot bind {name.text!r}", name.pos)
            self.expect("=")
            bound = self.expr()
            self.expect("in")
            return Let(name.text, bound, self.expr())
        return self.sum()

    def sum(self) -> Expr:
        left = self.term()
        while self.tok.text in ("+", "-"):
            op = self.take().text
            left = BinOp(op, left, self.term())
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self.tok.text in ("*", "/"):
            t = self.take()
            right = self.unary()
            if t.text == "/":
                left = BinOp("/", left, right, _literal_witness(right, t.pos))
            else:
                left = BinOp("*", left, right)
        return left

    def unary(self) -> Expr:
        if self.tok.text == "-":
            self.take()
            if self.tok.kind in ("rat", "dec", "int"):
                return self.literal(negative=True)
            return Neg(self.unary())
        return self.primary()

    def literal(self, negative: bool = False) -> Expr:
        t = self.take()
        sgn = -1 if negative else 1
        if t.kind == "int":
            return Int(sgn * int(t.text))
        if t.kind == "rat":
            p, q = t.text.split("/")
            if int(q) == 0:
                raise ParseError("zero denominator", t.pos)
            return Rat(sgn * int(p), int(q))
        whole, rest = t.text.split(".")
        frac, _, rep = rest.partition("(")
        return Dec(negative, whole, frac, rep.rstrip(")"))

    def primary(self) -> Expr:
        t = self.tok
        if t.kind in ("rat", "dec", "int"):
            return self.literal()
        if t.text == "(":
            self.take()
            e = self.expr()
            self.expect(")")
            return e
        if t.kind == "ident" and t.text not in KEYWORDS:
            self.take()
            if t.text in FUNCTIONS:
                return self.call(t)
            return Var(t.text)
        found = t.text or "end of input"
        raise ParseError(f"unexpected {found!r}", t.pos)

    def call(self, name: Token) -> Expr:
        self.expect("(")
        args = [self.expr()]
        witness = None
        while self.tok.text in (",", ";"):
            sep = self.take().text
            if sep == ";":
                witness = self.witness()
                break
            args.append(self.expr())
        self.expect(")")
        lo, hi = FUNCTIONS[name.text]
        if name.text in ("recip", "div"):
            if witness is None and len(args) == hi:
                w = args.pop()
                if not isinstance(w, Int) or w.n < 0:
                    raise ParseError(f"{name.text} witness must be a non-negative integer", name.pos)
                witness = w.n
            if witness is None:
                raise ParseError(f"{name.text} needs a positivity witness, e.g. recip(x; 3)", name.pos)
            hi -= 1
        elif witness is not None:
            raise ParseError(f"{name.text} takes no witness", name.pos)
        if len(args) < lo or (hi is not None and len(args) > hi):
            raise ParseError(f"wrong number of arguments to {name.text}", name.pos)
        if name.text == "sqrt" and not (isinstance(args[0], Int) and args[0].n > 0):
            raise ParseError("sqrt takes a positive integer literal", name.pos)
        return Call(name.text, tuple(args), witness)

    def witness(self) -> int:
        t = self.take()
        if t.kind != "int":
            raise ParseError("witness must be a non-negative integer", t.pos)
        return int(t.text)


def _literal_witness(divisor: Expr, pos: int) -> int:
    """Smallest m with ``[|v|]_m >= 1`` for a literal divisor v."""
    if not isinstance(divisor, Literal):
        raise ParseError("'/' needs a literal divisor; use div(x, y, m) with a positivity witness m", pos)
    v = abs(divisor.value)
    if v == 0:
        raise ParseError("division by zero", pos)
    m = 0
    while v * 10**m < 1:
        m += 1
    return m


def parse(text: str) -> Expr:
    e = _Parser(text).parse()
    _check_scope(e, frozenset(), top=True)
    return e


def _check_scope(e: Expr, bound: frozenset[str], top: bool = False) -> None:
    if isinstance(e, Var):
        if e.name not in bound:
            raise ParseError(f"unbound name {e.name!r}")
    elif isinstance(e, Neg):
        _check_scope(e.operand, bound)
    elif isinstance(e, BinOp):
        _check_scope(e.left, bound)
        _check_scope(e.right, bound)
    elif isinstance(e, Call):
        if e.name == "cmp" and not top:
            raise ParseError("cmp(x, y) is only allowed as the whole expression")
        for a in e.args:
            _check_scope(a, bound)
    elif isinstance(e, Let):
        _check_scope(e.bound, bound)
        _check_scope(e.body, bound | {e.name}, top=top)


# ---- evaluation ------------------------------------------------------------------


def literal_stream(e: Rat | Int | Dec) -> DecimalStream:
    if isinstance(e, Dec) and e.nines:
        # 0.(9) is the expansion approaching its value from below
        s = RationalStream(abs(e.value), nines_tail=True, provenance=("literal", str(e)))
        return psi(s) if e.negative else s
    return RationalStream(e.value, provenance=("literal", str(e)))


def evaluate(e: Expr, budget: ResolutionBudget, env: dict[str, DecimalStream] | None = None) -> DecimalStream:
    env = env or {}
    if isinstance(e, Literal):
        return literal_stream(e)
    if isinstance(e, Var):
        return env[e.name]
    if isinstance(e, Let):
        return evaluate(e.body, budget, {**env, e.name: evaluate(e.bound, budget, env)})
    if isinstance(e, Neg):
        return psi(evaluate(e.operand, budget, env))
    if isinstance(e, BinOp):
        x, y = evaluate(e.left, budget, env), evaluate(e.right, budget, env)
        if e.op == "+":
            return add(x, y, budget)
        if e.op == "-":
            return add(x, psi(y), budget)
        if e.op == "*":
            return mul(x, y, budget)
        return divide(x, y, e.witness, budget)
    if isinstance(e, Call):
        if e.name == "sqrt":
            return sqrt_stream(e.args[0].n)
        args = [evaluate(a, budget, env) for a in e.args]
        if e.name == "psi":
            return psi(args[0])
        if e.name == "abs":
            return abs_(args[0])
        if e.name == "sign":
            return from_rational(sign(args[0]))
        if e.name == "recip":
            return reciprocal(args[0], e.witness, budget)
        if e.name == "div":
            return divide(args[0], args[1], e.witness, budget)
        if e.name == "sup":
            return sup_finite(args)
        if e.name == "inf":
            return inf_finite(args)
        raise ParseError("cmp(x, y) is only allowed as the whole expression")
    raise TypeError(f"not an expression: {e!r}")


# ---- rendering -------------------------------------------------------------------


@dataclass(frozen=True)
class RenderConfig:
    digits: int = 20
    format: str = "sign"

    def __post_init__(self) -> None:
        if self.digits < 0:
            raise ValueError("digits must be non-negative")
        if self.format not in ("sign", "floor"):
            raise ValueError(f"unknown format {self.format!r}")


def render_truncation(t: Truncation, config: RenderConfig) -> str:
    return t.floor_digits() if config.format == "floor" else t.sign_magnitude()


def canonical_text(v: Fraction, config: RenderConfig) -> str:
    """Shortest finite decimal spelling of a terminating rational."""
    k = 0
    while (v * 10**k).denominator != 1:
        k += 1
    return render_truncation(Truncation(k, int(v * 10**k)), config)


def _render_enclosure(enc: IntervalEnclosure, digits: int) -> str:
    return f"[{_approx(enc.lo, digits)}, {_approx(enc.hi, digits)}]"


def _approx(q: Fraction, digits: int) -> str:
    if is_finite_decimal(q) and len(str(q.denominator)) <= digits + 2:
        return canonical_text(q, RenderConfig(digits))
    return str(q)


def render(x: DecimalStream, config: RenderConfig, budget: ResolutionBudget) -> str:
    """Digits of x at the configured precision.

    A nines-tail stream whose value is known gets its class representative
    appended, as in ``0.999999... = 1``. Under the interval policy an
    unresolved digit renders as ``unresolved`` plus the enclosure.
    """
    got = resolve(x, config.digits, budget.policy)
    if isinstance(got, IntervalEnclosure):
        return f"unresolved at digit {config.digits}: value in {_render_enclosure(got, config.digits)}"
    text = render_truncation(got, config)
    if x.value is not None and x.nines_tail:
        return f"{text}... = {canonical_text(x.value, config)}"
    return text


def run(text: str, config: RenderConfig, budget: ResolutionBudget) -> str:
    """Parse, evaluate and render one expression."""
    e = parse(text)
    body, env = e, {}
    while isinstance(body, Let):
        env[body.name] = evaluate(body.bound, budget, env)
        body = body.body
    if isinstance(body, Call) and body.name == "cmp":
        x, y = (evaluate(a, budget, env) for a in body.args)
        c: Comparison = compare_upto(x, y, config.digits)
        return str(c)
    return render(evaluate(body, budget, env), config, budget)


__all__ = [
    "BinOp",
    "Call",
    "Dec",
    "Int",
    "Let",
    "Neg",
    "ParseError",
    "Rat",
    "RenderConfig",
    "Var",
    "evaluate",
    "parse",
    "render",
    "run",
    "tokenize",
]
