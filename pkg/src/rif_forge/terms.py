"""Term mini-language for composing inclusion functions.

Grammar, whitespace-insensitive:

    term     := NAME | "top"
              | "otimes" "(" term "," term ")"
              | "oplus"  "(" rational "," term "," term ")"
              | "sharp"  "(" term ")"
              | "flat"   "(" term ")"
              | "sigma"  "(" term ")"
              | "pow"    "(" term "," integer ")"
              | "kst"    "(" term "," rational "," rational ")"
    rational := INT | INT "/" INT

The constructor words are reserved and cannot name base functions.  Parse
errors carry the offending position and the token set expected there.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Union

from . import algebra
from .errors import InputError, ParameterError, ResolutionError, TermParseError
from .inclusion import InclusionFunction, k0, k1, k2, kst
from .space import GranularSpace

RESERVED = ("top", "otimes", "oplus", "sharp", "flat", "sigma", "pow", "kst")


@dataclass(frozen=True)
class BaseTerm:
    label: str


@dataclass(frozen=True)
class TopTerm:
    pass


@dataclass(frozen=True)
class ProductTerm:
    left: "AlgebraTerm"
    right: "AlgebraTerm"


@dataclass(frozen=True)
class AlphaSumTerm:
    alpha: Fraction
    left: "AlgebraTerm"
    right: "AlgebraTerm"

    def __post_init__(self):
        if not (0 <= self.alpha <= 1):
            raise ParameterError(f"weight must lie in [0,1], got {self.alpha}")


@dataclass(frozen=True)
class SharpTerm:
    inner: "AlgebraTerm"


@dataclass(frozen=True)
class FlatTerm:
    inner: "AlgebraTerm"


@dataclass(frozen=True)
class SigmaTerm:
    inner: "AlgebraTerm"


@dataclass(frozen=True)
class PowerTerm:
    inner: "AlgebraTerm"
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"exponent must be a positive integer, got {self.n}")


@dataclass(frozen=True)
class KstTerm:
    inner: "AlgebraTerm"
    low: Fraction
    high: Fraction

    def __post_init__(self):
        if not (0 <= self.low < self.high <= 1):
            raise ParameterError(
                f"thresholds must satisfy 0 <= s < t <= 1, got s={self.low}, t={self.high}"
            )


AlgebraTerm = Union[
    BaseTerm, TopTerm, ProductTerm, AlphaSumTerm, SharpTerm, FlatTerm, SigmaTerm, PowerTerm, KstTerm
]


# -- lexing -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<num>\d+)|(?P<sym>[(),/]))")


@dataclass(frozen=True)
class _Token:
    kind: str  # name, num, sym, end
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise TermParseError(
                f"unexpected character {stripped[0]!r}", at, ("name", "number", "'('")
            )
        for kind in ("name", "num", "sym"):
            if m.group(kind) is not None:
                tokens.append(_Token(kind, m.group(kind), m.start(kind)))
                break
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


# -- parsing ------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def fail(self, expected: tuple[str, ...]):
        tok = self.peek()
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise TermParseError(f"unexpected {what}", tok.position, expected)

    def expect_symbol(self, symbol: str) -> None:
        tok = self.peek()
        if tok.kind != "sym" or tok.text != symbol:
            self.fail((f"'{symbol}'",))
        self.advance()

    def parse(self) -> AlgebraTerm:
        term = self.term()
        if self.peek().kind != "end":
            self.fail(("end of input",))
        return term

    def term(self) -> AlgebraTerm:
        tok = self.peek()
        if tok.kind != "name":
            self.fail(("name",) + RESERVED[1:] + ("'top'",))
        self.advance()
        word = tok.text
        if word == "top":
            return TopTerm()
        if word == "otimes":
            self.expect_symbol("(")
            left = self.term()
            self.expect_symbol(",")
            right = self.term()
            self.expect_symbol(")")
            return ProductTerm(left, right)
        if word == "oplus":
            self.expect_symbol("(")
            alpha = self.rational()
            self.expect_symbol(",")
            left = self.term()
            self.expect_symbol(",")
            right = self.term()
            self.expect_symbol(")")
            return AlphaSumTerm(alpha, left, right)
        if word == "sharp":
            return SharpTerm(self.unary())
        if word == "flat":
            return FlatTerm(self.unary())
        if word == "sigma":
            return SigmaTerm(self.unary())
        if word == "pow":
            self.expect_symbol("(")
            inner = self.term()
            self.expect_symbol(",")
            n = self.integer()
            self.expect_symbol(")")
            return PowerTerm(inner, n)
        if word == "kst":
            self.expect_symbol("(")
            inner = self.term()
            self.expect_symbol(",")
            low = self.rational()
            self.expect_symbol(",")
            high = self.rational()
            self.expect_symbol(")")
            return KstTerm(inner, low, high)
        return BaseTerm(word)

    def unary(self) -> AlgebraTerm:
        self.expect_symbol("(")
        inner = self.term()
        self.expect_symbol(")")
        return inner

    def integer(self) -> int:
        tok = self.peek()
        if tok.kind != "num":
            self.fail(("integer",))
        self.advance()
        return int(tok.text)

    def rational(self) -> Fraction:
        tok = self.peek()
        if tok.kind != "num":
            self.fail(("rational",))
        self.advance()
        numerator = int(tok.text)
        nxt = self.peek()
        if nxt.kind == "sym" and nxt.text == "/":
            self.advance()
            den_tok = self.peek()
            if den_tok.kind != "num":
                self.fail(("integer denominator",))
            self.advance()
            if int(den_tok.text) == 0:
                raise TermParseError("zero denominator", den_tok.position, ("nonzero integer",))
            return Fraction(numerator, int(den_tok.text))
        return Fraction(numerator)


def parse_term(text: str) -> AlgebraTerm:
    return _Parser(text).parse()


# -- evaluation ---------------------------------------------------------------


def default_env(s: GranularSpace) -> dict[str, InclusionFunction]:
    """The built-in named functions available to terms on a set-extensional
    space."""
    return {"k0": k0(s), "k1": k1(s), "k2": k2(s)}


def eval_term(
    term: AlgebraTerm,
    env: Mapping[str, InclusionFunction],
    s: GranularSpace,
) -> InclusionFunction:
    if isinstance(term, BaseTerm):
        try:
            f = env[term.label]
        except KeyError:
            bound = ", ".join(sorted(env)) or "nothing"
            raise ResolutionError(f"name {term.label!r} is not bound (have: {bound})") from None
        if f.space != s:
            raise InputError(f"function {term.label!r} is bound over a different space")
        return f
    if isinstance(term, TopTerm):
        return algebra.top_function(s)
    if isinstance(term, ProductTerm):
        return algebra.otimes(eval_term(term.left, env, s), eval_term(term.right, env, s))
    if isinstance(term, AlphaSumTerm):
        return algebra.oplus(
            term.alpha, eval_term(term.left, env, s), eval_term(term.right, env, s)
        )
    if isinstance(term, SharpTerm):
        return algebra.sharp(eval_term(term.inner, env, s))
    if isinstance(term, FlatTerm):
        return algebra.flat(eval_term(term.inner, env, s))
    if isinstance(term, SigmaTerm):
        return algebra.sigma(eval_term(term.inner, env, s))
    if isinstance(term, PowerTerm):
        return algebra.power(eval_term(term.inner, env, s), term.n)
    if isinstance(term, KstTerm):
        return kst(eval_term(term.inner, env, s), term.low, term.high)
    raise InputError(f"unknown term node {term!r}")


def evaluate(text: str, s: GranularSpace, env: Optional[Mapping[str, InclusionFunction]] = None) -> InclusionFunction:
    """Parse and evaluate text against the default environment (plus env)."""
    bindings = default_env(s) if s.is_set_extensional else {}
    if env:
        bindings.update(env)
    return eval_term(parse_term(text), bindings, s)
