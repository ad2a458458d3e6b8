"""Text form of quadratic polynomials: parsing and canonical formatting.

Grammar (whitespace insignificant, offsets are character positions):

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' nat)?
    base   := variable | literal | '(' expr ')'

Variables are x1..xd, with x, y, z, w accepted as aliases for x1..x4.
Literals follow the domain: decimal integers everywhere, `i`/`3i` for
Gaussian integers, polynomials in `t` for F_p[t].  The expression is
expanded and collected first and the total-degree <= 2 bound is enforced
on the result, so inputs like "(x+y)^2 - x^2" are fine.  The leading
optional minus is there so that formatted output such as "-x1^2" reads
back in.

Every diagnostic carries the character offset it points at; for a
degree violation that is the position where the offending monomial was
first created.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .domains import (
    Domain,
    DomainElement,
    GaussianIntegers,
    PrimeFieldPolynomials,
)
from .errors import (
    FormCoefficientError,
    FormDegreeError,
    FormError,
    FormSyntaxError,
    FormVariableError,
)
from .quadratic import QuadraticPolynomial

_MAX_EXPONENT = 64
_MAX_MONOMIALS = 20000

_ALIASES = {"x": 1, "y": 2, "z": 3, "w": 4}


# -- lexer ------------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # NUM, IMAG, NAME, OP, END
    text: str
    pos: int


def _lex(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "i" and (j + 1 >= n or not text[j + 1].isalnum()):
                tokens.append(_Token("IMAG", text[i : j + 1], i))
                i = j + 1
            else:
                tokens.append(_Token("NUM", text[i:j], i))
                i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            tokens.append(_Token("NAME", text[i:j], i))
            i = j
            continue
        if ch in "+-*^()":
            tokens.append(_Token("OP", ch, i))
            i += 1
            continue
        raise FormSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("END", "", n))
    return tokens


# -- syntax tree --------------------------------------------------------------


@dataclass(frozen=True)
class Sum:
    parts: Tuple[object, ...]
    offset: int


@dataclass(frozen=True)
class Negation:
    inner: object
    offset: int


@dataclass(frozen=True)
class Product:
    factors: Tuple[object, ...]
    offset: int


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int
    offset: int


@dataclass(frozen=True)
class Variable:
    index: int  # 1-based
    offset: int


@dataclass(frozen=True)
class Coefficient:
    raw: object  # raw carrier value of the domain
    offset: int


class _Parser:
    """Recursive-descent parser producing the node types above.

    Variable and literal resolution happen during parsing because both
    depend on the domain and the dimension.
    """

    def __init__(self, text: str, domain: Domain, d: Optional[int]):
        self.text = text
        self.domain = domain
        self.d = d
        self.max_index = 0
        self.tokens = _lex(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def eat(self, kind, text=None) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text if text is not None else kind
            raise FormSyntaxError(f"expected {want}, found {tok.text or 'end of input'!r}", tok.pos)
        self.pos += 1
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok.kind != "END":
            raise FormSyntaxError(f"unexpected {tok.text!r}", tok.pos)
        return node

    def expr(self):
        parts = []
        tok = self.peek()
        start = tok.pos
        if tok.kind == "OP" and tok.text == "-":
            self.eat("OP", "-")
            first = self.term()
            parts.append(Negation(first, start))
        else:
            parts.append(self.term())
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text in "+-":
                self.eat("OP", tok.text)
                nxt = self.term()
                if tok.text == "-":
                    nxt = Negation(nxt, tok.pos)
                parts.append(nxt)
            else:
                break
        if len(parts) == 1:
            return parts[0]
        return Sum(tuple(parts), start)

    def term(self):
        factors = [self.factor()]
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text == "*":
                self.eat("OP", "*")
                factors.append(self.factor())
            else:
                break
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors), factors[0].offset)

    def factor(self):
        base = self.base()
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "^":
            self.eat("OP", "^")
            num = self.eat("NUM")
            exp = int(num.text)
            if exp > _MAX_EXPONENT:
                raise FormDegreeError(f"exponent {exp} is too large", num.pos)
            return Power(base, exp, base.offset)
        return base

    def base(self):
        tok = self.peek()
        if tok.kind == "NUM":
            self.eat("NUM")
            return Coefficient(self.domain.coerce_raw(int(tok.text)), tok.pos)
        if tok.kind == "IMAG":
            self.eat("IMAG")
            if not isinstance(self.domain, GaussianIntegers):
                raise FormCoefficientError(
                    f"imaginary literal {tok.text!r} is not an element of {self.domain.name}",
                    tok.pos,
                )
            return Coefficient((0, int(tok.text[:-1])), tok.pos)
        if tok.kind == "NAME":
            self.eat("NAME")
            return self.resolve_name(tok)
        if tok.kind == "OP" and tok.text == "(":
            self.eat("OP", "(")
            inner = self.expr()
            self.eat("OP", ")")
            return inner
        raise FormSyntaxError(
            f"expected a variable, literal, or '(', found {tok.text or 'end of input'!r}",
            tok.pos,
        )

    def resolve_name(self, tok: _Token):
        name = tok.text
        if name == "i":
            if isinstance(self.domain, GaussianIntegers):
                return Coefficient((0, 1), tok.pos)
            raise FormCoefficientError(
                f"'i' is not an element of {self.domain.name}", tok.pos
            )
        if name == "t":
            if isinstance(self.domain, PrimeFieldPolynomials):
                return Coefficient((0, 1), tok.pos)
            raise FormCoefficientError(
                f"'t' is not an element of {self.domain.name}", tok.pos
            )
        index = None
        if name in _ALIASES:
            index = _ALIASES[name]
        elif name.startswith("x") and name[1:].isdigit():
            index = int(name[1:])
            if index < 1:
                raise FormVariableError(f"variable indices start at 1: {name!r}", tok.pos)
        if index is None:
            raise FormVariableError(f"unknown variable {name!r}", tok.pos)
        if self.d is not None and index > self.d:
            raise FormVariableError(
                f"variable {name!r} exceeds dimension {self.d}", tok.pos
            )
        self.max_index = max(self.max_index, index)
        return Variable(index, tok.pos)


# -- expansion ----------------------------------------------------------------

# A polynomial under expansion: monomial key -> raw coefficient, where the
# key is the sorted tuple of 1-based variable indices with multiplicity.
# Offsets remember where each monomial was first created, for diagnostics.


def _poly_add(dom, p1, o1, p2, o2):
    out = dict(p1)
    offs = dict(o1)
    for key, c in p2.items():
        if key in out:
            out[key] = dom._add(out[key], c)
        else:
            out[key] = c
            offs[key] = o2[key]
    return out, offs


def _poly_neg(dom, p, o):
    return {k: dom._neg(c) for k, c in p.items()}, dict(o)


def _poly_mul(dom, p1, o1, p2, o2, at):
    out = {}
    offs = {}
    for k1, c1 in p1.items():
        for k2, c2 in p2.items():
            key = tuple(sorted(k1 + k2))
            c = dom._mul(c1, c2)
            if key in out:
                out[key] = dom._add(out[key], c)
            else:
                out[key] = c
                offs[key] = at
            if len(out) > _MAX_MONOMIALS:
                raise FormError("expansion exceeds the monomial budget", at)
    return out, offs


def _expand(dom, node):
    if isinstance(node, Coefficient):
        return {(): node.raw}, {(): node.offset}
    if isinstance(node, Variable):
        return {(node.index,): dom.coerce_raw(1)}, {(node.index,): node.offset}
    if isinstance(node, Negation):
        p, o = _expand(dom, node.inner)
        return _poly_neg(dom, p, o)
    if isinstance(node, Sum):
        p, o = _expand(dom, node.parts[0])
        for part in node.parts[1:]:
            q, qo = _expand(dom, part)
            p, o = _poly_add(dom, p, o, q, qo)
        return p, o
    if isinstance(node, Product):
        p, o = _expand(dom, node.factors[0])
        for factor in node.factors[1:]:
            q, qo = _expand(dom, factor)
            p, o = _poly_mul(dom, p, o, q, qo, node.offset)
        return p, o
    if isinstance(node, Power):
        base, baseo = _expand(dom, node.base)
        p, o = {(): dom.coerce_raw(1)}, {(): node.offset}
        for _ in range(node.exponent):
            p, o = _poly_mul(dom, p, o, base, baseo, node.offset)
        return p, o
    raise TypeError(f"unknown node {node!r}")


def parse_form(text: str, domain: Domain, d: Optional[int] = None) -> QuadraticPolynomial:
    """Parse text into a QuadraticPolynomial over the domain.

    With d given, variables beyond x_d are rejected; with d omitted the
    dimension is inferred as the largest variable index used (at least 1).
    Raises a FormError subclass with a character offset on any problem.
    """
    parser = _Parser(text, domain, d)
    tree = parser.parse()
    poly, offsets = _expand(domain, tree)
    poly = {k: c for k, c in poly.items() if not domain._is_zero(c)}
    over = [k for k in poly if len(k) > 2]
    if over:
        key = min(over, key=lambda k: offsets[k])
        raise FormDegreeError(
            f"monomial of degree {len(key)} exceeds degree 2", offsets[key]
        )
    dim = d if d is not None else max(1, parser.max_index)
    quad = {}
    lin = [0] * dim
    const = domain.coerce_raw(0)
    for key, c in poly.items():
        if len(key) == 0:
            const = c
        elif len(key) == 1:
            lin[key[0] - 1] = c
        else:
            quad[(key[0] - 1, key[1] - 1)] = c
    return QuadraticPolynomial(domain, dim, quad, lin, const)


def parse_element(text: str, domain: Domain) -> DomainElement:
    """Parse a single ring element (no variables allowed)."""
    parser = _Parser(text, domain, 0)
    tree = parser.parse()
    poly, _ = _expand(domain, tree)
    acc = domain.coerce_raw(0)
    for key, c in poly.items():
        # d = 0 rejects every variable during parsing, so only () remains
        acc = domain._add(acc, c)
    return DomainElement(domain, acc)


# -- formatting ----------------------------------------------------------------


def _coefficient_text(domain: Domain, raw) -> Tuple[str, str]:
    """Render a coefficient as (sign, magnitude text).

    The sign is lifted out only when the element is the negative of
    something whose text has no interior sign (negative integers, negative
    real or pure-imaginary Gaussian integers); everything else renders with
    sign '+' and gets parenthesized by the caller if it contains + or -.
    """
    if isinstance(domain, GaussianIntegers):
        re, im = raw
        if im == 0 and re < 0:
            return "-", domain._format((-re, 0))
        if re == 0 and im < 0:
            return "-", domain._format((0, -im))
        return "+", domain._format(raw)
    if isinstance(domain, PrimeFieldPolynomials):
        return "+", domain._format(raw)
    return ("-", str(-raw)) if raw < 0 else ("+", str(raw))


def _monomial_piece(dom, c, mono) -> Tuple[str, str]:
    one = dom.coerce_raw(1)
    sign, mag = _coefficient_text(dom, c)
    if c == one:
        return (sign, mono)
    if sign == "-" and dom._is_zero(dom._add(c, one)):
        # coefficient -1 with the sign lifted into the joiner
        return ("-", mono)
    return (sign, f"{_wrap(mag)}*{mono}")


def format_form(f: QuadraticPolynomial) -> str:
    """Canonical text for f: graded-lex monomial order, variables x1..xd.

    parse_form(format_form(f), f.domain, f.d) reproduces f exactly.
    """
    dom = f.domain
    pieces = []  # (sign, text)
    for (i, j), c in f.quad.items():
        mono = f"x{i + 1}^2" if i == j else f"x{i + 1}*x{j + 1}"
        pieces.append(_monomial_piece(dom, c, mono))
    for i, c in enumerate(f.lin):
        if not dom._is_zero(c):
            pieces.append(_monomial_piece(dom, c, f"x{i + 1}"))
    if not dom._is_zero(f.const):
        sign, mag = _coefficient_text(dom, f.const)
        pieces.append((sign, _wrap(mag)))
    if not pieces:
        return "0"
    out = []
    for k, (sign, text) in enumerate(pieces):
        if k == 0:
            out.append(text if sign == "+" else f"-{text}")
        else:
            out.append(f"{sign}{text}")
    return "".join(out)


def _wrap(text: str) -> str:
    """Parenthesize coefficient text whose interior contains a sign."""
    if "+" in text or "-" in text:
        return f"({text})"
    return text
