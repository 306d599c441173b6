"""Textual identity DSL: tokenizer, recursive-descent parser, renderer.

Grammar (whitespace insignificant, '#' starts a comment):

    identity := expr "==" expr
    expr     := term { ("+"|"-") term }
    term     := factor { ("*"|"/") factor }
    factor   := atom [ "^" "(" rational ")" ]
    atom     := "q" "^" "(" rational ")" | rational | "sqrt2"
              | "eta" "(" rational ")"
              | "poch" "(" sign "," rational "," rational ")"
              | "f" "(" sign "q^" rational "," sign "q^" rational ")"
              | "fsum" "(" ... same as f ... ")"
              | "phi" | "psi" | "H" | "I" | "G1" | "G2" | "G3"
                  -- each "(" rational ")", the argument r meaning q -> q^r
              | "T1N" "(" int ")" | "btable" "(" int ")"
              | "lambert" "(" int "," int "," signedexps "," int
                             [ "," ( "m" | "legendre" "(" int ")" ) ] ")"
              | "psi11lhs" "(" rational "," rational "," rational ")"
              | "psi11rhs" "(" rational "," rational "," rational ")"
              | "root" "(" expr "," int ")"
              | "subst" "(" expr "," rational ")"
              | "(" expr ")"
    rational := ["-"] int [ "/" int ] ;  sign := "+" | "-"
    signedexps := sign int { sign int }

`fsum`, `btable`, `lambert`, `psi11lhs/rhs` and `subst` extend the core
grammar so that every built-in catalog entry has a textual form.
Constant subexpressions fold at parse time, so rendering and reparsing
an expression reproduces it node for node.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .blocks import PochSpec, ThetaSpec
from .expr import (
    Add,
    BTable,
    CFracH,
    CFracI,
    Const,
    Div,
    Eta,
    Gamma,
    Lambert,
    Mul,
    Node,
    Phi,
    Poch,
    Pow,
    Psi,
    Psi11Lhs,
    Psi11Rhs,
    QPow,
    Root,
    Sub,
    Subst,
    Theta,
    Theta1N,
)
from .field import SQRT2, AlgebraicNumber
from .lambert import BilateralSpec, LambertSpec

_FR = Fraction


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<comment>\#[^\n]*)
      | (?P<name>[A-Za-z][A-Za-z0-9]*)
      | (?P<int>\d+)
      | (?P<eq>==)
      | (?P<op>[-+*/^(),=])
    """,
    re.VERBOSE,
)


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def _tokenize(text: str, line_offset: int = 0) -> list[_Token]:
    tokens = []
    line = 1 + line_offset
    col = 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(_Token(kind, value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
        pos = m.end()
    tokens.append(_Token("eof", "", line, col))
    return tokens


class Parser:
    def __init__(self, text: str, line_offset: int = 0):
        self.tokens = _tokenize(text, line_offset)
        self.pos = 0

    # -- token plumbing -------------------------------------------------

    def _peek(self) -> _Token:
        return self.tokens[self.pos]

    def _next(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def _error(self, message: str, tok: _Token = None):
        tok = tok or self._peek()
        if tok.kind == "eof" and self.pos > 0:
            # anchor end-of-input errors at the last real token
            prev = self.tokens[self.pos - 1]
            raise ParseError(f"{message} (input ended)", prev.line, prev.col)
        raise ParseError(message, tok.line, tok.col)

    def _expect(self, text: str) -> _Token:
        tok = self._peek()
        if tok.text != text:
            self._error(f"expected {text!r}, found {tok.text!r}" if tok.text
                        else f"expected {text!r}")
        return self._next()

    def _at(self, text: str) -> bool:
        return self._peek().text == text

    # -- grammar --------------------------------------------------------

    def parse_identity(self) -> tuple[Node, Node]:
        lhs = self._expr()
        self._expect("==")
        rhs = self._expr()
        tok = self._peek()
        if tok.kind != "eof":
            self._error(f"unexpected trailing input {tok.text!r}")
        return lhs, rhs

    def parse_expression(self) -> Node:
        node = self._expr()
        tok = self._peek()
        if tok.kind != "eof":
            self._error(f"unexpected trailing input {tok.text!r}")
        return node

    def _expr(self) -> Node:
        node = self._term()
        while self._peek().text in ("+", "-"):
            op = self._next().text
            right = self._term()
            node = self._fold(Add if op == "+" else Sub, node, right)
        return node

    def _term(self) -> Node:
        node = self._factor()
        while self._peek().text in ("*", "/"):
            op = self._next().text
            right = self._factor()
            node = self._fold(Mul if op == "*" else Div, node, right)
        return node

    def _fold(self, cls, left: Node, right: Node) -> Node:
        if isinstance(left, Const) and isinstance(right, Const):
            a, b = left.value, right.value
            if cls is Add:
                return Const(a + b)
            if cls is Sub:
                return Const(a - b)
            if cls is Mul:
                return Const(a * b)
            if not b:
                self._error("division by zero in constant expression")
            return Const(a / b)
        return cls(left, right)

    def _factor(self) -> Node:
        node = self._atom()
        if self._at("^"):
            self._next()
            self._expect("(")
            r = self._rational()
            self._expect(")")
            if r.denominator != 1:
                node = Root(node, r.denominator)
            p = r.numerator
            if p != 1:
                if isinstance(node, Const):
                    node = Const(node.value ** p)
                else:
                    node = Pow(node, p)
        return node

    def _atom(self) -> Node:
        tok = self._peek()
        if tok.text == "(":
            self._next()
            node = self._expr()
            self._expect(")")
            return node
        if tok.text == "-" or tok.kind == "int":
            return Const(AlgebraicNumber(self._rational()))
        if tok.kind != "name":
            self._error("expected an operand")
        name = self._next().text
        handler = getattr(self, f"_atom_{name}", None)
        if name == "q":
            self._expect("^")
            self._expect("(")
            e = self._rational()
            self._expect(")")
            return QPow(e)
        if name == "sqrt2":
            return Const(SQRT2)
        if handler is None:
            self._error(f"unknown function {name!r}", tok)
        return handler(tok)

    # -- atoms ----------------------------------------------------------

    def _rational(self) -> Fraction:
        neg = False
        if self._at("-"):
            self._next()
            neg = True
        tok = self._peek()
        if tok.kind != "int":
            self._error("expected a rational number")
        num = int(self._next().text)
        den = 1
        # '/' is a fraction bar only when an integer follows; otherwise it
        # belongs to the enclosing term as a division operator
        if self._at("/") and self.tokens[self.pos + 1].kind == "int":
            self._next()
            dtok = self._next()
            den = int(dtok.text)
            if den == 0:
                self._error("malformed rational: zero denominator", dtok)
        r = _FR(num, den)
        return -r if neg else r

    def _int(self) -> int:
        tok = self._peek()
        if tok.kind != "int":
            self._error("expected an integer")
        return int(self._next().text)

    def _sign(self) -> int:
        tok = self._peek()
        if tok.text == "+":
            self._next()
            return 1
        if tok.text == "-":
            self._next()
            return -1
        self._error("expected a sign (+ or -)")

    def _substitution_arg(self) -> Fraction:
        self._expect("(")
        tok = self._peek()
        r = self._rational()
        if r <= 0:
            self._error("substitution exponent must be positive", tok)
        self._expect(")")
        return r

    def _spec_error(self, exc: ValueError, tok: _Token):
        self._error(str(exc), tok)

    def _atom_eta(self, tok):
        m = self._substitution_arg()
        return Eta(m)

    def _atom_poch(self, tok):
        self._expect("(")
        sign = self._sign()
        self._expect(",")
        offset = self._rational()
        self._expect(",")
        step = self._rational()
        self._expect(")")
        try:
            spec = PochSpec(sign, offset, step)
        except ValueError as exc:
            self._spec_error(exc, tok)
        return Poch(spec)

    def _theta_arg(self) -> tuple[int, Fraction]:
        sign = self._sign()
        tok = self._peek()
        if tok.kind != "name" or tok.text != "q":
            self._error("expected q^exponent in theta argument")
        self._next()
        self._expect("^")
        if self._at("("):
            self._next()
            e = self._rational()
            self._expect(")")
        else:
            e = self._rational()
        return sign, e

    def _theta(self, tok, use_sum: bool):
        self._expect("(")
        s1, a = self._theta_arg()
        self._expect(",")
        s2, b = self._theta_arg()
        self._expect(")")
        try:
            spec = ThetaSpec(s1, s2, a, b)
        except ValueError as exc:
            self._spec_error(exc, tok)
        return Theta(spec, use_sum=use_sum)

    def _atom_f(self, tok):
        return self._theta(tok, use_sum=False)

    def _atom_fsum(self, tok):
        return self._theta(tok, use_sum=True)

    def _atom_phi(self, tok):
        return Phi(self._substitution_arg())

    def _atom_psi(self, tok):
        return Psi(self._substitution_arg())

    def _atom_H(self, tok):
        return CFracH(self._substitution_arg())

    def _atom_I(self, tok):
        return CFracI(self._substitution_arg())

    def _atom_G1(self, tok):
        return Gamma(1, self._substitution_arg())

    def _atom_G2(self, tok):
        return Gamma(2, self._substitution_arg())

    def _atom_G3(self, tok):
        return Gamma(3, self._substitution_arg())

    def _small_index(self, tok):
        self._expect("(")
        k = self._int()
        if k not in (1, 2, 3):
            self._error("index must be 1, 2 or 3", tok)
        self._expect(")")
        return k

    def _atom_T1N(self, tok):
        return Theta1N(self._small_index(tok))

    def _atom_btable(self, tok):
        return BTable(self._small_index(tok))

    def _atom_root(self, tok):
        self._expect("(")
        base = self._expr()
        self._expect(",")
        n = self._int()
        if n < 1:
            self._error("root index must be >= 1", tok)
        self._expect(")")
        return base if n == 1 else Root(base, n)

    def _atom_subst(self, tok):
        self._expect("(")
        base = self._expr()
        self._expect(",")
        r = self._rational()
        if r <= 0:
            self._error("substitution exponent must be positive", tok)
        self._expect(")")
        return Subst(base, r)

    def _atom_lambert(self, tok):
        self._expect("(")
        modulus = self._int()
        self._expect(",")
        residue = self._int()
        self._expect(",")
        numerators = []
        while self._peek().text in ("+", "-"):
            sign = self._sign()
            numerators.append((sign, self._int()))
        if not numerators:
            self._error("expected signed exponents like +1-3", tok)
        self._expect(",")
        denom = self._int()
        weight, p = "unit", 0
        if self._at(","):
            self._next()
            wtok = self._peek()
            if wtok.kind != "name" or wtok.text not in ("m", "legendre"):
                self._error("expected weight 'm' or 'legendre(p)'")
            self._next()
            if wtok.text == "m":
                weight = "linear"
            else:
                weight = "legendre"
                self._expect("(")
                p = self._int()
                self._expect(")")
        self._expect(")")
        try:
            spec = LambertSpec(modulus, residue, tuple(numerators), denom,
                               weight, p)
        except ValueError as exc:
            self._spec_error(exc, tok)
        return Lambert(spec)

    def _psi11_spec(self, tok) -> BilateralSpec:
        self._expect("(")
        s = self._rational()
        self._expect(",")
        alpha = self._rational()
        self._expect(",")
        beta = self._rational()
        self._expect(")")
        try:
            return BilateralSpec(s, alpha, beta)
        except ValueError as exc:
            self._spec_error(exc, tok)

    def _atom_psi11lhs(self, tok):
        return Psi11Lhs(self._psi11_spec(tok))

    def _atom_psi11rhs(self, tok):
        return Psi11Rhs(self._psi11_spec(tok))


def parse_identity(text: str, line_offset: int = 0) -> tuple[Node, Node]:
    """Parse ``expr == expr`` into an (lhs, rhs) node pair."""
    return Parser(text, line_offset).parse_identity()


def parse_expression(text: str, line_offset: int = 0) -> Node:
    return Parser(text, line_offset).parse_expression()


def parse_identity_file(text: str) -> list[tuple[int, Node, Node]]:
    """One identity per non-blank, non-comment line; returns
    (line number, lhs, rhs) triples."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        lhs, rhs = parse_identity(line, line_offset=lineno - 1)
        out.append((lineno, lhs, rhs))
    return out


# -- rendering ---------------------------------------------------------------

_ADD, _MUL, _POW, _ATOM = 1, 2, 3, 4


def render(node: Node) -> str:
    """Textual form that reparses to a structurally equal tree."""
    return _render(node, _ADD)


def render_identity(lhs: Node, rhs: Node) -> str:
    return f"{render(lhs)} == {render(rhs)}"


def _render(node: Node, min_prec: int) -> str:
    text, prec = _render_node(node)
    return f"({text})" if prec < min_prec else text


def _sgn(s: int) -> str:
    return "+" if s > 0 else "-"


def _render_const(v: AlgebraicNumber) -> tuple[str, int]:
    a, b = v.rat, v.irr
    if b == 0:
        return str(a), _ATOM
    irr = "sqrt2" if abs(b) == 1 else f"{abs(b)}*sqrt2"
    prec = _ATOM if abs(b) == 1 else _MUL
    if a == 0 and b > 0:
        return irr, prec
    if a == 0:
        return f"0-{irr}", _ADD
    return f"{a}{'+' if b > 0 else '-'}{irr}", _ADD


def _render_node(node: Node) -> tuple[str, int]:
    if isinstance(node, Add):
        return f"{_render(node.left, _ADD)} + {_render(node.right, _MUL)}", _ADD
    if isinstance(node, Sub):
        return f"{_render(node.left, _ADD)} - {_render(node.right, _MUL)}", _ADD
    if isinstance(node, Mul):
        return f"{_render(node.left, _MUL)}*{_render(node.right, _POW)}", _MUL
    if isinstance(node, Div):
        return f"{_render(node.left, _MUL)}/{_render(node.right, _POW)}", _MUL
    if isinstance(node, Pow):
        base, exp = node.base, _FR(node.n)
        if isinstance(base, Root):
            exp = _FR(node.n, base.n)
            base = base.base
        return f"{_render(base, _ATOM)}^({exp})", _POW
    if isinstance(node, Root):
        return f"{_render(node.base, _ATOM)}^(1/{node.n})", _POW
    if isinstance(node, QPow):
        return f"q^({node.exponent})", _ATOM
    if isinstance(node, Const):
        return _render_const(node.value)
    if isinstance(node, Eta):
        return f"eta({node.multiplier})", _ATOM
    if isinstance(node, Poch):
        s = node.spec
        return f"poch({_sgn(s.sign)},{s.offset},{s.step})", _ATOM
    if isinstance(node, Theta):
        s = node.spec
        name = "fsum" if node.use_sum else "f"
        return (f"{name}({_sgn(s.sign1)}q^{s.a},{_sgn(s.sign2)}q^{s.b})", _ATOM)
    if isinstance(node, Phi):
        return f"phi({node.r})", _ATOM
    if isinstance(node, Psi):
        return f"psi({node.r})", _ATOM
    if isinstance(node, CFracH):
        return f"H({node.r})", _ATOM
    if isinstance(node, CFracI):
        return f"I({node.r})", _ATOM
    if isinstance(node, Gamma):
        return f"G{node.k}({node.r})", _ATOM
    if isinstance(node, Theta1N):
        return f"T1N({node.k})", _ATOM
    if isinstance(node, BTable):
        return f"btable({node.i})", _ATOM
    if isinstance(node, Lambert):
        s = node.spec
        exps = "".join(f"{_sgn(c)}{a}" for c, a in s.numerators)
        tail = ""
        if s.weight == "linear":
            tail = ",m"
        elif s.weight == "legendre":
            tail = f",legendre({s.legendre_p})"
        return (f"lambert({s.modulus},{s.residue},{exps},"
                f"{s.denom_exponent}{tail})", _ATOM)
    if isinstance(node, Psi11Lhs):
        s = node.spec
        return f"psi11lhs({s.base},{s.x_exp},{s.z_exp})", _ATOM
    if isinstance(node, Psi11Rhs):
        s = node.spec
        return f"psi11rhs({s.base},{s.x_exp},{s.z_exp})", _ATOM
    if isinstance(node, Subst):
        return f"subst({render(node.base)},{node.r})", _ATOM
    raise TypeError(f"cannot render {type(node).__name__}")
