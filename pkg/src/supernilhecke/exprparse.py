"""
Parser for algebra expressions: generators x<i>, w<i>, w<i>^<a>, T<i>,
integer literals, +, -, *, parentheses, and ^ for x-powers and w-labels.

parse() produces a small AST; evaluate_algebra / evaluate_ring elaborate it
against the ring parameters, checking index ranges.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement
from .superring import SuperPolynomial, labeled_omega


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Token:
    kind: str   # 'int', 'gen', 'op'
    text: str
    offset: int
    gen: tuple[str, int] | None = None
    value: int | None = None


def _lex(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "+-*^()":
            tokens.append(Token("op", c, i))
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], i, value=int(text[i:j])))
            i = j
            continue
        if c in "xwT":
            j = i + 1
            if j >= len(text) or not text[j].isdigit():
                raise ParseError(f"generator '{c}' needs an index", i)
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("gen", text[i:j], i, gen=(c, int(text[i + 1:j]))))
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(Token("op", "", len(text)))  # end marker
    return tokens


# AST nodes: ('int', v) | ('gen', kind, index, exponent-or-label-or-None)
#            ('neg', node) | ('add', l, r) | ('sub', l, r) | ('mul', l, r)

class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, text: str):
        tok = self.next()
        if tok.kind != "op" or tok.text != text:
            raise ParseError(f"expected {text!r}", tok.offset)

    def parse_expr(self):
        node = self.parse_term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in ("+", "-"):
                self.next()
                rhs = self.parse_term()
                node = ("add" if tok.text == "+" else "sub", node, rhs)
            else:
                return node

    def parse_term(self):
        node = self.parse_factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.next()
                node = ("mul", node, self.parse_factor())
            else:
                return node

    def parse_factor(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.next()
            return ("neg", self.parse_factor())
        return self.parse_atom()

    def parse_atom(self):
        tok = self.next()
        if tok.kind == "int":
            return ("int", tok.value)
        if tok.kind == "op" and tok.text == "(":
            node = self.parse_expr()
            self.expect_op(")")
            return node
        if tok.kind == "gen":
            kind, index = tok.gen
            exp = None
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "^":
                if kind == "T":
                    raise ParseError("'^' applies to x-generators and w-labels only",
                                     nxt.offset)
                self.next()
                sign = 1
                etok = self.next()
                if etok.kind == "op" and etok.text == "-":
                    sign = -1
                    etok = self.next()
                if etok.kind != "int":
                    raise ParseError("expected an integer after '^'", etok.offset)
                exp = sign * etok.value
                if kind == "x" and exp < 0:
                    raise ParseError("negative x-powers are not in the ring",
                                     etok.offset)
            return ("gen", kind, index, exp)
        raise ParseError("expected a value", tok.offset)


def parse(text: str):
    parser = _Parser(_lex(text))
    node = parser.parse_expr()
    end = parser.next()
    if end.text != "":
        raise ParseError("trailing input", end.offset)
    return node


def evaluate_algebra(node, n: int, m: int) -> AlgebraElement:
    E = AlgebraElement
    kind = node[0]
    if kind == "int":
        return E.const(n, m, node[1])
    if kind == "neg":
        return -evaluate_algebra(node[1], n, m)
    if kind in ("add", "sub", "mul"):
        lhs = evaluate_algebra(node[1], n, m)
        rhs = evaluate_algebra(node[2], n, m)
        return {"add": lhs.__add__, "sub": lhs.__sub__, "mul": lhs.__mul__}[kind](rhs)
    gen, index, exp = node[1], node[2], node[3]
    if gen == "x":
        if not 1 <= index <= n:
            raise ParseError(f"x{index} out of range for n={n}", 0)
        return E.x(n, m, index, 1 if exp is None else exp)
    if gen == "w":
        if not 1 <= index <= n:
            raise ParseError(f"w{index} out of range for n={n}", 0)
        if exp is None:
            return E.w(n, m, index)
        if exp < m + 1:
            raise ParseError(f"label {exp} below the minimal label {m + 1}", 0)
        return E.w_labeled(n, m, index, exp)
    if gen == "T":
        if not 1 <= index <= n - 1:
            raise ParseError(f"T{index} out of range for n={n}", 0)
        return E.T(n, m, index)
    raise ParseError(f"unknown generator {gen!r}", 0)


def evaluate_ring(node, n: int, m: int) -> SuperPolynomial:
    kind = node[0]
    if kind == "int":
        return SuperPolynomial.const(n, m, node[1])
    if kind == "neg":
        return -evaluate_ring(node[1], n, m)
    if kind in ("add", "sub", "mul"):
        lhs = evaluate_ring(node[1], n, m)
        rhs = evaluate_ring(node[2], n, m)
        return {"add": lhs.__add__, "sub": lhs.__sub__, "mul": lhs.__mul__}[kind](rhs)
    gen, index, exp = node[1], node[2], node[3]
    if gen == "T":
        raise ParseError("crossings are not ring elements", 0)
    if not 1 <= index <= n:
        raise ParseError(f"{gen}{index} out of range for n={n}", 0)
    if gen == "x":
        return SuperPolynomial.x(n, m, index, 1 if exp is None else exp)
    if exp is None:
        return SuperPolynomial.w(n, m, index)
    if exp < m + 1:
        raise ParseError(f"label {exp} below the minimal label {m + 1}", 0)
    return labeled_omega(n, m, index, exp)
