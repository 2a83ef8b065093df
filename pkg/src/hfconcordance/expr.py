"""Knot expressions for the command line.

Grammar::

    expr    := term ('#' term)*
    term    := [INT '*'] primary | '-' [INT '*'] primary
    primary := 'T(' INT ',' INT ')'           torus knot
             | 'C(' INT ',' INT ';' expr ')'  (p, q)-cable, p = winding number
             | 'Kn(' INT ')'                  K_n = C(2, 4n-1; T(2, 2n+1))
             | 'U'                            unknot
             | '(' expr ')'
             | 'torus' INT INT | 'cable' INT INT primary | 'Kn' INT

Only -T(2,5) may appear mirrored when V_k are computed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .laurent import ONE, LaurentPoly, cable_alexander, family_alexander, torus_alexander
from .staircase import NotLSpacePolynomial, family_list, staircase_from_alexander


class ExprError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"at position {pos}: {msg}")
        self.pos = pos


class NotLSpaceKnot(ValueError):
    pass


@dataclass(frozen=True)
class Torus:
    p: int
    q: int


@dataclass(frozen=True)
class Cable:
    p: int
    q: int
    inner: "Node"


@dataclass(frozen=True)
class Family:
    n: int


@dataclass(frozen=True)
class Unknot:
    pass


@dataclass(frozen=True)
class Term:
    count: int
    mirrored: bool
    node: "Node"


@dataclass(frozen=True)
class Sum:
    terms: tuple[Term, ...]


Node = Union[Torus, Cable, Family, Unknot, Sum]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", m.group(1), start))
        elif m.group(2):
            out.append(("word", m.group(2), start))
        else:
            out.append(("sym", m.group(3), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.next()
        if val != value:
            raise ExprError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def integer(self) -> int:
        kind, val, pos = self.next()
        if kind != "int":
            raise ExprError(f"expected an integer, found {val or 'end of input'!r}", pos)
        return int(val)

    def parse(self) -> Node:
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprError(f"unexpected {val!r}", pos)
        return node

    def expr(self) -> Node:
        terms = [self.term()]
        while self.peek()[1] == "#":
            self.next()
            terms.append(self.term())
        if len(terms) == 1 and terms[0].count == 1 and not terms[0].mirrored:
            return terms[0].node
        return Sum(tuple(terms))

    def term(self) -> Term:
        mirrored = False
        if self.peek()[1] == "-":
            self.next()
            mirrored = True
        count = 1
        kind, val, pos = self.peek()
        if kind == "int":
            count = self.integer()
            self.expect("*")
            if count < 1:
                raise ExprError("multiplicity must be positive", pos)
        return Term(count, mirrored, self.primary())

    def primary(self) -> Node:
        kind, val, pos = self.next()
        if val == "(":
            node = self.expr()
            self.expect(")")
            return node
        if val == "T":
            self.expect("(")
            p = self.integer()
            self.expect(",")
            q = self.integer()
            self.expect(")")
            return Torus(p, q)
        if val == "torus":
            return Torus(self.integer(), self.integer())
        if val == "C":
            self.expect("(")
            p = self.integer()
            self.expect(",")
            q = self.integer()
            self.expect(";")
            inner = self.expr()
            self.expect(")")
            return Cable(p, q, inner)
        if val == "cable":
            p, q = self.integer(), self.integer()
            return Cable(p, q, self.primary())
        if val == "Kn":
            if self.peek()[1] == "(":
                self.next()
                n = self.integer()
                self.expect(")")
            else:
                n = self.integer()
            if n < 1:
                raise ExprError("Kn needs n >= 1", pos)
            return Family(n)
        if val == "U":
            return Unknot()
        raise ExprError(f"unexpected {val or 'end of input'!r}", pos)


def parse(text: str) -> Node:
    return _Parser(text).parse()


def describe(node: Node) -> str:
    if isinstance(node, Torus):
        return f"T({node.p},{node.q})"
    if isinstance(node, Cable):
        return f"C({node.p},{node.q}; {describe(node.inner)})"
    if isinstance(node, Family):
        return f"Kn({node.n})"
    if isinstance(node, Unknot):
        return "U"
    parts = []
    for t in node.terms:
        body = describe(t.node)
        if isinstance(t.node, Sum):
            body = f"({body})"
        if t.count != 1:
            body = f"{t.count}*{body}"
        parts.append(("-" if t.mirrored else "") + body)
    return " # ".join(parts)


def alexander(node: Node) -> LaurentPoly:
    """Alexander polynomial; multiplicative under # and unchanged by mirroring."""
    if isinstance(node, Torus):
        return torus_alexander(node.p, node.q)
    if isinstance(node, Cable):
        return cable_alexander(alexander(node.inner), node.p, node.q)
    if isinstance(node, Family):
        return family_alexander(node.n)
    if isinstance(node, Unknot):
        return ONE
    out = ONE
    for t in node.terms:
        out = out * alexander(t.node) ** t.count
    return out.normalized()


def lspace_list(node: Node) -> tuple[int, ...]:
    """Staircase list of an L-space knot expression.

    A cable C(p, q; K) of an L-space knot is an L-space knot exactly when
    q >= p (2 g(K) - 1).
    """
    if isinstance(node, Family):
        return family_list(node.n)
    if isinstance(node, Torus):
        return staircase_from_alexander(alexander(node))
    if isinstance(node, Cable):
        inner = lspace_list(node.inner)
        if node.p < 2:
            return inner
        if node.q < node.p * (2 * sum(inner) - 1):
            raise NotLSpaceKnot(f"{describe(node)} is not an L-space knot")
        return staircase_from_alexander(alexander(node))
    if isinstance(node, Sum) and len(node.terms) == 1:
        t = node.terms[0]
        if t.count == 1 and not t.mirrored:
            return lspace_list(t.node)
    raise NotLSpaceKnot(f"{describe(node)} is not an L-space knot")


MIRROR_OK = {Torus(2, 5), Torus(5, 2)}


def summands(node: Node) -> tuple[list[tuple[int, ...]], int]:
    """Flatten into positive L-space staircases plus the number of -T(2,5) factors."""
    lists: list[tuple[int, ...]] = []
    mirrors = 0
    terms = node.terms if isinstance(node, Sum) else (Term(1, False, node),)
    for t in terms:
        if t.mirrored:
            if t.node not in MIRROR_OK:
                raise NotLSpaceKnot(f"only -T(2,5) may be mirrored, got -{describe(t.node)}")
            mirrors += t.count
        elif isinstance(t.node, Sum):
            sub, m = summands(t.node)
            lists.extend(sub * t.count)
            mirrors += m * t.count
        elif isinstance(t.node, Unknot):
            continue
        else:
            lists.extend([lspace_list(t.node)] * t.count)
    return lists, mirrors


def try_staircase(poly: LaurentPoly):
    try:
        return staircase_from_alexander(poly)
    except NotLSpacePolynomial:
        return None
