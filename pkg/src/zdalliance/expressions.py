"""Textual ring expressions.

Grammar (whitespace insignificant between tokens)::

    expr := term (" x " term)*
    term := "Z" digits
          | "GF(" digits ")"              -- prime power, factored here
          | "GF(" digits "," digits ")"   -- explicit prime and exponent
          | "Id(" expr "," digits ")"     -- idealization of the base expr
          | "(" expr ")"

Syntax errors carry the byte offset of the offending character; semantic
errors (composite GF characteristic, Z_1, ...) carry the offset of the
term they invalidate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .rings import FiniteRing, is_prime, make_gf, make_idealization, make_product, make_zn


class ExprError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class ExprSyntaxError(ExprError):
    pass


class ExprSemanticError(ExprError):
    pass


@dataclass(frozen=True)
class Zn:
    n: int


@dataclass(frozen=True)
class GF:
    p: int
    k: int


@dataclass(frozen=True)
class Product:
    factors: tuple["RingExpr", ...]


@dataclass(frozen=True)
class Idealization:
    base: "RingExpr"
    rank: int


RingExpr = Union[Zn, GF, Product, Idealization]


def _factor_prime_power(q: int) -> Optional[tuple[int, int]]:
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return (q, 1)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, offset: Optional[int] = None) -> ExprSyntaxError:
        return ExprSyntaxError(message, self.pos if offset is None else offset)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def digits(self) -> tuple[int, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected digits")
        return int(self.text[start:self.pos]), start

    def parse_expr(self) -> RingExpr:
        terms = [self.parse_term()]
        while True:
            self.skip_ws()
            if self.peek() == "x":
                self.pos += 1
                terms.append(self.parse_term())
            else:
                break
        return terms[0] if len(terms) == 1 else Product(tuple(terms))

    def parse_term(self) -> RingExpr:
        self.skip_ws()
        start = self.pos
        if self.text.startswith("GF", self.pos):
            self.pos += 2
            self.expect("(")
            first, foff = self.digits()
            self.skip_ws()
            if self.peek() == ",":
                self.pos += 1
                second, soff = self.digits()
                self.expect(")")
                if not is_prime(first):
                    raise ExprSemanticError(f"GF characteristic {first} is not prime", foff)
                if second < 1:
                    raise ExprSemanticError(f"GF degree must be >= 1, got {second}", soff)
                return GF(first, second)
            self.expect(")")
            pk = _factor_prime_power(first)
            if pk is None:
                raise ExprSemanticError(f"GF order {first} is not a prime power", foff)
            return GF(*pk)
        if self.text.startswith("Id", self.pos):
            self.pos += 2
            self.expect("(")
            base = self.parse_expr()
            self.expect(",")
            rank, roff = self.digits()
            self.expect(")")
            if rank < 1:
                raise ExprSemanticError(f"idealization rank must be >= 1, got {rank}", roff)
            return Idealization(base, rank)
        if self.peek() == "Z":
            self.pos += 1
            n, noff = self.digits()
            if n < 2:
                raise ExprSemanticError(f"Z_n needs n >= 2, got {n}", noff)
            return Zn(n)
        if self.peek() == "(":
            self.pos += 1
            inner = self.parse_expr()
            self.expect(")")
            return inner
        raise self.error("expected a ring term", start)


def parse_ring_expr(text: str) -> RingExpr:
    """Parse ``text`` into a ring expression AST."""
    parser = _Parser(text)
    expr = parser.parse_expr()
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error("unexpected trailing input")
    return expr


def build_ring(expr: Union[RingExpr, str],
               order_cap: Optional[int] = None) -> FiniteRing:
    """Evaluate an expression (or its text) into a FiniteRing."""
    if isinstance(expr, str):
        expr = parse_ring_expr(expr)
    if isinstance(expr, Zn):
        return make_zn(expr.n, order_cap)
    if isinstance(expr, GF):
        return make_gf(expr.p, expr.k, order_cap)
    if isinstance(expr, Product):
        return make_product([build_ring(f, order_cap) for f in expr.factors],
                            order_cap)
    if isinstance(expr, Idealization):
        return make_idealization(build_ring(expr.base, order_cap),
                                 expr.rank, order_cap)
    raise TypeError(f"not a ring expression: {expr!r}")
