"""Text syntax for de Rham-Witt expressions.

    expr    := term (('+' | '-') term)*
    term    := ['-'] factor ('*' factor)*
    factor  := INT | '[' poly ']' | 'V^j[' poly ']' | 'dV^j[' poly ']' | 'd[' poly ']'
             | OP ['^' INT] '(' expr ')'        with OP in F, V, d, R
             | '(' expr ')'

``F(...)`` and ``R(...)`` evaluate their argument one level up, ``V(...)``
one level down.  Inside brackets ``x`` and ``t`` both name the variable.
"""

from __future__ import annotations

import re

from .words import DRWExpression, MonomialAlgebra


class ExpressionSyntaxError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|(dV|d|F|V|R)(?:\^(\d+))?|([-+*()]))")


class _Parser:
    def __init__(self, text, A: MonomialAlgebra):
        self.text = text
        self.A = A
        self.pos = 0

    def error(self, msg):
        raise ExpressionSyntaxError(f"{msg} at position {self.pos} in {self.text!r}")

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def bracket(self):
        """The polynomial text between ``[`` and the matching ``]``."""
        if self.peek() != "[":
            self.error("expected '['")
        end = self.text.find("]", self.pos)
        if end < 0:
            self.error("unclosed '['")
        body = self.text[self.pos + 1:end]
        self.pos = end + 1
        try:
            return self.A.parse_poly(body)
        except Exception as exc:
            raise ExpressionSyntaxError(f"bad polynomial {body!r}: {exc}") from exc

    def parse(self):
        node = self.expr()
        if self.peek():
            self.error("unexpected trailing input")
        return node

    def expr(self):
        terms = [(1, self.term())]
        while self.peek() in ("+", "-"):
            sign = 1 if self.text[self.pos] == "+" else -1
            self.pos += 1
            terms.append((sign, self.term()))
        return ("sum", terms)

    def term(self):
        sign = 1
        while self.peek() == "-":
            self.pos += 1
            sign = -sign
        factors = [self.factor()]
        while self.peek() == "*":
            self.pos += 1
            factors.append(self.factor())
        return ("prod", sign, factors)

    def factor(self):
        c = self.peek()
        if c == "[":
            return ("teich", 0, self.bracket())
        if c == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return node
        m = _TOKEN.match(self.text, self.pos)
        if not m or not (m.group(1) or m.group(2)):
            self.error("expected a factor")
        self.pos = m.end()
        if m.group(1):
            return ("int", int(m.group(1)))
        op, power = m.group(2), int(m.group(3)) if m.group(3) else 1
        nxt = self.peek()
        if op == "dV" and nxt == "[":
            return ("d", 1, ("teich", power, self.bracket()))
        if op == "dV":
            self.error("dV must be followed by '['")
        if op == "V" and nxt == "[":
            return ("teich", power, self.bracket())
        if op == "d" and nxt == "[":
            if m.group(3):
                self.error("d^k is zero for k >= 2; write d once")
            return ("d", 1, ("teich", 0, self.bracket()))
        if nxt != "(":
            self.error(f"expected '(' after {op}")
        self.pos += 1
        inner = self.expr()
        if self.peek() != ")":
            self.error("expected ')'")
        self.pos += 1
        return (op, power, inner)


def parse_expression_tree(text: str, A: MonomialAlgebra):
    return _Parser(text, A).parse()


def evaluate(node, A: MonomialAlgebra, n: int) -> DRWExpression:
    """Evaluate a parsed tree at level ``n``."""
    kind = node[0]
    if kind == "sum":
        parts = [evaluate(t, A, n).scale(s) for s, t in node[1]]
        acc = parts[0]
        for part in parts[1:]:
            acc = acc + part
        return acc
    if kind == "prod":
        _, sign, factors = node
        acc = None
        for f in factors:
            val = evaluate(f, A, n)
            acc = val if acc is None else acc * val
        return acc.scale(sign)
    if kind == "int":
        return DRWExpression.scalar(A, n, node[1])
    if kind == "teich":
        _, j, poly = node
        if n - j <= 0:
            return DRWExpression.zero(A, max(n, 0))
        return DRWExpression.teichmuller(A, n - j, poly).iterate("V", j)
    op, power, inner = node
    if op == "d":
        e = evaluate(inner, A, n)
        return e.d() if power == 1 else DRWExpression.zero(A, n, e.q + 1)
    if op in ("F", "R"):
        return evaluate(inner, A, n + power).iterate(op, power)
    if op == "V":
        if n - power <= 0:
            return DRWExpression.zero(A, n, _degree(inner, A))
        return evaluate(inner, A, n - power).iterate("V", power)
    raise ExpressionSyntaxError(f"unknown node {kind!r}")


def _degree(node, A):
    return evaluate(node, A, 1).q


def parse_expression(text: str, A, n: int) -> DRWExpression:
    """Parse ``text`` as an element of ``W_n Omega_A``.

    >>> A = MonomialAlgebra.parse("F3[x]")
    >>> str(parse_expression("F(d[t^2])", A, 2))
    '[x^4]*d[x^2]'
    """
    if isinstance(A, str):
        A = MonomialAlgebra.parse(A)
    return evaluate(parse_expression_tree(text, A), A, n)


__all__ = ["ExpressionSyntaxError", "parse_expression", "parse_expression_tree", "evaluate"]
