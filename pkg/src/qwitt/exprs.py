"""Tiny expression grammar shared by element parsing and the law CLI.

Grammar (integer literals, named atoms, ``+ - * ^`` and parentheses)::

    expr   := term (('+'|'-') term)*
    term   := factor ('*'? factor)*      # explicit '*' required
    factor := '-' factor | atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

``parse`` produces a small AST of nested tuples; what a NAME means and which
ring the integers land in is the caller's business.
"""

from __future__ import annotations

import re

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^()]))")


def tokenize(text: str) -> list[tuple[str, object]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ValueError(f"bad character in expression: {text[pos:]!r}")
            break
        pos = m.end()
        if m.group(1):
            tokens.append(("int", int(m.group(1))))
        elif m.group(2):
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ValueError(f"expected {op!r}, found {val!r}")

    def expr(self):
        node = self.term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            _, op = self.take()
            rhs = self.term()
            node = ("add", node, rhs) if op == "+" else ("add", node, ("neg", rhs))
        return node

    def term(self):
        node = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            node = ("mul", node, self.factor())
        return node

    def factor(self):
        if self.peek() == ("op", "-"):
            self.take()
            return ("neg", self.factor())
        node = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise ValueError("exponents must be integer literals")
            node = ("pow", node, val)
        return node

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return ("int", val)
        if kind == "name":
            return ("var", val)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ValueError(f"unexpected token {val!r}")


def parse(text: str):
    """Parse ``text`` into an AST of nested tuples."""
    parser = _Parser(tokenize(text))
    node = parser.expr()
    if parser.peek() != ("end", None):
        raise ValueError(f"trailing input in expression {text!r}")
    return node


def names(node) -> set[str]:
    """All NAME atoms appearing in an AST."""
    tag = node[0]
    if tag == "var":
        return {node[1]}
    if tag == "int":
        return set()
    if tag in ("neg",):
        return names(node[1])
    if tag in ("add", "mul"):
        return names(node[1]) | names(node[2])
    if tag == "pow":
        return names(node[1])
    raise ValueError(f"unknown AST node {tag!r}")


def evaluate(node, atoms: dict, add, mul, neg, from_int, power):
    """Fold an AST with caller-supplied operations.

    ``atoms`` maps NAMEs to values; the five callbacks assemble the result.
    """

    def walk(n):
        tag = n[0]
        if tag == "int":
            return from_int(n[1])
        if tag == "var":
            if n[1] not in atoms:
                raise ValueError(f"unknown name {n[1]!r} in expression")
            return atoms[n[1]]
        if tag == "neg":
            return neg(walk(n[1]))
        if tag == "add":
            return add(walk(n[1]), walk(n[2]))
        if tag == "mul":
            return mul(walk(n[1]), walk(n[2]))
        if tag == "pow":
            return power(walk(n[1]), n[2])
        raise ValueError(f"unknown AST node {tag!r}")

    return walk(node)
