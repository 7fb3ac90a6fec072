"""Parser for the polynomial input grammar.

    expr  := ['+'|'-'] term (('+'|'-') term)*
    term  := factor ('*'? factor)*
    factor:= base ('^' uint)?
    base  := int ('/' uint)? | var | '(' expr ')'

Whitespace is insignificant.  Parenthesised groups are accepted on top of
the plain sum-of-terms form so products like ``(x^3+y^2)*(x^5+y^7)`` can be
typed directly.
"""

import re
from fractions import Fraction

from .poly import Poly

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.)")


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, names):
        self.tokens = _tokenize(text)
        self.i = 0
        self.index = {n: k for k, n in enumerate(names)}
        self.nvars = len(names)

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        result = self.term().scale(sign)
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def term(self):
        result = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                result = result * self.factor()
            elif kind in ("int", "name", "("):
                result = result * self.factor()
            else:
                return result

    def factor(self):
        base = self.base()
        if self.peek()[0] == "^":
            self.take()
            _, k, _ = self.take("int")
            base = base ** k
        return base

    def base(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            c = Fraction(value)
            if self.peek()[0] == "/":
                self.take()
                _, den, dpos = self.take("int")
                if den == 0:
                    raise ParseError("zero denominator", dpos)
                c = Fraction(value, den)
            return Poly.constant(c, self.nvars)
        if kind == "name":
            self.take()
            if value not in self.index:
                raise ParseError(f"unknown variable {value!r}", pos)
            return Poly.var(self.index[value], self.nvars)
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"unexpected {what}", pos)


def parse(text, names):
    """Parse ``text`` into a Poly over the ordered variable ``names``."""
    names = list(names)
    if len(set(names)) != len(names):
        raise ValueError("duplicate variable names")
    p = _Parser(text, names)
    if p.peek()[0] == "end":
        raise ParseError("empty expression", 0)
    result = p.expr()
    p.take("end")
    return result


def parse_vars(text):
    names = [s.strip() for s in text.split(",") if s.strip()]
    if not names:
        raise ValueError("no variables given")
    for n in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", n):
            raise ValueError(f"invalid variable name {n!r}")
    if len(set(names)) != len(names):
        raise ValueError("duplicate variable names")
    return names
