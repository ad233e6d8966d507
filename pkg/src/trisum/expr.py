"""A small calculator for triangle arithmetic.

Grammar::

    expr  := unary (OP unary)*        every OP in one chain must be the same
    unary := '-' unary | atom
    atom  := NAME | '[' num ',' num ',' num ']' | 'half' '(' expr ')' | '(' expr ')'

``#`` is the pre-sum and ``+`` the sum.  Chains evaluate left to right;
``#`` and ``+`` have no relative precedence, so mixing them needs parentheses.
"""

import re
from fractions import Fraction

from trisum import triangles as tg
from trisum.errors import ParseError, Unsupported, ZeroSum

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[#+\-()\[\],]))")


def tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} at offset {pos}")
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, ops):
        self.tokens = tokenize(text)
        self.i = 0
        self.ops = ops

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None:
            raise ParseError("unexpected end of expression")
        if value is not None and tok[1] != value:
            raise ParseError(f"expected {value!r} at offset {tok[2]}, found {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression")
        value = self.expr()
        if self.i != len(self.tokens):
            tok = self.peek()
            raise ParseError(f"unexpected {tok[1]!r} at offset {tok[2]}")
        return value

    def expr(self):
        value = self.unary()
        chain = None
        while self.peek()[1] in ("#", "+"):
            _, op, at = self.take()
            if chain is not None and op != chain:
                raise ParseError(f"mixed '{chain}' and '{op}' at offset {at}: add parentheses")
            chain = op
            rhs = self.unary()
            value = self.ops[op](value, rhs)
        return value

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            return self.ops["neg"](self.unary())
        return self.atom()

    def atom(self):
        kind, val, at = self.take()
        if val == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if val == "[":
            coords = [self._number()]
            for _ in range(2):
                self.take(",")
                coords.append(self._number())
            self.take("]")
            return tg.TriangleElement(coords)
        if kind == "name":
            if val == "half" and self.peek()[1] == "(":
                self.take("(")
                inner = self.expr()
                self.take(")")
                return self.ops["half"](inner)
            return self.ops["name"](val)
        raise ParseError(f"unexpected {val!r} at offset {at}")

    def _number(self):
        sign = 1
        if self.peek()[1] == "-":
            self.take()
            sign = -1
        kind, val, at = self.take()
        if kind != "num":
            raise ParseError(f"expected a number at offset {at}, found {val!r}")
        return sign * Fraction(val)


def _coerce(value):
    if isinstance(value, tg.TriangleElement):
        return value
    if isinstance(value, dict):
        return tg.TriangleElement.from_json(value)
    if isinstance(value, (list, tuple)) and len(value) == 3:
        return tg.TriangleElement(Fraction(v) for v in value)
    raise ParseError(f"cannot read a triangle element from {value!r}")


def _geometric_ops(frame):
    def guard(fn):
        def wrapped(*args):
            try:
                return fn(*args)
            except ZeroSum as exc:
                raise Unsupported(str(exc)) from None
        return wrapped

    def neg(x):
        if not x.is_geometric:
            return -x
        return tg.bary_from_triangle(tg.reflect_triangle(tg.triangle_from_bary(x, frame)))

    return {
        "#": guard(lambda x, y: tg.presum_geometric(x, y, frame)),
        "+": guard(lambda x, y: tg.sum_geometric(x, y, frame)),
        "half": guard(lambda x: tg.half_geometric(x, frame)),
        "neg": neg,
    }


def eval_expression(text, inputs=None, geometric=False, frame=tg.DEFAULT_FRAME):
    """Evaluate ``text`` over named elements.

    With ``geometric=True`` every operation goes through the vertex
    constructions instead of coordinates; pairings with no construction raise
    Unsupported.
    """
    env = {name: _coerce(v) for name, v in (inputs or {}).items()}

    def lookup(name):
        try:
            return env[name]
        except KeyError:
            raise ParseError(f"unknown input {name!r}") from None

    if geometric:
        ops = _geometric_ops(frame)
    else:
        ops = {"#": tg.presum_coords, "+": tg.add, "half": tg.half, "neg": lambda x: -x}
    ops["name"] = lookup
    return _Parser(text, ops).parse()
