"""Parsing of rational expressions and structure-definition documents.

Expression grammar (whitespace is ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | "+" unary | power
    power  := atom ("^" INTEGER)?
    atom   := INTEGER | IDENT | "(" expr ")"

Multiplication is always explicit: ``xy`` is an (unknown) identifier,
not ``x*y``.  A rational literal such as ``3/4`` is ordinary division of
two integers.  Unary minus binds looser than ``^``, so ``-x^2`` is
``-(x^2)``.

Structure documents are JSON objects::

    {
      "name": "example",              # optional
      "description": "free text",     # optional
      "variables": ["x", "y"],        # optional, default ["x", "y"]
      "connection": {"1_22": "x*y", "2_11": "-y"}
    }

A connection key ``"c_ab"`` gives the coefficient with upper index ``c``
and lower indices ``a, b`` (all in ``{1, 2}``).  Missing entries are zero;
``"c_ab"`` is copied to ``"c_ba"``, and if both are given they must agree.
Any other top-level key is rejected.
"""
import json
import re
from dataclasses import dataclass, field

from .exactmath import DEFAULT_VARIABLES, RatFunc


class ParseError(ValueError):
    """Syntax or semantic error in an expression, with a UTF-8 byte offset."""

    def __init__(self, message, offset=None, source=None):
        self.message = message
        self.offset = offset
        self.source = source
        where = f" at byte {offset}" if offset is not None else ""
        super().__init__(f"{message}{where}")


class StructureError(ValueError):
    """Malformed structure document."""


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")
_IDENT = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


def _tokenize(src):
    tokens = []
    pos = 0
    n = len(src)
    while pos < n:
        m = _TOKEN.match(src, pos)
        if m is None:  # trailing whitespace
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", _byte_offset(src, m.start(3)), src)
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


def _byte_offset(src, index):
    return len(src[:index].encode("utf-8"))


class _Parser:
    def __init__(self, src, variables):
        self.src = src
        self.variables = tuple(variables)
        self.tokens = _tokenize(src)
        self.i = 0

    def error(self, msg, tok=None):
        tok = tok or self.tokens[self.i]
        return ParseError(msg, _byte_offset(self.src, tok[2]), self.src)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, op):
        tok = self.peek()
        if tok[0] == "op" and tok[1] == op:
            self.i += 1
            return tok
        return None

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            else:
                tok = self.accept("/")
                if tok is None:
                    return value
                rhs = self.unary()
                if rhs.is_zero():
                    raise self.error("division by an expression that is identically zero", tok)
                value = value / rhs

    def unary(self):
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.accept("^"):
            tok = self.peek()
            if tok[0] != "int":
                raise self.error("exponent must be a nonnegative integer literal")
            self.take()
            return base ** int(tok[1])
        return base

    def atom(self):
        tok = self.peek()
        kind, text, _ = tok
        if kind == "int":
            self.take()
            return RatFunc.constant(int(text), self.variables)
        if kind == "ident":
            self.take()
            if text not in self.variables:
                raise self.error(f"unknown identifier {text!r}", tok)
            return RatFunc.var(text, self.variables)
        if self.accept("("):
            value = self.expr()
            if not self.accept(")"):
                raise self.error("expected ')'")
            return value
        if kind == "end":
            raise self.error("unexpected end of expression")
        raise self.error(f"unexpected {text!r}")


def parse_expr(src, variables=DEFAULT_VARIABLES):
    """Parse ``src`` into an exact :class:`RatFunc` in ``variables``."""
    return _Parser(src, variables).parse()


def format_expr(value):
    """Render a polynomial, rational function or rational in re-parseable form."""
    return str(value)


_KEY = re.compile(r"^[12]_[12][12]$")
_ALLOWED = {"name", "description", "variables", "connection"}


@dataclass
class StructureDoc:
    variables: tuple = DEFAULT_VARIABLES
    connection: dict = field(default_factory=dict)
    name: str = ""
    description: str = ""


def load_structure_doc(text):
    """Validate a JSON structure document and return a :class:`StructureDoc`."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise StructureError("structure document must be a JSON object")
    unknown = sorted(set(data) - _ALLOWED)
    if unknown:
        raise StructureError(f"unknown keys: {', '.join(unknown)}")
    variables = data.get("variables", list(DEFAULT_VARIABLES))
    if (not isinstance(variables, list) or len(variables) != 2
            or not all(isinstance(v, str) and _IDENT.match(v) for v in variables)
            or variables[0] == variables[1]):
        raise StructureError("'variables' must be a list of two distinct identifiers")
    conn = data.get("connection", {})
    if not isinstance(conn, dict):
        raise StructureError("'connection' must be an object")
    for key, value in conn.items():
        if not _KEY.match(key):
            raise StructureError(f"bad connection key {key!r}; expected 'c_ab' with c, a, b in 1..2")
        if not isinstance(value, str):
            raise StructureError(f"connection entry {key!r} must be an expression string")
    for opt in ("name", "description"):
        if opt in data and not isinstance(data[opt], str):
            raise StructureError(f"'{opt}' must be a string")
    return StructureDoc(tuple(variables), dict(conn), data.get("name", ""), data.get("description", ""))


def parse_structure(text):
    """Parse a structure document into a symmetric :class:`ChartConnection`."""
    from .geometry import ChartConnection

    doc = load_structure_doc(text)
    entries = {}
    for key, src in doc.connection.items():
        c, a, b = int(key[0]) - 1, int(key[2]) - 1, int(key[3]) - 1
        try:
            value = parse_expr(src, doc.variables)
        except ParseError as exc:
            raise ParseError(f"in connection entry {key!r}: {exc.message}", exc.offset, src) from exc
        for idx in {(c, a, b), (c, b, a)}:
            if idx in entries and entries[idx] != value:
                raise StructureError(
                    f"symmetry violation: {key!r} disagrees with its index-swapped partner")
            entries[idx] = value
    return ChartConnection(entries, doc.variables, name=doc.name)
