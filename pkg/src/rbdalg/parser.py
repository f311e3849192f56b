"""Text syntax for diagrams.

Grammar (whitespace insignificant)::

    expr   := term (('+' | '|') term)*
    term   := factor (('*' | '&') factor)*
    factor := '~' factor | '(' expr ')' | 'A' digits | '1' | '0'

Both infix operators are left-associative and ``*`` binds tighter than ``+``.
``&`` and ``|`` are accepted on input but never emitted by :func:`render`.
Parsing does not simplify: ``~~A1`` stays a double complement.
"""

from __future__ import annotations

import enum

from rbdalg.diagram import (
    ONE,
    ZERO,
    Complement,
    ComponentId,
    Diagram,
    Elementary,
    Parallel,
    Series,
    fold,
)
from rbdalg.errors import DiagramError

_WHITESPACE = frozenset(" \t\n\r\f\v")
_DIGITS = frozenset("0123456789")
_BINARY = {"+": "+", "|": "+", "*": "*", "&": "*"}
_PRECEDENCE = {"+": 1, "*": 2}


class ErrorKind(str, enum.Enum):
    UNEXPECTED_TOKEN = "unexpected-token"
    UNBALANCED_PARENTHESIS = "unbalanced-parenthesis"
    BAD_COMPONENT_INDEX = "bad-component-index"
    EMPTY_INPUT = "empty-input"
    TRAILING_INPUT = "trailing-input"


class ParseError(DiagramError, ValueError):
    """Malformed diagram text.  ``position`` is a character offset into the input."""

    def __init__(self, kind: ErrorKind, position: int, message: str = ""):
        self.kind = ErrorKind(kind)
        self.position = position
        super().__init__(f"{self.kind.value} at offset {position}" + (f": {message}" if message else ""))


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in _WHITESPACE:
            i += 1
        elif ch in "()~":
            tokens.append((ch, None, i))
            i += 1
        elif ch in _BINARY:
            tokens.append(("op", _BINARY[ch], i))
            i += 1
        elif ch == "A":
            j = i + 1
            while j < n and text[j] in _DIGITS:
                j += 1
            if j == i + 1:
                raise ParseError(ErrorKind.BAD_COMPONENT_INDEX, i, "'A' must be followed by digits")
            try:
                index = int(text[i + 1 : j])
            except ValueError:  # beyond the int-from-string digit limit
                raise ParseError(ErrorKind.BAD_COMPONENT_INDEX, i, "component index too long") from None
            if index < 1:
                raise ParseError(ErrorKind.BAD_COMPONENT_INDEX, i, f"component index {index} < 1")
            tokens.append(("atom", Elementary(ComponentId(index)), i))
            i = j
        elif ch in _DIGITS:
            j = i
            while j < n and text[j] in _DIGITS:
                j += 1
            literal = text[i:j]
            if literal not in ("0", "1"):
                raise ParseError(ErrorKind.UNEXPECTED_TOKEN, i, f"constant {literal!r} is not 0 or 1")
            tokens.append(("atom", ONE if literal == "1" else ZERO, i))
            i = j
        else:
            raise ParseError(ErrorKind.UNEXPECTED_TOKEN, i, f"unexpected character {ch!r}")
    return tokens


def parse(text: str | bytes) -> Diagram:
    """Parse diagram text into a :class:`Diagram`.

    Raises :class:`ParseError` on any malformed input; never recurses, so
    arbitrarily deep nesting is accepted.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(ErrorKind.UNEXPECTED_TOKEN, exc.start, "input is not valid UTF-8") from None
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError(ErrorKind.EMPTY_INPUT, 0)

    operands: list[Diagram] = []
    # entries are (symbol, position); symbols: '~', '(', '+', '*'
    operators: list[tuple[str, int]] = []
    depth = 0
    expect_operand = True

    def reduce_binary():
        op, _ = operators.pop()
        right = operands.pop()
        left = operands.pop()
        operands.append(Series(left, right) if op == "*" else Parallel(left, right))

    def close_operand():
        while operators and operators[-1][0] == "~":
            operators.pop()
            operands.append(Complement(operands.pop()))

    for kind, value, pos in tokens:
        if expect_operand:
            if kind == "~":
                operators.append(("~", pos))
            elif kind == "(":
                operators.append(("(", pos))
                depth += 1
            elif kind == "atom":
                operands.append(value)
                close_operand()
                expect_operand = False
            else:
                raise ParseError(ErrorKind.UNEXPECTED_TOKEN, pos, "expected an operand")
        elif kind == "op":
            while operators and operators[-1][0] in _PRECEDENCE and _PRECEDENCE[operators[-1][0]] >= _PRECEDENCE[value]:
                reduce_binary()
            operators.append((value, pos))
            expect_operand = True
        elif kind == ")":
            if depth == 0:
                raise ParseError(ErrorKind.UNBALANCED_PARENTHESIS, pos, "unmatched ')'")
            while operators[-1][0] != "(":
                reduce_binary()
            operators.pop()
            depth -= 1
            close_operand()
        elif depth == 0:
            raise ParseError(ErrorKind.TRAILING_INPUT, pos)
        else:
            raise ParseError(ErrorKind.UNEXPECTED_TOKEN, pos, "expected an operator or ')'")

    if expect_operand:
        raise ParseError(ErrorKind.UNEXPECTED_TOKEN, len(text), "unexpected end of input")
    while operators:
        if operators[-1][0] == "(":
            raise ParseError(ErrorKind.UNBALANCED_PARENTHESIS, operators[-1][1], "unclosed '('")
        reduce_binary()
    return operands[0]


# precedence levels used for parenthesisation
_ATOM, _COMPLEMENT, _SERIES, _PARALLEL = 4, 3, 2, 1


def render(d: Diagram) -> str:
    """Minimal-parenthesis text for ``d``; ``parse(render(d)) == d``."""

    def binary(symbol, prec):
        def combine(left, right):
            lt = f"({left[0]})" if left[1] < prec else left[0]
            rt = f"({right[0]})" if right[1] <= prec else right[0]
            return (f"{lt} {symbol} {rt}", prec)

        return combine

    def complement(inner):
        text = f"({inner[0]})" if inner[1] < _COMPLEMENT else inner[0]
        return ("~" + text, _COMPLEMENT)

    text, _ = fold(
        d,
        elementary=lambda c: (f"A{c.index}", _ATOM),
        one=lambda: ("1", _ATOM),
        zero=lambda: ("0", _ATOM),
        series=binary("*", _SERIES),
        parallel=binary("+", _PARALLEL),
        complement=complement,
    )
    return text
