"""Terms over the semiring signature: constants 0 and 1, variables, + and *.

Variables are numbered from 1 and written ``x1, x2, ...``; the surface
syntax also accepts ``x``, ``y``, ``z`` as shorthand for x1, x2, x3.
Both operators parse left-associatively, ``*`` binds tighter than ``+``,
and juxtaposition is not a product: ``x*y`` is a term, ``xy`` is not.
"""

from __future__ import annotations

from dataclasses import dataclass


class Term:
    """Base class for term nodes.  Instances are immutable and hashable."""

    __slots__ = ()

    def __add__(self, other: "Term") -> "Term":
        return Add(self, other)

    def __mul__(self, other: "Term") -> "Term":
        return Mul(self, other)


@dataclass(frozen=True, slots=True)
class Zero(Term):
    pass


@dataclass(frozen=True, slots=True)
class One(Term):
    pass


@dataclass(frozen=True, slots=True)
class Var(Term):
    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"variable index must be >= 1, got {self.index}")


@dataclass(frozen=True, slots=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Mul(Term):
    left: Term
    right: Term


ZERO = Zero()
ONE = One()


class TermSyntaxError(ValueError):
    """Raised on malformed input; ``position`` is the 1-based column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (column {position})")
        self.position = position


_ALIASES = {"x": 1, "y": 2, "z": 3}


def _lex(text: str) -> list[tuple[str, object, int]]:
    # token kinds: zero one var plus star lparen rparen end
    tokens: list[tuple[str, object, int]] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
            continue
        col = i + 1
        if c == "0":
            tokens.append(("zero", None, col))
        elif c == "1":
            tokens.append(("one", None, col))
        elif c == "+":
            tokens.append(("plus", None, col))
        elif c == "*":
            tokens.append(("star", None, col))
        elif c == "(":
            tokens.append(("lparen", None, col))
        elif c == ")":
            tokens.append(("rparen", None, col))
        elif c == "x":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                tokens.append(("var", 1, col))
            else:
                index = int(text[i + 1 : j])
                if index == 0:
                    raise TermSyntaxError("variable index 0 is not allowed", col)
                tokens.append(("var", index, col))
                i = j
                continue
        elif c in _ALIASES:
            tokens.append(("var", _ALIASES[c], col))
        else:
            raise TermSyntaxError(f"unexpected character {c!r}", col)
        i += 1
    tokens.append(("end", None, n + 1))
    return tokens


def parse(text: str) -> Term:
    """Parse a term; raises TermSyntaxError with a column on bad input.

    >>> parse("x+y*z")
    Add(left=Var(index=1), right=Mul(left=Var(index=2), right=Var(index=3)))
    """
    tokens = _lex(text)
    pos = 0

    def peek() -> tuple[str, object, int]:
        return tokens[pos]

    def advance() -> tuple[str, object, int]:
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_sum() -> Term:
        t = parse_product()
        while peek()[0] == "plus":
            advance()
            t = Add(t, parse_product())
        return t

    def parse_product() -> Term:
        t = parse_atom()
        while peek()[0] == "star":
            advance()
            t = Mul(t, parse_atom())
        return t

    def parse_atom() -> Term:
        kind, value, col = advance()
        if kind == "zero":
            return ZERO
        if kind == "one":
            return ONE
        if kind == "var":
            return Var(value)  # type: ignore[arg-type]
        if kind == "lparen":
            t = parse_sum()
            kind2, _, col2 = advance()
            if kind2 != "rparen":
                raise TermSyntaxError("expected ')'", col2)
            return t
        raise TermSyntaxError(f"expected a term, found {_describe(kind)}", col)

    t = parse_sum()
    kind, _, col = peek()
    if kind != "end":
        raise TermSyntaxError(f"unexpected {_describe(kind)}", col)
    return t


def _describe(kind: str) -> str:
    return {
        "zero": "'0'",
        "one": "'1'",
        "var": "a variable",
        "plus": "'+'",
        "star": "'*'",
        "lparen": "'('",
        "rparen": "')'",
        "end": "end of input",
    }[kind]


def to_text(t: Term) -> str:
    """Render with canonical variable names and minimal parentheses.

    The output round-trips: parse(to_text(t)) == t.  Since both operators
    parse left-associatively, a right child at the same precedence level is
    parenthesized.
    """

    def go(t: Term, parent: int, right: bool) -> str:
        match t:
            case Zero():
                return "0"
            case One():
                return "1"
            case Var(i):
                return f"x{i}"
            case Add(l, r):
                s = go(l, 1, False) + "+" + go(r, 1, True)
                return f"({s})" if parent > 1 or (parent == 1 and right) else s
            case Mul(l, r):
                s = go(l, 2, False) + "*" + go(r, 2, True)
                return f"({s})" if parent == 2 and right else s
        raise TypeError(f"not a term: {t!r}")

    return go(t, 0, False)


def variables(t: Term) -> frozenset[int]:
    """The set of variable indices occurring in t."""
    match t:
        case Zero() | One():
            return frozenset()
        case Var(i):
            return frozenset((i,))
        case Add(l, r) | Mul(l, r):
            return variables(l) | variables(r)
    raise TypeError(f"not a term: {t!r}")


def term_size(t: Term) -> int:
    """Number of AST nodes."""
    match t:
        case Zero() | One() | Var(_):
            return 1
        case Add(l, r) | Mul(l, r):
            return 1 + term_size(l) + term_size(r)
    raise TypeError(f"not a term: {t!r}")
