"""Finite semirings and lattices given by Cayley tables.

Tables are tuples of tuples of element indices; labels are only for I/O.
Construction is lazy about axioms: any well-shaped table pair is accepted
(gf3 is a perfectly good semiring that fails multiplicative idempotence),
and check_axioms reports which laws actually hold.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .terms import Add, Mul, One, Term, Var, Zero, parse, variables


@dataclass(frozen=True)
class FiniteSemiring:
    name: str
    elements: tuple[str, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int

    def __post_init__(self) -> None:
        n = len(self.elements)
        if n == 0:
            raise ValueError("carrier must be non-empty")
        if len(set(self.elements)) != n:
            raise ValueError("duplicate element labels")
        for table, what in ((self.add, "add"), (self.mul, "mul")):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError(f"{what} table must be {n}x{n}")
            if any(not 0 <= v < n for row in table for v in row):
                raise ValueError(f"{what} table entry out of range")
        for c, what in ((self.zero, "zero"), (self.one, "one")):
            if not 0 <= c < n:
                raise ValueError(f"{what} index out of range")

    @property
    def size(self) -> int:
        return len(self.elements)

    def plus(self, i: int, j: int) -> int:
        return self.add[i][j]

    def times(self, i: int, j: int) -> int:
        return self.mul[i][j]

    def label(self, i: int) -> str:
        return self.elements[i]

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise ValueError(
                f"unknown element label {label!r} in algebra {self.name}"
            ) from None


def _tables_from_labels(
    elements: Sequence[str], rows: Sequence[Sequence[str]]
) -> tuple[tuple[int, ...], ...]:
    index = {lab: i for i, lab in enumerate(elements)}
    return tuple(tuple(index[lab] for lab in row) for row in rows)


def semiring_from_labels(
    name: str,
    elements: Sequence[str],
    add_rows: Sequence[Sequence[str]],
    mul_rows: Sequence[Sequence[str]],
    zero: str,
    one: str,
) -> FiniteSemiring:
    """Build a FiniteSemiring from label-level tables."""
    elements = tuple(elements)
    index = {lab: i for i, lab in enumerate(elements)}
    for rows, what in ((add_rows, "add"), (mul_rows, "mul")):
        for row in rows:
            for lab in row:
                if lab not in index:
                    raise ValueError(f"unknown label {lab!r} in {what} table")
    return FiniteSemiring(
        name,
        elements,
        _tables_from_labels(elements, add_rows),
        _tables_from_labels(elements, mul_rows),
        index[zero],
        index[one],
    )


# --- builtins ---------------------------------------------------------------

def _t3() -> FiniteSemiring:
    # three-element chain 0 < a < 1 where 1+1 = a and a is additively absorbing
    return semiring_from_labels(
        "t3",
        ("0", "a", "1"),
        (("0", "a", "1"), ("a", "a", "a"), ("1", "a", "a")),
        (("0", "0", "0"), ("0", "a", "a"), ("0", "a", "1")),
        "0",
        "1",
    )


def _s3() -> FiniteSemiring:
    # same carrier as t3 but with idempotent unit: 1+1 = 1
    return semiring_from_labels(
        "s3",
        ("0", "a", "1"),
        (("0", "a", "1"), ("a", "a", "a"), ("1", "a", "1")),
        (("0", "0", "0"), ("0", "a", "a"), ("0", "a", "1")),
        "0",
        "1",
    )


def _two() -> FiniteSemiring:
    # two-element bounded lattice: + is join, * is meet
    return semiring_from_labels(
        "two",
        ("0", "1"),
        (("0", "1"), ("1", "1")),
        (("0", "0"), ("0", "1")),
        "0",
        "1",
    )


def _gf2() -> FiniteSemiring:
    return semiring_from_labels(
        "gf2",
        ("0", "1"),
        (("0", "1"), ("1", "0")),
        (("0", "0"), ("0", "1")),
        "0",
        "1",
    )


def _gf3() -> FiniteSemiring:
    return semiring_from_labels(
        "gf3",
        ("0", "1", "2"),
        (("0", "1", "2"), ("1", "2", "0"), ("2", "0", "1")),
        (("0", "0", "0"), ("0", "1", "2"), ("0", "2", "1")),
        "0",
        "1",
    )


_BUILTINS: dict[str, FiniteSemiring] = {
    a.name: a for a in (_t3(), _s3(), _two(), _gf2(), _gf3())
}

BUILTIN_NAMES: tuple[str, ...] = tuple(sorted(_BUILTINS))


def builtin(name: str) -> FiniteSemiring:
    """Look up one of the stock algebras: gf2, gf3, s3, t3, two."""
    try:
        return _BUILTINS[name]
    except KeyError:
        raise ValueError(
            f"unknown builtin algebra {name!r}; choose from {', '.join(BUILTIN_NAMES)}"
        ) from None


# --- evaluation and identities ----------------------------------------------

Assignment = Mapping[int, int]


def eval_term(alg: FiniteSemiring, t: Term, env: Assignment) -> int:
    """Evaluate t under env (variable index -> element index)."""
    match t:
        case Zero():
            return alg.zero
        case One():
            return alg.one
        case Var(i):
            try:
                return env[i]
            except KeyError:
                raise ValueError(f"unbound variable x{i}") from None
        case Add(l, r):
            return alg.add[eval_term(alg, l, env)][eval_term(alg, r, env)]
        case Mul(l, r):
            return alg.mul[eval_term(alg, l, env)][eval_term(alg, r, env)]
    raise TypeError(f"not a term: {t!r}")


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term
    name: str = ""

    def variable_list(self) -> list[int]:
        return sorted(variables(self.lhs) | variables(self.rhs))


def parse_identity(text: str, name: str = "") -> Identity:
    """Parse "lhs = rhs" into an Identity."""
    parts = text.split("=")
    if len(parts) != 2:
        raise ValueError("an identity must contain exactly one '='")
    return Identity(parse(parts[0]), parse(parts[1]), name)


def holds(alg: FiniteSemiring, ident: Identity) -> tuple[bool, dict[int, int] | None]:
    """Check an identity over all assignments.

    Returns (True, None) or (False, witness) where the witness is the
    lexicographically first counterexample in element-index order, variables
    ascending.
    """
    vs = ident.variable_list()
    for values in itertools.product(range(alg.size), repeat=len(vs)):
        env = dict(zip(vs, values))
        if eval_term(alg, ident.lhs, env) != eval_term(alg, ident.rhs, env):
            return False, env
    return True, None


BOOLEAN_LAW = Identity(parse("1+x+x"), parse("1"), "boolean-law")
PRODUCT_ABSORPTION = Identity(parse("1+x+x*y"), parse("1+x"), "product-absorption")
ABSORPTION_LAW = Identity(parse("x+y+x*y*z"), parse("x+y"), "absorption-law")
DOUBLE_PRODUCT_ABSORPTION = Identity(
    parse("1+x+x*y+x*y"), parse("1+x"), "double-product-absorption"
)
MUL_IDEMPOTENCE = Identity(parse("x*x"), parse("x"), "mul-idempotent")


# --- axiom report -----------------------------------------------------------

_SEMIRING_AXIOMS: tuple[tuple[str, str, str], ...] = (
    ("add-commutative", "x+y", "y+x"),
    ("add-associative", "(x+y)+z", "x+(y+z)"),
    ("zero-add-left", "0+x", "x"),
    ("zero-add-right", "x+0", "x"),
    ("mul-associative", "(x*y)*z", "x*(y*z)"),
    ("one-mul-left", "1*x", "x"),
    ("one-mul-right", "x*1", "x"),
    ("distributive-left", "x*(y+z)", "x*y+x*z"),
    ("distributive-right", "(y+z)*x", "y*x+z*x"),
    ("zero-mul-left", "0*x", "0"),
    ("zero-mul-right", "x*0", "0"),
)

_FLAG_AXIOMS: tuple[tuple[str, str, str], ...] = (
    ("mul-commutative", "x*y", "y*x"),
    ("mul-idempotent", "x*x", "x"),
    ("boolean-law", "1+x+x", "1"),
    ("absorption-law", "x+y+x*y*z", "x+y"),
)

_SEMIRING_AXIOM_NAMES = tuple(name for name, _, _ in _SEMIRING_AXIOMS)


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    ok: bool
    witness: tuple[tuple[int, int], ...] | None  # sorted (variable, element) pairs


@dataclass(frozen=True)
class AxiomReport:
    algebra: str
    checks: tuple[AxiomCheck, ...]

    def check(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def ok(self, name: str) -> bool:
        return self.check(name).ok

    @property
    def is_semiring(self) -> bool:
        return all(self.ok(name) for name in _SEMIRING_AXIOM_NAMES)

    @property
    def is_commutative_idempotent(self) -> bool:
        return (
            self.is_semiring
            and self.ok("mul-commutative")
            and self.ok("mul-idempotent")
        )

    @property
    def is_boolean(self) -> bool:
        return self.is_commutative_idempotent and self.ok("boolean-law")

    @property
    def is_absorptive(self) -> bool:
        return self.is_commutative_idempotent and self.ok("absorption-law")


def check_axioms(alg: FiniteSemiring) -> AxiomReport:
    """Check every semiring axiom plus the commutativity, idempotence,
    boolean, and absorption laws, each with its least counterexample."""
    checks = []
    for name, lhs, rhs in _SEMIRING_AXIOMS + _FLAG_AXIOMS:
        ok, env = holds(alg, Identity(parse(lhs), parse(rhs), name))
        witness = None if env is None else tuple(sorted(env.items()))
        checks.append(AxiomCheck(name, ok, witness))
    return AxiomReport(alg.name, tuple(checks))


# --- lattices and constructions ---------------------------------------------

@dataclass(frozen=True)
class FiniteLattice:
    name: str
    elements: tuple[str, ...]
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    bottom: int
    top: int

    @property
    def size(self) -> int:
        return len(self.elements)


def lattice_problems(lat: FiniteLattice) -> list[str]:
    """Exhaustively check the bounded distributive lattice laws; empty = valid."""
    n = lat.size
    problems = []
    for table, what in ((lat.join, "join"), (lat.meet, "meet")):
        if len(table) != n or any(len(row) != n for row in table):
            return [f"{what} table must be {n}x{n}"]
        if any(not 0 <= v < n for row in table for v in row):
            return [f"{what} table entry out of range"]
    jn, mt = lat.join, lat.meet
    rng = range(n)
    for x in rng:
        if jn[x][x] != x or mt[x][x] != x:
            problems.append(f"idempotence fails at {lat.elements[x]}")
        if jn[lat.bottom][x] != x:
            problems.append(f"bottom is not neutral for join at {lat.elements[x]}")
        if mt[lat.top][x] != x:
            problems.append(f"top is not neutral for meet at {lat.elements[x]}")
    for x in rng:
        for y in rng:
            if jn[x][y] != jn[y][x]:
                problems.append("join is not commutative")
            if mt[x][y] != mt[y][x]:
                problems.append("meet is not commutative")
            if jn[x][mt[x][y]] != x or mt[x][jn[x][y]] != x:
                problems.append("absorption fails")
    for x in rng:
        for y in rng:
            for z in rng:
                if jn[jn[x][y]][z] != jn[x][jn[y][z]]:
                    problems.append("join is not associative")
                if mt[mt[x][y]][z] != mt[x][mt[y][z]]:
                    problems.append("meet is not associative")
                if mt[x][jn[y][z]] != jn[mt[x][y]][mt[x][z]]:
                    problems.append("distributivity fails")
    # deduplicate, keep first occurrences in order
    seen: set[str] = set()
    out = []
    for p in problems:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def boolean_lattice(k: int) -> FiniteLattice:
    """The lattice of subsets of {1..k}, 1 <= k <= 4.

    Elements are sorted by (cardinality, lexicographic) and labeled "0" for
    the empty set, "a" for the full set, and "e<digits>" in between, so that
    lplus1(boolean_lattice(1)) reproduces the t3 labeling exactly.
    """
    if not 1 <= k <= 4:
        raise ValueError(f"k must be between 1 and 4, got {k}")
    universe = frozenset(range(1, k + 1))
    subsets = sorted(
        (
            frozenset(c)
            for r in range(k + 1)
            for c in itertools.combinations(range(1, k + 1), r)
        ),
        key=lambda s: (len(s), tuple(sorted(s))),
    )
    index = {s: i for i, s in enumerate(subsets)}

    def label(s: frozenset[int]) -> str:
        if not s:
            return "0"
        if s == universe:
            return "a"
        return "e" + "".join(str(i) for i in sorted(s))

    n = len(subsets)
    join = tuple(
        tuple(index[subsets[i] | subsets[j]] for j in range(n)) for i in range(n)
    )
    meet = tuple(
        tuple(index[subsets[i] & subsets[j]] for j in range(n)) for i in range(n)
    )
    return FiniteLattice(
        f"b{k}",
        tuple(label(s) for s in subsets),
        join,
        meet,
        index[frozenset()],
        index[universe],
    )


def lplus1(lat: FiniteLattice) -> FiniteSemiring:
    """Adjoin a fresh multiplicative unit to a non-trivial bounded
    distributive lattice.

    On the old carrier + is join and * is meet.  The new unit 1 is neutral
    for *; additively, 0+1 = 1 and every other sum involving 1 collapses to
    the lattice top.  The result always satisfies the absorption law but
    (since 1+1 = top != 1) never the boolean law.
    """
    problems = lattice_problems(lat)
    if problems:
        raise ValueError(f"not a bounded distributive lattice: {problems[0]}")
    if lat.size < 2:
        raise ValueError("trivial lattice rejected: need at least two elements")
    if "1" in lat.elements:
        raise ValueError("lattice already uses the label '1' reserved for the new unit")
    n = lat.size
    unit = n
    top = lat.top
    bottom = lat.bottom

    def add(x: int, y: int) -> int:
        if x != unit and y != unit:
            return lat.join[x][y]
        if (x, y) in ((bottom, unit), (unit, bottom)):
            return unit
        return top

    def mul(x: int, y: int) -> int:
        if x != unit and y != unit:
            return lat.meet[x][y]
        return y if x == unit else x

    size = n + 1
    return FiniteSemiring(
        f"{lat.name}+1",
        lat.elements + ("1",),
        tuple(tuple(add(x, y) for y in range(size)) for x in range(size)),
        tuple(tuple(mul(x, y) for y in range(size)) for x in range(size)),
        bottom,
        unit,
    )


def direct_product(a: FiniteSemiring, b: FiniteSemiring) -> FiniteSemiring:
    """Componentwise product; labels are "(la,lb)" pairs."""
    pairs = [(i, j) for i in range(a.size) for j in range(b.size)]
    index = {p: k for k, p in enumerate(pairs)}
    elements = tuple(f"({a.elements[i]},{b.elements[j]})" for i, j in pairs)
    add = tuple(
        tuple(index[(a.add[i][k], b.add[j][l])] for k, l in pairs) for i, j in pairs
    )
    mul = tuple(
        tuple(index[(a.mul[i][k], b.mul[j][l])] for k, l in pairs) for i, j in pairs
    )
    return FiniteSemiring(
        f"{a.name}x{b.name}",
        elements,
        add,
        mul,
        index[(a.zero, b.zero)],
        index[(a.one, b.one)],
    )


# --- the algebra file format -------------------------------------------------

class AlgebraFormatError(ValueError):
    """Raised on malformed algebra files; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def format_algebra(alg: FiniteSemiring) -> str:
    """Serialize to the line-oriented ASCII format (bit-exact round trip)."""
    lines = [
        f"algebra {alg.name}",
        "elements: " + " ".join(alg.elements),
        f"zero: {alg.elements[alg.zero]}",
        f"one: {alg.elements[alg.one]}",
        "add:",
    ]
    lines += [" ".join(alg.elements[v] for v in row) for row in alg.add]
    lines.append("mul:")
    lines += [" ".join(alg.elements[v] for v in row) for row in alg.mul]
    return "\n".join(lines) + "\n"


def parse_algebra(text: str) -> FiniteSemiring:
    """Parse the line-oriented format emitted by format_algebra."""
    lines = text.split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()

    def get(lineno: int) -> str:
        if lineno > len(lines):
            raise AlgebraFormatError(lineno, "unexpected end of input")
        return lines[lineno - 1]

    head = get(1).split()
    if len(head) != 2 or head[0] != "algebra":
        raise AlgebraFormatError(1, "expected 'algebra <name>'")
    name = head[1]

    parts = get(2).split()
    if not parts or parts[0] != "elements:" or len(parts) < 2:
        raise AlgebraFormatError(2, "expected 'elements: <label> ...'")
    elements = tuple(parts[1:])
    if len(set(elements)) != len(elements):
        raise AlgebraFormatError(2, "duplicate element labels")
    index = {lab: i for i, lab in enumerate(elements)}
    n = len(elements)

    def constant(lineno: int, key: str) -> int:
        parts = get(lineno).split()
        if len(parts) != 2 or parts[0] != f"{key}:":
            raise AlgebraFormatError(lineno, f"expected '{key}: <label>'")
        if parts[1] not in index:
            raise AlgebraFormatError(lineno, f"unknown element label {parts[1]!r}")
        return index[parts[1]]

    zero = constant(3, "zero")
    one = constant(4, "one")

    def table(header_line: int, key: str) -> tuple[tuple[int, ...], ...]:
        if get(header_line).strip() != f"{key}:":
            raise AlgebraFormatError(header_line, f"expected '{key}:'")
        rows = []
        for r in range(n):
            lineno = header_line + 1 + r
            labs = get(lineno).split()
            if len(labs) != n:
                raise AlgebraFormatError(lineno, f"expected {n} labels, got {len(labs)}")
            for lab in labs:
                if lab not in index:
                    raise AlgebraFormatError(lineno, f"unknown element label {lab!r}")
            rows.append(tuple(index[lab] for lab in labs))
        return tuple(rows)

    add = table(5, "add")
    mul = table(6 + n, "mul")
    expected = 6 + 2 * n
    if len(lines) > expected:
        raise AlgebraFormatError(expected + 1, "trailing content after mul table")
    return FiniteSemiring(name, elements, add, mul, zero, one)


def load_algebra(path: str) -> FiniteSemiring:
    with open(path, "r", encoding="ascii") as fh:
        return parse_algebra(fh.read())
