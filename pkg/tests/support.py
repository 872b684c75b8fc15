"""Shared test helpers: independent mini-evaluator, term generators, and the
exhaustive congruence oracle.

Everything here is deliberately self-contained so that oracle-based tests do
not exercise the code paths they are checking: the evaluator works over
label-keyed dict tables, and the congruence oracle enumerates raw partitions.
"""

from __future__ import annotations

import itertools
from random import Random

from hypothesis import strategies as st

from misr import Add, Mul, One, ONE, Term, Var, Zero, ZERO

# The three-element chain model used as the equality oracle, transcribed
# independently of the package's builtin tables.
T3_LABELS = ("0", "a", "1")
T3_ADD = {
    ("0", "0"): "0", ("0", "a"): "a", ("0", "1"): "1",
    ("a", "0"): "a", ("a", "a"): "a", ("a", "1"): "a",
    ("1", "0"): "1", ("1", "a"): "a", ("1", "1"): "a",
}
T3_MUL = {
    ("0", "0"): "0", ("0", "a"): "0", ("0", "1"): "0",
    ("a", "0"): "0", ("a", "a"): "a", ("a", "1"): "a",
    ("1", "0"): "0", ("1", "a"): "a", ("1", "1"): "1",
}


def eval_labels(t: Term, env: dict[int, str], add, mul, zero="0", one="1") -> str:
    """Structural evaluation over label-keyed tables; independent of misr.eval_term."""
    if isinstance(t, Zero):
        return zero
    if isinstance(t, One):
        return one
    if isinstance(t, Var):
        return env[t.index]
    if isinstance(t, Add):
        return add[(eval_labels(t.left, env, add, mul, zero, one),
                    eval_labels(t.right, env, add, mul, zero, one))]
    if isinstance(t, Mul):
        return mul[(eval_labels(t.left, env, add, mul, zero, one),
                    eval_labels(t.right, env, add, mul, zero, one))]
    raise TypeError(f"not a term: {t!r}")


def t3_agree(t: Term, u: Term, n_vars: int = 3) -> bool:
    """Do t and u evaluate identically over every T3 assignment?"""
    for point in itertools.product(T3_LABELS, repeat=n_vars):
        env = {i + 1: point[i] for i in range(n_vars)}
        if eval_labels(t, env, T3_ADD, T3_MUL) != eval_labels(u, env, T3_ADD, T3_MUL):
            return False
    return True


def random_term(rng: Random, max_nodes: int, n_vars: int) -> Term:
    """A random term with at most max_nodes AST nodes."""

    def go(budget: int) -> tuple[Term, int]:
        if budget < 3 or rng.random() < 0.3:
            pick = rng.randrange(2 + n_vars)
            if pick == 0:
                return ZERO, 1
            if pick == 1:
                return ONE, 1
            return Var(pick - 1), 1
        left, ln = go(budget - 2)
        right, rn = go(budget - 1 - ln)
        node = Add if rng.random() < 0.5 else Mul
        return node(left, right), 1 + ln + rn

    term, _ = go(max_nodes)
    return term


def terms_strategy(max_index: int = 3, max_leaves: int = 20):
    atoms = st.one_of(
        st.just(ZERO),
        st.just(ONE),
        st.integers(1, max_index).map(Var),
    )
    return st.recursive(
        atoms,
        lambda kids: st.one_of(
            st.tuples(kids, kids).map(lambda p: Add(*p)),
            st.tuples(kids, kids).map(lambda p: Mul(*p)),
        ),
        max_leaves=max_leaves,
    )


# --- exhaustive congruence oracle (partitions of small carriers) -------------

def all_partitions(n: int):
    """Every partition of range(n), via restricted growth strings."""

    def rec(i: int, blocks: list[list[int]]):
        if i == n:
            yield [tuple(b) for b in blocks]
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def _compatible(add, mul, n: int, block_of: dict[int, int]) -> bool:
    for x in range(n):
        for y in range(x + 1, n):
            if block_of[x] != block_of[y]:
                continue
            for c in range(n):
                if block_of[add[x][c]] != block_of[add[y][c]]:
                    return False
                if block_of[add[c][x]] != block_of[add[c][y]]:
                    return False
                if block_of[mul[x][c]] != block_of[mul[y][c]]:
                    return False
                if block_of[mul[c][x]] != block_of[mul[c][y]]:
                    return False
    return True


def si_by_exhaustion(alg) -> tuple[bool, frozenset[frozenset[int]] | None]:
    """Subdirect irreducibility via all partitions: intersect every
    non-discrete congruence and test whether the intersection is discrete."""
    n = alg.size
    add, mul = alg.add, alg.mul
    congruences = []
    for blocks in all_partitions(n):
        block_of = {x: b for b, block in enumerate(blocks) for x in block}
        if len(blocks) == n:
            continue  # discrete
        if _compatible(add, mul, n, block_of):
            congruences.append(blocks)
    if not congruences:
        # no non-discrete congruence at all cannot happen with n >= 2
        # (the full partition is always compatible), but keep it honest:
        return False, None
    # intersect: x ~ y iff related in every non-discrete congruence
    def related(x, y, blocks):
        return any(x in b and y in b for b in blocks)

    classes = []
    seen = set()
    for x in range(n):
        if x in seen:
            continue
        cls = {x}
        for y in range(n):
            if y != x and all(related(x, y, b) for b in congruences):
                cls.add(y)
        seen |= cls
        classes.append(frozenset(cls))
    monolith = frozenset(classes)
    discrete = all(len(c) == 1 for c in classes)
    return (not discrete), (None if discrete else monolith)
