"""String rewriting induced by a partial product, and the left standard strategy.

Two rule shapes: a two-letter factor whose product is defined contracts
to the product letter, and an identity letter erases.  Every step
shortens the word by one, so reduction terminates and the reachable-word
graph is a finite DAG; normal form sets come from a memoized traversal.

The left standard strategy is the deterministic schedule: erase identity
letters first (leftmost first), then repeatedly contract the leftmost
defined adjacent pair.  When that pair multiplies to the identity the
freshly produced letter is erased in the same move; the chain law forces
the prefix left of such a pair to be empty.  The strategy reaches a
unique normal form, written lstd, and each of its moves is one or two
plain reduction steps, so lstd(w) is always one of w's normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .monoid import PartialMonoid
from .words import Word, is_irreducible


@dataclass(frozen=True)
class RuleSet:
    """The rewriting rules of a partial monoid, in deterministic order.

    product_rules lists ((x, y), x*y) for every defined pair, sorted by
    (x, y); identity_letter is the left side of the erasing rule.
    """

    product_rules: tuple[tuple[tuple[int, int], int], ...]
    identity_letter: int


def build_rules(m: PartialMonoid) -> RuleSet:
    return RuleSet(tuple(((x, y), z) for x, y, z in m.products), m.identity)


def one_step_reductions(m: PartialMonoid, w: Word) -> set[tuple[int, Word]]:
    """All single reduction steps as (position, result) pairs."""
    out = set()
    for i, c in enumerate(w):
        if c == m.identity:
            out.add((i, w[:i] + w[i + 1:]))
    for i in range(len(w) - 1):
        z = m.mul(w[i], w[i + 1])
        if z is not None:
            out.add((i, w[:i] + (z,) + w[i + 2:]))
    return out


@lru_cache(maxsize=None)
def normal_forms(m: PartialMonoid, w: Word) -> frozenset[Word]:
    """Every irreducible word reachable from w, by exhaustive traversal."""
    steps = one_step_reductions(m, w)
    if not steps:
        return frozenset((w,))
    return frozenset().union(*(normal_forms(m, r) for _, r in steps))


def strip_identities(m: PartialMonoid, w: Word) -> Word:
    """The unique identity-free word reachable by erasing steps alone."""
    return tuple(c for c in w if c != m.identity)


@dataclass(frozen=True)
class LstdDecomposition:
    """w = u + (x, y) + v with u + (x,) the longest irreducible prefix.

    Equivalently (x, y) is the leftmost adjacent defined pair.  Only
    identity-free reducible words decompose.
    """

    u: Word
    x: int
    y: int
    v: Word

    @property
    def max_irreducible_prefix(self) -> Word:
        return self.u + (self.x,)


def left_standard_decomposition(m: PartialMonoid, w: Word) -> LstdDecomposition:
    if m.identity in w:
        raise ValueError("word contains the identity letter")
    for i in range(len(w) - 1):
        if m.mul(w[i], w[i + 1]) is not None:
            return LstdDecomposition(w[:i], w[i], w[i + 1], w[i + 2:])
    raise ValueError("word is irreducible, nothing to decompose")


def left_standard_step(m: PartialMonoid, w: Word) -> Word:
    """One move of the deterministic left standard schedule."""
    for i, c in enumerate(w):
        if c == m.identity:
            return w[:i] + w[i + 1:]
    d = left_standard_decomposition(m, w)
    z = m.mul(d.x, d.y)
    if z == m.identity:
        return d.u + d.v  # annihilating pair; the chain law gives u = ()
    return d.u + (z,) + d.v


def left_standard_successors(m: PartialMonoid, w: Word) -> set[Word]:
    """The one-step left standard relation, identity erasure at any position.

    On words with identity letters: every single erasure.  On
    identity-free reducible words: the single leftmost contraction.
    The deterministic schedule always picks one of these.
    """
    if m.identity in w:
        return {w[:i] + w[i + 1:] for i, c in enumerate(w) if c == m.identity}
    if is_irreducible(m, w):
        return set()
    return {left_standard_step(m, w)}


@lru_cache(maxsize=None)
def lstd(m: PartialMonoid, w: Word) -> Word:
    """The left standard normal form.

    Single left-to-right pass: keep the already-irreducible prefix on a
    stack; an incoming letter merges with the stack top while products
    are defined, and a merge to the identity drops both letters.  This
    is exactly iterated left_standard_step, without the rescans.
    """
    identity = m.identity
    mul = m.mul
    stack: list[int] = []
    for c in w:
        if c == identity:
            continue
        cur = c
        while True:
            if not stack:
                stack.append(cur)
                break
            z = mul(stack[-1], cur)
            if z is None:
                stack.append(cur)
                break
            stack.pop()
            if z == identity:
                break
            cur = z
    return tuple(stack)


@dataclass(frozen=True)
class TraceStep:
    source: Word
    rule: str
    position: int
    result: Word


@dataclass(frozen=True)
class ReductionTrace:
    """The left standard run as explicit steps; start == result when irreducible."""

    start: Word
    steps: tuple[TraceStep, ...]

    @property
    def result(self) -> Word:
        return self.steps[-1].result if self.steps else self.start


def lstd_trace(m: PartialMonoid, w: Word) -> ReductionTrace:
    """lstd with bookkeeping: identity erasures first, then contractions."""
    steps = []
    cur = w
    while True:
        if m.identity in cur:
            pos = cur.index(m.identity)
            rule = f"{m.name(m.identity)} -> eps"
        else:
            try:
                d = left_standard_decomposition(m, cur)
            except ValueError:
                break
            pos = len(d.u)
            z = m.mul(d.x, d.y)
            rhs = "eps" if z == m.identity else m.name(z)
            rule = f"{m.name(d.x)} {m.name(d.y)} -> {rhs}"
        nxt = left_standard_step(m, cur)
        steps.append(TraceStep(cur, rule, pos, nxt))
        cur = nxt
    trace = ReductionTrace(w, tuple(steps))
    assert trace.result == lstd(m, w)
    return trace


# ------------------------------------------------------------------ convertibility

def expansions(m: PartialMonoid, w: Word, max_len: int) -> list[Word]:
    """All single reverse steps that stay within max_len, in stable order.

    Reverse erasure inserts the identity letter anywhere; reverse
    contraction replaces a letter by any defined pair producing it.
    """
    if len(w) >= max_len:
        return []
    out = []
    for i in range(len(w) + 1):
        out.append(w[:i] + (m.identity,) + w[i:])
    for i, c in enumerate(w):
        for x, y in m.factorizations(c):
            out.append(w[:i] + (x, y) + w[i + 1:])
    return out


def _neighbors(m: PartialMonoid, w: Word, max_len: int) -> list[Word]:
    down = sorted(one_step_reductions(m, w))
    return [r for _, r in down] + expansions(m, w, max_len)


def convertible_bounded(m: PartialMonoid, u: Word, v: Word,
                        max_len: Optional[int] = None) -> Optional[list[Word]]:
    """Search for a conversion u <-> ... <-> v through words of bounded length.

    Bidirectional breadth-first search over single steps in either
    direction, never visiting a word longer than max_len (default
    len(u) + len(v)).  Returns the path as a word list, or None when no
    conversion exists within the bound.  None means not found, not
    refuted: a longer detour could still connect the two words.
    """
    if max_len is None:
        max_len = len(u) + len(v)
    if u == v:
        return [u]
    parents_a: dict[Word, Optional[Word]] = {u: None}
    parents_b: dict[Word, Optional[Word]] = {v: None}
    frontier_a, frontier_b = [u], [v]

    def stitch(meet: Word) -> list[Word]:
        path: list[Word] = []
        node: Optional[Word] = meet
        while node is not None:
            path.append(node)
            node = parents_a[node]
        path.reverse()
        node = parents_b[meet]
        while node is not None:
            path.append(node)
            node = parents_b[node]
        return path

    while frontier_a and frontier_b:
        if len(frontier_a) > len(frontier_b):
            frontier_a, frontier_b = frontier_b, frontier_a
            parents_a, parents_b = parents_b, parents_a
        nxt = []
        for w in frontier_a:
            for nb in _neighbors(m, w, max_len):
                if nb in parents_a:
                    continue
                parents_a[nb] = w
                if nb in parents_b:
                    path = stitch(nb)
                    return path if path[0] == u else path[::-1]
                nxt.append(nb)
        frontier_a = nxt
    return None
