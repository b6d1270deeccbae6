"""Binary trees over irreducible words, rotations, and evaluation.

A tree is a leaf labelled by an irreducible word or a pairing of two
trees.  The rotation rule rewrites any subtree (t1 t2) t3 to
t1 (t2 t3).  Rotation preserves the left-to-right leaf sequence and
strictly decreases the rank

    rank(leaf) = 0
    rank(t1 t2) = rank(t1) + rank(t2) + leaves(t1) - 1

so rewriting terminates, and the rank-zero trees are exactly the right
combs.  Evaluating a tree multiplies the leaf labels with the star
product in the tree's bracketing; rotating a tree keeps the evaluation
inside one convertibility class even when star is not associative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .monoid import EMPTY_WORD_TOKEN, PartialMonoid
from .rewriting import convertible_bounded
from .star import star
from .words import Word, is_irreducible


@dataclass(frozen=True)
class Leaf:
    label: Word


@dataclass(frozen=True)
class Node:
    left: "Tree"
    right: "Tree"


Tree = Union[Leaf, Node]


def leaves(t: Tree) -> int:
    """Number of leaves."""
    if isinstance(t, Leaf):
        return 1
    return leaves(t.left) + leaves(t.right)


def leaf_labels(t: Tree) -> list[Word]:
    if isinstance(t, Leaf):
        return [t.label]
    return leaf_labels(t.left) + leaf_labels(t.right)


def rank(t: Tree) -> int:
    """Termination measure for rotation; zero exactly on right combs."""
    if isinstance(t, Leaf):
        return 0
    return rank(t.left) + rank(t.right) + leaves(t.left) - 1


def rotations(t: Tree) -> set[Tree]:
    """All trees one rotation away."""
    if isinstance(t, Leaf):
        return set()
    out = set()
    if isinstance(t.left, Node):
        out.add(Node(t.left.left, Node(t.left.right, t.right)))
    out.update(Node(l, t.right) for l in rotations(t.left))
    out.update(Node(t.left, r) for r in rotations(t.right))
    return out


def rotation_closure(t: Tree) -> set[Tree]:
    """Every tree reachable by rotations, t included."""
    seen = {t}
    frontier = [t]
    while frontier:
        nxt = []
        for s in frontier:
            for r in rotations(s):
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return seen


def right_comb(t: Tree) -> Tree:
    """The unique rotation normal form: same leaves, fully right-nested."""
    labels = leaf_labels(t)
    comb: Tree = Leaf(labels[-1])
    for label in reversed(labels[:-1]):
        comb = Node(Leaf(label), comb)
    return comb


def evaluate(m: PartialMonoid, t: Tree) -> Word:
    """Multiply the leaf labels with star, following the bracketing."""
    if isinstance(t, Leaf):
        if not is_irreducible(m, t.label):
            raise ValueError(f"leaf label {t.label} is not irreducible")
        return t.label
    return star(m, evaluate(m, t.left), evaluate(m, t.right))


def verify_rotation_invariance(m: PartialMonoid, t: Tree) -> bool:
    """Are the evaluations of all rotations of t interconvertible?

    Each comparison searches for a conversion capped at the combined
    letter count of the leaf labels; every bracketing evaluates inside
    that length.
    """
    cap = sum(len(label) for label in leaf_labels(t))
    base = evaluate(m, t)
    return all(
        convertible_bounded(m, base, evaluate(m, s), cap) is not None
        for s in rotation_closure(t))


# ------------------------------------------------------------------ text form

def format_tree(m: PartialMonoid, t: Tree) -> str:
    if isinstance(t, Leaf):
        if not t.label:
            return EMPTY_WORD_TOKEN
        return "·".join(m.name(c) for c in t.label)
    return f"({format_tree(m, t.left)} {format_tree(m, t.right)})"


def parse_tree(m: PartialMonoid, text: str) -> Tree:
    """Fully bracketed form: a leaf name, or ( tree tree )."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse() -> Tree:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of tree")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            left = parse()
            right = parse()
            if pos >= len(tokens) or tokens[pos] != ")":
                raise ValueError("expected ')' in tree")
            pos += 1
            return Node(left, right)
        if tok == ")":
            raise ValueError("unexpected ')' in tree")
        if tok == EMPTY_WORD_TOKEN:
            return Leaf(())
        return Leaf((m.index(tok),))

    t = parse()
    if pos != len(tokens):
        raise ValueError(f"trailing input after tree: {' '.join(tokens[pos:])!r}")
    return t
