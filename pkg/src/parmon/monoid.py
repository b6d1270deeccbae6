"""Finite partial monoids: tables, validation, totalization, generators.

A partial monoid is a finite carrier with a distinguished identity and a
partially defined product.  The identity multiplies with everything and
acts neutrally.  The product obeys a two-sided chain law: for any triple
(x, y, z), the chain (x*y)*z is fully defined exactly when x*(y*z) is,
and then both chains agree.

Elements are interned to dense integer indices at construction; every
other module speaks indices.  Structures are immutable once built.

File format (UTF-8, line based)::

    # comment line
    elements: 1 x y z
    identity: 1
    x y = x

Exactly one ``elements:`` line and one ``identity:`` line.  A pair with
no product line is undefined.  Products involving the identity are
forced and filled in automatically; writing them out is allowed but
they must agree.  The token ``eps`` is reserved for the empty word and
cannot name an element.
"""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")

EMPTY_WORD_TOKEN = "eps"

DEFAULT_CARRIER_CAP = 256
CARRIER_CAP_ENV = "PARMON_MAX_CARRIER"


def carrier_cap() -> int:
    """Largest carrier the generators will build, env-overridable."""
    raw = os.environ.get(CARRIER_CAP_ENV)
    if raw is None:
        return DEFAULT_CARRIER_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{CARRIER_CAP_ENV} must be an integer, got {raw!r}")


class ParseError(ValueError):
    """Raised for malformed monoid files; carries the 1-based line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PartialMonoid:
    """Immutable finite partial monoid over interned element indices.

    ``products`` is the canonical sorted tuple of (x, y, x*y) triples,
    identity rows included.  Construction checks structural invariants
    only; the chain law is the job of :func:`validate`.
    """

    __slots__ = ("elements", "identity", "products",
                 "_table", "_index", "_facts", "_hash")

    def __init__(self, elements: Iterable[str], identity: int,
                 products: Mapping[tuple[int, int], int]):
        elements = tuple(elements)
        if not elements:
            raise ValueError("a partial monoid needs at least the identity element")
        seen = set()
        for name in elements:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise ValueError(f"bad element name {name!r}: use letters, digits, underscore")
            if name == EMPTY_WORD_TOKEN:
                raise ValueError(f"{EMPTY_WORD_TOKEN!r} is reserved for the empty word")
            if name in seen:
                raise ValueError(f"duplicate element name {name!r}")
            seen.add(name)
        n = len(elements)
        if not 0 <= identity < n:
            raise ValueError(f"identity index {identity} out of range")

        table: dict[tuple[int, int], int] = {}
        for (x, y), z in products.items():
            for e in (x, y, z):
                if not 0 <= e < n:
                    raise ValueError(f"product entry index {e} out of range")
            if table.get((x, y), z) != z:
                raise ValueError(
                    f"conflicting products for {elements[x]} {elements[y]}")
            table[(x, y)] = z
        # identity rows are forced, fill them in and reject contradictions
        for x in range(n):
            for key in ((x, identity), (identity, x)):
                if table.get(key, x) != x:
                    a, b = key
                    raise ValueError(
                        f"product {elements[a]} {elements[b]} = "
                        f"{elements[table[key]]} contradicts the identity law")
                table[key] = x

        self.elements = elements
        self.identity = identity
        self.products = tuple(sorted((x, y, z) for (x, y), z in table.items()))
        self._table = table
        self._index = {name: i for i, name in enumerate(elements)}
        facts: dict[int, list[tuple[int, int]]] = {}
        for x, y, z in self.products:
            facts.setdefault(z, []).append((x, y))
        self._facts = {z: tuple(ps) for z, ps in facts.items()}
        self._hash = hash((self.elements, self.identity, self.products))

    # -------------------------------------------------- basic queries

    @property
    def size(self) -> int:
        return len(self.elements)

    def mul(self, x: int, y: int) -> Optional[int]:
        """x*y if defined, else None."""
        n = len(self.elements)
        if not (0 <= x < n and 0 <= y < n):
            raise ValueError(f"unknown element index in product ({x}, {y})")
        return self._table.get((x, y))

    def defined(self, x: int, y: int) -> bool:
        return self.mul(x, y) is not None

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown element name {name!r}")

    def name(self, i: int) -> str:
        if not 0 <= i < len(self.elements):
            raise ValueError(f"unknown element index {i}")
        return self.elements[i]

    def non_identity(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.elements)) if i != self.identity)

    def factorizations(self, z: int) -> tuple[tuple[int, int], ...]:
        """All pairs (x, y) with x*y = z, identity factorizations included."""
        return self._facts.get(z, ())

    # -------------------------------------------------- value semantics

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialMonoid):
            return NotImplemented
        return (self.elements == other.elements
                and self.identity == other.identity
                and self.products == other.products)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return (f"PartialMonoid({len(self.elements)} elements, "
                f"identity={self.elements[self.identity]!r}, "
                f"{len(self.products)} products)")


# ------------------------------------------------------------------ parsing

def parse_monoid(text: str) -> PartialMonoid:
    """Parse the line-based monoid file format."""
    elements_line: Optional[tuple[int, list[str]]] = None
    identity_line: Optional[tuple[int, str]] = None
    product_lines: list[tuple[int, str, str, str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "elements:":
            if elements_line is not None:
                raise ParseError("duplicate elements: line", lineno)
            if len(tokens) == 1:
                raise ParseError("elements: line lists no elements", lineno)
            elements_line = (lineno, tokens[1:])
        elif tokens[0] == "identity:":
            if identity_line is not None:
                raise ParseError("duplicate identity: line", lineno)
            if len(tokens) != 2:
                raise ParseError("identity: line needs exactly one name", lineno)
            identity_line = (lineno, tokens[1])
        elif len(tokens) == 4 and tokens[2] == "=":
            product_lines.append((lineno, tokens[0], tokens[1], tokens[3]))
        else:
            raise ParseError(f"cannot parse {line!r}", lineno)

    if elements_line is None:
        raise ParseError("missing elements: line")
    if identity_line is None:
        raise ParseError("missing identity: line")

    eline, names = elements_line
    index = {}
    for name in names:
        if name in index:
            raise ParseError(f"duplicate element name {name!r}", eline)
        index[name] = len(index)
    # name syntax is rechecked by the constructor; check eps early for a
    # friendlier message with the line number
    if EMPTY_WORD_TOKEN in index:
        raise ParseError(f"{EMPTY_WORD_TOKEN!r} cannot name an element", eline)

    iline, iname = identity_line
    if iname not in index:
        raise ParseError(f"unknown identity element {iname!r}", iline)
    identity = index[iname]

    products: dict[tuple[int, int], int] = {}
    for lineno, xs, ys, zs in product_lines:
        for t in (xs, ys, zs):
            if t not in index:
                raise ParseError(f"unknown element name {t!r}", lineno)
        key = (index[xs], index[ys])
        if key in products:
            raise ParseError(f"duplicate product line for {xs} {ys}", lineno)
        z = index[zs]
        if identity in key:
            forced = key[1] if key[0] == identity else key[0]
            if z != forced:
                raise ParseError(
                    f"{xs} {ys} = {zs} contradicts the identity law", lineno)
        products[key] = z

    try:
        return PartialMonoid(names, identity, products)
    except ValueError as exc:
        raise ParseError(str(exc))


def serialize_monoid(m: PartialMonoid) -> str:
    """Canonical file form; parse_monoid(serialize_monoid(m)) == m."""
    lines = ["elements: " + " ".join(m.elements),
             "identity: " + m.elements[m.identity]]
    for x, y, z in m.products:
        if m.identity in (x, y):
            continue  # forced rows are left implicit
        lines.append(f"{m.elements[x]} {m.elements[y]} = {m.elements[z]}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ validation

@dataclass(frozen=True)
class Violation:
    x: int
    y: int
    z: int
    code: str  # "left-only" | "right-only" | "unequal"
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations


def validate(m: PartialMonoid) -> ValidationReport:
    """Exhaustive chain-law scan over all triples.

    Cross-checked on every call against the totalized product: both
    routes must flag exactly the same triples.
    """
    viols = []
    n = len(m.elements)
    for x in range(n):
        nx = m.elements[x]
        for y in range(n):
            xy = m.mul(x, y)
            ny = m.elements[y]
            for z in range(n):
                yz = m.mul(y, z)
                left = None if xy is None else m.mul(xy, z)
                right = None if yz is None else m.mul(x, yz)
                nz = m.elements[z]
                if (left is None) and (right is None):
                    continue
                if right is None:
                    viols.append(Violation(
                        x, y, z, "left-only",
                        f"({nx} {ny}) {nz} is defined but {nx} ({ny} {nz}) is not"))
                elif left is None:
                    viols.append(Violation(
                        x, y, z, "right-only",
                        f"{nx} ({ny} {nz}) is defined but ({nx} {ny}) {nz} is not"))
                elif left != right:
                    viols.append(Violation(
                        x, y, z, "unequal",
                        f"({nx} {ny}) {nz} = {m.elements[left]} but "
                        f"{nx} ({ny} {nz}) = {m.elements[right]}"))
    report = ValidationReport(tuple(viols))

    flagged = {(v.x, v.y, v.z) for v in report.violations}
    oracle = set(total_associativity_witnesses(totalize(m)))
    if flagged != oracle:
        raise RuntimeError(
            "internal disagreement between the chain-law scan and the "
            f"totalized oracle: {sorted(flagged) } vs {sorted(oracle)}")
    return report


# ------------------------------------------------------------------ totalization

@dataclass(frozen=True)
class TotalMonoid:
    """The partial monoid with an absorbing zero adjoined.

    Undefined products go to the zero; the zero swallows everything.
    The element list is the source carrier plus the zero, zero last.
    """

    elements: tuple[str, ...]
    identity: int
    zero: int
    table: tuple[tuple[int, ...], ...]

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]


def totalize(m: PartialMonoid) -> TotalMonoid:
    n = len(m.elements)
    zero_name = next(c for c in ("0", "zero", "_zero", "o_zero")
                     if c not in m.elements)
    rows = [[n] * (n + 1) for _ in range(n + 1)]
    for x, y, z in m.products:
        rows[x][y] = z
    return TotalMonoid(m.elements + (zero_name,), m.identity, n,
                       tuple(tuple(r) for r in rows))


def total_associativity_witnesses(t: TotalMonoid) -> list[tuple[int, int, int]]:
    """Triples where the totalized product fails to associate.

    Zero-involving triples never fail (the zero absorbs), so witnesses
    always lie in the original carrier and are comparable one-for-one
    with the chain-law scan of :func:`validate`.
    """
    n = len(t.elements)
    out = []
    for x in range(n):
        row_x = t.table[x]
        for y in range(n):
            xy = row_x[y]
            for z in range(n):
                if t.table[xy][z] != row_x[t.table[y][z]]:
                    out.append((x, y, z))
    return out


# ------------------------------------------------------------------ structure probes

def is_catenary(m: PartialMonoid) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Does definedness chain through non-identity middles?

    Catenary: whenever x*y and y*z are defined with y not the identity,
    (x*y)*z is defined too.  Returns (True, None) or (False, witness).
    Assumes m validates.
    """
    n = len(m.elements)
    for x in range(n):
        for y in range(n):
            if y == m.identity:
                continue
            xy = m.mul(x, y)
            if xy is None:
                continue
            for z in range(n):
                if m.mul(y, z) is not None and m.mul(xy, z) is None:
                    return False, (x, y, z)
    return True, None


@dataclass(frozen=True)
class InvertibilityFlags:
    left: bool   # some x' has x'*x = identity
    right: bool  # some x' has x*x' = identity


def invertibility_report(m: PartialMonoid) -> tuple[InvertibilityFlags, ...]:
    """Per-element invertibility flags, indexed like m.elements.

    Also rechecks a consequence of the chain law that every valid monoid
    must satisfy: a right invertible element composes on the right with
    everything, a left invertible one on the left.  Assumes m validates.
    """
    n = len(m.elements)
    left = [False] * n
    right = [False] * n
    for x, y, z in m.products:
        if z == m.identity:
            right[x] = True
            left[y] = True
    for x in range(n):
        if right[x] and any(m.mul(y, x) is None for y in range(n)):
            raise RuntimeError(
                f"right invertible {m.elements[x]} misses a left composition; "
                "the monoid cannot be valid")
        if left[x] and any(m.mul(x, y) is None for y in range(n)):
            raise RuntimeError(
                f"left invertible {m.elements[x]} misses a right composition; "
                "the monoid cannot be valid")
    return tuple(InvertibilityFlags(left[i], right[i]) for i in range(n))


# ------------------------------------------------------------------ generators

def _check_cap(size: int) -> None:
    cap = carrier_cap()
    if size > cap:
        raise ValueError(f"carrier size {size} exceeds cap {cap} "
                         f"(override with {CARRIER_CAP_ENV})")


def gen_disjoint_union_monoid(n: int, cap: int = 4) -> PartialMonoid:
    """Subsets of an n-element set; union, defined only when disjoint.

    Identity is the empty set.  Carrier size 2**n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise ValueError(f"n = {n} exceeds the generator cap {cap}")
    _check_cap(2 ** n)
    masks = sorted(range(2 ** n), key=lambda s: (bin(s).count("1"), s))
    names = ["e" if s == 0 else "s" + "".join(str(i) for i in range(n) if s >> i & 1)
             for s in masks]
    pos = {s: i for i, s in enumerate(masks)}
    products = {}
    for a in masks:
        for b in masks:
            if a & b == 0:
                products[(pos[a], pos[b])] = pos[a | b]
    return PartialMonoid(names, pos[0], products)


def gen_no_common_letters_monoid(letters: Iterable[str]) -> PartialMonoid:
    """Distinct-letter words under concatenation.

    The carrier is every word using each letter at most once (the empty
    word is the identity, named "1"); u*v is the concatenation when u
    and v share no letter, undefined otherwise.
    """
    letters = tuple(letters)
    if len(set(letters)) != len(letters):
        raise ValueError("duplicate letters")
    if len(letters) > 4:
        raise ValueError("at most 4 letters")
    for c in letters:
        if len(c) != 1 or not c.isalpha():
            raise ValueError(f"letters must be single alphabetic characters, got {c!r}")

    words = [""]
    for r in range(1, len(letters) + 1):
        words.extend("".join(p) for p in
                     sorted(itertools.permutations(letters, r)))
    _check_cap(len(words))
    names = ["1" if w == "" else w for w in words]
    pos = {w: i for i, w in enumerate(words)}
    products = {}
    for u in words:
        su = set(u)
        for v in words:
            if su.isdisjoint(v):
                products[(pos[u], pos[v])] = pos[u + v]
    return PartialMonoid(names, pos[""], products)


# ------------------------------------------------------------------ random families

def _shuffled(rng, canonical_names: list[str], identity: int,
              products: dict[tuple[int, int], int]) -> PartialMonoid:
    """Permute element order so nothing can rely on identity-first layouts."""
    n = len(canonical_names)
    perm = list(range(n))
    rng.shuffle(perm)  # perm[i] = new index of canonical element i
    names = [""] * n
    for i, p in enumerate(perm):
        names[p] = canonical_names[i]
    moved = {(perm[x], perm[y]): perm[z] for (x, y), z in products.items()}
    return PartialMonoid(names, perm[identity], moved)


def _random_null(rng, max_size: int) -> PartialMonoid:
    k = rng.randint(0, min(5, max_size - 1))
    return _shuffled(rng, ["1"] + [f"q{i}" for i in range(1, k + 1)], 0, {})


def _random_cyclic(rng, max_size: int) -> PartialMonoid:
    n = rng.randint(1, max_size)
    products = {(i, j): (i + j) % n for i in range(n) for j in range(n)}
    return _shuffled(rng, [f"g{i}" for i in range(n)], 0, products)


def _random_truncated_words(rng, max_size: int) -> PartialMonoid:
    # words over k letters up to length cap, concatenation when it fits
    options = [(1, L) for L in range(1, max_size)]
    if max_size >= 7:
        options.append((2, 2))
    k, cap = rng.choice(options)
    alphabet = "ab"[:k]
    words = [""]
    for L in range(1, cap + 1):
        words.extend("".join(p) for p in itertools.product(alphabet, repeat=L))
    pos = {w: i for i, w in enumerate(words)}
    products = {(pos[u], pos[v]): pos[u + v]
                for u in words for v in words if len(u) + len(v) <= cap}
    names = ["1" if w == "" else w for w in words]
    return PartialMonoid(names, 0, products)


def _random_modular(rng, max_size: int) -> PartialMonoid:
    # nonzero residues mod n, product defined when it stays nonzero
    n = rng.choice([n for n in (4, 6, 8, 9) if n - 1 <= max_size])
    products = {}
    for i in range(1, n):
        for j in range(1, n):
            p = i * j % n
            if p != 0:
                products[(i - 1, j - 1)] = p - 1
    return _shuffled(rng, [f"m{i}" for i in range(1, n)], 0, products)


def _random_subsets(rng, max_size: int) -> PartialMonoid:
    n = rng.randint(0, 3 if max_size >= 8 else 2)
    return gen_disjoint_union_monoid(n)


def _random_distinct_letters(rng, max_size: int) -> PartialMonoid:
    k = 2 if max_size >= 5 else 1
    letters = rng.sample("abcdefgh", k)
    return gen_no_common_letters_monoid(letters)


def _random_sparse(rng, max_size: int) -> PartialMonoid:
    """Rejection-sample a small sparse table until it validates."""
    for _ in range(30):
        n = rng.randint(2, min(5, max_size))
        products = {}
        for _ in range(rng.randint(1, 4)):
            x = rng.randrange(1, n)
            y = rng.randrange(1, n)
            products[(x, y)] = rng.randrange(n)
        try:
            m = _shuffled(rng, ["1"] + [f"p{i}" for i in range(1, n)], 0, products)
        except ValueError:
            continue
        if validate(m).valid:
            return m
    return _random_null(rng, max_size)


_FAMILIES = (_random_null, _random_cyclic, _random_truncated_words,
             _random_modular, _random_subsets, _random_distinct_letters,
             _random_sparse)


def random_monoid(rng, max_size: int = 8) -> PartialMonoid:
    """A random valid partial monoid with carrier at most max_size.

    Draws from a mix of families: no products at all, cyclic groups,
    length-capped free words, nonzero residues, disjoint subset unions,
    distinct-letter words, and rejection-sampled sparse tables.
    """
    if max_size < 1:
        raise ValueError("max_size must be positive")
    return rng.choice(_FAMILIES)(rng, max_size)
