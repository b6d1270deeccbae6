"""Independent brute-force reimplementations used to pin expected values.

Everything here works straight off the product table with dumb loops and
no shared code paths with the package internals, so a bug would have to
appear twice, in two different shapes, to slip through.
"""

import itertools


def table_of(m):
    return {(x, y): z for x, y, z in m.products}


def brute_chain_violations(m):
    """Triples where the two product chains disagree on definedness or value."""
    t = table_of(m)
    n = len(m.elements)
    bad = set()
    for x, y, z in itertools.product(range(n), repeat=3):
        left = t.get((t[(x, y)], z)) if (x, y) in t else None
        right = t.get((x, t[(y, z)])) if (y, z) in t else None
        left_def = (x, y) in t and (t[(x, y)], z) in t
        right_def = (y, z) in t and (x, t[(y, z)]) in t
        if left_def != right_def or (left_def and left != right):
            bad.add((x, y, z))
    return bad


def brute_irreducible(m, max_len):
    """Filter every word up to max_len by the two reducibility conditions."""
    t = table_of(m)
    out = []
    for length in range(max_len + 1):
        for w in itertools.product(range(len(m.elements)), repeat=length):
            if m.identity in w:
                continue
            if any((w[i], w[i + 1]) in t for i in range(len(w) - 1)):
                continue
            out.append(w)
    return out


def brute_one_step(m, w):
    t = table_of(m)
    out = set()
    for i in range(len(w)):
        if w[i] == m.identity:
            out.add(w[:i] + w[i + 1:])
    for i in range(len(w) - 1):
        if (w[i], w[i + 1]) in t:
            out.add(w[:i] + (t[(w[i], w[i + 1])],) + w[i + 2:])
    return out


def brute_normal_forms(m, w):
    """Unmemoized depth-first exploration of the whole reduction graph."""
    succ = brute_one_step(m, w)
    if not succ:
        return {w}
    out = set()
    for r in succ:
        out |= brute_normal_forms(m, r)
    return out


def brute_classify(m):
    """Fork classification by raw table lookups, in (x, y, z) order."""
    t = table_of(m)
    n = len(m.elements)
    out = []
    for x, y, z in itertools.product(range(n), repeat=3):
        if (x, y) not in t or (y, z) not in t:
            continue
        a, b = t[(x, y)], t[(y, z)]
        if (a, z) in t:
            kind = "B"
        elif a == x and b == z:
            kind = "A1"
        else:
            kind = "A0"
        out.append((x, y, z, a, b, kind))
    return out


def brute_reachable(m, w):
    """Every word reachable from w by reductions, w included."""
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            for r in brute_one_step(m, u):
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return seen
