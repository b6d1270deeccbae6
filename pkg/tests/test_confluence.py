"""Essential fork classification and the generic critical-pair oracle."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

import parmon as P
from oracles import brute_classify


def classes(triples):
    out = {"A0": 0, "A1": 0, "B": 0}
    for t in triples:
        out[t.kind.value] += 1
    return out


# ------------------------------------------------------------------ essential

def test_essential_pairs_match_brute(ex2, letters3, group2, trivial, du2):
    for m in (ex2, letters3, group2, trivial, du2):
        got = [(t.x, t.y, t.z, t.a, t.b, t.kind.value)
               for t in P.essential_critical_pairs(m)]
        assert got == brute_classify(m)


def test_essential_counts_ex2(ex2):
    triples = P.essential_critical_pairs(ex2)
    assert len(triples) == 29
    assert classes(triples) == {"A0": 0, "A1": 7, "B": 22}


def test_essential_counts_letters3(letters3):
    triples = P.essential_critical_pairs(letters3)
    assert len(triples) == 361
    assert classes(triples)["A0"] == 48


def test_ex2_named_triples(ex2):
    x, y, z = ex2.index("x"), ex2.index("y"), ex2.index("z")
    kinds = {(t.x, t.y, t.z): t.kind for t in P.essential_critical_pairs(ex2)}
    assert kinds[(x, y, y)] is P.PairClass.B
    assert kinds[(y, y, y)] is P.PairClass.B
    assert kinds[(y, y, z)] is P.PairClass.B
    assert kinds[(x, y, z)] is P.PairClass.A1


def test_identity_middle_gives_a1(ex2, letters3):
    # (x, 1, z) with x*z undefined: both sides are already the word x z
    for m in (ex2, letters3):
        e = m.identity
        for t in P.essential_critical_pairs(m):
            if t.y == e and not m.defined(t.x, t.z) and e not in (t.x, t.z):
                assert t.kind is P.PairClass.A1
                assert t.pair[0] == t.pair[1] == (t.x, t.z)


def test_first_a0_witness_letters3(letters3):
    a, b, ab, ba = (letters3.index(n) for n in ("a", "b", "ab", "ba"))
    a0 = [t for t in P.essential_critical_pairs(letters3)
          if t.kind is P.PairClass.A0]
    first = a0[0]
    assert (first.x, first.y, first.z) == (a, b, a)
    assert (first.a, first.b) == (ab, ba)
    assert first.pair == ((ab, a), (a, ba))


def test_a1_pairs_are_syntactically_equal(ex2, letters3, group2):
    for m in (ex2, letters3, group2):
        for t in P.essential_critical_pairs(m):
            if t.kind is P.PairClass.A1:
                assert t.pair[0] == t.pair[1]
            elif t.kind is P.PairClass.A0:
                # a != x or b != z forces the sides apart letterwise
                assert t.pair[0] != t.pair[1]


def test_b_pairs_converge_in_one_more_step(ex2, letters3, group2):
    # chain law: (x*y)*z = x*(y*z), so both sides contract to one letter
    for m in (ex2, letters3, group2):
        for t in P.essential_critical_pairs(m):
            if t.kind is P.PairClass.B:
                left = m.mul(t.a, t.z)
                right = m.mul(t.x, t.b)
                assert left is not None and left == right


def test_a0_witnesses_avoid_identity(letters3):
    e = letters3.identity
    a0 = [t for t in P.essential_critical_pairs(letters3)
          if t.kind is P.PairClass.A0]
    assert a0
    for t in a0:
        assert e not in (t.x, t.y, t.z, t.a, t.b)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10_000))
def test_a0_witnesses_avoid_identity_random(seed):
    m = P.random_monoid(random.Random(seed))
    e = m.identity
    for t in P.essential_critical_pairs(m):
        if t.kind is P.PairClass.A0:
            assert e not in (t.x, t.y, t.z, t.a, t.b)


def test_trivial_monoid_single_b_row(trivial):
    # the one fork (1,1,1) rejoins immediately; nothing else exists
    triples = P.essential_critical_pairs(trivial)
    assert len(triples) == 1
    t = triples[0]
    assert (t.x, t.y, t.z, t.a, t.b) == (0, 0, 0, 0, 0)
    assert t.kind is P.PairClass.B


# ------------------------------------------------------------------ verdicts

def test_confluence_verdicts(ex2, letters3, group2, trivial, du2):
    assert P.is_confluent(ex2).confluent
    assert P.is_confluent(group2).confluent
    assert P.is_confluent(trivial).confluent
    assert not P.is_confluent(letters3).confluent
    assert not P.is_confluent(du2).confluent


def test_verdict_fields(ex2, letters3):
    v = P.is_confluent(ex2)
    assert v.method == "essential"
    assert v.a0_witnesses == ()
    assert v.confluent == (not v.a0_witnesses)
    v3 = P.is_confluent(letters3)
    assert len(v3.a0_witnesses) == 48
    assert all(t.kind is P.PairClass.A0 for t in v3.a0_witnesses)
    assert v3.confluent == (not v3.a0_witnesses)


def test_a0_fork_words_have_multiple_normal_forms(letters3, du2):
    for m in (letters3, du2):
        for t in P.is_confluent(m).a0_witnesses:
            assert len(P.normal_forms(m, (t.x, t.y, t.z))) >= 2


def test_confluent_words_have_one_normal_form(ex2, group2, trivial):
    for m in (ex2, group2, trivial):
        assert P.is_confluent(m).confluent
        n = len(m.elements)
        for length in range(7):
            for w in itertools.product(range(n), repeat=length):
                assert len(P.normal_forms(m, w)) == 1


# ------------------------------------------------------------------ generic pairs

def test_generic_pairs_trivial_monoid(trivial):
    pairs = P.generic_critical_pairs(trivial)
    assert pairs  # identity rules superpose with themselves
    for cp in pairs:
        nf = P.normal_forms(trivial, cp.pair[0]) & P.normal_forms(trivial, cp.pair[1])
        assert nf  # every pair trivially converges
    assert P.newman_check(trivial)


def test_generic_overlap_example(ex2):
    x, y = ex2.index("x"), ex2.index("y")
    overlaps = [cp for cp in P.generic_critical_pairs(ex2)
                if cp.kind == "overlap" and cp.source == (x, y, y)]
    assert len(overlaps) == 1
    cp = overlaps[0]
    assert cp.rule1 == ((x, y), (x,))
    assert cp.rule2 == ((y, y), (y,))
    assert cp.pair == ((x, y), (x, y))


def test_generic_inclusion_example(ex2):
    e, x = ex2.identity, ex2.index("x")
    incl = [cp for cp in P.generic_critical_pairs(ex2)
            if cp.kind == "inclusion" and cp.source == (x, e)]
    assert len(incl) == 1
    cp = incl[0]
    assert cp.rule1 == ((x, e), (x,))
    assert cp.rule2 == ((e,), ())
    assert cp.pair == ((x,), (x,))


def test_inclusion_pairs_are_trivial(ex2, letters3, group2):
    # erasing inside an identity-involving left side lands on the same word
    for m in (ex2, letters3, group2):
        for cp in P.generic_critical_pairs(m):
            if cp.kind == "inclusion":
                assert cp.pair[0] == cp.pair[1]


def test_apply_rule_reconstructs_pairs(ex2, letters3):
    for m in (ex2, letters3):
        for cp in P.generic_critical_pairs(m):
            assert P.apply_rule(cp.rule1, cp.source, cp.pos1) == cp.pair[0]
            assert P.apply_rule(cp.rule2, cp.source, cp.pos2) == cp.pair[1]


def test_apply_rule_checks_match():
    with pytest.raises(ValueError, match="does not match"):
        P.apply_rule(((1, 2), (3,)), (1, 1, 2), 0)
    assert P.apply_rule(((1, 2), (3,)), (1, 1, 2), 1) == (1, 3)


def test_overlaps_mirror_essential_triples(ex2, letters3):
    for m in (ex2, letters3):
        overlaps = {(cp.source, cp.pair)
                    for cp in P.generic_critical_pairs(m)
                    if cp.kind == "overlap"}
        essential = {((t.x, t.y, t.z), t.pair)
                     for t in P.essential_critical_pairs(m)}
        assert overlaps == essential


def test_converges(letters3, ex2):
    a, b, ab, ba = (letters3.index(n) for n in ("a", "b", "ab", "ba"))
    assert not P.converges(letters3, (ab, a), (a, ba))
    x, y = ex2.index("x"), ex2.index("y")
    assert P.converges(ex2, (x, y), (x,))


def test_newman_agrees_with_essential(ex2, letters3, group2, trivial, du2):
    for m in (ex2, letters3, group2, trivial, du2):
        assert P.newman_check(m) == P.is_confluent(m).confluent


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10_000))
def test_newman_agrees_with_essential_random(seed):
    m = P.random_monoid(random.Random(seed))
    assert P.newman_check(m) == P.is_confluent(m).confluent


def test_total_two_element_monoid_confluent():
    m = P.PartialMonoid(["1", "t"], 0, {(1, 1): 1})
    assert P.validate(m).valid
    assert P.is_catenary(m) == (True, None)
    assert P.newman_check(m)
    assert P.is_confluent(m).confluent
