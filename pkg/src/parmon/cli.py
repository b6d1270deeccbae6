"""Command line front end.

Exit codes: 0 for success or an affirmative verdict, 1 for invalid
input, 2 for usage errors, 3 for a negative verdict.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import magma
from .confluence import (essential_critical_pairs, is_confluent, newman_check,
                         PairClass)
from .monoid import (PartialMonoid, ParseError, is_catenary, parse_monoid,
                     random_monoid, validate)
from .rewriting import convertible_bounded, lstd, lstd_trace, normal_forms
from .star import associativity_search, star
from .words import Word, format_word, parse_word

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_NEGATIVE = 3


class InputError(Exception):
    """Bad file or word arguments; reported on stderr, exit 1."""


def _load(path: str) -> PartialMonoid:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    try:
        return parse_monoid(text)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}")


def _load_valid(path: str) -> PartialMonoid:
    m = _load(path)
    report = validate(m)
    if not report.valid:
        first = report.violations[0]
        raise InputError(f"{path}: not a valid partial monoid; "
                         f"first violation {first.message}")
    return m


def _word(m: PartialMonoid, text: str) -> Word:
    try:
        return parse_word(m, text)
    except ValueError as exc:
        raise InputError(str(exc))


def _names(m: PartialMonoid, w: Word) -> list[str]:
    return [m.name(c) for c in w]


# ------------------------------------------------------------------ commands

def cmd_validate(args) -> int:
    m = _load(args.file)
    report = validate(m)
    if args.json:
        print(json.dumps({
            "valid": report.valid,
            "violations": [
                {"x": m.name(v.x), "y": m.name(v.y), "z": m.name(v.z),
                 "code": v.code, "message": v.message}
                for v in report.violations],
        }))
    else:
        print("valid" if report.valid else "invalid")
        for v in report.violations:
            print(f"  {m.name(v.x)} {m.name(v.y)} {m.name(v.z)} "
                  f"[{v.code}]: {v.message}")
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_confluence(args) -> int:
    m = _load_valid(args.file)
    verdict = is_confluent(m)
    agree = None
    if args.oracle:
        agree = newman_check(m) == verdict.confluent
    if args.json:
        out = {
            "confluent": verdict.confluent,
            "method": verdict.method,
            "a0_witnesses": [
                {"x": m.name(t.x), "y": m.name(t.y), "z": m.name(t.z),
                 "a": m.name(t.a), "b": m.name(t.b),
                 "pair": [_names(m, t.pair[0]), _names(m, t.pair[1])]}
                for t in verdict.a0_witnesses],
        }
        if agree is not None:
            out["oracle_agrees"] = agree
        print(json.dumps(out))
    else:
        print("confluent" if verdict.confluent else "not confluent")
        for t in verdict.a0_witnesses:
            print(f"  A0 ({m.name(t.x)}, {m.name(t.y)}, {m.name(t.z)}): "
                  f"{format_word(m, t.pair[0])} vs {format_word(m, t.pair[1])}")
        if agree is not None:
            print("oracle agrees" if agree else "oracle DISAGREES")
    if agree is False:
        return EXIT_NEGATIVE
    return EXIT_OK if verdict.confluent else EXIT_NEGATIVE


def cmd_normalize(args) -> int:
    m = _load_valid(args.file)
    w = _word(m, " ".join(args.word))
    if args.all:
        forms = sorted(normal_forms(m, w), key=lambda f: (len(f), f))
        if args.json:
            print(json.dumps({"input": _names(m, w),
                              "normal_forms": [_names(m, f) for f in forms]}))
        else:
            for f in forms:
                print(format_word(m, f))
        return EXIT_OK
    if args.trace:
        trace = lstd_trace(m, w)
        if args.json:
            for step in trace.steps:
                print(json.dumps({"word": _names(m, step.source),
                                  "rule": step.rule,
                                  "position": step.position}))
            print(json.dumps({"word": _names(m, trace.result)}))
        else:
            for step in trace.steps:
                print(f"{format_word(m, step.source)}  "
                      f"--[{step.rule} @ {step.position}]-->")
            print(format_word(m, trace.result))
        return EXIT_OK
    result = lstd(m, w)
    if args.json:
        print(json.dumps({"input": _names(m, w),
                          "normal_form": _names(m, result)}))
    else:
        print(format_word(m, result))
    return EXIT_OK


def cmd_critical_pairs(args) -> int:
    m = _load_valid(args.file)
    triples = essential_critical_pairs(m)
    counts = {k.value: 0 for k in PairClass}
    for t in triples:
        counts[t.kind.value] += 1
    if args.json:
        print(json.dumps({
            "triples": [
                {"x": m.name(t.x), "y": m.name(t.y), "z": m.name(t.z),
                 "a": m.name(t.a), "b": m.name(t.b), "class": t.kind.value}
                for t in triples],
            "counts": counts,
        }))
    else:
        print("x y z a b class")
        for t in triples:
            print(f"{m.name(t.x)} {m.name(t.y)} {m.name(t.z)} "
                  f"{m.name(t.a)} {m.name(t.b)} {t.kind.value}")
        print(f"counts: A0={counts['A0']} A1={counts['A1']} B={counts['B']}")
    return EXIT_OK


def cmd_star(args) -> int:
    m = _load_valid(args.file)
    u = _word(m, args.u)
    v = _word(m, args.v)
    try:
        product = star(m, u, v)
    except ValueError as exc:
        raise InputError(str(exc))
    if args.json:
        print(json.dumps({"u": _names(m, u), "v": _names(m, v),
                          "product": _names(m, product)}))
    else:
        print(format_word(m, product))
    return EXIT_OK


def cmd_assoc_test(args) -> int:
    m = _load_valid(args.file)
    report = associativity_search(m, args.max_len, find_all=args.all)
    verdict = is_confluent(m)
    match = report.associative == verdict.confluent
    if args.json:
        print(json.dumps({
            "max_len": args.max_len,
            "associative": report.associative,
            "confluent": verdict.confluent,
            "match": match,
            "counterexamples": [
                {"u": _names(m, c.u), "v": _names(m, c.v), "w": _names(m, c.w),
                 "left": _names(m, c.left), "right": _names(m, c.right)}
                for c in report.counterexamples],
        }))
    else:
        print(f"associative up to length {args.max_len}: "
              f"{'yes' if report.associative else 'no'}")
        for c in report.counterexamples:
            print(f"  ({format_word(m, c.u)}, {format_word(m, c.v)}, "
                  f"{format_word(m, c.w)}): {format_word(m, c.left)} != "
                  f"{format_word(m, c.right)}")
        print(f"confluent: {'yes' if verdict.confluent else 'no'}")
        print(f"verdicts match: {'yes' if match else 'no'}")
    return EXIT_OK if report.associative else EXIT_NEGATIVE


def cmd_simulate(args) -> int:
    m = _load_valid(args.file)
    w = _word(m, " ".join(args.word))
    result = lstd(m, w)
    segments = _names(m, result)
    errors = max(0, len(segments) - 1)
    if args.json:
        print(json.dumps({"input": _names(m, w), "segments": segments,
                          "errors": errors}))
    else:
        print(" ! ".join(segments) if segments else "eps")
    return EXIT_OK


def cmd_magma_demo(args) -> int:
    m = _load_valid(args.file)
    try:
        t = magma.parse_tree(m, " ".join(args.tree))
    except ValueError as exc:
        raise InputError(str(exc))
    comb = magma.right_comb(t)
    try:
        evaluation = magma.evaluate(m, t)
        comb_eval = magma.evaluate(m, comb)
    except ValueError as exc:
        raise InputError(str(exc))
    cap = sum(len(label) for label in magma.leaf_labels(t))
    convertible = convertible_bounded(m, evaluation, comb_eval, cap) is not None
    successors = sorted(magma.format_tree(m, s) for s in magma.rotations(t))
    if args.json:
        print(json.dumps({
            "tree": magma.format_tree(m, t),
            "leaves": magma.leaves(t),
            "rank": magma.rank(t),
            "rotations": successors,
            "right_comb": magma.format_tree(m, comb),
            "evaluation": _names(m, evaluation),
            "comb_evaluation": _names(m, comb_eval),
            "convertible": convertible,
        }))
    else:
        print(f"tree: {magma.format_tree(m, t)}")
        print(f"leaves: {magma.leaves(t)}  rank: {magma.rank(t)}")
        for s in successors:
            print(f"  rotation: {s}")
        print(f"right comb: {magma.format_tree(m, comb)}")
        print(f"evaluation: {format_word(m, evaluation)}")
        print(f"comb evaluation: {format_word(m, comb_eval)}")
        print(f"convertible: {'yes' if convertible else 'unknown'}")
    return EXIT_OK


def cmd_random_check(args) -> int:
    rng = random.Random(args.seed)
    failures = []
    catenary_seen = 0
    for i in range(args.count):
        m = random_monoid(rng, args.max_carrier)
        if not validate(m).valid:
            failures.append((i, m, "generator produced an invalid monoid"))
            continue
        verdict = is_confluent(m)
        if newman_check(m) != verdict.confluent:
            failures.append((i, m, "critical pair oracle disagrees"))
        catenary, _ = is_catenary(m)
        if catenary:
            catenary_seen += 1
            if not verdict.confluent:
                failures.append((i, m, "catenary but not confluent"))
        if associativity_search(m, 2).associative != verdict.confluent:
            failures.append((i, m, "associativity does not match confluence"))
    if args.json:
        print(json.dumps({
            "count": args.count, "seed": args.seed,
            "catenary": catenary_seen,
            "failures": [{"index": i, "monoid": repr(m), "reason": r}
                         for i, m, r in failures],
        }))
    else:
        print(f"checked {args.count} random monoids "
              f"(seed {args.seed}, {catenary_seen} catenary)")
        for i, m, reason in failures:
            print(f"  FAIL #{i} {m}: {reason}")
        if not failures:
            print("all verdicts agree")
    return EXIT_OK if not failures else EXIT_NEGATIVE


# ------------------------------------------------------------------ wiring

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parmon",
        description="Finite partial monoids: rewriting, confluence, normal forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true",
                       help="machine readable output")
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "check the chain law on a monoid file")
    p.add_argument("file")

    p = add("confluence", cmd_confluence, "decide confluence")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true",
                   help="cross check with the critical pair oracle")

    p = add("normalize", cmd_normalize, "reduce a word")
    p.add_argument("file")
    p.add_argument("word", nargs="+", help="element names, or eps")
    p.add_argument("--all", action="store_true", help="list every normal form")
    p.add_argument("--trace", action="store_true", help="show each step")

    p = add("critical-pairs", cmd_critical_pairs, "table of essential forks")
    p.add_argument("file")

    p = add("star", cmd_star, "product of two irreducible words")
    p.add_argument("file")
    p.add_argument("u")
    p.add_argument("v")

    p = add("assoc-test", cmd_assoc_test,
            "search for associativity counterexamples")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=2)
    p.add_argument("--all", action="store_true",
                   help="collect every counterexample")

    p = add("simulate", cmd_simulate,
            "error view: normal form letters separated by !")
    p.add_argument("file")
    p.add_argument("word", nargs="+")

    p = add("magma-demo", cmd_magma_demo, "tree rotations and evaluation")
    p.add_argument("file")
    p.add_argument("tree", nargs="+", help="fully bracketed tree")

    p = add("random-check", cmd_random_check,
            "verdict agreement on random monoids")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-carrier", type=int, default=8)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
