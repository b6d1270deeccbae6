#!/usr/bin/env python3
"""Seeded sweep over random partial monoids, checking verdict agreement.

For every generated monoid:
  - the chain-law scan must pass (the generators promise validity),
  - the essential-fork verdict must match the critical-pair oracle,
  - catenary monoids must be confluent,
  - star associativity at the requested bound must match confluence.

Prints a summary histogram and exits nonzero on any disagreement.
"""

import argparse
import collections
import random
import time

import parmon as P


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-carrier", type=int, default=8)
    parser.add_argument("--assoc-len", type=int, default=2,
                        help="word length bound for the associativity search")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    sizes = collections.Counter()
    confluent = catenary = total = 0
    failures = []
    t0 = time.monotonic()

    for i in range(args.count):
        m = P.random_monoid(rng, args.max_carrier)
        sizes[m.size] += 1

        if not P.validate(m).valid:
            failures.append((i, m, "invalid"))
            continue
        verdict = P.is_confluent(m)
        if verdict.confluent:
            confluent += 1
        if P.newman_check(m) != verdict.confluent:
            failures.append((i, m, "oracle disagreement"))
        cat, _ = P.is_catenary(m)
        if cat:
            catenary += 1
            if not verdict.confluent:
                failures.append((i, m, "catenary but not confluent"))
        if all(m.defined(x, y) for x in range(m.size) for y in range(m.size)):
            total += 1
            if not cat:
                failures.append((i, m, "total but not catenary"))
        assoc = P.associativity_search(m, args.assoc_len).associative
        if assoc != verdict.confluent:
            failures.append((i, m, "associativity mismatch"))

    elapsed = time.monotonic() - t0
    print(f"swept {args.count} monoids in {elapsed:.1f}s "
          f"(seed {args.seed}, carrier <= {args.max_carrier})")
    print("carrier sizes: "
          + "  ".join(f"{s}:{n}" for s, n in sorted(sizes.items())))
    print(f"confluent: {confluent}   catenary: {catenary}   total: {total}")
    if failures:
        print(f"{len(failures)} FAILURES")
        for i, m, reason in failures:
            print(f"  #{i} {m}: {reason}")
        return 1
    print("all verdicts agree")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
