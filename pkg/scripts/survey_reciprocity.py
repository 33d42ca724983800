#!/usr/bin/env python3
"""Sweep every identity check over a seeded family of small graphs and
print a per-identity summary table.  Exits nonzero if anything fails, so
the script doubles as a long-form smoke test."""

from __future__ import annotations

import argparse
import sys
import time
from collections import defaultdict

from chromheap.families import FAMILY_SEED, seeded_family
from chromheap.graphs import ascending_relabel, is_clique, is_connected, vset
from chromheap.reciprocity import (
    check_bivariate_reciprocity,
    check_clique_quotient_reciprocity,
    check_derivative_reciprocity,
    check_greene_zaslavsky,
    check_shifted_reciprocity,
    check_sink_rooted,
    check_stanley_reciprocity,
)
from chromheap.series import verify_heap_identities
from chromheap.symfunc import (
    verify_combined,
    verify_descent_expansion,
    verify_orientation_expansion,
    verify_split_alphabet,
    verify_superfication,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=208, help="family size")
    parser.add_argument("--seed", type=int, default=FAMILY_SEED)
    parser.add_argument("--max-sum", type=int, default=3, help="bound on i+j for block tuples")
    parser.add_argument("--heap-bound", type=int, default=6, help="series truncation degree")
    args = parser.parse_args()

    fam = seeded_family(count=args.count, seed=args.seed)
    ran: dict[str, int] = defaultdict(int)
    bad: dict[str, int] = defaultdict(int)
    t0 = time.time()

    def record(kind: str, ok: bool) -> None:
        ran[kind] += 1
        if not ok:
            bad[kind] += 1

    for name, g in fam:
        for i in range(args.max_sum + 1):
            for j in range(args.max_sum + 1 - i):
                record("block_tuples", check_derivative_reciprocity(g, i, j).equal)
        for j in range(args.max_sum + 1):
            record("descent_pairs", check_stanley_reciprocity(g, j).equal)
        for i in range(g.n + 1):
            record("source_components", check_greene_zaslavsky(g, i).equal)
        for i in range(3):
            for j in range(3 - i):
                record("shifted_blocks", check_shifted_reciprocity(g, i, j).equal)
        for d in (1, 2):
            if d > g.n or not is_clique(g, vset(range(1, d + 1))):
                continue
            for i in range(3):
                for j in range(3 - i):
                    record("clique_quotient", check_clique_quotient_reciprocity(g, d, i, j).equal)
        if is_connected(g):
            h, _ = ascending_relabel(g)
            for d in (1, 2):
                if d > h.n or not is_clique(h, vset(range(1, d + 1))):
                    continue
                for i in range(4):
                    record("sink_rooted", check_sink_rooted(h, d, i).equal)
        for j in range(3):
            for k in range(3 - j):
                record("bivariate", check_bivariate_reciprocity(g, j, k).equal)
        record("heap_series", verify_heap_identities(g, args.heap_bound).equal)
        record("orientation_tally", verify_orientation_expansion(g).equal)
        for n_colors in (1, 2):
            record("descent_expansion", verify_descent_expansion(g, n_colors).equal)
        for a, b in ((1, 1), (2, 2)):
            record("split_alphabet", verify_split_alphabet(g, a, b).equal)
            record("signed_colorings", verify_superfication(g, a, b).equal)
        if g.n <= 5:
            record("combined_alphabets", verify_combined(g, 1, 1, 1).equal)

    elapsed = time.time() - t0
    total = sum(ran.values())
    width = max(len(k) for k in ran)
    print(f"{len(fam)} graphs, {total} checks, {elapsed:.1f}s\n")
    print(f"{'identity'.ljust(width)}  checks  failures")
    for kind in sorted(ran):
        print(f"{kind.ljust(width)}  {ran[kind]:6d}  {bad[kind]:8d}")
    failures = sum(bad.values())
    print(f"\n{'all checks passed' if not failures else f'{failures} FAILURES'}")
    return 0 if not failures else 1


if __name__ == "__main__":
    sys.exit(main())
