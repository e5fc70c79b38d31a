"""
Two sparsity deciders, one answer
=================================

The sparsity condition quantifies over every vertex subset, so the direct
decider enumerates subsets with bitsets and is exponential but obviously
correct.  The pebble game decides the same property in polynomial time.
This script runs both on a batch of random looped graphs near the
critical density and shows they never disagree; the subset decider also
names a violating subset when one exists.
"""

import random

from slcrigid import pebble_check, subset_audit

rng = random.Random(2026)

agreements = 0
witness_shown = False
for trial in range(2000):
    n = rng.randint(1, 7)
    target_rows = rng.randint(max(0, 2 * n - 3), 2 * n + 2)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    edges = []
    loops = []
    # fill up to the target row count with a random mix of edges and loops
    while len(edges) + len(loops) < target_rows:
        if pairs and rng.random() < 0.6:
            edges.append(pairs.pop())
        else:
            loops.append(rng.randrange(n))
    a = pebble_check(n, edges, loops)
    b = subset_audit(n, edges, loops)
    assert a.verdict == b.verdict, (n, edges, loops)
    agreements += 1
    if a.witness is not None and not witness_shown and len(a.witness.vertices) < n:
        witness_shown = True
        w = a.witness
        print(f"example violation in a {n}-vertex graph:")
        print(f"  subset {w.vertices} induces {w.row_count} rows"
              f" ({w.edge_count} edges), rule: {w.rule}")
        print()

print(f"{agreements} random graphs, the deciders agreed on every one")
