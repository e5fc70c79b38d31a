"""
Why counting rows is not enough under symmetry
==============================================

A graph can have exactly 2|V| rows and satisfy the subset counts and still
be forced into dependence by its symmetry.  The witness is either a fixed
element the group does not allow, or a mismatch between the characters of
the row permutation representation and the column representation.  Both
tests are cheap and purely combinatorial.
"""

from slcrigid import (
    GroupSpec,
    Loop,
    SymmetricGraph,
    character_vectors,
    check_tight,
    classify,
)

# a triangle under the half-turn: vertex 0 is fixed, vertices 1 and 2
# swap, so the edge (1, 2) maps to itself; one loop per vertex
g = SymmetricGraph(
    GroupSpec("cyclic", 2),
    3,
    ((0, 1), (0, 2), (1, 2)),
    (Loop(0, 0), Loop(1, 1), Loop(2, 2)),
    rotation_vertex_perm=(0, 2, 1),
    rotation_loop_perm={0: 0, 1: 2, 2: 1},
)

report = check_tight(g)
print("row counts say:", report.sparsity.verdict)
print()

# the fixed-element conditions reject the combination (v2, e2, l2) = (1, 1, 1)
for cond in report.fixed_count.conditions:
    print(f"condition {cond.name!r}: passed={cond.passed} ({cond.detail})")
print()

# the characters disagree on the half-turn: rows trace to e2 - l2 = 0,
# columns to 2 cos(pi) * v2 = -2
ch = character_vectors(g)
for label, rows, cols in zip(ch.labels, ch.chi_rows, ch.chi_cols):
    print(f"chi[{label}]: rows {rows:5.1f}   columns {cols:5.1f}")
print()

# the numeric rank confirms the forced dependence in symmetric position
r = classify(g, trials=3, seed=0)
print(f"sampled rank: {r.rank} of {r.num_rows} rows -> {r.classification}")
