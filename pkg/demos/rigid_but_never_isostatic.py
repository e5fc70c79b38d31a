"""
A rigid graph with no isostatic symmetric spanning subgraph
===========================================================

Under the threefold rotation, every symmetric subgraph picks whole orbits,
so its row count is a multiple of three and can never equal 2|V| = 8 on
four vertices.  The wheel below is rigid (rank 8) but carries 9 rows, and
no symmetric spanning subgraph balances the count: rigidity and
independence cannot be achieved together here.
"""

import itertools
from pathlib import Path

from slcrigid import (
    GroupSpec,
    Loop,
    SymmetricGraph,
    classify,
    sample_symmetric_placement,
)
from slcrigid.svgout import render_svg

# hub vertex 0 with three loops, rim vertices 1..3 with one loop each,
# three spokes; the rotation cycles the rim and the loop orbits
wheel = SymmetricGraph(
    GroupSpec("cyclic", 3),
    4,
    ((0, 1), (0, 2), (0, 3)),
    (
        Loop(0, 0),
        Loop(1, 0),
        Loop(2, 0),
        Loop(3, 1),
        Loop(4, 2),
        Loop(5, 3),
    ),
    rotation_vertex_perm=(0, 2, 3, 1),
    rotation_loop_perm={0: 1, 1: 2, 2: 0, 3: 4, 4: 5, 5: 3},
)

r = classify(wheel, trials=3, seed=0)
print(f"full wheel: rank {r.rank} of {r.num_rows} rows on {r.num_cols} columns")
print(f"  -> {r.classification} (rigid, but one row is redundant)")
print()

# enumerate all symmetric spanning subgraphs: each picks a subset of the
# three orbits (spokes, hub loops, rim loops)
spokes = wheel.edges
hub = tuple(l for l in wheel.loops if l.vertex == 0)
rim = tuple(l for l in wheel.loops if l.vertex != 0)
lperm = dict(zip(wheel.loop_ids, wheel.rotation_loop_perm))

print("symmetric spanning subgraphs:")
for take in itertools.product([0, 1], repeat=3):
    edges = spokes if take[0] else ()
    loops = (hub if take[1] else ()) + (rim if take[2] else ())
    sub = SymmetricGraph(
        wheel.group,
        4,
        edges,
        loops,
        rotation_vertex_perm=wheel.rotation_vertex_perm,
        rotation_loop_perm={k: v for k, v in lperm.items() if k in {l.id for l in loops}},
    )
    rows = len(edges) + len(loops)
    sr = classify(sub, trials=3, seed=0)
    print(f"  orbits {take}: {rows} rows (mod 3 = {rows % 3}) -> {sr.classification}")

print()
print("every symmetric row count is a multiple of 3, never 8: none isostatic")

# draw the wheel in a symmetric placement
fw = sample_symmetric_placement(wheel, seed=4)
out = Path(__file__).with_name("rigid_but_never_isostatic.svg")
out.write_text(render_svg(fw))
print(f"picture written to {out.name}")
