"""
A tour of the construction base graphs
======================================

Every construction starts from one of a handful of small graphs: a single
vertex pinned by two loops (with variants for how the symmetry acts on
it), a pinned orbit of n such vertices, or a looped n-cycle.  Each of them
has exactly 2|V| constraint rows and a square, invertible rigidity matrix
in a generic symmetric placement.
"""

from slcrigid import base_graph, classify, default_bases, GroupSpec

# the labels offered for generation, per group
for name in ["c1", "c2", "c3", "c4", "c5", "c6"]:
    group = GroupSpec.from_name(name)
    print(f"{name}: bases {', '.join(default_bases(group))}")

print()

# every base is isostatic: rank = rows = 2|V|
for label in ["pinned1", "p1_fixed", "p1_swap", "pinned3", "lc3", "lc5", "lc7"]:
    g = base_graph(label)
    r = classify(g, trials=3, seed=0)
    rows = len(g.edges) + len(g.loops)
    print(
        f"{label:8s} |V|={g.num_vertices:2d} rows={rows:2d}"
        f" rank={r.rank:2d} -> {r.classification}"
    )

print()

# split looped cycles: the cycle edges may wrap around in several pieces
# (here lc6x2: two triangles swapped by the sixfold rotation); these occur
# as irreducible terminals of decompositions and are still isostatic
g = base_graph("lc6x2")
print("lc6x2 edges:", g.edges)
print("lc6x2:", classify(g, trials=3, seed=0).classification)
