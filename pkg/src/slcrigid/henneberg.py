"""Symmetry-preserving extension moves, base graphs, and decomposition.

Every move appends one free vertex orbit: |group| new vertices, one per
group element in canonical order, each carrying two new rows.

* ``Zero2Edges(v1, v2)``: new vertices join v1 and v2 (two edges each).
* ``ZeroEdgeLoop(v1)``: new vertices join v1 and carry one loop each.
* ``OneEdgeSplit(x0, y0, z0)``: delete the full-size orbit of edge (x0,
  y0); new vertices join x0, y0 and z0.
* ``OneLoopSplit(loop_id, y0)``: delete the full-size orbit of the loop;
  new vertices join the loop's vertex and y0 and carry one loop each.

Moves preserve symmetry-compatible tightness, so iterating them from a
tight base graph generates tight graphs.  ``decompose`` runs the moves
backwards: it strips one free orbit at a time (try-and-check: a candidate
is kept only when the reduced graph is still tight) until only a disjoint
union of recognized base graphs remains, then replays the moves forward to
certify the trace by exact relabeling.  The base graphs:

* ``p1_fixed``: one half-turn-fixed vertex with two fixed loops (order 2);
* ``p1_swap``: one fixed vertex with a swapped loop pair (order 4);
* ``pinnedN``: one free vertex orbit, two loops per vertex;
* ``lcN``: one free orbit spanned by a single n-cycle, one loop per vertex
  (any cyclic n-cycle counts, e.g. star polygons).

Reduction down to a base is guaranteed for the cyclic groups of order 2 or
odd order; for other groups the same greedy search runs heuristically and a
dead end raises ``ReductionDeadEnd`` with the stuck graph attached.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Iterator, Union

from .errors import (
    InvalidMoveError,
    NotTightError,
    RangeError,
    ReductionDeadEnd,
    SchemaError,
    UnsupportedBackendError,
)
from .symcheck import check_tight
from .symgraph import (
    GroupElement,
    GroupSpec,
    Loop,
    SymmetricGraph,
    element_tables,
    induced_subgraph,
    orbits,
    relabel,
    symmetric_components,
    vertex_orbit,
)


@dataclass(frozen=True)
class Zero2Edges:
    v1: int
    v2: int


@dataclass(frozen=True)
class ZeroEdgeLoop:
    v1: int


@dataclass(frozen=True)
class OneEdgeSplit:
    x0: int
    y0: int
    z0: int


@dataclass(frozen=True)
class OneLoopSplit:
    loop_id: int
    y0: int


Move = Union[Zero2Edges, ZeroEdgeLoop, OneEdgeSplit, OneLoopSplit]


def _require_vertex(graph: SymmetricGraph, v: int, what: str) -> None:
    if not 0 <= v < graph.num_vertices:
        raise InvalidMoveError(f"{what} {v} is not a vertex of the graph")


def _fresh_loop_base(graph: SymmetricGraph) -> int:
    return max(graph.loop_ids, default=-1) + 1


def _gen_elements(group: GroupSpec) -> list[tuple[bool, GroupElement]]:
    gens = []
    if group.rotation_order > 1:
        gens.append((False, GroupElement(1, False)))
    if group.has_reflection:
        gens.append((True, GroupElement(0, True)))
    return gens


def apply_extension(graph: SymmetricGraph, move: Move) -> SymmetricGraph:
    """Apply one move; the new orbit's vertices are n .. n+|group|-1.

    New vertex n+k corresponds to group element k in canonical order; new
    loop ids continue from the largest existing id.
    """
    group = graph.group
    elements = group.elements()
    idx = {e: i for i, e in enumerate(elements)}
    t = len(elements)
    n = graph.num_vertices
    tables = element_tables(graph)

    def images(v: int) -> list[int]:
        return [tables[e][0][v] for e in elements]

    edges = list(graph.edges)
    loops = list(graph.loops)
    new_loops: list[Loop] = []
    base_id = _fresh_loop_base(graph)

    if isinstance(move, Zero2Edges):
        _require_vertex(graph, move.v1, "v1")
        _require_vertex(graph, move.v2, "v2")
        if move.v1 == move.v2:
            raise InvalidMoveError("v1 and v2 must be distinct vertices")
        for k, (a, b) in enumerate(zip(images(move.v1), images(move.v2))):
            edges += [(n + k, a), (n + k, b)]
    elif isinstance(move, ZeroEdgeLoop):
        _require_vertex(graph, move.v1, "v1")
        for k, a in enumerate(images(move.v1)):
            edges.append((n + k, a))
            new_loops.append(Loop(base_id + k, n + k))
    elif isinstance(move, OneEdgeSplit):
        for name, v in (("x0", move.x0), ("y0", move.y0), ("z0", move.z0)):
            _require_vertex(graph, v, name)
        e0 = (min(move.x0, move.y0), max(move.x0, move.y0))
        if move.x0 == move.y0 or e0 not in graph.edges:
            raise InvalidMoveError(f"({move.x0}, {move.y0}) is not an edge")
        if move.z0 in (move.x0, move.y0):
            raise InvalidMoveError("z0 must differ from the split edge's ends")
        orbit = set()
        for e in elements:
            vp = tables[e][0]
            a, b = vp[move.x0], vp[move.y0]
            orbit.add((a, b) if a < b else (b, a))
        if len(orbit) != t:
            raise InvalidMoveError(
                "the split edge's orbit must have one edge per group element"
            )
        edges = [e for e in edges if e not in orbit]
        for k, (a, b, c) in enumerate(
            zip(images(move.x0), images(move.y0), images(move.z0))
        ):
            edges += [(n + k, a), (n + k, b), (n + k, c)]
    elif isinstance(move, OneLoopSplit):
        if move.loop_id not in graph.loop_ids:
            raise InvalidMoveError(f"no loop with id {move.loop_id}")
        _require_vertex(graph, move.y0, "y0")
        x0 = graph.loop_by_id(move.loop_id).vertex
        if move.y0 == x0:
            raise InvalidMoveError("y0 must differ from the loop's vertex")
        loop_orbit = {tables[e][1][move.loop_id] for e in elements}
        if len(loop_orbit) != t:
            raise InvalidMoveError(
                "the split loop's orbit must have one loop per group element"
            )
        loops = [l for l in loops if l.id not in loop_orbit]
        for k, (a, b) in enumerate(zip(images(x0), images(move.y0))):
            edges += [(n + k, a), (n + k, b)]
            new_loops.append(Loop(base_id + k, n + k))
    else:
        raise InvalidMoveError(f"unknown move {move!r}")

    surviving = {l.id for l in loops}
    kwargs = {}
    for ref, gen in _gen_elements(group):
        vp_name = "reflection_vertex_perm" if ref else "rotation_vertex_perm"
        lp_name = "reflection_loop_perm" if ref else "rotation_loop_perm"
        old_vp = getattr(graph, vp_name)
        kwargs[vp_name] = tuple(old_vp) + tuple(
            n + idx[group.compose(gen, elements[k])] for k in range(t)
        )
        _, old_lmap = graph.generator_perms(ref)
        lmap = {i: img for i, img in old_lmap.items() if i in surviving}
        for k in range(t):
            if new_loops:
                lmap[base_id + k] = base_id + idx[group.compose(gen, elements[k])]
        kwargs[lp_name] = lmap

    return SymmetricGraph(
        group=group,
        num_vertices=n + t,
        edges=tuple(edges),
        loops=tuple(loops + new_loops),
        **kwargs,
    )


# -- base graphs -------------------------------------------------------------


def base_graph(label: str) -> SymmetricGraph:
    """Construct a base graph from its label."""
    if label == "p1_fixed":
        return SymmetricGraph(
            GroupSpec("cyclic", 2),
            1,
            (),
            (Loop(0, 0), Loop(1, 0)),
            rotation_vertex_perm=(0,),
            rotation_loop_perm={0: 0, 1: 1},
        )
    if label == "p1_swap":
        return SymmetricGraph(
            GroupSpec("cyclic", 4),
            1,
            (),
            (Loop(0, 0), Loop(1, 0)),
            rotation_vertex_perm=(0,),
            rotation_loop_perm={0: 1, 1: 0},
        )
    if label.startswith("pinned"):
        tail = label[len("pinned") :]
        if not tail.isdigit() or int(tail) < 1:
            raise SchemaError(f"bad base label {label!r}")
        n = int(tail)
        loops = tuple(Loop(2 * i, i) for i in range(n)) + tuple(
            Loop(2 * i + 1, i) for i in range(n)
        )
        if n == 1:
            return SymmetricGraph(GroupSpec("cyclic", 1), 1, (), loops)
        shift = tuple((i + 1) % n for i in range(n))
        lperm = {2 * i: 2 * ((i + 1) % n) for i in range(n)}
        lperm |= {2 * i + 1: 2 * ((i + 1) % n) + 1 for i in range(n)}
        return SymmetricGraph(
            GroupSpec("cyclic", n),
            n,
            (),
            loops,
            rotation_vertex_perm=shift,
            rotation_loop_perm=lperm,
        )
    if label.startswith("lc"):
        body = label[len("lc") :]
        n_str, _, d_str = body.partition("x")
        if not n_str.isdigit() or (d_str and not d_str.isdigit()):
            raise SchemaError(f"bad looped cycle label {label!r}")
        n = int(n_str)
        step = int(d_str) if d_str else 1
        if n < 3 or step < 1 or n % step != 0 or (step > 1 and n // step < 3):
            raise SchemaError(f"bad looped cycle label {label!r}")
        shift = tuple((i + 1) % n for i in range(n))
        return SymmetricGraph(
            GroupSpec("cyclic", n),
            n,
            tuple(sorted(tuple(sorted((i, (i + step) % n))) for i in range(n))),
            tuple(Loop(i, i) for i in range(n)),
            rotation_vertex_perm=shift,
            rotation_loop_perm={i: (i + 1) % n for i in range(n)},
        )
    raise SchemaError(f"unknown base label {label!r}")


def _cycle_cover_count(n: int, edges: tuple[tuple[int, int], ...]) -> int | None:
    """Number of cycles when the edges are disjoint cycles covering 0..n-1."""
    if len(edges) != n or n < 3:
        return None
    adj: list[list[int]] = [[] for _ in range(n)]
    for (u, v) in edges:
        adj[u].append(v)
        adj[v].append(u)
    if any(len(a) != 2 for a in adj):
        return None
    pieces = 0
    seen: set[int] = set()
    for v0 in range(n):
        if v0 in seen:
            continue
        pieces += 1
        seen.add(v0)
        stack = [v0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return pieces


def is_base_graph(graph: SymmetricGraph) -> str | None:
    """Label of the base graph this graph is, or None.

    Recognition is up to vertex order.  A single free orbit carrying one
    loop per vertex whose edges are a 2-regular cycle cover counts as a
    looped cycle: one n-cycle (any step size coprime to n, so star polygon
    forms included) is ``lcN``, and a step size sharing a factor d with n
    splits into d rotated copies of a looped (n/d)-cycle, labeled ``lcNxD``.
    The split forms arise as irreducible terminals exactly because every
    neighbour of an orbit vertex lies inside the orbit itself.
    """
    group = graph.group
    if group.kind != "cyclic":
        return None
    n = group.order
    nv = graph.num_vertices

    if nv == 1 and not graph.edges and len(graph.loops) == 2:
        if n == 1:
            return "pinned1"
        _, lmap = graph.generator_perms(ref=False)
        fixed = all(lmap[l.id] == l.id for l in graph.loops)
        if n == 2 and fixed:
            return "p1_fixed"
        if n == 4 and not fixed:
            return "p1_swap"
        return None

    orbs = orbits(graph)
    free_vertex_orbit = len(orbs.vertices) == 1 and len(orbs.vertices[0]) == n
    if (
        nv == n
        and not graph.edges
        and len(graph.loops) == 2 * n
        and free_vertex_orbit
        and all(len(o) == n for o in orbs.loops)
        and all(
            sum(1 for l in graph.loops if l.vertex == v) == 2 for v in range(nv)
        )
    ):
        return f"pinned{n}"
    if (
        n >= 3
        and nv == n
        and len(graph.loops) == n
        and free_vertex_orbit
        and len(orbs.loops) == 1
        and all(
            sum(1 for l in graph.loops if l.vertex == v) == 1 for v in range(nv)
        )
    ):
        pieces = _cycle_cover_count(nv, graph.edges)
        if pieces == 1:
            return f"lc{n}"
        if pieces is not None:
            return f"lc{n}x{pieces}"
    return None


def default_bases(group: GroupSpec) -> tuple[str, ...]:
    """Base graph labels available for constructing graphs in this group."""
    if group.kind != "cyclic":
        return ()
    n = group.order
    if n == 1:
        return ("pinned1",)
    if n == 2:
        return ("p1_fixed", "pinned2")
    if n == 4:
        return ("p1_swap", "pinned4")
    if n % 2 == 1:
        return (f"pinned{n}", f"lc{n}")
    return (f"pinned{n}",)


def certified_group(group: GroupSpec) -> bool:
    """Groups for which tight graphs provably decompose to a base."""
    return group.kind == "cyclic" and (group.order == 2 or group.order % 2 == 1)


# -- reductions --------------------------------------------------------------


@dataclass(frozen=True)
class Reduction:
    """One inverse move: delete a free vertex orbit, maybe add an orbit back.

    ``move`` is the forward move stated in reduced-graph labels;
    ``orbit_vertices[k]`` is the deleted vertex for group element k, and
    ``orbit_loops[k]`` the deleted loop id when the profile had one.
    """

    move: Move
    graph: SymmetricGraph
    orbit_vertices: tuple[int, ...]
    orbit_loops: tuple[int, ...]
    vertex_map: tuple[int | None, ...]


def _delete_orbit(
    graph: SymmetricGraph, orb: set[int]
) -> tuple[SymmetricGraph, tuple[int | None, ...]]:
    keep = [v for v in range(graph.num_vertices) if v not in orb]
    sub, vmap = induced_subgraph(graph, keep)
    return sub, tuple(vmap.get(v) for v in range(graph.num_vertices))


def _add_edge_orbit(graph: SymmetricGraph, x1: int, x2: int) -> SymmetricGraph:
    tables = element_tables(graph)
    new = set(graph.edges)
    for e in graph.group.elements():
        vp = tables[e][0]
        a, b = vp[x1], vp[x2]
        new.add((a, b) if a < b else (b, a))
    return replace(graph, edges=tuple(sorted(new)))


def _add_loop_orbit(
    graph: SymmetricGraph, x: int
) -> tuple[SymmetricGraph, int]:
    """Add a free loop orbit rooted at x; returns the identity element's id."""
    group = graph.group
    elements = group.elements()
    idx = {e: i for i, e in enumerate(elements)}
    tables = element_tables(graph)
    base = _fresh_loop_base(graph)
    new_loops = tuple(
        Loop(base + k, tables[e][0][x]) for k, e in enumerate(elements)
    )
    kwargs = {}
    for ref, gen in _gen_elements(group):
        lp_name = "reflection_loop_perm" if ref else "rotation_loop_perm"
        _, lmap = graph.generator_perms(ref)
        lmap = dict(lmap)
        for k in range(len(elements)):
            lmap[base + k] = base + idx[group.compose(gen, elements[k])]
        kwargs[lp_name] = lmap
    return replace(graph, loops=graph.loops + new_loops, **kwargs), base


def _reduction_candidates(graph: SymmetricGraph) -> Iterator[Reduction]:
    """Structurally valid orbit deletions, deterministic order, unchecked.

    Only free orbits whose neighborhood lies outside the orbit are offered;
    those are exactly the orbits an extension can have created.
    """
    group = graph.group
    elements = group.elements()
    t = len(elements)
    tables = element_tables(graph)
    edge_set = set(graph.edges)

    nbrs: list[list[int]] = [[] for _ in range(graph.num_vertices)]
    for (u, v) in graph.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    loops_at: list[list[Loop]] = [[] for _ in range(graph.num_vertices)]
    for l in graph.loops:
        loops_at[l.vertex].append(l)

    seen: set[int] = set()
    for v in range(graph.num_vertices):
        if v in seen:
            continue
        orb = set(vertex_orbit(graph, v))
        seen.update(orb)
        if len(orb) != t:
            continue
        out = sorted(nbrs[v])
        if any(u in orb for u in out):
            continue
        profile = (len(out), len(loops_at[v]))
        orbit_vertices = tuple(tables[e][0][v] for e in elements)

        if profile == (2, 0):
            red, vmap = _delete_orbit(graph, orb)
            a, b = sorted((vmap[out[0]], vmap[out[1]]))
            yield Reduction(Zero2Edges(a, b), red, orbit_vertices, (), vmap)
        elif profile == (1, 1):
            lid = loops_at[v][0].id
            orbit_loops = tuple(tables[e][1][lid] for e in elements)
            red, vmap = _delete_orbit(graph, orb)
            yield Reduction(
                ZeroEdgeLoop(vmap[out[0]]), red, orbit_vertices, orbit_loops, vmap
            )
        elif profile == (3, 0):
            for i in range(3):
                for j in range(i + 1, 3):
                    x1, x2 = out[i], out[j]
                    if ((x1, x2) if x1 < x2 else (x2, x1)) in edge_set:
                        continue
                    z = out[3 - i - j]
                    red, vmap = _delete_orbit(graph, orb)
                    red = _add_edge_orbit(red, vmap[x1], vmap[x2])
                    yield Reduction(
                        OneEdgeSplit(vmap[x1], vmap[x2], vmap[z]),
                        red,
                        orbit_vertices,
                        (),
                        vmap,
                    )
        elif profile == (2, 1):
            lid = loops_at[v][0].id
            orbit_loops = tuple(tables[e][1][lid] for e in elements)
            for x, y in ((out[0], out[1]), (out[1], out[0])):
                red, vmap = _delete_orbit(graph, orb)
                red, new_id = _add_loop_orbit(red, vmap[x])
                yield Reduction(
                    OneLoopSplit(new_id, vmap[y]),
                    red,
                    orbit_vertices,
                    orbit_loops,
                    vmap,
                )


def enumerate_reductions(
    graph: SymmetricGraph, method: str = "pebble"
) -> tuple[Reduction, ...]:
    """All reductions whose result is still tight (try-and-check)."""
    if not check_tight(graph, method).tight:
        raise NotTightError("reductions are only defined on tight graphs")
    return tuple(
        r for r in _reduction_candidates(graph) if check_tight(r.graph, method).tight
    )


# -- decomposition -----------------------------------------------------------


@dataclass(frozen=True)
class ComponentTrace:
    """Construction recipe for one symmetric component.

    A reduction can disconnect a component, so the terminal object is a
    disjoint union of base graphs: ``base_graph`` stores it concretely and
    ``base_label`` joins the per-piece labels with ``+``.  Replaying
    ``moves`` from ``base_graph`` rebuilds the component; ``embedding[i]``
    is the original vertex the replayed vertex i lands on, and
    ``loop_embedding`` pairs replayed loop ids with original ids.
    """

    base_label: str
    base_graph: SymmetricGraph
    moves: tuple[Move, ...]
    embedding: tuple[int, ...]
    loop_embedding: tuple[tuple[int, int], ...]


def base_union_labels(graph: SymmetricGraph) -> tuple[str, ...] | None:
    """Labels when every symmetric component is a base graph, else None."""
    labels = []
    for comp in symmetric_components(graph):
        sub, _ = induced_subgraph(graph, comp)
        label = is_base_graph(sub)
        if label is None:
            return None
        labels.append(label)
    return tuple(labels)


@dataclass(frozen=True)
class Decomposition:
    graph: SymmetricGraph
    components: tuple[ComponentTrace, ...]
    certified: bool

    @property
    def total_moves(self) -> int:
        return sum(len(c.moves) for c in self.components)


def _translate_move(move: Move, inv_v: dict[int, int], inv_l: dict[int, int]) -> Move:
    if isinstance(move, Zero2Edges):
        a, b = sorted((inv_v[move.v1], inv_v[move.v2]))
        return Zero2Edges(a, b)
    if isinstance(move, ZeroEdgeLoop):
        return ZeroEdgeLoop(inv_v[move.v1])
    if isinstance(move, OneEdgeSplit):
        return OneEdgeSplit(inv_v[move.x0], inv_v[move.y0], inv_v[move.z0])
    return OneLoopSplit(inv_l[move.loop_id], inv_v[move.y0])


def replay(trace: ComponentTrace) -> SymmetricGraph:
    """Apply the trace's moves to its base graph."""
    g = trace.base_graph
    for move in trace.moves:
        g = apply_extension(g, move)
    return g


def _search_reductions(
    start: SymmetricGraph, method: str
) -> tuple[tuple[Reduction, ...], tuple[str, ...]] | SymmetricGraph:
    """Reduction path from ``start`` down to a union of base graphs.

    Depth-first with backtracking: branches that keep the graph in one
    piece are tried first, and the first terminal that is a single base
    graph wins.  A reduction can disconnect the graph, and a path through
    disconnection may bottom out on a disjoint union of bases; such a
    terminal is kept only as a fallback (fewest pieces, then longest path)
    when no single-base terminal exists.  Returns the first stuck graph
    (no terminal reachable at all) as the failure witness.
    """
    best: tuple[tuple[Reduction, ...], tuple[str, ...]] | None = None
    stuck: SymmetricGraph | None = None
    seen: set[SymmetricGraph] = set()

    def visit(
        g: SymmetricGraph, path: list[Reduction]
    ) -> tuple[tuple[Reduction, ...], tuple[str, ...]] | None:
        nonlocal best, stuck
        labels = base_union_labels(g)
        if labels is not None:
            found = (tuple(path), labels)
            if len(labels) == 1:
                return found
            if best is None or (len(labels), -len(path)) < (
                len(best[1]),
                -len(best[0]),
            ):
                best = found
            return None
        if g in seen:
            return None
        seen.add(g)
        cands = [
            c
            for c in _reduction_candidates(g)
            if check_tight(c.graph, method).tight
        ]
        if not cands:
            if stuck is None:
                stuck = g
            return None
        cands.sort(key=lambda c: len(symmetric_components(c.graph)))
        for cand in cands:
            path.append(cand)
            hit = visit(cand.graph, path)
            path.pop()
            if hit is not None:
                return hit
        return None

    hit = visit(start, [])
    if hit is not None:
        return hit
    if best is not None:
        return best
    return stuck if stuck is not None else start


def decompose(graph: SymmetricGraph, method: str = "pebble") -> Decomposition:
    """Reduce every symmetric component to a base graph and certify replay.

    Backtracking search per component, preferring a single-base terminal;
    see _search_reductions.  The returned traces are verified internally:
    replaying each one and relabeling through its embedding must reproduce
    the component exactly.  Raises NotTightError on non-tight input and
    ReductionDeadEnd, carrying the stuck graph, when some component cannot
    reach a union of base graphs by tightness-preserving reductions.
    """
    if not check_tight(graph, method).tight:
        raise NotTightError("decompose needs a tight graph")
    group = graph.group
    elements = group.elements()
    t = len(elements)
    traces = []
    for comp in symmetric_components(graph):
        sub, vmap = induced_subgraph(graph, comp)
        inv_vmap = {new: old for old, new in vmap.items()}

        found = _search_reductions(sub, method)
        if isinstance(found, SymmetricGraph):
            raise ReductionDeadEnd(
                f"tight component on {found.num_vertices} vertices"
                f" (group {group.name}) is not a union of base graphs"
                " and admits no tightness-preserving reduction",
                found,
            )
        steps, labels = found
        label = "+".join(labels)

        # replay forward, tracking where each replayed vertex and loop lands
        base = steps[-1].graph if steps else sub
        x = base
        sigma = list(range(base.num_vertices))  # replay vertex -> current step's
        lam = {lid: lid for lid in base.loop_ids}  # replay loop id -> step's
        moves: list[Move] = []
        for red in reversed(steps):
            inv_v = {s: i for i, s in enumerate(sigma)}
            inv_l = {v: k for k, v in lam.items()}
            translated = _translate_move(red.move, inv_v, inv_l)
            fresh = _fresh_loop_base(x)
            deleted_ids: set[int] = set()
            if isinstance(translated, OneLoopSplit):
                tb = element_tables(x)
                deleted_ids = {tb[e][1][translated.loop_id] for e in elements}
            x = apply_extension(x, translated)
            inv_red = {
                new: old
                for old, new in enumerate(red.vertex_map)
                if new is not None
            }
            sigma = [inv_red[s] for s in sigma] + list(red.orbit_vertices)
            lam = {k: v for k, v in lam.items() if k not in deleted_ids}
            for k in range(t):
                if red.orbit_loops:
                    lam[fresh + k] = red.orbit_loops[k]
            moves.append(translated)

        if relabel(x, sigma, lam) != sub:
            raise RuntimeError(
                "internal error: replaying the trace does not reproduce the"
                " component"
            )
        traces.append(
            ComponentTrace(
                label,
                base,
                tuple(moves),
                tuple(inv_vmap[s] for s in sigma),
                tuple(sorted(lam.items())),
            )
        )
    return Decomposition(graph, tuple(traces), certified_group(group))


def verify_decomposition(graph: SymmetricGraph, dec: Decomposition) -> bool:
    """Replay every trace and compare against the component it claims.

    Exact comparison: the replayed graph, relabeled through the stored
    embedding, must equal the induced component graph field by field.
    """
    comps = symmetric_components(graph)
    if len(comps) != len(dec.components):
        return False
    claimed: list[tuple[int, ...]] = []
    for trace in dec.components:
        claimed.append(tuple(sorted(trace.embedding)))
    if sorted(claimed) != sorted(comps):
        return False
    for trace in dec.components:
        comp = tuple(sorted(trace.embedding))
        sub, vmap = induced_subgraph(graph, comp)
        x = replay(trace)
        if x.num_vertices != len(trace.embedding):
            return False
        sigma = [vmap[orig] for orig in trace.embedding]
        lam = dict(trace.loop_embedding)
        try:
            if relabel(x, sigma, lam) != sub:
                return False
        except (RangeError, SchemaError):
            return False
    return True


# -- random generation -------------------------------------------------------


@dataclass(frozen=True)
class GeneratedGraph:
    graph: SymmetricGraph
    base_label: str
    moves: tuple[Move, ...]


def generate_random(
    group: GroupSpec | str,
    steps: int = 5,
    seed: int = 0,
    base: str | None = None,
) -> GeneratedGraph:
    """Random tight graph: a base plus ``steps`` random extension moves.

    The move kind is drawn uniformly among the applicable kinds and its
    parameters uniformly among the valid choices.  Deterministic in the
    seed.  The result is checked tight before it is returned.  A bare
    ``base`` of "lc" or "pinned" picks up the group's rotation order.
    """
    if isinstance(group, str):
        group = GroupSpec.from_name(group)
    if steps < 0:
        raise RangeError("steps must be nonnegative")
    choices = default_bases(group)
    if not choices:
        raise UnsupportedBackendError(
            f"no construction bases are defined for group {group.name}"
        )
    if base in ("lc", "pinned"):
        base = f"{base}{group.order}"
    rng = random.Random(seed)
    label = base if base is not None else rng.choice(list(choices))
    if base is not None and base not in choices:
        raise SchemaError(
            f"base {base!r} is not available for group {group.name};"
            f" choose from {', '.join(choices)}"
        )
    g = base_graph(label)
    t = group.size
    moves: list[Move] = []
    for _ in range(steps):
        orbs = orbits(g)
        options = ["zero_edge_loop"]
        if g.num_vertices >= 2:
            options.append("zero_two_edges")
        full_edge_orbits = [o for o in orbs.edges if len(o) == t]
        if full_edge_orbits and g.num_vertices >= 3:
            options.append("one_edge_split")
        full_loop_orbits = [o for o in orbs.loops if len(o) == t]
        if full_loop_orbits and g.num_vertices >= 2:
            options.append("one_loop_split")
        kind = rng.choice(sorted(options))
        move: Move
        if kind == "zero_two_edges":
            v1, v2 = sorted(rng.sample(range(g.num_vertices), 2))
            move = Zero2Edges(v1, v2)
        elif kind == "zero_edge_loop":
            move = ZeroEdgeLoop(rng.randrange(g.num_vertices))
        elif kind == "one_edge_split":
            x0, y0 = rng.choice(full_edge_orbits)[0]
            z0 = rng.choice([u for u in range(g.num_vertices) if u not in (x0, y0)])
            move = OneEdgeSplit(x0, y0, z0)
        else:
            lid = rng.choice(full_loop_orbits)[0]
            x0 = g.loop_by_id(lid).vertex
            y0 = rng.choice([u for u in range(g.num_vertices) if u != x0])
            move = OneLoopSplit(lid, y0)
        g = apply_extension(g, move)
        moves.append(move)
    if not check_tight(g).tight:
        raise RuntimeError("internal error: extension moves broke tightness")
    return GeneratedGraph(g, label, tuple(moves))


__all__ = [
    "Zero2Edges",
    "ZeroEdgeLoop",
    "OneEdgeSplit",
    "OneLoopSplit",
    "Move",
    "Reduction",
    "ComponentTrace",
    "Decomposition",
    "GeneratedGraph",
    "apply_extension",
    "base_graph",
    "is_base_graph",
    "base_union_labels",
    "default_bases",
    "certified_group",
    "enumerate_reductions",
    "decompose",
    "verify_decomposition",
    "replay",
    "generate_random",
]
