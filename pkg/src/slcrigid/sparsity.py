"""Sparsity counts for looped simple graphs.

A looped simple graph (V, E, L) is *sparse* when every vertex subset X spans
at most 2|X| rows (edges plus loops inside X) and, whenever X spans at least
one edge, at most 2|X| - 3 simple edges; it is *tight* when additionally
|E| + |L| = 2|V|.  Generically, independent rows of the rigidity matrix are
exactly the sparse graphs, which is why these counts certify rigidity.

Two deciders are provided.  ``subset_audit`` enumerates every subset as a
bitmask and is the authoritative oracle (exponential, bounded vertex count).
``pebble_check`` plays a pebble game in polynomial time: two pebbles per
vertex, every simple edge needs four pebbles on its ends, every loop needs
one on its vertex, edges inserted before loops.  The edge pass is the plain
(2,3) game on the simple subgraph; the loop pass rejects a loop exactly when
its reachable set already spans twice its size.  Equivalence of the two
deciders is asserted empirically by the test suite rather than assumed.

Graphs are passed structurally: a vertex count, edge pairs, and a sequence
of loop vertices (one entry per loop).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import RangeError

SUBSET_AUDIT_MAX_VERTICES = 24
_BLOCK = 1 << 20


def _normalize(num_vertices: int, edges, loops):
    if not isinstance(num_vertices, int) or num_vertices < 0:
        raise RangeError("num_vertices must be a nonnegative integer")
    out_edges = []
    seen = set()
    for e in edges:
        u, v = e
        if u == v:
            raise RangeError("self-edge must be a loop entry")
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise RangeError(f"edge {e} out of range")
        uv = (u, v) if u < v else (v, u)
        if uv in seen:
            raise RangeError(f"duplicate edge {uv}")
        seen.add(uv)
        out_edges.append(uv)
    out_loops = []
    for v in loops:
        if not 0 <= v < num_vertices:
            raise RangeError(f"loop vertex {v} out of range")
        out_loops.append(v)
    return sorted(out_edges), sorted(out_loops)


@dataclass(frozen=True)
class Witness:
    """A vertex set violating a count: rows > 2|X| or edges > 2|X| - 3."""

    vertices: tuple[int, ...]
    row_count: int
    edge_count: int
    rule: str  # "rows" or "edges"


@dataclass(frozen=True)
class SparsityReport:
    verdict: str  # "sparse-and-tight" | "sparse-not-tight" | "not-sparse"
    method: str  # "subset" | "pebble"
    num_vertices: int
    num_edges: int
    num_loops: int
    witness: Witness | None = None

    @property
    def sparse(self) -> bool:
        return self.verdict != "not-sparse"

    @property
    def tight(self) -> bool:
        return self.verdict == "sparse-and-tight"


def _verdict(num_vertices: int, num_edges: int, num_loops: int) -> str:
    if num_edges + num_loops == 2 * num_vertices:
        return "sparse-and-tight"
    return "sparse-not-tight"


def subset_audit(
    num_vertices: int,
    edges: Iterable[Sequence[int]],
    loops: Iterable[int],
    max_vertices: int = SUBSET_AUDIT_MAX_VERTICES,
) -> SparsityReport:
    """Exhaustive sparsity decision over all vertex subsets.

    Induced subgraphs suffice: the counts are monotone under adding rows.
    Among violating subsets the reported witness has minimal cardinality,
    ties broken by the numerically smallest vertex bitmask.  Refuses graphs
    above ``max_vertices``; use the pebble fast path for those.
    """
    edges, loops = _normalize(num_vertices, edges, loops)
    n = num_vertices
    if n > max_vertices:
        raise RangeError(
            f"subset_audit is exponential and capped at {max_vertices} vertices;"
            " use the pebble fast path"
        )
    loop_count: dict[int, int] = {}
    for v in loops:
        loop_count[v] = loop_count.get(v, 0) + 1

    best: tuple[int, int, int, int, bool] | None = None  # size, mask, ie, il, edge_rule
    for start in range(0, 1 << n, _BLOCK):
        stop = min(start + _BLOCK, 1 << n)
        masks = np.arange(start, stop, dtype=np.int64)
        ie = np.zeros(stop - start, dtype=np.int64)
        for (u, v) in edges:
            ie += (masks >> u) & (masks >> v) & 1
        il = np.zeros_like(ie)
        for v, cnt in loop_count.items():
            il += ((masks >> v) & 1) * cnt
        size = np.bitwise_count(masks).astype(np.int64)
        rows_bad = (ie + il) > 2 * size
        edges_bad = (ie > 0) & (ie > 2 * size - 3)
        bad = np.nonzero(rows_bad | edges_bad)[0]
        if bad.size:
            sizes = size[bad]
            smallest = bad[sizes == sizes.min()][0]  # masks ascend: first = least
            cand = (
                int(size[smallest]),
                int(masks[smallest]),
                int(ie[smallest]),
                int(il[smallest]),
                not bool(rows_bad[smallest]),
            )
            if best is None or cand[:2] < best[:2]:
                best = cand

    if best is None:
        return SparsityReport(_verdict(n, len(edges), len(loops)), "subset", n, len(edges), len(loops))
    sz, mask, ie_w, il_w, edge_rule = best
    verts = tuple(v for v in range(n) if mask >> v & 1)
    witness = Witness(verts, ie_w + il_w, ie_w, "edges" if edge_rule else "rows")
    return SparsityReport("not-sparse", "subset", n, len(edges), len(loops), witness)


class _PebbleGame:
    """Shared pool of two pebbles per vertex over a directed row orientation."""

    def __init__(self, n: int) -> None:
        self.pebbles = [2] * n
        self.out: list[set[int]] = [set() for _ in range(n)]
        self.self_arcs = [0] * n

    def _find_pebble(self, root: int, forbidden: set[int]) -> bool:
        # DFS along arcs; pull the first free pebble back to the root by
        # reversing the path to it.
        prev: dict[int, int | None] = {root: None}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in sorted(self.out[x], reverse=True):
                if y in prev:
                    continue
                prev[y] = x
                if self.pebbles[y] > 0 and y not in forbidden:
                    cur = y
                    while prev[cur] is not None:
                        p = prev[cur]
                        self.out[p].remove(cur)
                        self.out[cur].add(p)
                        cur = p
                    self.pebbles[y] -= 1
                    self.pebbles[root] += 1
                    return True
                stack.append(y)
        return False

    def reach(self, roots: Iterable[int]) -> set[int]:
        seen = set(roots)
        stack = list(seen)
        while stack:
            x = stack.pop()
            for y in self.out[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def insert_edge(self, u: int, v: int) -> bool:
        ends = {u, v}
        while self.pebbles[u] + self.pebbles[v] < 4:
            if not (self._find_pebble(u, ends) or self._find_pebble(v, ends)):
                return False
        tail, head = (u, v) if self.pebbles[u] > 0 else (v, u)
        self.pebbles[tail] -= 1
        self.out[tail].add(head)
        return True

    def insert_loop(self, v: int) -> bool:
        while self.pebbles[v] < 1:
            if not self._find_pebble(v, {v}):
                return False
        self.pebbles[v] -= 1
        self.self_arcs[v] += 1
        return True


def _induced_counts(edges, loops, verts: set[int]) -> tuple[int, int]:
    ie = sum(1 for (u, v) in edges if u in verts and v in verts)
    il = sum(1 for v in loops if v in verts)
    return ie, il


def pebble_check(
    num_vertices: int,
    edges: Iterable[Sequence[int]],
    loops: Iterable[int],
) -> SparsityReport:
    """Polynomial sparsity decision; witness from the final reachable set."""
    edges, loops = _normalize(num_vertices, edges, loops)
    n = num_vertices
    game = _PebbleGame(n)
    for (u, v) in edges:
        if not game.insert_edge(u, v):
            verts = game.reach((u, v))
            ie, il = _induced_counts(edges, loops, verts)
            witness = Witness(tuple(sorted(verts)), ie + il, ie, "edges")
            return SparsityReport("not-sparse", "pebble", n, len(edges), len(loops), witness)
    for v in loops:
        if not game.insert_loop(v):
            verts = game.reach((v,))
            ie, il = _induced_counts(edges, loops, verts)
            witness = Witness(tuple(sorted(verts)), ie + il, ie, "rows")
            return SparsityReport("not-sparse", "pebble", n, len(edges), len(loops), witness)
    return SparsityReport(_verdict(n, len(edges), len(loops)), "pebble", n, len(edges), len(loops))


@dataclass(frozen=True)
class Criticality:
    """Free capacity of a subset: k uses all rows, k_bar only simple edges."""

    subset: tuple[int, ...]
    row_count: int
    edge_count: int
    k: int
    k_bar: int


def criticality(
    num_vertices: int,
    edges: Iterable[Sequence[int]],
    loops: Iterable[int],
    subset: Iterable[int],
) -> Criticality:
    """k(X) = 2|X| - rows(X) and k_bar(X) = 2|X| - edges(X) for one subset."""
    edges, loops = _normalize(num_vertices, edges, loops)
    verts = set(subset)
    for v in verts:
        if not 0 <= v < num_vertices:
            raise RangeError(f"subset vertex {v} out of range")
    ie, il = _induced_counts(edges, loops, verts)
    return Criticality(
        tuple(sorted(verts)),
        ie + il,
        ie,
        2 * len(verts) - ie - il,
        2 * len(verts) - ie,
    )


def cross_edge_count(
    edges: Iterable[Sequence[int]], a: Iterable[int], b: Iterable[int]
) -> int:
    """Edges with one end in A minus B and the other in B minus A."""
    sa, sb = set(a), set(b)
    only_a, only_b = sa - sb, sb - sa
    count = 0
    for (u, v) in edges:
        if (u in only_a and v in only_b) or (u in only_b and v in only_a):
            count += 1
    return count


__all__ = [
    "SUBSET_AUDIT_MAX_VERTICES",
    "Witness",
    "SparsityReport",
    "Criticality",
    "subset_audit",
    "pebble_check",
    "criticality",
    "cross_edge_count",
]
