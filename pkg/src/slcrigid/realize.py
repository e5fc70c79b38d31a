"""Placements, rigidity matrices, rank backends, and motion spaces.

A framework places every vertex at a plane point p_v and gives every loop a
normal q_l; the loop constrains its vertex to the line through p_v with
normal q_l.  The rigidity matrix has one row per edge, (p_u - p_v | p_v -
p_u) in the endpoint columns, and one row per loop, q_l in the vertex
columns.  With 2|V| columns and no trivial motions to quotient out:

* rigid      <=> rank = 2|V|
* independent <=> rank = number of rows
* isostatic  <=> both, hence rows = 2|V|.

Placements are sampled symmetrically: rotation-fixed vertices go to the
origin, mirror-fixed vertices onto their mirror line, one random point per
remaining orbit, propagated by the group matrices.  Loop normals follow the
same propagation; a mirror-fixed loop is pinned into the eigenspace its
sign label selects.  For groups whose matrices are integral (rotation order
1, 2 or 4) the sample has integer coordinates and an exact rank over the
rationals is available; otherwise ranks come from the SVD with a pinned
tolerance.  A sampled rank is a lower bound on the generic rank, so
``classify`` takes the best of several trials.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ActionError,
    DegenerateInputError,
    RangeError,
    UnsupportedBackendError,
)
from .symgraph import (
    GroupElement,
    SymmetricGraph,
    element_tables,
    loop_mirror_sign,
    loop_stabilizer,
    validate_action,
    vertex_stabilizer,
)

DEFAULT_TOL = 1e-9
DEFAULT_SCALE = 10 ** 6
DEFAULT_TRIALS = 3
_MAX_RESAMPLES = 200

Pair = tuple  # (x, y) of int | Fraction | float


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


@dataclass(frozen=True)
class Framework:
    """A symmetric graph together with vertex points and loop normals.

    ``q`` is aligned with ``graph.loops`` (ascending loop id).
    """

    graph: SymmetricGraph
    p: tuple[Pair, ...]
    q: tuple[Pair, ...]

    def __post_init__(self) -> None:
        if len(self.p) != self.graph.num_vertices:
            raise RangeError("placement has wrong number of vertex points")
        if len(self.q) != len(self.graph.loops):
            raise RangeError("placement has wrong number of loop normals")
        object.__setattr__(self, "p", tuple(tuple(pt) for pt in self.p))
        object.__setattr__(self, "q", tuple(tuple(v) for v in self.q))
        for pt in self.p + self.q:
            if len(pt) != 2:
                raise RangeError("points and normals must be coordinate pairs")

    @property
    def exact(self) -> bool:
        return all(_is_exact(c) for pt in self.p + self.q for c in pt)

    def q_of(self, loop_id: int) -> Pair:
        for loop, vec in zip(self.graph.loops, self.q):
            if loop.id == loop_id:
                return vec
        raise RangeError(f"no loop with id {loop_id}")


def _tau_rows(graph: SymmetricGraph, exact: bool):
    """Symmetry matrix per element, as row tuples of plain numbers."""
    group = graph.group
    mats = {}
    for elem in group.elements():
        if exact:
            mats[elem] = group.tau_exact(elem)
        else:
            m = group.tau(elem)
            mats[elem] = ((m[0, 0], m[0, 1]), (m[1, 0], m[1, 1]))
    return mats


def _apply(mat, vec: Pair) -> Pair:
    (a, b), (c, d) = mat
    x, y = vec
    return (a * x + b * y, c * x + d * y)


def _perp(vec: Pair) -> Pair:
    x, y = vec
    return (-y, x)


def _close(a: Pair, b: Pair, exact: bool, span: float) -> bool:
    if exact:
        return a == b
    return max(abs(a[0] - b[0]), abs(a[1] - b[1])) <= 1e-7 * max(1.0, span)


def sample_symmetric_placement(
    graph: SymmetricGraph, seed: int = 0, scale: int = DEFAULT_SCALE
) -> Framework:
    """Random symmetric framework on the graph; deterministic in the seed.

    Coordinates are drawn as integers in [-scale, scale], so frameworks for
    groups with integral matrices are exact.  Raises DegenerateInputError
    when no injective symmetric placement exists (e.g. two rotation-fixed
    vertices) or when resampling cannot separate the points.
    """
    report = validate_action(graph)
    if not report.ok:
        raise ActionError("; ".join(report.violations))
    group = graph.group
    rng = random.Random(seed)
    exact = group.exact_supported
    tables = element_tables(graph)
    taus = _tau_rows(graph, exact)
    elements = group.elements()

    rot_fixed = [
        v
        for v in range(graph.num_vertices)
        if any(not e.ref for e in vertex_stabilizer(graph, v))
    ]
    if len(rot_fixed) > 1:
        raise DegenerateInputError(
            f"vertices {rot_fixed} are all rotation-fixed and would coincide"
            " at the origin"
        )

    def draw_nonzero() -> int:
        while True:
            t = rng.randint(-scale, scale)
            if t != 0:
                return t

    p: list[Pair | None] = [None] * graph.num_vertices
    for rep in range(graph.num_vertices):
        if p[rep] is not None:
            continue
        stab = vertex_stabilizer(graph, rep)
        mirrors = [e for e in stab if e.ref]
        rotation_fixed = any(not e.ref for e in stab)
        for _ in range(_MAX_RESAMPLES):
            if rotation_fixed:
                cand: Pair = (0, 0) if exact else (0.0, 0.0)
            elif mirrors:
                d = (
                    group.mirror_direction_exact(mirrors[0])
                    if exact
                    else group.mirror_direction(mirrors[0])
                )
                t = draw_nonzero()
                cand = (d[0] * t, d[1] * t)
            else:
                cand = (draw_nonzero(), draw_nonzero())
            orbit_pts: dict[int, Pair] = {}
            for elem in elements:
                w = tables[elem][0][rep]
                if w not in orbit_pts:
                    orbit_pts[w] = _apply(taus[elem], cand)
            placed = [pt for pt in p if pt is not None]
            pts = list(orbit_pts.values())
            ok = True
            for i, a in enumerate(pts):
                for b in pts[i + 1 :] + placed:
                    if _close(a, b, exact, float(scale)):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                for w, pt in orbit_pts.items():
                    p[w] = pt
                break
        else:
            raise DegenerateInputError(
                f"no injective symmetric placement found for the orbit of"
                f" vertex {rep}"
            )

    q_by_id: dict[int, Pair] = {}
    for loop in graph.loops:
        if loop.id in q_by_id:
            continue
        mirrors = [e for e in loop_stabilizer(graph, loop.id) if e.ref]
        if mirrors:
            sign = loop_mirror_sign(graph, loop.id, mirrors[0])
            d = (
                group.mirror_direction_exact(mirrors[0])
                if exact
                else group.mirror_direction(mirrors[0])
            )
            base = d if sign > 0 else _perp(d)
            t = draw_nonzero()
            cand = (base[0] * t, base[1] * t)
        else:
            cand = (draw_nonzero(), draw_nonzero())
        for elem in elements:
            lid = tables[elem][1][loop.id]
            if lid not in q_by_id:
                q_by_id[lid] = _apply(taus[elem], cand)

    return Framework(
        graph, tuple(p), tuple(q_by_id[l.id] for l in graph.loops)
    )


def check_framework(fw: Framework, tol: float = DEFAULT_TOL) -> tuple[str, ...]:
    """Symmetry and nondegeneracy residuals of a framework, as messages.

    Checks injectivity, nonzero loop normals, equivariance of the points,
    equivariance of the normals up to sign, and the pinned sign of every
    mirror-fixed loop.  Exact frameworks are compared exactly.
    """
    graph, group = fw.graph, fw.graph.group
    exact = fw.exact
    span = max(
        [1.0] + [abs(float(c)) for pt in fw.p + fw.q for c in pt]
    )
    eps = 0.0 if exact else tol * span
    tables = element_tables(graph)
    taus = _tau_rows(graph, exact)
    bad: list[str] = []

    def near(a: Pair, b: Pair) -> bool:
        return max(abs(a[0] - b[0]), abs(a[1] - b[1])) <= eps

    for u in range(graph.num_vertices):
        for v in range(u + 1, graph.num_vertices):
            if near(fw.p[u], fw.p[v]):
                bad.append(f"vertices {u} and {v} coincide")
    for loop, vec in zip(graph.loops, fw.q):
        if max(abs(vec[0]), abs(vec[1])) <= eps:
            bad.append(f"loop {loop.id} has zero normal")

    for elem in group.elements():
        if elem == group.identity():
            continue
        vp, lp = tables[elem]
        for v in range(graph.num_vertices):
            if not near(_apply(taus[elem], fw.p[v]), fw.p[vp[v]]):
                bad.append(
                    f"{group.element_label(elem)} moves vertex {v} off its image"
                )
        for loop, vec in zip(graph.loops, fw.q):
            img = _apply(taus[elem], vec)
            target = fw.q_of(lp[loop.id])
            neg = (-target[0], -target[1])
            if not (near(img, target) or near(img, neg)):
                bad.append(
                    f"{group.element_label(elem)} moves loop {loop.id} normal"
                    " off its image line"
                )

    for loop, vec in zip(graph.loops, fw.q):
        for elem in loop_stabilizer(graph, loop.id):
            if not elem.ref:
                continue
            sign = loop_mirror_sign(graph, loop.id, elem)
            img = _apply(taus[elem], vec)
            want = (sign * vec[0], sign * vec[1])
            if not near(img, want):
                bad.append(
                    f"loop {loop.id} normal is not in the"
                    f" {'+' if sign > 0 else '-'}1 eigenspace of"
                    f" {group.element_label(elem)}"
                )
    return tuple(bad)


@dataclass(frozen=True)
class RigidityMatrix:
    """Rows: edges in sorted order, then loops by id.  Columns: 2v, 2v+1."""

    entries: tuple[tuple, ...]
    row_labels: tuple[str, ...]
    num_cols: int
    exact: bool

    @property
    def num_rows(self) -> int:
        return len(self.entries)

    def to_array(self) -> np.ndarray:
        return np.array(
            [[float(x) for x in row] for row in self.entries], dtype=float
        ).reshape(self.num_rows, self.num_cols)


def build_rigidity_matrix(fw: Framework) -> RigidityMatrix:
    graph = fw.graph
    ncols = 2 * graph.num_vertices
    rows: list[tuple] = []
    labels: list[str] = []
    for (u, v) in graph.edges:
        du = (fw.p[u][0] - fw.p[v][0], fw.p[u][1] - fw.p[v][1])
        if du == (0, 0):
            raise DegenerateInputError(f"edge ({u}, {v}) has coincident endpoints")
        row = [0] * ncols
        row[2 * u], row[2 * u + 1] = du
        row[2 * v], row[2 * v + 1] = -du[0], -du[1]
        rows.append(tuple(row))
        labels.append(f"edge {u}-{v}")
    for loop, vec in zip(graph.loops, fw.q):
        if vec == (0, 0):
            raise DegenerateInputError(f"loop {loop.id} has zero normal")
        row = [0] * ncols
        row[2 * loop.vertex], row[2 * loop.vertex + 1] = vec
        rows.append(tuple(row))
        labels.append(f"loop {loop.id}")
    return RigidityMatrix(tuple(rows), tuple(labels), ncols, fw.exact)


@dataclass(frozen=True)
class RankReport:
    rank: int
    num_rows: int
    num_cols: int
    backend: str
    classification: str
    tolerance: float | None = None
    smallest_accepted: float | None = None
    largest_rejected: float | None = None
    trials: int = 1
    trial_ranks: tuple[int, ...] = ()
    seed: int | None = None

    @property
    def rigid(self) -> bool:
        return self.rank == self.num_cols

    @property
    def independent(self) -> bool:
        return self.rank == self.num_rows

    @property
    def isostatic(self) -> bool:
        return self.rigid and self.independent


def _classification(rank: int, rows: int, cols: int) -> str:
    rigid = rank == cols
    independent = rank == rows
    if rigid and independent:
        return "isostatic"
    if rigid:
        return "rigid-dependent"
    if independent:
        return "independent-flexible"
    return "dependent-flexible"


def _float_rank(a: np.ndarray, tol: float) -> tuple[int, float | None, float | None]:
    if a.size == 0:
        return 0, None, None
    svals = np.linalg.svd(a, compute_uv=False)
    smax = float(svals[0])
    if smax == 0.0:
        return 0, None, float(smax)
    cut = tol * smax * max(a.shape)
    accepted = svals[svals > cut]
    rejected = svals[svals <= cut]
    return (
        int(accepted.size),
        float(accepted[-1]) if accepted.size else None,
        float(rejected[0]) if rejected.size else None,
    )


def _rows_as_integers(entries: Iterable[Sequence]) -> list[list[int]]:
    out = []
    for row in entries:
        fracs = [Fraction(x) for x in row]
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        out.append([int(f * den) for f in fracs])
    return out


def _int_rank(rows: list[list[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    m = [row[:] for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    r = 0
    prev = 1
    for c in range(nc):
        if r >= nr:
            break
        piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
    return r


def rank(
    matrix: RigidityMatrix, backend: str = "float", tol: float = DEFAULT_TOL
) -> RankReport:
    """Rank of one rigidity matrix with the requested backend."""
    if backend == "float":
        r, small, large = _float_rank(matrix.to_array(), tol)
        return RankReport(
            r,
            matrix.num_rows,
            matrix.num_cols,
            "float",
            _classification(r, matrix.num_rows, matrix.num_cols),
            tolerance=tol,
            smallest_accepted=small,
            largest_rejected=large,
            trial_ranks=(r,),
        )
    if backend == "exact":
        if not matrix.exact:
            raise UnsupportedBackendError(
                "exact rank needs integer or rational entries; the group's"
                " symmetry matrices must be integral (rotation order 1, 2 or 4)"
            )
        r = _int_rank(_rows_as_integers(matrix.entries))
        return RankReport(
            r,
            matrix.num_rows,
            matrix.num_cols,
            "exact",
            _classification(r, matrix.num_rows, matrix.num_cols),
            trial_ranks=(r,),
        )
    raise UnsupportedBackendError(f"unknown backend {backend!r}")


def classify(
    graph: SymmetricGraph,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    backend: str = "float",
    tol: float = DEFAULT_TOL,
    scale: int = DEFAULT_SCALE,
) -> RankReport:
    """Best rank over several sampled placements.

    Every sampled rank bounds the generic rank from below, so the maximum
    over trials is reported and drives the classification.
    """
    if trials < 1:
        raise RangeError("trials must be positive")
    best: RankReport | None = None
    trial_ranks = []
    for t in range(trials):
        fw = sample_symmetric_placement(graph, seed=seed + t, scale=scale)
        rep = rank(build_rigidity_matrix(fw), backend=backend, tol=tol)
        trial_ranks.append(rep.rank)
        if best is None or rep.rank > best.rank:
            best = rep
    return replace(best, trials=trials, trial_ranks=tuple(trial_ranks), seed=seed)


@dataclass(frozen=True)
class MotionReport:
    """Basis of the infinitesimal motion space (velocity per vertex)."""

    dimension: int
    basis: tuple[tuple[Pair, ...], ...]
    backend: str
    residual: float


def _exact_nullspace(entries, ncols: int) -> list[list[Fraction]]:
    m = [[Fraction(x) for x in row] for row in entries]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -m[i][free]
        basis.append(vec)
    return basis


def motions(
    fw: Framework, backend: str = "float", tol: float = DEFAULT_TOL
) -> MotionReport:
    """Nullspace of the rigidity matrix as per-vertex velocities."""
    matrix = build_rigidity_matrix(fw)
    n = fw.graph.num_vertices
    if backend == "exact":
        if not matrix.exact:
            raise UnsupportedBackendError(
                "exact motions need integer or rational entries"
            )
        vecs = _exact_nullspace(matrix.entries, matrix.num_cols)
        basis = tuple(
            tuple((v[2 * i], v[2 * i + 1]) for i in range(n)) for v in vecs
        )
        return MotionReport(len(basis), basis, "exact", 0.0)
    if backend != "float":
        raise UnsupportedBackendError(f"unknown backend {backend!r}")
    a = matrix.to_array()
    if matrix.num_rows == 0:
        vecs = np.eye(matrix.num_cols)
    else:
        _, svals, vh = np.linalg.svd(a)
        smax = float(svals[0]) if svals.size else 0.0
        cut = tol * smax * max(a.shape)
        r = int(np.count_nonzero(svals > cut))
        vecs = vh[r:]
    basis = tuple(
        tuple((float(v[2 * i]), float(v[2 * i + 1])) for i in range(n))
        for v in vecs
    )
    residual = 0.0
    if matrix.num_rows and len(basis):
        residual = float(np.max(np.abs(a @ np.asarray(vecs).T)))
    return MotionReport(len(basis), basis, "float", residual)


__all__ = [
    "DEFAULT_TOL",
    "DEFAULT_SCALE",
    "DEFAULT_TRIALS",
    "Framework",
    "RigidityMatrix",
    "RankReport",
    "MotionReport",
    "sample_symmetric_placement",
    "check_framework",
    "build_rigidity_matrix",
    "rank",
    "classify",
    "motions",
]
