"""Symmetric placements, rigidity matrices, rank backends, and motions."""

import math
import random

import pytest

from conftest import c2_fixed_edge, c3_wheel, ring_with_spokes
from slcrigid import (
    DegenerateInputError,
    Framework,
    GroupSpec,
    Loop,
    SymmetricGraph,
    base_graph,
    build_rigidity_matrix,
    check_framework,
    classify,
    element_action,
    motions,
    rank,
    sample_symmetric_placement,
)


def test_sampling_is_deterministic_in_the_seed():
    g = base_graph("lc5")
    a = sample_symmetric_placement(g, seed=3)
    b = sample_symmetric_placement(g, seed=3)
    c = sample_symmetric_placement(g, seed=4)
    assert a.p == b.p and a.q == b.q
    assert a.p != c.p


def test_sampled_placement_is_symmetric():
    for label in ["lc5", "p1_fixed", "p1_swap", "pinned3"]:
        g = base_graph(label)
        fw = sample_symmetric_placement(g, seed=1)
        assert check_framework(fw) == ()
        group = g.group
        for e in group.elements():
            act = element_action(g, e)
            tau = group.tau(e)
            for v in range(g.num_vertices):
                x, y = fw.p[v]
                gx = tau[0][0] * x + tau[0][1] * y
                gy = tau[1][0] * x + tau[1][1] * y
                ix, iy = fw.p[act.vertex[v]]
                assert math.hypot(gx - ix, gy - iy) < 1e-6 * 10**6


def test_integral_groups_sample_exact_coordinates():
    fw = sample_symmetric_placement(base_graph("p1_fixed"), seed=0)
    assert fw.exact
    fw2 = sample_symmetric_placement(base_graph("lc3"), seed=0)
    assert not fw2.exact


def test_two_rotation_fixed_vertices_cannot_be_placed():
    g = SymmetricGraph(
        GroupSpec("cyclic", 2),
        2,
        (),
        (Loop(0, 0), Loop(1, 0), Loop(2, 1), Loop(3, 1)),
        rotation_vertex_perm=(0, 1),
        rotation_loop_perm={0: 0, 1: 1, 2: 2, 3: 3},
    )
    with pytest.raises(DegenerateInputError):
        sample_symmetric_placement(g, seed=0)


def test_framework_shape_validation():
    g = base_graph("lc3")
    with pytest.raises(Exception):
        Framework(g, ((0, 0),), ())


def test_matrix_rows_follow_edges_then_loops():
    g = c2_fixed_edge()
    fw = sample_symmetric_placement(g, seed=0)
    m = build_rigidity_matrix(fw)
    assert m.num_rows == 6
    assert m.num_cols == 6
    assert m.row_labels == (
        "edge 0-1",
        "edge 0-2",
        "edge 1-2",
        "loop 0",
        "loop 1",
        "loop 2",
    )
    # edge rows: difference vector at one end, negated at the other
    row = m.entries[0]
    du = (fw.p[0][0] - fw.p[1][0], fw.p[0][1] - fw.p[1][1])
    assert (row[0], row[1]) == du
    assert (row[2], row[3]) == (-du[0], -du[1])
    assert (row[4], row[5]) == (0, 0)
    # loop rows: the normal in that vertex block only
    lrow = m.entries[3]
    assert (lrow[0], lrow[1]) == fw.q[0]
    assert lrow[2:] == (0, 0, 0, 0)


def test_degenerate_placements_are_rejected():
    g = SymmetricGraph(GroupSpec("cyclic", 1), 2, ((0, 1),), (Loop(0, 0),))
    with pytest.raises(DegenerateInputError):
        build_rigidity_matrix(Framework(g, ((1, 1), (1, 1)), ((1, 0),)))
    with pytest.raises(DegenerateInputError):
        build_rigidity_matrix(Framework(g, ((0, 0), (1, 1)), ((0, 0),)))


def test_float_and_exact_ranks_agree_on_integral_groups():
    rng = random.Random(17)
    for label in ["p1_fixed", "p1_swap", "pinned1", "pinned2"]:
        g = base_graph(label)
        for _ in range(3):
            fw = sample_symmetric_placement(g, seed=rng.randint(0, 10**6))
            m = build_rigidity_matrix(fw)
            rf = rank(m, backend="float")
            re_ = rank(m, backend="exact")
            assert rf.rank == re_.rank, label
            assert rf.classification == re_.classification


def test_exact_backend_requires_exact_entries():
    fw = sample_symmetric_placement(base_graph("lc3"), seed=0)
    m = build_rigidity_matrix(fw)
    with pytest.raises(Exception):
        rank(m, backend="exact")


def test_classify_base_graphs_isostatic():
    for label in ["pinned1", "p1_fixed", "p1_swap", "lc3", "lc5", "lc6x2"]:
        r = classify(base_graph(label), trials=3, seed=0)
        assert r.classification == "isostatic", label
        assert r.isostatic and r.rigid and r.independent


def test_classify_fixed_edge_triangle_dependent_flexible():
    for seed in range(5):
        r = classify(c2_fixed_edge(), trials=3, seed=seed)
        assert r.classification == "dependent-flexible"
        assert (r.rank, r.num_rows, r.num_cols) == (5, 6, 6)


def test_classify_wheel_rigid_dependent():
    for seed in range(5):
        r = classify(c3_wheel(), trials=3, seed=seed)
        assert r.classification == "rigid-dependent"
        assert (r.rank, r.num_rows, r.num_cols) == (8, 9, 8)


def test_classify_ring_with_spokes_isostatic():
    r = classify(ring_with_spokes(5), trials=3, seed=0)
    assert r.classification == "isostatic"
    assert r.rank == 20


def test_classify_records_trials():
    r = classify(base_graph("lc3"), trials=4, seed=2)
    assert r.trials == 4
    assert len(r.trial_ranks) == 4
    assert r.rank == max(r.trial_ranks)


def test_motion_space_of_flexible_framework():
    g = c2_fixed_edge()
    fw = sample_symmetric_placement(g, seed=0)
    rep = motions(fw)
    assert rep.dimension == 1
    assert rep.residual < 1e-6
    # the motion must be orthogonal to every constraint row
    m = build_rigidity_matrix(fw)
    vel = rep.basis[0]
    for row in m.entries:
        dot = sum(
            row[2 * v] * vel[v][0] + row[2 * v + 1] * vel[v][1]
            for v in range(g.num_vertices)
        )
        assert abs(dot) < 1e-3


def test_motions_of_isostatic_framework_are_trivial():
    fw = sample_symmetric_placement(base_graph("p1_fixed"), seed=1)
    rep = motions(fw)
    assert rep.dimension == 0
    assert rep.basis == ()


def test_exact_motions_match_float_dimension():
    fw = sample_symmetric_placement(c2_fixed_edge(), seed=0)
    assert fw.exact
    a = motions(fw, backend="float")
    b = motions(fw, backend="exact")
    assert a.dimension == b.dimension == 1
    assert b.residual == 0
