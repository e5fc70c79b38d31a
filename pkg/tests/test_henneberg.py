"""Extension moves, base recognition, decomposition, and round trips."""

import pytest

from conftest import c2_fixed_edge, ring_with_spokes
from slcrigid import (
    GroupSpec,
    InvalidMoveError,
    NotTightError,
    OneEdgeSplit,
    OneLoopSplit,
    ReductionDeadEnd,
    SchemaError,
    SymmetricGraph,
    Zero2Edges,
    ZeroEdgeLoop,
    apply_extension,
    base_graph,
    base_union_labels,
    certified_group,
    decompose,
    default_bases,
    enumerate_reductions,
    generate_random,
    is_base_graph,
    is_tight,
    replay,
    verify_decomposition,
)


BASE_LABELS = [
    "pinned1",
    "pinned2",
    "pinned3",
    "p1_fixed",
    "p1_swap",
    "lc3",
    "lc5",
    "lc6",
    "lc6x2",
    "lc9x3",
]


def test_base_labels_round_trip():
    for label in BASE_LABELS:
        g = base_graph(label)
        assert is_base_graph(g) == label, label
        assert is_tight(g), label


def test_split_looped_cycle_shape():
    g = base_graph("lc6x2")
    # two disjoint looped triangles swapped by the rotation
    assert g.num_vertices == 6
    assert g.edges == ((0, 2), (0, 4), (1, 3), (1, 5), (2, 4), (3, 5))
    assert len(g.loops) == 6


def test_bad_base_labels_rejected():
    for label in ["lc2", "lc6x4", "lc4x2", "pinned0", "mystery", "lcx", "lc"]:
        with pytest.raises(SchemaError):
            base_graph(label)


def test_non_base_graphs_are_not_recognized():
    assert is_base_graph(c2_fixed_edge()) is None
    assert is_base_graph(ring_with_spokes(5)) is None
    g = generate_random("c2", steps=2, seed=0).graph
    assert is_base_graph(g) is None


def test_base_union_labels():
    assert base_union_labels(base_graph("lc3")) == ("lc3",)
    assert base_union_labels(c2_fixed_edge()) is None


def test_default_bases_per_group():
    assert default_bases(GroupSpec.from_name("c1")) == ("pinned1",)
    assert "p1_fixed" in default_bases(GroupSpec.from_name("c2"))
    assert "lc3" in default_bases(GroupSpec.from_name("c3"))
    assert "p1_swap" in default_bases(GroupSpec.from_name("c4"))
    assert default_bases(GroupSpec.from_name("cs")) == ()


def test_certified_groups_are_half_turn_and_odd_rotations():
    flags = {
        n: certified_group(GroupSpec.from_name(n))
        for n in ["c1", "c2", "c3", "c4", "c5", "c6", "cs", "d3"]
    }
    assert flags == {
        "c1": True,
        "c2": True,
        "c3": True,
        "c4": False,
        "c5": True,
        "c6": False,
        "cs": False,
        "d3": False,
    }


def test_vertex_addition_adds_an_orbit():
    g = base_graph("lc3")
    h = apply_extension(g, Zero2Edges(0, 1))
    assert h.num_vertices == 6
    assert len(h.edges) == len(g.edges) + 6
    assert is_tight(h)


def test_vertex_addition_with_loop():
    g = base_graph("p1_fixed")
    h = apply_extension(g, ZeroEdgeLoop(0))
    assert h.num_vertices == 3
    assert len(h.loops) == len(g.loops) + 2
    assert len(h.edges) == 2
    assert is_tight(h)


def test_edge_split_replaces_an_orbit():
    g = base_graph("lc3")
    h = apply_extension(g, OneEdgeSplit(0, 1, 2))
    assert h.num_vertices == 6
    assert is_tight(h)
    # the split edge orbit is gone, new vertices join its ends
    assert (0, 1) not in h.edges


def test_loop_split_moves_a_loop_orbit_to_the_new_vertices():
    g = base_graph("pinned2")
    h = apply_extension(g, OneLoopSplit(0, 1))
    assert h.num_vertices == 4
    assert is_tight(h)
    # the split loop's orbit {0, 2} is consumed; the new vertices carry
    # fresh loops and connect to the old vertices
    assert set(h.loop_ids).isdisjoint({0, 2})
    assert [(l.id, l.vertex) for l in h.loops] == [
        (1, 0),
        (3, 1),
        (4, 2),
        (5, 3),
    ]
    assert len(h.edges) == 4


def test_invalid_moves_are_rejected():
    g = base_graph("lc3")
    with pytest.raises(InvalidMoveError):
        apply_extension(g, Zero2Edges(0, 0))
    with pytest.raises(InvalidMoveError):
        apply_extension(g, Zero2Edges(0, 99))
    with pytest.raises(InvalidMoveError):
        apply_extension(g, OneEdgeSplit(0, 1, 1))
    with pytest.raises(InvalidMoveError):
        apply_extension(base_graph("lc5"), OneEdgeSplit(0, 2, 1))  # not an edge
    with pytest.raises(InvalidMoveError):
        apply_extension(g, OneLoopSplit(99, 0))


def test_loop_split_requires_full_orbit():
    # the fixed loop of p1_fixed sits in an orbit of size 1, not 2
    g = base_graph("p1_fixed")
    fixed = [l for l in g.loops if l.vertex == 0][0]
    with pytest.raises(InvalidMoveError):
        apply_extension(g, OneLoopSplit(fixed.id, 0))


def test_enumerate_reductions_requires_tight_input():
    with pytest.raises(NotTightError):
        enumerate_reductions(c2_fixed_edge())


def test_reductions_undo_an_extension():
    g = base_graph("lc3")
    h = apply_extension(g, Zero2Edges(0, 1))
    reds = enumerate_reductions(h)
    assert reds
    assert any(r.graph == g for r in reds)


def test_generate_random_is_deterministic():
    a = generate_random("c3", steps=4, seed=9)
    b = generate_random("c3", steps=4, seed=9)
    assert a.graph == b.graph
    assert a.moves == b.moves
    assert a.base_label == b.base_label


def test_generate_random_rejects_bad_arguments():
    with pytest.raises(Exception):
        generate_random("cs", steps=2, seed=0)
    with pytest.raises(SchemaError):
        generate_random("c2", steps=2, seed=0, base="lc3")


def test_generated_graphs_are_tight():
    for name in ["c1", "c2", "c3", "c4", "c5", "c6"]:
        for seed in range(3):
            gen = generate_random(name, steps=3, seed=seed)
            assert is_tight(gen.graph), (name, seed)


def test_decompose_round_trip_certified_groups():
    # certified groups decompose to a single base with one trace move per
    # generation move, and the replayed trace rebuilds the same graph
    for name in ["c1", "c2", "c3", "c5"]:
        for seed in range(4):
            gen = generate_random(name, steps=4, seed=seed)
            dec = decompose(gen.graph)
            assert dec.certified == certified_group(gen.graph.group)
            assert len(dec.components) == 1
            trace = dec.components[0]
            assert "+" not in trace.base_label
            assert len(trace.moves) == len(gen.moves), (name, seed)
            assert verify_decomposition(gen.graph, dec)


def test_decompose_uncertified_groups_still_verifies():
    for name in ["c4", "c6"]:
        for seed in range(3):
            gen = generate_random(name, steps=3, seed=seed)
            dec = decompose(gen.graph)
            assert not dec.certified
            assert verify_decomposition(gen.graph, dec)


def test_decompose_requires_tight_input():
    with pytest.raises(NotTightError):
        decompose(c2_fixed_edge())


def test_decompose_dead_end_reports_the_stuck_graph():
    g = ring_with_spokes(5)
    assert is_tight(g)
    with pytest.raises(ReductionDeadEnd) as exc:
        decompose(g)
    assert exc.value.graph.num_vertices == 10


def test_replay_rebuilds_the_component():
    gen = generate_random("c2", steps=3, seed=5)
    dec = decompose(gen.graph)
    trace = dec.components[0]
    rebuilt = replay(trace)
    assert rebuilt.num_vertices == gen.graph.num_vertices
    assert is_tight(rebuilt)


def test_verify_decomposition_rejects_tampering():
    gen = generate_random("c2", steps=3, seed=1)
    dec = decompose(gen.graph)
    other = generate_random("c2", steps=3, seed=2)
    assert not verify_decomposition(other.graph, dec)


def test_zero_step_generation_is_the_base():
    gen = generate_random("c3", steps=0, seed=0)
    assert is_base_graph(gen.graph) == gen.base_label
    dec = decompose(gen.graph)
    assert dec.total_moves == 0


def test_split_cycle_bases_decompose_trivially():
    for label in ["lc6x2", "lc9x3"]:
        dec = decompose(base_graph(label))
        assert dec.total_moves == 0
        assert dec.components[0].base_label == label
