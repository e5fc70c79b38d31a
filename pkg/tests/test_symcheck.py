"""Fixed-count conditions, character comparison, and combined tightness."""

import pytest

from conftest import c2_fixed_edge, c3_wheel, mirror_fixed_vertex, mirror_pair
from slcrigid import (
    ActionError,
    GroupSpec,
    Loop,
    SymmetricGraph,
    base_graph,
    character_vectors,
    check_tight,
    default_bases,
    fixed_count_check,
    is_gamma_tight,
    is_tight,
)
from slcrigid.selftest import negative_control


def test_fixed_edge_triangle_fails_half_turn_counts():
    g = c2_fixed_edge()
    fc = fixed_count_check(g)
    assert not fc.passed
    assert fc.first_failure == "half-turn counts"
    cond = fc.conditions[0]
    assert cond.detail == "v=1, e=1, l=1"


def test_fixed_edge_triangle_characters_disagree():
    g = c2_fixed_edge()
    ch = character_vectors(g)
    assert ch.labels == ("id", "c2")
    assert ch.chi_rows == (6, 0)
    assert ch.chi_cols == (6.0, -2.0)
    assert ch.equal_per_element == (True, False)
    assert not ch.equal


def test_fixed_edge_triangle_is_count_tight_but_not_tight():
    g = c2_fixed_edge()
    report = check_tight(g)
    assert report.sparsity.verdict == "sparse-and-tight"
    assert not report.tight
    assert not is_tight(g)


def test_gamma_tight_alias():
    assert is_gamma_tight is is_tight


def test_wheel_fails_threefold_fixed_counts():
    g = c3_wheel()
    fc = fixed_count_check(g)
    assert fc.first_failure == "c3: no fixed vertices, edges or loops"


def test_wheel_characters():
    g = c3_wheel()
    ch = character_vectors(g)
    assert ch.labels == ("id", "c3", "c3^2")
    assert ch.chi_rows == (9, 0, 0)
    assert abs(ch.chi_cols[0] - 8.0) < 1e-9
    assert abs(ch.chi_cols[1] + 1.0) < 1e-9
    assert abs(ch.chi_cols[2] + 1.0) < 1e-9
    assert ch.equal_per_element == (False, False, False)


def test_wheel_is_not_tight_for_either_reason():
    report = check_tight(c3_wheel())
    assert report.sparsity.verdict == "not-sparse"
    assert not report.fixed_count.passed
    assert not report.tight


def test_mirror_pair_fails_reflection_balance():
    g = mirror_pair()
    fc = fixed_count_check(g)
    assert fc.first_failure == "s: fixed edges + plus loops = minus loops"


def test_mirror_fixed_vertex_is_tight_with_equal_characters():
    g = mirror_fixed_vertex()
    report = check_tight(g)
    assert report.tight
    assert report.character.equal
    assert is_tight(g)


def test_negative_control_is_count_tight_only():
    g = negative_control()
    report = check_tight(g)
    assert report.sparsity.tight
    assert not report.fixed_count.passed
    assert not report.character.equal
    assert not report.tight


def test_looped_cycle_characters_are_all_zero_off_identity():
    g = base_graph("lc5")
    ch = character_vectors(g)
    assert ch.chi_rows == (10, 0, 0, 0, 0)
    assert all(abs(c) < 1e-9 for c in ch.chi_cols[1:])
    assert ch.equal


def test_every_default_base_is_tight():
    for name in ["c1", "c2", "c3", "c4", "c5", "c6", "cs"]:
        group = GroupSpec.from_name(name)
        for label in default_bases(group):
            g = base_graph(label)
            assert is_tight(g), (name, label)
            assert character_vectors(g).equal, (name, label)


def test_check_tight_subset_method_agrees():
    for g in [c2_fixed_edge(), mirror_fixed_vertex(), base_graph("lc3")]:
        assert check_tight(g, method="pebble").tight == check_tight(
            g, method="subset"
        ).tight


def test_check_tight_rejects_unknown_method():
    with pytest.raises(ActionError):
        check_tight(base_graph("lc3"), method="gaussian")


def test_check_tight_rejects_invalid_action():
    g = SymmetricGraph(
        GroupSpec("cyclic", 2),
        2,
        (),
        (Loop(0, 0), Loop(1, 0), Loop(2, 1), Loop(3, 1)),
        rotation_vertex_perm=(1, 0),
        rotation_loop_perm={0: 1, 1: 0, 2: 3, 3: 2},
    )
    with pytest.raises(ActionError):
        check_tight(g)


def test_trivial_group_has_no_extra_conditions():
    g = SymmetricGraph(
        GroupSpec("cyclic", 1), 1, (), (Loop(0, 0), Loop(1, 0))
    )
    fc = fixed_count_check(g)
    assert fc.passed
    assert fc.first_failure is None
    assert is_tight(g)
