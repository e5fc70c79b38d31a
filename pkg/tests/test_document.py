"""JSON document serialization: round trips and strict parsing."""

import json

import pytest

from conftest import c2_fixed_edge, c3_wheel, mirror_fixed_vertex
from slcrigid import (
    ActionError,
    OneEdgeSplit,
    OneLoopSplit,
    SchemaError,
    Zero2Edges,
    ZeroEdgeLoop,
    base_graph,
    check_tight,
    classify,
    decompose,
    document,
    fixed_count_check,
    generate_random,
    motions,
    pebble_check,
    sample_symmetric_placement,
)


GRAPHS = [
    base_graph("pinned1"),
    base_graph("p1_fixed"),
    base_graph("lc5"),
    base_graph("lc6x2"),
    c2_fixed_edge(),
    c3_wheel(),
    mirror_fixed_vertex(),
]


def test_graph_round_trip():
    for g in GRAPHS:
        text = document.serialize_graph(g)
        back, fw = document.parse_graph(text)
        assert back == g
        assert fw is None


def test_graph_round_trip_with_placement():
    g = mirror_fixed_vertex()
    fw = sample_symmetric_placement(g, seed=7)
    text = document.serialize_graph(g, framework=fw)
    back, fw2 = document.parse_graph(text)
    assert back == g
    assert fw2 == fw


def test_serialization_is_byte_stable():
    g = c2_fixed_edge()
    assert document.serialize_graph(g) == document.serialize_graph(g)
    # keys are sorted so logically equal dicts print identically
    d = document.graph_to_dict(g)
    shuffled = dict(reversed(list(d.items())))
    assert document.dumps(d) == document.dumps(shuffled)


def test_parse_rejects_malformed_json():
    with pytest.raises(SchemaError):
        document.parse_graph("{not json")


def test_parse_rejects_wrong_version():
    d = document.graph_to_dict(base_graph("lc3"))
    d["version"] = 99
    with pytest.raises(SchemaError):
        document.parse_graph(document.dumps(d))


def test_parse_rejects_unknown_keys():
    d = document.graph_to_dict(base_graph("lc3"))
    d["surprise"] = 1
    with pytest.raises(SchemaError):
        document.parse_graph(document.dumps(d))


def test_parse_rejects_missing_fields():
    d = document.graph_to_dict(base_graph("lc3"))
    del d["group"]
    with pytest.raises(SchemaError):
        document.parse_graph(document.dumps(d))


def test_parse_rejects_bad_types():
    d = document.graph_to_dict(base_graph("lc3"))
    d["num_vertices"] = "three"
    with pytest.raises(SchemaError):
        document.parse_graph(document.dumps(d))
    d = document.graph_to_dict(base_graph("lc3"))
    d["edges"] = [[0, 1, 2]]
    with pytest.raises(SchemaError):
        document.parse_graph(document.dumps(d))


def test_parse_validates_the_action():
    d = document.graph_to_dict(base_graph("lc3"))
    d["action"]["rotation_vertex_perm"] = [0, 1, 2]
    with pytest.raises(ActionError):
        document.parse_graph(document.dumps(d))


def test_move_round_trip():
    moves = [
        Zero2Edges(0, 1),
        ZeroEdgeLoop(2),
        OneEdgeSplit(0, 1, 2),
        OneLoopSplit(3, 0),
    ]
    for m in moves:
        text = document.dumps(document.move_to_dict(m))
        assert document.parse_move(text) == m


def test_parse_move_rejects_unknown_kind():
    with pytest.raises(SchemaError):
        document.parse_move(json.dumps({"kind": "teleport", "v1": 0}))


def test_generated_and_decomposition_dicts_are_json():
    gen = generate_random("c3", steps=3, seed=4)
    gd = document.generated_to_dict(gen)
    dd = document.decomposition_to_dict(decompose(gen.graph))
    for d in (gd, dd):
        json.loads(document.dumps(d))
    assert gd["base_label"] == gen.base_label
    assert len(gd["moves"]) == 3
    assert dd["certified"] is True
    assert dd["total_moves"] == 3
    assert len(dd["components"]) == 1


def test_report_dicts_serialize():
    g = c2_fixed_edge()
    fw = sample_symmetric_placement(g, seed=0)
    reports = [
        document.sparsity_report_to_dict(
            pebble_check(g.num_vertices, g.edges, g.loop_vertices)
        ),
        document.fixed_count_report_to_dict(fixed_count_check(g)),
        document.tight_report_to_dict(check_tight(g)),
        document.rank_report_to_dict(classify(g, trials=2, seed=0)),
        document.motion_report_to_dict(motions(fw)),
    ]
    for d in reports:
        text = document.dumps(d)
        json.loads(text)


def test_rank_report_dict_contents():
    r = classify(base_graph("lc3"), trials=2, seed=1)
    d = document.rank_report_to_dict(r)
    assert d["classification"] == "isostatic"
    assert d["rank"] == d["num_rows"] == d["num_cols"] == 6
    assert d["trials"] == 2
