import json

import pytest

from hopftutte.errors import ParseError
from hopftutte.records import parse_record, parse_text


def test_matroid_and_uniform():
    M = parse_record({"type": "matroid", "n": 1, "ranks": [0, 1]}).payload
    assert M.rank() == 1
    U = parse_record({"type": "uniform", "k": 2, "n": 4})
    assert U.kind == "matroid" and U.payload.rank() == 2


def test_perspective_record():
    rec = {"type": "perspective", "front": {"type": "uniform", "k": 1, "n": 2},
           "back": {"type": "uniform", "k": 0, "n": 2}}
    assert parse_record(rec).kind == "perspective"
    rec["front"], rec["back"] = rec["back"], rec["front"]
    with pytest.raises(ParseError) as info:
        parse_record(rec)
    assert info.value.field == "back"


def test_graph_with_partition():
    obj = parse_record({"type": "graph", "v": 3, "edges": [[0, 1], [1, 2]],
                        "partition": {"blocks": [[0, 2], [1]]}})
    assert obj.payload.size == 2
    assert obj.partition.block_of[0] == obj.partition.block_of[2]


def test_delta_matroid_record():
    D = parse_record({"type": "delta-matroid", "n": 2, "feasible": [[], [0], [0, 1]]}).payload
    assert D.size == 2 and len(D.feasible) == 3


def test_ribbon_record_signs():
    rec = {"type": "ribbon", "vertices": [[0, 1]], "edges": [{"pair": [0, 1], "sign": "-"}]}
    assert parse_record(rec).payload.signs == (-1,)


@pytest.mark.parametrize(
    "rec,field",
    [
        ({"n": 1}, "type"),
        ({"type": "cube"}, "type"),
        ({"type": "matroid", "n": 2, "ranks": [0, 1, 1]}, "ranks"),
        ({"type": "matroid", "n": 1, "ranks": [0, 2]}, "ranks"),
        ({"type": "uniform", "k": 3, "n": 2}, "k"),
        ({"type": "graph", "v": 2, "edges": [[0, 1], [1, 5]]}, "edges[1]"),
        ({"type": "graph", "v": 2, "edges": [[0, True]]}, "edges[0][1]"),
        ({"type": "graph", "v": 2}, "edges"),
        ({"type": "graph", "v": 3, "edges": [], "partition": {"blocks": [[0], [0, 1]]}}, "partition.blocks"),
        ({"type": "delta-matroid", "n": 2, "feasible": [[0, 3]]}, "feasible[0][1]"),
        ({"type": "delta-matroid", "n": 3, "feasible": [[], [0, 1, 2]]}, "feasible"),
        ({"type": "ribbon", "vertices": [[0, 1]], "edges": [{"pair": [0, 1], "sign": 2}]}, "edges[0].sign"),
        ({"type": "ribbon", "vertices": [[0, 1]], "edges": [{"pair": [0]}]}, "edges[0].pair"),
        ({"type": "ribbon", "vertices": [[0, 0]], "edges": [{"pair": [0, 0]}]}, "vertices"),
    ],
)
def test_parse_errors_name_the_field(rec, field):
    with pytest.raises(ParseError) as info:
        parse_record(rec)
    assert info.value.field == field
    assert field in str(info.value)


def test_json_syntax_error_has_line():
    with pytest.raises(ParseError) as info:
        parse_text('{"type":\n "graph",, }')
    assert info.value.line == 2


def test_round_trip_text():
    text = json.dumps({"type": "graph", "v": 1, "edges": [[0, 0]]})
    assert parse_text(text).payload.is_loop(0)
