import json

from utils.report_formatter import rows_to_frame, to_json, to_text


DOCUMENT = {
    "command": "irr",
    "n": 1,
    "r": 1,
    "characters": [
        {"label": "((1),∅)", "b": 0, "symbol": {"beta": [1, 3], "gamma": [1]}},
        {"label": "(∅,(1))", "b": 1, "symbol": None},
    ],
}


def test_json_is_deterministic_and_readable():
    rendered = to_json(DOCUMENT)
    assert rendered == to_json(json.loads(rendered))
    assert rendered.endswith("\n")
    assert "∅" in rendered


def test_text_lists_scalars_and_tables():
    rendered = to_text(DOCUMENT)
    lines = rendered.splitlines()
    assert lines[:3] == ["command: irr", "n: 1", "r: 1"]
    assert "characters (2)" in lines
    assert '{"beta":[1,3],"gamma":[1]}' in rendered
    assert "((1),∅)" in rendered


def test_frame_cells():
    frame = rows_to_frame(DOCUMENT["characters"])
    assert list(frame.columns) == ["label", "b", "symbol"]
    assert frame["symbol"].tolist() == ['{"beta":[1,3],"gamma":[1]}', "-"]
    assert frame["b"].tolist() == ["0", "1"]
