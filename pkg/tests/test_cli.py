import json

import pytest

import cli
from cli import RunConfig, main, run

GOLDEN_CONSTRUCTIBLE_B2 = {
    "command": "constructible",
    "n": 2,
    "r": 1,
    "characters": [
        {
            "n": 2,
            "r": 1,
            "constituents": [{"first": [], "second": [1, 1]}],
            "minimal": {"first": [], "second": [1, 1]},
            "family": {"x": [2, 3], "z": [1], "k": 2, "r": 1},
            "involutions": [{"pairs": [], "fixed": [1]}],
            "b": {"(∅,(1,1))": 4},
        },
        {
            "n": 2,
            "r": 1,
            "constituents": [{"first": [], "second": [2]}, {"first": [1], "second": [1]}],
            "minimal": {"first": [1], "second": [1]},
            "family": {"x": [1], "z": [2, 3, 4], "k": 2, "r": 1},
            "involutions": [{"pairs": [[3, 4]], "fixed": [2]}],
            "b": {"(∅,(2))": 2, "((1),(1))": 1},
        },
        {
            "n": 2,
            "r": 1,
            "constituents": [{"first": [1], "second": [1]}, {"first": [1, 1], "second": []}],
            "minimal": {"first": [1], "second": [1]},
            "family": {"x": [1], "z": [2, 3, 4], "k": 2, "r": 1},
            "involutions": [{"pairs": [[2, 3]], "fixed": [4]}],
            "b": {"((1),(1))": 1, "((1,1),∅)": 2},
        },
        {
            "n": 2,
            "r": 1,
            "constituents": [{"first": [2], "second": []}],
            "minimal": {"first": [2], "second": []},
            "family": {"x": [1, 2], "z": [5], "k": 2, "r": 1},
            "involutions": [{"pairs": [], "fixed": [5]}],
            "b": {"((2),∅)": 0},
        },
    ],
}


def test_constructible_golden(capsys):
    assert main(["constructible", "--n", "2", "--r", "1", "--format", "json"]) == 0
    out = capsys.readouterr().out
    assert json.loads(out) == GOLDEN_CONSTRUCTIBLE_B2
    assert out == json.dumps(GOLDEN_CONSTRUCTIBLE_B2, indent=2, ensure_ascii=False) + "\n"


def test_json_is_deterministic(capsys):
    main(["families", "--n", "3", "--r", "2", "--format", "json"])
    first = capsys.readouterr().out
    main(["families", "--n", "3", "--r", "2", "--format", "json"])
    assert capsys.readouterr().out == first


def test_irr_b2(capsys):
    assert main(["irr", "--n", "2", "--r", "1", "--format", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert sorted(row["b"] for row in document["characters"]) == [0, 1, 2, 2, 4]
    assert set(document["characters"][0]) == {"bipartition", "label", "symbol", "b", "family"}


def test_irr_text(capsys):
    assert main(["irr", "--n", "2", "--r", "1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("command: irr\n")
    assert "characters (5)" in out
    assert "(∅,(1,1))" in out


def test_irr_nonintegral(capsys):
    assert main(["irr", "--n", "2", "--r", "nonintegral", "--format", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["r"] == "nonintegral"


def test_constructible_nonintegral(capsys):
    assert main(["constructible", "--n", "2", "--r", "nonintegral", "--format", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert len(document["characters"]) == 5


def test_verify_passes(capsys):
    assert main(["verify", "--n-max", "5", "--r-max", "4", "--format", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["passed"] is True


def test_verify_failure_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(cli, "get_verification_data", lambda n_max, r_max: {"command": "verify", "passed": False})
    assert main(["verify", "--n-max", "2", "--r-max", "1"]) == 1


def test_service_error_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(cli, "get_family_data", lambda n, r: {"error": "broken"})
    assert main(["families", "--n", "2"]) == 1
    assert capsys.readouterr().out == ""


def test_counterexample(capsys):
    assert main(["counterexample", "--n", "3", "--r-max", "4", "--format", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["r_range"] == [1, 2, 3, 4]
    assert document["witness"]["n"] == 3


def test_counterexample_none_for_b2(capsys):
    assert main(["counterexample", "--n", "2", "--r-max", "1", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["witness"] is None


def test_output_file(tmp_path, capsys):
    target = tmp_path / "families.json"
    assert main(["families", "--n", "2", "--r", "1", "--format", "json", "--output", str(target)]) == 0
    assert capsys.readouterr().out == ""
    document = json.loads(target.read_text(encoding="utf-8"))
    assert len(document["families"]) == 3


def test_verbose_flag_positions(capsys):
    assert main(["--verbose", "irr", "--n", "1"]) == 0
    assert main(["irr", "--n", "1", "--verbose"]) == 0


@pytest.mark.parametrize("argv", [
    ["irr", "--n", "abc"],
    ["irr", "--n", "0"],
    ["families", "--r", "0"],
    ["verify", "--r-max", "nonintegral"],
    ["verify", "--n-max", "99"],
    ["constructible", "--format", "xml"],
    ["unknown"],
    [],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 2


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig("irr", format="xml")
    with pytest.raises(ValueError):
        RunConfig("plot")
    with pytest.raises(ValueError):
        RunConfig("verify", n_max=0)


def test_run_direct(capsys):
    assert run(RunConfig("families", n=1, r=1, format="json")) == 0
    assert len(json.loads(capsys.readouterr().out)["families"]) == 2
