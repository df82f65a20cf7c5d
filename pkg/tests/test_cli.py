"""Command-line interface: outputs, formats, exit codes, determinism."""

import json

import pytest

from nlpoly.cli import main, parse_matrix
from nlpoly.errors import ParseError

CYCLE3 = "digraph 3\n0 1\n1 2\n2 0\n"
DIGON = "digraph 2\n0 1\n1 0\n"
COLOOP_JSON = '{"rows": [[1]]}'


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# matrix parsing


def test_parse_matrix_accepts_ints_and_fraction_strings(tmp_path):
    path = _write(tmp_path, "m.json", '{"rows": [[1, "-3/4"], ["2", 0]]}')
    m = parse_matrix(path)
    assert m.rows == 2 and m.cols == 2
    assert m.at(0, 1) * 4 == -3


def test_parse_matrix_rejects_bad_input(tmp_path):
    with pytest.raises(ParseError):
        parse_matrix(_write(tmp_path, "a.json", '{"rows": [[1], [1, 2]]}'))
    with pytest.raises(ParseError):
        parse_matrix(_write(tmp_path, "b.json", '{"rows": [[true]]}'))
    with pytest.raises(ParseError):
        parse_matrix(_write(tmp_path, "c.json", '{"cols": []}'))
    with pytest.raises(ParseError) as exc:
        parse_matrix(_write(tmp_path, "d.json", '{"rows": [[1,]]}'))
    assert exc.value.line is not None


def test_parse_matrix_empty(tmp_path):
    m = parse_matrix(_write(tmp_path, "e.json", '{"rows": []}'))
    assert (m.rows, m.cols) == (0, 0)


# ---------------------------------------------------------------------------
# commands


def test_coflow_text(tmp_path, capsys):
    path = _write(tmp_path, "c3.digraph", CYCLE3)
    code, out, _ = _run(capsys, ["coflow", path])
    assert code == 0 and out == "x^2 - 1\n"


def test_coflow_both_oracles(tmp_path, capsys):
    path = _write(tmp_path, "c3.digraph", CYCLE3)
    code, out, _ = _run(capsys, ["coflow", path, "--oracle", "both"])
    assert code == 0
    assert out == "graphic: x^2 - 1\nmatroid: x^2 - 1\nagree: yes\n"


def test_coflow_json_schema(tmp_path, capsys):
    path = _write(tmp_path, "c3.digraph", CYCLE3)
    code, out, _ = _run(capsys, ["coflow", path, "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["polynomial"] == [
        {"x": 2, "y": 0, "z": 0, "c": 1},
        {"x": 0, "y": 0, "z": 0, "c": -1},
    ]


def test_flow_matrix_input(tmp_path, capsys):
    path = _write(tmp_path, "c3.json", '{"rows": [[1, 0, -1], [-1, 1, 0]]}')
    code, out, _ = _run(capsys, ["flow", path])
    assert code == 0 and out == "x\n"


def test_dichromate_text_and_basis(tmp_path, capsys):
    path = _write(tmp_path, "coloop.json", COLOOP_JSON)
    code, out, _ = _run(capsys, ["dichromate", path])
    assert code == 0 and out == "x - x*y\nbasis: 1\n"


def test_dichromate_explicit_basis(tmp_path, capsys):
    path = _write(tmp_path, "digon.json", '{"rows": [[1, -1]]}')
    code, out, _ = _run(capsys, ["dichromate", path, "--basis", "2"])
    assert code == 0
    assert out.endswith("basis: 2\n")


def test_dichromate_json(tmp_path, capsys):
    path = _write(tmp_path, "coloop.json", COLOOP_JSON)
    code, out, _ = _run(capsys, ["dichromate", path, "--format", "json"])
    data = json.loads(out)
    assert data["basis"] == [1]
    assert {"x": 1, "y": 1, "z": 0, "c": -1} in data["polynomial"]


def test_colorings(tmp_path, capsys):
    path = _write(tmp_path, "digon.digraph", DIGON)
    code, out, _ = _run(capsys, ["colorings", path, "--k", "2"])
    assert code == 0 and out == "2\n"


def test_check_passes_on_digraph(tmp_path, capsys):
    path = _write(tmp_path, "digon.digraph", DIGON)
    code, out, _ = _run(capsys, ["check", path])
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines)
    assert any("oracle-agreement" in line for line in lines)


def test_check_json_on_matrix(tmp_path, capsys):
    path = _write(tmp_path, "u24.json", '{"rows": [[1, 0, 1, 1], [0, 1, 1, 2]]}')
    code, out, _ = _run(capsys, ["check", path, "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["all_passed"] is True
    names = {c["name"] for c in data["checks"]}
    assert "minor-recovery" in names and "oracle-agreement" not in names


def test_outputs_are_deterministic(tmp_path, capsys):
    path = _write(tmp_path, "c3.digraph", CYCLE3)
    runs = []
    for _ in range(2):
        code, out, err = _run(capsys, ["check", path, "--format", "json"])
        runs.append((code, out, err))
    assert runs[0] == runs[1]


# ---------------------------------------------------------------------------
# exit codes


def test_exit_2_on_missing_file(capsys):
    code, _, err = _run(capsys, ["coflow", "/nonexistent/input"])
    assert code == 2 and "error" in err


def test_exit_2_on_parse_error(tmp_path, capsys):
    path = _write(tmp_path, "bad.digraph", "digraph 2\n0 junk\n")
    code, _, err = _run(capsys, ["coflow", path])
    assert code == 2 and "line 2" in err


def test_exit_2_on_graphic_oracle_for_matrix(tmp_path, capsys):
    path = _write(tmp_path, "m.json", COLOOP_JSON)
    code, _, err = _run(capsys, ["coflow", path, "--oracle", "graphic"])
    assert code == 2


def test_exit_2_on_colorings_for_matrix(tmp_path, capsys):
    path = _write(tmp_path, "m.json", COLOOP_JSON)
    code, _, _ = _run(capsys, ["colorings", path, "--k", "2"])
    assert code == 2


def test_exit_2_on_invalid_basis(tmp_path, capsys):
    path = _write(tmp_path, "m.json", COLOOP_JSON)
    code, _, err = _run(capsys, ["dichromate", path, "--basis", "7"])
    assert code == 2
    code, _, _ = _run(capsys, ["dichromate", path, "--basis", "a,b"])
    assert code == 2


def test_exit_3_on_cap(tmp_path, capsys):
    path = _write(tmp_path, "c3.digraph", CYCLE3)
    code, _, err = _run(capsys, ["coflow", path, "--cap", "2"])
    assert code == 3 and "cap" in err
    # the dichromate doubles the ground set, so its cap bites at cap/2
    code, _, _ = _run(capsys, ["dichromate", path, "--cap", "5"])
    assert code == 3
    code, _, _ = _run(capsys, ["dichromate", path, "--cap", "6"])
    assert code == 0
