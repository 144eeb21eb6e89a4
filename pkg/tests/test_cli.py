import json

import pytest

from cablecalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spectrum_example(capsys):
    code, out, _ = run(capsys, "spectrum", "(3,2),(21,4)")
    assert code == 0
    assert json.loads(out) == {
        "spectrum": [8, 3, 0],
        "gaps": [{"index": 1, "order": 5}, {"index": 2, "order": 3}],
        "tunnel_number": 2,
        "h_genus": 2,
        "admissible": True,
    }


def test_spectrum_torus_knot_and_json_descriptor(capsys):
    assert json.loads(run(capsys, "spectrum", "(3,2)")[1])["spectrum"] == [2, 0]
    code, out, _ = run(capsys, "spectrum", '{"base": [3, 2], "cables": [[21, 4]]}')
    assert code == 0 and json.loads(out)["spectrum"] == [8, 3, 0]


def test_spectrum_csv(capsys):
    _, out, _ = run(capsys, "spectrum", "(3,2),(21,4)", "--format", "csv")
    assert out.splitlines()[1] == '"(3,2),(21,4)",8;3;0,1:5;2:3,2,2'


@pytest.mark.parametrize("knot, code, message", [
    ("(3,2),(25,4)", 2, "not admissible at level 1: |25 - 24| = 1"),
    ("(3,2),(21,x)", 1, "'(21,x)'"),
    ("(4,2)", 1, "gcd(4,2) = 2"),
])
def test_spectrum_errors(capsys, knot, code, message):
    got, out, err = run(capsys, "spectrum", knot)
    assert got == code and out == "" and message in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 1
    capsys.readouterr()


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "3", "2", "--family", "vertical")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and rows == [{"kind": "vertical", "params": {}, "outer": {"count": 1, "slope": [3, 2]},
                                   "inner": {"count": 1, "slope": [6, 1]}, "euler": 0}]
    _, out, _ = run(capsys, "classify", "3", "2", "--family", "planar-b", "--k=-1:1")
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["params"]["k"] for r in rows] == [-1, 0, 1]
    assert rows[1]["outer"]["slope"] == [1, 0]


def test_classify_all_families_deterministic(capsys):
    first = run(capsys, "classify", "5", "3")[1]
    assert first == run(capsys, "classify", "5", "3")[1]
    kinds = [json.loads(line)["kind"] for line in first.splitlines()]
    assert kinds == sorted(kinds, key=["vertical", "horizontal", "planar-a", "planar-b"].index)


def test_classify_rejects_bad_space(capsys):
    code, _, err = run(capsys, "classify", "4", "2")
    assert code == 1 and "gcd" in err


def test_enumerate(tmp_path, capsys):
    path = tmp_path / "grid.csv"
    code, _, err = run(capsys, "enumerate", "--p-max", "25", "--q-max", "4", "--depth", "1", "--output", str(path))
    assert code == 0 and "rows:" in err
    assert '"(3,2),(21,4)",1,true,8;3;0,1:5;2:3,2' in path.read_text().splitlines()


def test_enumerate_torus_knots_jsonl(capsys):
    _, out, _ = run(capsys, "enumerate", "--p-max", "5", "--q-max", "5", "--depth", "0", "--format", "jsonl")
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows and all(r["spectrum"] == [min(abs(r["base"][0]), r["base"][1]), 0] for r in rows)


def test_enumerate_empty_grid(capsys):
    code, out, err = run(capsys, "enumerate", "--p-max", "1")
    assert code == 0 and out.splitlines() == ["knot,depth,admissible,spectrum,gaps,tunnel_number"]
    assert "rows: 0" in err


def test_enumerate_unwritable(tmp_path, capsys):
    code, _, err = run(capsys, "enumerate", "--output", str(tmp_path / "missing" / "x.csv"))
    assert code == 1 and err


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--target", "spectrum=8,3,0")
    assert code == 0 and {"base": [3, 2], "cables": [[21, 4]]} in json.loads(out)
    _, out, _ = run(capsys, "search", "--target", "gaps=(1,5),(2,3)", "--format", "jsonl")
    assert {"base": [3, 2], "cables": [[21, 4]]} in [json.loads(line) for line in out.splitlines()]
    _, out, _ = run(capsys, "search", "--target", "spectrum=1,0")
    assert json.loads(out) == []
    code, _, err = run(capsys, "search", "--target", "gaps=(2,1)")
    assert code == 1 and err


def test_search_results_reparse(capsys):
    from cablecalc.spectrum import IteratedTorusKnot

    _, out, _ = run(capsys, "search", "--p-max", "12", "--depth", "2", "--target", "gaps=(1,2),(2,2)")
    for obj in json.loads(out):
        k = IteratedTorusKnot.from_json(obj)
        assert IteratedTorusKnot.parse(str(k)) == k


def test_verify_passes_and_fault_fails(capsys):
    code, out, _ = run(capsys, "verify", "--p-max", "5", "--q-max", "3", "--depth", "1")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--p-max", "12", "--q-max", "3", "--depth", "1", "--inject-fault", "index-n-sign")
    assert code == 3
    fails = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert len(fails) == 1 and "index-n-entry-from-slopes" in fails[0] and "witness" in fails[0]


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--p-max", "4", "--q-max", "2", "--depth", "1", "--format", "json")
    assert code == 0 and all(r["passed"] for r in json.loads(out))
