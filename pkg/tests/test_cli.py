import json

import pytest

from gradedred.cli import CSV_HEADER, main
from gradedred.instance import DataFormatError, InstanceFile, loads

WORKED = {"prime": 32003, "vars": ["x", "y"],
          "module": [{"shift": 0, "denominator": [[2, 0]]}], "ideal": [[1, 0]]}
SQUARE = {"prime": 32003, "vars": ["x", "y"], "module": [{"shift": 0}],
          "ideal": [[2, 0], [1, 1], [0, 2]]}


@pytest.fixture
def write(tmp_path):
    def _write(doc, name="inst.json"):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_worked_example(write, capsys):
    code, out, _ = run(capsys, "compute", "--input", write(WORKED), "--what", "dim", "--power", "1")
    assert code == 0
    assert json.loads(out)["results"]["dim"] == 1


def test_compute_annihilated_power(write, capsys):
    code, out, _ = run(capsys, "compute", "--input", write(WORKED), "--what", "dim,D", "--power", "2")
    doc = json.loads(out)
    assert code == 2
    assert doc["is_zero"] and doc["results"]["dim"] == "-inf"
    assert doc["errors"]["D"]["error"] == "ZeroModuleError"


def test_compute_shifted_free(write, capsys):
    inst = {"vars": ["x", "y"], "module": [{"shift": 3}], "ideal": [[1, 0]]}
    code, out, _ = run(capsys, "compute", "--input", write(inst), "--what", "D,d")
    assert code == 0
    assert json.loads(out)["results"] == {"D": 3, "d": 3}


def test_compute_rho_and_provenance(write, capsys):
    inst = {"vars": ["x", "y"], "module": [{"shift": 0}], "ideal": [[2, 0], [0, 3]]}
    code, out, _ = run(capsys, "compute", "--input", write(inst), "--what", "rho,r,reg,betti",
                       "--seed", "7")
    doc = json.loads(out)
    assert code == 0
    assert doc["results"]["rho"] == 3
    assert doc["results"]["r"] == 0 and doc["results"]["reg"] == 0
    assert doc["results"]["betti"] == {"0,0": 1}
    assert doc["provenance"]["seed"] == 7


def test_series_square_of_maximal_ideal(write, tmp_path, capsys):
    out_file = tmp_path / "series.csv"
    code, _, _ = run(capsys, "series", "--input", write(SQUARE), "--quantities", "r,D",
                     "--out", str(out_file))
    assert code == 0
    raw = out_file.read_bytes()
    assert raw.startswith(b"n,quantity,value,rho,intercept,status\n")
    assert b"\r" not in raw
    lines = raw.decode("ascii").splitlines()
    assert lines[0] == CSV_HEADER
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 20
    assert all(r[3] == "2" and r[5] == "stabilized" for r in rows)
    assert rows[:2] == [["1", "r", "2", "2", "0", "stabilized"], ["1", "D", "2", "2", "0", "stabilized"]]


def test_series_inconclusive_exit(write, capsys):
    code, out, _ = run(capsys, "series", "--input", write(SQUARE), "--quantities", "D",
                       "--n-max", "2")
    assert code == 2
    assert all(line.endswith("inconclusive") for line in out.splitlines()[1:])


def test_series_annihilated_exit(write, capsys):
    code, out, _ = run(capsys, "series", "--input", write(WORKED), "--quantities", "D")
    assert code == 2
    assert out.splitlines()[1:] == ["2,D,,1,,error"]


def test_series_is_byte_identical(write, tmp_path, capsys):
    inst = write({"vars": ["x", "y", "z"], "module": [{"shift": 0, "denominator": [[1, 1, 1]]}],
                  "ideal": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})
    outs = []
    for k in range(2):
        path = tmp_path / f"s{k}.csv"
        main(["series", "--input", inst, "--quantities", "r,D,reg", "--n-max", "6",
              "--seed", "3", "--out", str(path)])
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_verify_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "everything"])
    assert exc.value.code == 64


def test_missing_input_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute"])
    assert exc.value.code == 64


def test_bad_config_is_usage_error(write, capsys):
    code, _, err = run(capsys, "series", "--input", write(SQUARE), "--window", "1")
    assert code == 64 and "window" in err


@pytest.mark.parametrize("doc", [
    "{not json",
    {"vars": ["x"], "module": [{"shift": 0}], "ideal": [[1, 0]]},
    {"vars": ["x", "y"], "module": [{"shift": 0, "denominator": [[0, 0]]}]},
    {"prime": 1009 * 1013, "vars": ["x"], "module": [{}]},
    {"prime": 997, "vars": ["x"], "module": [{}]},
    {"vars": ["x"], "module": [{"shift": 0}], "colour": 1},
    {"vars": ["x", "x"], "module": [{}]},
])
def test_bad_instance_files(write, capsys, doc):
    code, _, err = run(capsys, "compute", "--input", write(doc), "--what", "D")
    assert code == 65
    assert "data format error" in err


def test_json_error_location():
    with pytest.raises(DataFormatError, match="line 2, column"):
        loads('{"vars": ["x"],\n  "module": [}')


def test_small_prime_warns(write, capsys):
    inst = dict(WORKED, prime=1009)
    code, _, err = run(capsys, "compute", "--input", write(inst), "--what", "D")
    assert code == 0 and "warning" in err


def test_round_trip():
    for doc in (WORKED, SQUARE, {
        "prime": 32003, "vars": ["a", "b", "c"],
        "module": [{"shift": -1, "numerator": [[1, 0, 0], [0, 1, 1]], "denominator": [[2, 0, 0]]},
                   {"shift": 2, "denominator": []}],
        "ideal": [[1, 1, 0], [0, 0, 2]]}):
        first = loads(json.dumps(doc))
        second = loads(first.dumps())
        assert isinstance(second, InstanceFile)
        assert first == second
        assert first.dumps() == second.dumps()


def test_oracle_command(write, capsys):
    for inst, power in ((SQUARE, 1), (WORKED, 1), (SQUARE, 0)):
        code, out, _ = run(capsys, "oracle", "--input", write(inst), "--power", str(power))
        doc = json.loads(out)
        assert code == 0, doc
        assert all(doc["agree"].values())


def test_oracle_zero_module(write, capsys):
    code, _, err = run(capsys, "oracle", "--input", write(WORKED), "--power", "2")
    assert code == 2 and "zero module" in err


def test_verify_writes_report(tmp_path, capsys):
    path = tmp_path / "verify.txt"
    code = main(["verify", "--suite", "main", "--n-max", "8", "--out", str(path)])
    text = path.read_text()
    assert code == 0
    assert text.splitlines()[-1].endswith("checks passed")
    assert "FAIL" not in text
