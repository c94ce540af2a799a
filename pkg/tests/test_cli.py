import csv
import io
import json
import subprocess
import sys
from collections import Counter

import pytest

from pfg.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_spectrum_csv(capsys):
    code, out, _ = run(["spectrum", "--n", "3", "--k", "1"], capsys)
    assert code == 0
    assert out == 'lambda,f,eta,multiplicity\n3,1,3,1\n"2,1",2,0,4\n"1,1,1",1,-3,1\n'


def test_spectrum_json(capsys):
    code, out, _ = run(["spectrum", "--n", "3", "--k", "1", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 3 and doc["k"] == 1
    assert doc["entries"][1] == {"lambda": [2, 1], "f": "2", "eta": "0", "multiplicity": "4"}


def test_known_rows(capsys):
    _, out, _ = run(["spectrum", "--n", "9", "--k", "1"], capsys)
    rows = {r["lambda"]: int(r["eta"]) for r in csv.DictReader(io.StringIO(out))}
    assert rows["3,2,1,1,1,1"] == -39
    _, out, _ = run(["spectrum", "--n", "2", "--k", "1"], capsys)
    assert [r["eta"] for r in csv.DictReader(io.StringIO(out))] == ["0", "0"]


@pytest.mark.parametrize("n,k,shape,eta", [
    (10, 1, "5,5", 1280),
    (13, 1, "7,6", -36155),
    (15, 1, "2" + ",1" * 13, 0),
])
def test_published_examples(capsys, n, k, shape, eta):
    _, out, _ = run(["spectrum", "--n", str(n), "--k", str(k)], capsys)
    rows = {r["lambda"]: int(r["eta"]) for r in csv.DictReader(io.StringIO(out))}
    assert rows[shape] == eta


def test_csv_and_json_agree(capsys):
    _, text_csv, _ = run(["spectrum", "--n", "8", "--k", "2"], capsys)
    _, text_json, _ = run(["spectrum", "--n", "8", "--k", "2", "--format", "json"], capsys)
    from_csv = Counter((r["lambda"], int(r["eta"])) for r in csv.DictReader(io.StringIO(text_csv)))
    from_json = Counter(
        (",".join(map(str, e["lambda"])), int(e["eta"])) for e in json.loads(text_json)["entries"]
    )
    assert from_csv == from_json


def test_out_file(tmp_path, capsys):
    target = tmp_path / "s.csv"
    code, out, _ = run(["spectrum", "--n", "4", "--k", "0", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert target.read_text().startswith("lambda,f,eta,multiplicity\n4,1,9,1\n")


@pytest.mark.parametrize("argv", [
    ["spectrum", "--n", "1", "--k", "0"],
    ["spectrum", "--n", "4", "--k", "4"],
    ["spectrum", "--n", "4", "--k", "-1"],
    ["tables"],
])
def test_usage_errors_return_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2 and "error" in err


@pytest.mark.parametrize("argv", [
    ["spectrum", "--n", "x", "--k", "1"],
    ["spectrum", "--n", "4"],
    ["verify", "--suite", "nonsense"],
    ["bogus"],
])
def test_argparse_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_verify_suite(capsys):
    code, out, _ = run(["verify", "--suite", "asp1", "--max-n", "10"], capsys)
    assert code == 0
    assert "asp1" in out and "PASS" in out


def test_tables_report_known_discrepancies(capsys):
    code, out, _ = run(["tables", "--paper"], capsys)
    assert code == 4
    assert "2 discrepancies" in out
    assert "(6,5,4): printed 14181, computed 14184" in out
    assert "n=10: 42 eigenvalues compared, ok" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pfg", "spectrum", "--n", "3", "--k", "0"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.splitlines()[1] == "3,1,2,1"
