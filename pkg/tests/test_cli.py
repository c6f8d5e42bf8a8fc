import csv
import io
import json

import linesing.schubert as schubert
from linesing.cli import main
from linesing.oracles import REFERENCE_ENTRIES
from linesing.schubert import SchubertBasis


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_md(capsys):
    code, out, _ = run(capsys, "count", "--d", "4", "--k", "2")
    assert code == 0
    assert "7674" in out
    assert out.startswith("| d | k | u | rank | delta | n | phi | warnings |")


def test_count_json_round_trip(capsys):
    code, out, _ = run(capsys, "count", "--d", "7", "--k", "3", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert set(record) == {"d", "k", "u", "rank", "delta", "n", "phi", "warnings"}
    assert isinstance(record["n"], str)
    assert int(record["n"]) == 5224695
    assert record["u"] == 4
    assert record["warnings"] == []


def test_count_large_value_round_trips(capsys):
    # counts outgrow exactly-representable JSON numbers; the decimal string
    # must be lossless
    from linesing.counting import SurfaceQuery, count_closed_form

    code, out, _ = run(capsys, "count", "--d", "60", "--k", "30", "--format", "json")
    assert code == 0
    record = json.loads(out)
    n = int(record["n"])
    assert n == count_closed_form(SurfaceQuery(60, 30))
    assert n > 2 ** 64


def test_count_quadric_warning_text(capsys):
    code, out, _ = run(capsys, "count", "--d", "2", "--k", "1")
    assert code == 0
    assert "infinitely many lines" in out
    code, out, _ = run(capsys, "count", "--d", "3", "--k", "1")
    assert "divide by 27" in out


def test_count_domain_error(capsys):
    code, out, err = run(capsys, "count", "--d", "1", "--k", "2")
    assert code == 2
    assert out == ""
    assert "d >= k" in err
    code, _, err = run(capsys, "count", "--d", "3", "--k", "0")
    assert code == 2
    assert "k >= 1" in err


def test_parse_errors_exit_2(capsys):
    assert run(capsys, "count", "--d", "x", "--k", "1")[0] == 2
    assert run(capsys, "count", "--d", "4")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_table_small(capsys):
    code, out, _ = run(capsys, "table", "--dmax", "2")
    assert code == 0
    lines = out.strip().splitlines()
    # header, separator, then rows (1,1), (2,1), (2,2)
    assert len(lines) == 5
    assert lines[3].startswith("| 2 | 1 |") and "| 0 |" in lines[3]
    assert lines[4].startswith("| 2 | 2 |") and "| 10 |" in lines[4]


def test_table_reproduces_reference_values(capsys):
    code, out, _ = run(capsys, "table", "--dmax", "7")
    assert code == 0
    rows = {}
    for line in out.strip().splitlines()[2:]:
        cells = [c.strip() for c in line.strip("|").split("|")]
        rows[(int(cells[0]), int(cells[1]))] = cells[5]
    for d, k, n in REFERENCE_ENTRIES:
        assert rows[(d, k)] == str(n), (d, k)


def test_table_csv_columns(capsys):
    code, out, _ = run(capsys, "table", "--dmax", "3", "--format", "csv")
    assert code == 0
    reader = csv.reader(io.StringIO(out))
    header = next(reader)
    assert header == ["d", "k", "u", "rank", "delta", "n", "phi", "warnings"]
    rows = list(reader)
    assert [r[0:2] for r in rows] \
        == [["1", "1"], ["2", "1"], ["2", "2"], ["3", "1"], ["3", "2"], ["3", "3"]]
    d3k1 = rows[3]
    assert d3k1[5] == "27"
    assert "divide by 27" in d3k1[7]


def test_table_json_lines(capsys):
    code, out, _ = run(capsys, "table", "--dmax", "4", "--format", "json")
    assert code == 0
    records = [json.loads(line) for line in out.strip().splitlines()]
    assert len(records) == 10
    assert records[-1]["d"] == 4 and records[-1]["k"] == 4
    assert records[-1]["n"] == "1330"


def test_table_domain_error(capsys):
    code, _, err = run(capsys, "table", "--dmax", "1")
    assert code == 2
    assert "dmax" in err


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ring")
    assert code == 0
    assert out.splitlines()[0].startswith("ring")
    assert "PASS" in out


def test_verify_fast_suites(capsys):
    for suite in ("table", "newton", "planes"):
        code, out, _ = run(capsys, "verify", "--suite", suite)
        assert code == 0, out
        assert "PASS" in out


def test_verify_detects_perturbed_table(capsys, monkeypatch):
    # breaking one structure constant must fail the ring axioms
    monkeypatch.setitem(
        schubert.MUL_TABLE,
        (SchubertBasis.S11, SchubertBasis.S2),
        (SchubertBasis.S22,),
    )
    code, out, _ = run(capsys, "verify", "--suite", "ring")
    assert code == 1
    assert "FAIL" in out
