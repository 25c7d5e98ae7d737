import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from congruent6.cli import (
    CurveRecord,
    RecordError,
    batch_ingest,
    cmd_dispatch,
    glue_negative_values,
    main,
    parse_records,
    serialize,
)

from .conftest import rationals


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out.strip(), err.strip()


def test_model_xe6(capsys):
    assert run(capsys, "model", "XE6", "-a", "-6", "-b", "8") == (0, "y^2 = x^3 - 13824", "")


def test_negative_fractions_are_values():
    assert glue_negative_values(["-a", "-8/27", "-b", "64/729"]) == ["-a=-8/27", "-b", "64/729"]
    assert glue_negative_values(["--point", "-96,24"]) == ["--point=-96,24"]


def test_family(capsys):
    status, out, _ = run(capsys, "family", "3d", "-a", "-6", "-b", "8", "--param", "1,0")
    assert status == 0 and out == "y^2 = x^3 - 6x + 8"


def test_map_reverse(capsys):
    status, out, _ = run(capsys, "map", "reverse", "--point", "-96,24,1,-24,24,1")
    assert (status, out) == (0, "(1/3, 1)")


def test_map_needs_curve(capsys):
    status, _, err = run(capsys, "map", "f", "--point", "24,0")
    assert status == 2 and err.count("\n") == 0 and "-a" in err


def test_search_t_9_2(capsys):
    status, out, _ = run(capsys, "--json", "search", "--example", "4.9", "--t", "9/2")
    doc = json.loads(out)
    assert status == 0
    assert set(doc) >= {"command", "inputs", "results", "failures"}
    (r,) = doc["results"]
    assert r["E"] == {"a": "-6", "b": "8"}
    assert r["all_congruent"] and r["nonisogeny_witness"] <= 100


def test_verify_identities(capsys):
    status, out, _ = run(capsys, "verify", "identities")
    assert status == 0 and out.count("PASS") == len(out.splitlines())


def test_verify_all_json(capsys):
    status, out, _ = run(capsys, "--json", "verify", "all")
    doc = json.loads(out)
    assert status == 0 and not doc["failures"]
    assert {s["suite"] for s in doc["results"]} >= {"identities", "quadrics", "congruence"}


@pytest.mark.parametrize("argv, needle", [
    (["frobnicate"], "invalid choice"),
    (["model", "XE6", "-a", "1/0", "-b", "1"], "zero denominator"),
    (["model", "XE6", "-a", "0", "-b", "0"], "singular"),
    (["family", "2", "-a", "-1", "-b", "0", "--param", "1,1"], "cusp"),
    (["search", "--example", "4.10"], "--uv"),
])
def test_usage_errors_exit_2(capsys, argv, needle):
    status, out, err = run(capsys, *argv)
    assert status == 2 and out == ""
    assert needle in err and "\n" not in err


def test_failing_check_exits_1(tmp_path, capsys):
    path = tmp_path / "curves.json"
    path.write_text(json.dumps([{"a": "-6", "b": "8"}, {"a": "1", "b": "1"}]))
    status, out, _ = run(capsys, "batch", "--in", str(path), "--check", "mod6", "--bound", "100")
    assert status == 1 and "failure" in out


def test_batch_and_out_file(tmp_path, capsys):
    path = tmp_path / "curves.json"
    path.write_text(json.dumps([{"label": "6912v1", "a": "-6", "b": "8"},
                                {"label": "6912p1", "a": "-216", "b": "1728"}]))
    report = tmp_path / "report.json"
    status, _, _ = run(capsys, "--out", str(report), "batch", "--in", str(path), "--check", "mod6")
    doc = json.loads(report.read_text())
    assert status == 0 and doc["results"][0]["all_congruent"]


def test_env_bound(monkeypatch):
    monkeypatch.setenv("CONGRUENT6_PRIME_BOUND", "60")
    res = cmd_dispatch(["search", "--example", "4.9", "--t", "9/2"])
    assert res.doc["inputs"]["bound"] == 60
    assert res.doc["results"][0]["max_prime"] <= 60


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "congruent6", "model", "Z", "-a", "-6", "-b", "8"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "y^2 = x^3 + 373248"


# -- batch records ------------------------------------------------------------------

def test_ingest_examples(tmp_path):
    path = tmp_path / "in.json"
    path.write_text('[{"label":"6912v1","a":"-6","b":"8"}, {"a":"-8/27","b":"64/729"}]')
    recs = batch_ingest(path)
    assert recs == [CurveRecord(Fraction(-6), Fraction(8), "6912v1"),
                    CurveRecord(Fraction(-8, 27), Fraction(64, 729))]


@pytest.mark.parametrize("text, needle", [
    ('[{"a":"0","b":"0"}]', "singular"),
    ('[{"a":"1"}]', "'a' and 'b'"),
    ('[{"a":1,"b":"2"}]', "fraction string"),
    ('[{"a":"1/x","b":"2"}]', "malformed"),
    ('{"a":"1","b":"2"}', "array"),
    ('[{"a":"1",', "invalid JSON"),
])
def test_ingest_rejects(text, needle):
    with pytest.raises(RecordError, match=needle):
        parse_records(text)


def test_ingest_reports_position():
    text = '[\n {"a":"1","b":"1"},\n {"a":"0","b":"0"}\n]'
    with pytest.raises(RecordError, match=r"record 1 \(line 3\)"):
        parse_records(text)


def test_missing_file(tmp_path):
    with pytest.raises(RecordError):
        batch_ingest(tmp_path / "nope.json")


records = st.lists(st.builds(
    CurveRecord, rationals, rationals,
    st.one_of(st.none(), st.text(max_size=8))).filter(
        lambda r: 4 * r.a**3 + 27 * r.b**2 != 0), max_size=6)


@given(records)
def test_round_trip(recs):
    assert parse_records(serialize(recs)) == recs
