import json
import subprocess
import sys

import pytest

from ncpara import Compound, naive_baseline, parse_gold_file, parse_system_output, score_system
from ncpara.cli import main

RAW = """# modifier head paraphrase annotator
air\tfilter\tfilter for air\tw1
air\tfilter\tfilter for air\tw2
air\tfilter\tFilter for air.\tw3
air\tfilter\tfilter of air\tw1
air\tfilter\tfilter of air\tw4
air\tfilter\tfilter that cleans air\tw2
"""


@pytest.fixture
def files(tmp_path):
    raw = tmp_path / "raw.tsv"
    raw.write_text(RAW, encoding="utf-8")
    return tmp_path, raw


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_compile(files, capsys):
    tmp, raw = files
    gold = tmp / "gold.tsv"
    code, _, err = run(capsys, "compile", raw, "-o", gold)
    assert code == 0 and err == ""
    assert gold.read_text() == ("air\tfilter\t0\t3\tfilter for air\n"
                                "air\tfilter\t1\t2\tfilter of air\n"
                                "air\tfilter\t2\t1\tfilter that cleans air\n")


def test_compile_warns_on_invalid(files, capsys):
    tmp, raw = files
    raw.write_text(RAW + "air\tfilter\tfilter air\tw9\n")
    code, out, err = run(capsys, "compile", raw)
    assert code == 0
    assert err.count("warning:") == 1 and "no-linking-phrase" in err
    assert len(out.splitlines()) == 3


def test_compile_empty(tmp_path, capsys):
    empty = tmp_path / "empty.tsv"
    empty.write_text("")
    code, _, err = run(capsys, "compile", empty)
    assert code == 2 and "no records" in err


def test_compile_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "compile", tmp_path / "nope.tsv")
    assert code == 2 and "cannot read" in err


def test_validate(files, capsys):
    tmp, raw = files
    raw.write_text(RAW + "air\tfilter\tfilter air\tw9\n")
    code, out, _ = run(capsys, "validate", raw)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 7
    assert [l for l in lines if "invalid" in l] == ["8\tair filter\tfilter air\tinvalid: no-linking-phrase"]
    code, out, _ = run(capsys, "validate", raw, "--format", "json")
    assert json.loads(out)[-1]["reason"] == "no-linking-phrase"


@pytest.fixture
def gold_file(files, capsys):
    tmp, raw = files
    gold = tmp / "gold.tsv"
    assert main(["compile", str(raw), "-o", str(gold)]) == 0
    capsys.readouterr()
    return gold


def test_score_identity(gold_file, tmp_path, capsys):
    sysf = tmp_path / "sys.tsv"
    sysf.write_text("air\tfilter\t1\tfilter for air\nair\tfilter\t2\tfilter of air\n"
                    "air\tfilter\t3\tfilter that cleans air\n")
    code, out, err = run(capsys, "score", "--gold", gold_file, "--system", sysf)
    assert code == 0 and err == ""
    # noniso averages rank-weighted products: (1 + 8/9 + 8/10) / 3
    assert out.splitlines()[1] == "{}: 100.0 / 89.6".format(sysf)


def test_score_baseline_matches_library(gold_file, tmp_path, capsys):
    base = tmp_path / "base.tsv"
    assert run(capsys, "baseline", "--gold", gold_file, "-o", base)[0] == 0
    code, out, _ = run(capsys, "score", "--gold", gold_file, "--system", base, "--format", "json")
    assert code == 0
    reported = json.loads(out)["systems"][0]
    gold = parse_gold_file(gold_file.read_text())
    lib = score_system(parse_system_output(base.read_text()), gold)
    assert reported["iso"] == lib.iso and reported["noniso"] == lib.noniso
    assert reported["iso_percent"] == lib.iso_percent
    direct = score_system({Compound("air", "filter"): naive_baseline(Compound("air", "filter"))}, gold)
    assert (direct.iso, direct.noniso) == (lib.iso, lib.noniso)


def test_score_two_systems_and_determinism(gold_file, tmp_path, capsys):
    a, b = tmp_path / "a.tsv", tmp_path / "b.tsv"
    a.write_text("air\tfilter\t1\tfilter of air\n")
    b.write_text("air\tfilter\t1\tfilter for air\n")
    args = ["score", "--gold", gold_file, "--system", b, "--system", a, "--per-compound"]
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    rows = [l for l in out1.splitlines() if not l.startswith(("#", " "))]
    assert [r.split(":")[0] for r in rows] == [str(b), str(a)]
    _, tsv, _ = run(capsys, *args, "--format", "tsv")
    assert tsv.splitlines()[0] == "system\tmodifier\thead\tisomorphic\tnon-isomorphic"
    assert len(tsv.splitlines()) == 5


def test_score_modes_and_r(gold_file, tmp_path, capsys):
    s = tmp_path / "s.tsv"
    s.write_text("air\tfilter\t1\tfilter of air\n")
    _, out, _ = run(capsys, "score", "--gold", gold_file, "--system", s, "--mode", "iso", "--format", "json")
    d = json.loads(out)["systems"][0]
    assert "noniso" not in d and "iso" in d
    _, out, _ = run(capsys, "score", "--gold", gold_file, "--system", s, "--rank-r", "1", "--format", "json")
    assert json.loads(out)["R"] == 1.0


def test_score_malformed_system(gold_file, tmp_path, capsys):
    bad = tmp_path / "bad.tsv"
    bad.write_text("air\tfilter\t1\tfilter for air\nair\tfilter\tX\tfilter of air\n")
    code, _, err = run(capsys, "score", "--gold", gold_file, "--system", bad)
    assert code == 2
    assert str(bad) in err and "line 2" in err


def test_config_errors(gold_file, capsys):
    assert run(capsys, "score", "--gold", gold_file, "--system", gold_file, "--rank-r", "0")[0] == 3
    assert run(capsys, "score", "--gold", gold_file, "--system", gold_file, "--mode", "x")[0] == 3
    assert run(capsys, "stats", "--gold", gold_file, "--format", "xml")[0] == 3
    assert run(capsys, "score", "--gold", gold_file, "--system", gold_file, "--determiners", ",")[0] == 3
    with pytest.raises(SystemExit) as e:
        main(["score", "--gold", str(gold_file), "--rank-r", "abc"])
    assert e.value.code == 3


def test_determiners_env_and_flag(gold_file, tmp_path, capsys, monkeypatch):
    s = tmp_path / "s.tsv"
    s.write_text("air\tfilter\t1\tthis filter for air\n")
    base = ["score", "--gold", gold_file, "--system", s, "--format", "json"]
    _, out, _ = run(capsys, *base)
    plain = json.loads(out)["systems"][0]["noniso"]
    monkeypatch.setenv("NCPARA_DETERMINERS", "a,an,the,this")
    _, out, _ = run(capsys, *base)
    assert json.loads(out)["systems"][0]["noniso"] == 1.0 > plain
    _, out, _ = run(capsys, *base, "--determiners", "the")
    assert json.loads(out)["systems"][0]["noniso"] == plain


def test_baseline_compound_list(tmp_path, capsys):
    cl = tmp_path / "compounds.txt"
    cl.write_text("air filter\nwork area\n")
    code, out, _ = run(capsys, "baseline", "--compounds", cl)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 20
    assert lines[10] == "work\tarea\t1\tarea of work"


def test_baseline_trained(gold_file, tmp_path, capsys):
    cl = tmp_path / "compounds.txt"
    cl.write_text("work area\n")
    code, out, _ = run(capsys, "baseline", "--compounds", cl, "--train", gold_file, "-k", "2")
    assert code == 0
    assert out == "work\tarea\t1\tarea for work\nwork\tarea\t2\tarea of work\n"


def test_stats(gold_file, files, capsys):
    _, raw = files
    code, out, _ = run(capsys, "stats", "--gold", gold_file)
    assert code == 0
    assert "(1 NCs)" in out and "6 / 6 / 6.0" in out and "3 / 3 / 3.0" in out
    _, out, _ = run(capsys, "stats", "--gold", gold_file, "--raw", raw, "--format", "json")
    assert json.loads(out)["total"] == 6


def test_entry_point_module(gold_file):
    proc = subprocess.run([sys.executable, "-m", "ncpara.cli", "stats", "--gold", str(gold_file)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "unique paraphrases" in proc.stdout
