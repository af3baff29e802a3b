import json
import subprocess
import sys

import pytest

from chvlab.algebra import RingMatrix
from chvlab.cli import main, parse_range
from chvlab.families import ConstraintFamily
from chvlab.mixed import tuple_to_json
from chvlab.report import strip_timing, validate_report


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


# -- verify ------------------------------------------------------------------


def test_phillips_pipeline_exits_zero(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "phillips", "--n", "3", "--k", "2",
                       "--strategy", "conjugated-diagonal", "--seeds", "5")
    assert code == 0
    docs = json.loads(out)
    assert len(docs) == 5 and all(d["status"] == "pass" for d in docs)
    for d in docs:
        validate_report(d)


def test_symbolic_lemmas_include_worked_example(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "lemmas", "--n", "2", "--k", "2", "--symbolic")
    assert code == 0
    docs = json.loads(out)
    worked = [d for d in docs if d["theorem"] == "worked-example"]
    assert len(worked) == 1 and worked[0]["status"] == "pass"
    families = worked[0]["data"]["term_families"]
    assert len(families) == 4 and all(len(v) == 8 for v in families.values())


def test_user_family_violating_constraint_exits_three(capsys, tmp_path):
    one = RingMatrix.identity(2)
    path = write(tmp_path, "bad.json", ConstraintFamily([one, one], [one, one]).to_json())
    code, out, _ = run(capsys, "verify", "--theorem", "phillips", "--input", path)
    assert code == 3
    doc = json.loads(out)[0]
    assert doc["status"] == "hypothesis_violation" and doc["witness"]["kind"] == "constraint"


def test_user_family_that_holds(capsys, tmp_path):
    m = RingMatrix([[1, 2], [3, 4]])
    ident = RingMatrix.identity(2)
    path = write(tmp_path, "ch.json", ConstraintFamily([-ident, m], [m, ident]).to_json())
    assert run(capsys, "verify", "--theorem", "phillips", "--input", path)[0] == 0
    assert run(capsys, "verify", "--theorem", "lemmas", "--input", path, "--b", "1", "--e", "2")[0] == 0


def test_failure_exits_one(capsys, tmp_path):
    mats = [RingMatrix.unit(2, 0, 0), RingMatrix.unit(2, 0, 1)]
    path = write(tmp_path, "br.json", tuple_to_json(mats))
    code, out, _ = run(capsys, "verify", "--theorem", "bapat-roy", "--input", path)
    assert code == 1
    assert json.loads(out)[0]["witness"]["kind"] == "nonzero_entry"


@pytest.mark.parametrize("argv", [
    ["verify", "--theorem", "phillips", "--n", "0"],
    ["verify", "--theorem", "phillips", "--n", "x"],
    ["verify", "--theorem", "nope"],
    ["verify", "--theorem", "phillips", "--strategy", "bogus"],
    ["verify", "--theorem", "phillips", "--jobs", "0"],
    ["verify", "--theorem", "lemmas", "--b", "7"],
    ["verify", "--theorem", "phillips", "--input", "/nonexistent/file.json"],
    ["enumerate", "--object", "widget"],
    ["compute", "det"],
    ["bogus-command"],
])
def test_bad_configuration_exits_two(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_malformed_input_files_exit_two(capsys, tmp_path):
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{not json")
    assert run(capsys, "verify", "--theorem", "phillips", "--input", str(bad_json))[0] == 2
    ragged = write(tmp_path, "ragged.json", {"n": 2, "entries": [["1", "2"], ["3"]]})
    assert run(capsys, "compute", "det", "--input", ragged)[0] == 2
    unparsable = write(tmp_path, "parse.json", {"n": 1, "entries": [["1 +"]]})
    code, _, err = run(capsys, "compute", "det", "--input", unparsable)
    assert code == 2 and "position" in err


def test_jobs_do_not_change_reports(capsys):
    argv = ["verify", "--theorem", "phillips", "--n", "2,3", "--k", "2", "--seeds", "3"]
    _, serial, _ = run(capsys, *argv, "--jobs", "1")
    _, parallel, _ = run(capsys, *argv, "--jobs", "2")
    assert strip_timing(json.loads(serial)) == strip_timing(json.loads(parallel))


def test_reruns_are_byte_identical_modulo_timing(capsys, monkeypatch):
    argv = ["verify", "--theorem", "all", "--n", "2", "--k", "2", "--seed", "3"]
    code1, first, _ = run(capsys, *argv)
    monkeypatch.setenv("CHVLAB_JOBS", "2")
    code2, second, _ = run(capsys, *argv)
    assert code1 == code2
    strip = [line for line in first.splitlines() if "elapsed_ms" not in line]
    assert strip == [line for line in second.splitlines() if "elapsed_ms" not in line]


def test_out_file_and_summary(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, stdout, _ = run(capsys, "verify", "--theorem", "ch", "--n", "2-4", "--seeds", "2", "--out", str(out))
    assert code == 0
    assert len(json.loads(out.read_text())) == 6
    assert stdout.count("pass") == 6


def test_parse_range():
    assert parse_range("2") == [2]
    assert parse_range("3,2") == [2, 3]
    assert parse_range("2-4") == [2, 3, 4]


# -- enumerate ---------------------------------------------------------------


@pytest.mark.parametrize("obj,n,k,count", [
    ("pathmutation", "2", "2", 16),
    ("pathmap-H", "1", "2", 0),
    ("pathmap-G", "3", "2", 1296),
    ("pathmutation2", "2", "2", 32),
    ("decmap", "3", "2", 336),
])
def test_enumerate_counts(capsys, obj, n, k, count):
    extra = ["--b", "1", "--e", "2"] if n != "1" else []
    code, out, _ = run(capsys, "enumerate", "--object", obj, "--n", n, "--k", k, "--limit", "3", *extra)
    lines = [json.loads(x) for x in out.splitlines()]
    summary = lines[-1]
    assert code == 0
    assert summary["count"] == summary["expected"] == count
    assert len(lines) - 1 == min(3, count)


def test_enumerate_is_deterministic(capsys):
    argv = ["enumerate", "--object", "pathmap-H", "--n", "2", "--k", "2"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


# -- compute and gen ---------------------------------------------------------


def test_compute_quantities(capsys, tmp_path):
    pair = write(tmp_path, "pair.json", tuple_to_json([RingMatrix([[1, 2], [3, 4]]), RingMatrix([[0, 1], [1, 0]])]))
    assert run(capsys, "compute", "mixed-discriminant", "--input", pair)[1].strip() == "-5/2"
    b = RingMatrix([[2, 1], [5, 3]])
    same = write(tmp_path, "same.json", tuple_to_json([b, b]))
    single = write(tmp_path, "b.json", b.to_json())
    assert run(capsys, "compute", "mixed-discriminant", "--input", same)[1] == run(capsys, "compute", "det", "--input", single)[1]
    generic = write(tmp_path, "g.json", RingMatrix([["a", "b"], ["c", "d"]]).to_json())
    assert run(capsys, "compute", "det", "--input", generic)[1].strip() == "a*d - b*c"
    assert run(capsys, "compute", "permanent", "--input", generic)[1].strip() == "a*d + b*c"
    one = write(tmp_path, "one.json", {"mats": [RingMatrix([[1, 2], [3, 4]]).to_json()]})
    assert run(capsys, "compute", "charpoly", "--input", one)[1].strip() == "-2*x1^2"


def test_gen_writes_files_verify_accepts(capsys, tmp_path):
    for family, theorem in (("constraint", "phillips"), ("mixed-constraint", "mixed"),
                            ("commuting-rows", "mixed"), ("ch", "phillips")):
        path = tmp_path / f"{family}.json"
        code, _, _ = run(capsys, "gen", "--family", family, "--n", "3", "--k", "2", "--seed", "4",
                         "--out", str(path))
        assert code == 0
        doc = json.loads(path.read_text())
        assert doc["spec"]["seed"] == 4
        assert run(capsys, "verify", "--theorem", theorem, "--input", str(path))[0] == 0
    first = run(capsys, "gen", "--n", "2", "--k", "2", "--seed", "1")[1]
    assert first == run(capsys, "gen", "--n", "2", "--k", "2", "--seed", "1")[1]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "chvlab.cli", "enumerate", "--object", "decperm",
                           "--n", "2", "--k", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout.splitlines()[-1])["count"] == 2


def test_commuting_inputs(capsys, tmp_path):
    a, b = RingMatrix([[1, 1], [0, 1]]), RingMatrix([[2, 3], [0, 2]])
    pair = write(tmp_path, "pair.json", {"mats": [a.to_json(), b.to_json()]})
    assert run(capsys, "verify", "--theorem", "commuting-pair", "--input", pair)[0] == 0
    assert run(capsys, "verify", "--theorem", "commuting-rows", "--input", pair)[0] == 0
    clash = write(tmp_path, "clash.json", {"mats": [a.to_json(), RingMatrix([[1, 0], [1, 1]]).to_json()]})
    assert run(capsys, "verify", "--theorem", "commuting-pair", "--input", clash)[0] == 3
    assert run(capsys, "verify", "--theorem", "commuting-rows", "--input", clash)[0] == 3
