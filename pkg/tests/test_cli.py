import io
import json
import subprocess
import sys

import pytest

from specshrink import cli
from specshrink.linalg import NumericFailure


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return str(p)


def run(*argv):
    buf = io.StringIO()
    code = cli.run(list(argv), out=buf)
    return code, buf.getvalue()


@pytest.fixture
def files(tmp_path):
    return {
        "m3": write(tmp_path, "m3.json", {"matrix_blocks": [3]}),
        "c_m2": write(tmp_path, "c_m2.json", {"matrix_blocks": [1, 2]}),
        "ut2": write(tmp_path, "ut2.json", {"n": 2, "pairs": [[1, 1], [1, 2], [2, 2]]}),
        "dual": write(tmp_path, "dual.json", {
            "dim": 2,
            "unit": [[1, 1, 0, 1], [0, 1, 0, 1]],
            "structure": [[0, 0, 0, 1, 1, 0, 1], [0, 1, 1, 1, 1, 0, 1], [1, 0, 1, 1, 1, 0, 1]],
        }),
        "dir": tmp_path,
    }


def test_analyze_m3(files):
    code, out = run("analyze", files["m3"])
    d = json.loads(out)
    assert code == 0
    assert (d["p"], d["ks"], d["rad_dim"]) == (1, [3], 0)


def test_analyze_structure_input(files):
    d = json.loads(run("analyze", files["dual"])[1])
    assert d == {"dim": 2, "rad_dim": 1, "p": 1, "ks": [1], "max_ideal_codims": [1]}


def test_decide_preserving(files):
    tgt = write(files["dir"], "m3b.json", {"matrix_blocks": [3]})
    code, out = run("decide", files["c_m2"], tgt, "--preserving")
    d = json.loads(out)
    assert code == 0 and d["verdict"] == "yes" and d["witness"] == [[1, 1]]


def test_decide_all_preserving_tri_valued(files):
    d = json.loads(run("decide", files["c_m2"], files["m3"], "--all-preserving")[1])
    assert d["verdict"] == "no" and d["witness"] == [[3, 0]] and d["missed_index"] == 1
    # dual numbers are not an SMA as given and every family is forced
    d = json.loads(run("decide", files["dual"], files["dual"], "--all-preserving")[1])
    assert d["verdict"] == "undetermined"


def test_frobenius():
    code, out = run("frobenius", "3", "5")
    assert code == 0 and json.loads(out)["frobenius_number"] == 7
    code, _ = run("frobenius", "2", "4")
    assert code == 2


def test_eigsel(files):
    assert json.loads(run("eigsel", files["ut2"])[1])["exists"] is True
    assert json.loads(run("eigsel", files["m3"])[1])["exists"] is False


def test_construct_verify_round_trip(files):
    mp = str(files["dir"] / "map.json")
    code, out = run("construct", files["c_m2"], files["m3"], "--preserving", "-o", mp)
    assert code == 0 and json.loads(out)["written"] == mp
    code, out = run("verify", files["c_m2"], files["m3"], mp, "--samples", "100")
    d = json.loads(out)
    assert code == 0
    assert d["shrinking"]["verdict"] == "pass" and d["preserving"]["verdict"] == "pass"

    mp2 = str(files["dir"] / "map2.json")
    run("construct", files["c_m2"], files["m3"], "--non-preserving", "-o", mp2)
    d = json.loads(run("verify", files["c_m2"], files["m3"], mp2, "--samples", "100", "--jobs", "2")[1])
    assert d["shrinking"]["verdict"] == "pass" and d["preserving"]["verdict"] == "fail"
    assert d["family_covers_all"] is False


def test_construct_verify_general_source(files):
    mp = str(files["dir"] / "dmap.json")
    m1 = write(files["dir"], "c.json", {"matrix_blocks": [1]})
    assert run("construct", files["dual"], m1, "-o", mp)[0] == 0
    d = json.loads(run("verify", files["dual"], m1, mp, "--samples", "50")[1])
    assert d["preserving"]["verdict"] == "pass"


def test_deterministic_output(files):
    args = ("verify", files["c_m2"], files["m3"])
    mp = str(files["dir"] / "m.json")
    run("construct", files["c_m2"], files["m3"], "-o", mp)
    a = run(*args, mp, "--samples", "40", "--seed", "3")[1]
    b = run(*args, mp, "--samples", "40", "--seed", "3", "--jobs", "2")[1]
    assert a == b


def test_input_errors_exit_2(files):
    bad_assoc = write(files["dir"], "bad.json", {
        "dim": 3,
        "unit": [[1, 1, 0, 1]] * 3,
        "structure": [[0, 0, 0, 1, 1, 0, 1], [1, 1, 1, 1, 1, 0, 1], [2, 2, 2, 1, 1, 0, 1], [0, 1, 2, 1, 1, 0, 1]],
    })
    code, out = run("analyze", bad_assoc)
    assert code == 2 and "associativity" in json.loads(out)["error"]
    nontrans = write(files["dir"], "nt.json", {"n": 3, "pairs": [[1, 1], [2, 2], [3, 3], [1, 2], [2, 3]]})
    code, out = run("analyze", nontrans)
    assert code == 2 and "transitive" in json.loads(out)["error"]
    assert run("analyze", nontrans, "--close")[0] == 0
    assert run("analyze", write(files["dir"], "junk.json", "{not json"))[0] == 2
    assert run("analyze", write(files["dir"], "two.json", {"n": 1, "pairs": [[1, 1]], "matrix_blocks": [1]}))[0] == 2
    assert run("analyze", str(files["dir"] / "missing.json"))[0] == 2
    assert run("nonsense")[0] == 2


def test_numeric_failure_exit_3(files, monkeypatch):
    def boom(*a, **k):
        raise NumericFailure("eigensolver did not converge")

    monkeypatch.setattr(cli, "wedderburn_profile", boom)
    code, out = run("analyze", files["m3"])
    assert code == 3 and json.loads(out)["kind"] == "numeric"


def test_console_entry_point(files):
    r = subprocess.run([sys.executable, "-m", "specshrink", "frobenius", "2", "3"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["frobenius_number"] == 1
