import io
import json
import subprocess
import sys

import pytest

from concordance import cli, knfamily
from concordance.seifert import InconsistencyError

TREFOIL = [[-1, 1], [0, -1]]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def trefoil(tmp_path):
    f = tmp_path / "trefoil.json"
    f.write_text(json.dumps(TREFOIL))
    return str(f)


def test_alexander(trefoil):
    r = call_json("alexander", trefoil)
    assert r == {"terms": {"2": "1", "0": "-1", "-2": "1"}, "text": "x^2 - 1 + x^-2"}


def test_det(trefoil):
    assert call_json("det", trefoil) == {"determinant": 3}


def test_sigma(trefoil):
    r = call_json("sigma", trefoil, "--omega", "inf")
    assert r["sigma"] == "-2" and r["nullity"] == 0 and r["singular"] is False
    assert call_json("sigma", trefoil, "--omega", "1/3")["sigma"] == "0"


def test_profile(trefoil):
    r = call_json("profile", trefoil, "--resolution", "1/100")
    assert r["values"] == [-2, 0, -2]
    assert len(r["breakpoints"]) == 2
    assert r["intervals"][0]["u_from"] == "-inf" and r["intervals"][-1]["u_to"] == "inf"
    r = call_json("profile", trefoil, "--degrees")
    assert all(isinstance(x["approx_deg_from"], float) for x in r["intervals"])


def test_profile_tsv(trefoil):
    code, out, _ = call("profile", trefoil, "--tsv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].split("\t") == ["interval", "u_from", "u_to", "sigma"]
    assert len(lines) == 4


def test_kn_commands():
    m = call_json("kn", "matrix", "1")
    assert len(m) == 14 and [r[12:] for r in m[12:]] == [[-1, 1], [2, -2]]
    assert call_json("kn", "skein", "--max", "50") == {"ok": True, "checked": 51}
    grid = call_json("kn", "grid", "--lmax", "4")
    assert {(c["l"], c["m"]) for c in grid} == {(l, m) for l in (2, 3, 4) for m in (2, 3, 4)}
    assert all(set(c) == {"l", "m", "F_sign", "sigma_diff"} for c in grid)
    r = call_json("kn", "sigmabar", "--combo", "J3", "--k", "4")
    assert r["sigma_bar"] in ([1, 1, 0, 0], [-1, -1, 0, 0])
    r = call_json("kn", "independence", "--combo", "2K2 - 2K4")
    assert r["l"] == 4 and r["route"] == "top" and r["sigma"] != 0


def test_lens_commands():
    code, out, _ = call("lens", "cf", "7", "2")
    assert code == 0 and out.strip() == "[4, 2]"
    assert call_json("lens", "lattice", "L(7,2) # L(3,1)") == [[-4, 1, 0], [1, -2, 0], [0, 0, -3]]
    r = call_json("lens", "obstruct", "L(3,1)")
    assert r["status"] == "Obstructed" and r["failed_side"] == "primary"
    r = call_json("lens", "obstruct", "L(4,1)")
    assert r["status"] == "HypothesisHolds" and r["witnesses"]["primary"] == [[2]]


def test_lattice_commands(tmp_path):
    f = tmp_path / "a3.json"
    f.write_text("[[-2, 1, 0], [1, -2, 1], [0, 1, -2]]")
    r = call_json("lattice", "embed", str(f), "--rank", "3", "--sign", "-1")
    assert r["embeddable"] is True and len(r["witness"]) == 3
    r = call_json("lattice", "embed", str(f), "--rank", "3", "--sign", "1")
    assert r["embeddable"] is False
    assert call_json("lattice", "standard", str(f)) == {"standard": False}
    f.write_text("[[1, 0], [0, 1]]")
    assert call_json("--json", "lattice", "standard", str(f)) == {"standard": True}


def test_usage_errors(tmp_path, trefoil):
    assert call("bogus")[0] == 2
    assert call("lens", "cf", "4", "2")[0] == 2
    assert call("lens", "obstruct", "L(3,1) #")[0] == 2
    assert call("sigma", trefoil)[0] == 2
    assert call("sigma", trefoil, "--omega", "0")[0] == 2
    assert call("det", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("[[1, 0], [0, 1]]")
    code, _, err = call("alexander", str(bad))
    assert code == 2 and len(err.strip().splitlines()) == 1
    assert call("lattice", "embed", str(bad), "--rank", "1", "--sign", "1")[0] == 2
    assert call("kn", "sigmabar", "--combo", "K2 K3")[0] == 2


def test_consistency_failure_exit_code(monkeypatch):
    def broken(n):
        raise InconsistencyError("forced")
    monkeypatch.setattr(knfamily, "skein_check", broken)
    code, _, err = call("kn", "skein", "--max", "3")
    assert code == 3 and "forced" in err


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "concordance", "lens", "cf", "7", "5"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout) == [2, 2, 3]
