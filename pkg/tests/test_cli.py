import json
import subprocess
import sys
from pathlib import Path

import pytest

from qhopf import hopf
from qhopf.cli import main
from qhopf.hopf import FinDimHopfQuasigroup
from qhopf.quasigroup import cyclic_group

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_loop_pass(capsys):
    code, out, _ = run(capsys, "verify", str(DATA / "s3.txt"), "--kind", "loop")
    assert code == 0 and "PASS" in out


@pytest.mark.parametrize("name,code,needle", [
    ("not_latin.txt", 3, "row 2"),
    ("bad_rows.txt", 3, "row 4"),
    ("no_identity.txt", 4, "identity"),
    ("short_row.txt", 2, "line 4"),
    ("missing.txt", 2, "cannot read"),
])
def test_verify_error_exit_codes(capsys, name, code, needle):
    got, _, err = run(capsys, "verify", str(DATA / name))
    assert got == code and needle in err


def test_verify_non_ip_fails(capsys):
    code, out, _ = run(capsys, "verify", str(DATA / "non_ip.txt"), "--kind", "hq")
    assert code == 1 and "FAIL loop.ip_left" in out


def test_verify_mhc_json(capsys):
    code, out, _ = run(capsys, "verify", str(DATA / "m12.txt"), "--kind", "mhc", "--json")
    rep = json.loads(out)
    assert code == 0
    assert list(rep) == ["instance", "checks", "stats"]
    assert list(rep["stats"]) == ["integral_dim", "tau", "delta_is_unit", "nonassoc_witness"]
    assert rep["stats"]["tau"] == "1" and rep["stats"]["delta_is_unit"] is True
    ids = {c["id"] for c in rep["checks"]}
    assert {"mhc.coquasi_antipode_1", "mhc.integral_identity_psi_2", "modular.coproduct_sigma"} <= ids


def test_sampled_verify_records_seed(capsys):
    code, out, _ = run(capsys, "verify", str(DATA / "m12.txt"), "--kind", "hq", "--sample", "4",
                       "--seed", "9", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["stats"]["sample"] == {"n": 4, "seed": 9}


def test_json_is_deterministic(capsys):
    argv = ("dualize", str(DATA / "m12.txt"), "--json")
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first
    rep = json.loads(first)
    assert rep["stats"]["nonassoc_witness"] is not None
    assert all(c["status"] == "pass" for c in rep["checks"])
    assert any(c["id"].startswith("gamma_mhc.") for c in rep["checks"])


def test_dualize_emits_group_algebra(capsys, tmp_path):
    out = tmp_path / "d.json"
    code, _, _ = run(capsys, "dualize", str(DATA / "c2.txt"), "--emit-dual", str(out))
    assert code == 0
    H = FinDimHopfQuasigroup.from_dict(json.loads(out.read_text()))
    kg = hopf.group_algebra(cyclic_group(2))
    assert H.dim == 2
    assert (H.mult, H.comult, H.unit, H.counit, H.antipode) == (
        kg.mult, kg.comult, kg.unit, kg.counit, kg.antipode)
    code, text, _ = run(capsys, "verify", str(out), "--kind", "hq")
    assert code == 0 and "PASS" in text


def test_dualize_json_checks(capsys):
    code, out, _ = run(capsys, "dualize", str(DATA / "c2.json"), "--json")
    assert code == 0 and json.loads(out)["checks"]


def test_catalog_only(capsys):
    code, out, _ = run(capsys, "catalog", "--only", "M_C3_2", "--json")
    reports = json.loads(out)
    assert code == 0 and [r["instance"] for r in reports] == ["M_C3_2"]
    code, _, err = run(capsys, "catalog", "--only", "nope")
    assert code == 5 and "unknown instance" in err


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "qhopf.cli", "catalog", "--only", "C2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("C2: PASS")
