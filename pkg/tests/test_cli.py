import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import numpy as np
import pytest

from entrocone.cli import main, thread_cap
from entrocone.inequalities import ssa

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def schema(name):
    text = resources.files("entrocone").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv, expect=0):
    code, out, err = run(capsys, *argv)
    assert code == expect, err
    return json.loads(out)


def test_entropy_bell(capsys):
    obj = run_json(capsys, "entropy", DATA / "bell_state.json", "--quantum")
    jsonschema.validate(obj, schema("entropy_vector"))
    assert obj["entries"]["1"] == pytest.approx(1.0)
    assert obj["entries"]["1,2"] == pytest.approx(0.0, abs=1e-12)


def test_entropy_correlated_bits(capsys):
    obj = run_json(capsys, "entropy", DATA / "correlated_bits.json", "--classical")
    assert [obj["entries"][k] for k in ("1", "2", "1,2")] == [1.0, 1.0, 1.0]


def test_entropy_flag_mismatch(capsys):
    code, _, err = run(capsys, "entropy", DATA / "correlated_bits.json", "--quantum")
    assert code == 2 and "error" in err


def test_empty_and_malformed_files(tmp_path, capsys):
    empty = tmp_path / "empty.json"
    empty.write_text("")
    code, _, err = run(capsys, "entropy", empty)
    assert code == 2 and "empty" in err
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": , "dims": [2]}')
    code, _, err = run(capsys, "entropy", bad)
    assert code == 2 and "byte offset 6" in err
    code, _, err = run(capsys, "entropy", tmp_path / "missing.json")
    assert code == 2


def test_check_ghz_has_no_violations(tmp_path, capsys):
    vec = run_json(capsys, "entropy", DATA / "ghz3.json")
    path = tmp_path / "ghz.json"
    path.write_text(json.dumps(vec))
    rep = run_json(capsys, "check", path, "--catalog", 3)
    jsonschema.validate(rep, schema("run_report"))
    assert rep["violations"] == []
    assert "timing_seconds" not in rep


def test_check_reports_ssa_violation(capsys):
    rep = run_json(capsys, "check", DATA / "ssa_violation.json", expect=1)
    jsonschema.validate(rep, schema("run_report"))
    assert [v["name"] for v in rep["violations"]] == ["Δ[1,2]"]
    assert rep["violations"][0]["value"] == pytest.approx(-1.0)


@pytest.mark.parametrize("tol", ["1e-8", "1e-3", "0.5"])
def test_check_tolerance_sweep_is_reproducible(capsys, tol):
    a = run(capsys, "check", DATA / "ssa_violation.json", "--tol", tol)
    b = run(capsys, "check", DATA / "ssa_violation.json", "--tol", tol)
    assert a == b


def test_check_catalog_mismatch(capsys):
    code, _, _ = run(capsys, "check", DATA / "ssa_violation.json", "--catalog", 3)
    assert code == 2


def test_stab_bell_module(capsys):
    rep = run_json(capsys, "stab", DATA / "bell_module.txt")
    jsonschema.validate(rep, schema("run_report"))
    ent = rep["results"]["entropy"]["entries"]
    assert (ent["1"], ent["2"], ent["1,2"]) == (1.0, 1.0, 0.0)


def test_stab_enumeration_csv(capsys):
    code, out, _ = run(capsys, "stab", "--enumerate", 2, 2, "--emit-csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "mask_1,mask_2,mask_3"
    assert len(lines) - 1 == len(set(lines[1:]))
    rows = {tuple(float(x) for x in ln.split(",")) for ln in lines[1:]}
    assert (1.0, 1.0, 0.0) in rows and (0.0, 0.0, 0.0) in rows


def test_stab_enumeration_json(capsys):
    rep = run_json(capsys, "stab", "--enumerate", 2, 2)
    jsonschema.validate(rep, schema("run_report"))
    jsonschema.validate(rep["results"], schema("stab_enumeration"))
    assert rep["results"]["modules"] == 31


def test_stab_non_isotropic(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("2 1\n1 0\n0 1\n")
    code, _, err = run(capsys, "stab", path)
    assert code == 2 and "pair" in err


def write_json(path, obj):
    path.write_text(json.dumps(obj))
    return path


def test_cone_dualize_catalog(tmp_path, capsys):
    cone = run_json(capsys, "catalog", 3, "--family", "quantum", "--as-cone")
    jsonschema.validate(cone, schema("cone"))
    path = write_json(tmp_path / "xi3.json", cone)
    rays = run_json(capsys, "cone", path, "--extremal")
    jsonschema.validate(rays, schema("cone_query"))
    prim = write_json(tmp_path / "prim.json", {"n_ambient": 7, "generators": rays["rays"]})
    dual = run_json(capsys, "cone", prim, "--dualize")
    jsonschema.validate(dual, schema("cone"))
    assert len(dual["generators"]) == 12


def test_cone_orthant_self_dual(tmp_path, capsys):
    eye = [[str(int(i == j)) for j in range(3)] for i in range(3)]
    path = write_json(tmp_path / "orthant.json", {"n_ambient": 3, "generators": eye})
    dual = run_json(capsys, "cone", path, "--dualize")
    assert sorted(dual["generators"]) == sorted(eye)


def test_cone_facet(tmp_path, capsys):
    f = ssa({2, 3}, {1, 3}, 3)
    cone = write_json(tmp_path / "c.json", {"n_ambient": 7, "halfspaces": [[str(x) for x in f.reduced()]]})
    fpath = write_json(tmp_path / "f.json", f.to_json_obj())
    res = run_json(capsys, "cone", cone, "--facet", fpath)
    jsonschema.validate(res, schema("cone_query"))
    assert res == {"is_facet": True, "face_dim": 6, "cone_dim": 7}
    bad = write_json(tmp_path / "g.json", (-1 * f).to_json_obj())
    code, _, _ = run(capsys, "cone", cone, "--facet", bad)
    assert code == 2


@pytest.mark.parametrize("argv,key,value", [
    (["types", "kostka", "2,1", "1,1,1"], "kostka", 2),
    (["types", "kron", "1,1", "1,1", "1,1"], "kronecker", 2),
    (["types", "size", "32,32"], "size", "1832624140942590534"),
    (["types", "restrict", "1", "2"], "multiplicities", {"2": 1, "1,1": 1}),
])
def test_types(capsys, argv, key, value):
    obj = run_json(capsys, *argv)
    jsonschema.validate(obj, schema("types_result"))
    assert obj["result"][key] == value


def test_types_cy_and_aep(capsys):
    obj = run_json(capsys, "types", "cy", DATA / "correlated_bits.json", "--k", 8)
    jsonschema.validate(obj, schema("types_result"))
    assert obj["result"]["q"] == 2
    assert 0 < obj["result"]["normalized_error"] <= 2 * 5.09 / 16
    obj = run_json(capsys, "types", "aep", "1/2,1/2", "--n", 64, "--eps", "1/4")
    assert obj["result"]["mass"] >= 0.95


def test_types_bad_arguments(capsys):
    assert run(capsys, "types", "kostka", "2,1")[0] == 2
    assert run(capsys, "types", "kostka", "1,2", "1,1,1")[0] == 2


def test_rays_verdicts(tmp_path, capsys):
    rep = run_json(capsys, "rays", DATA / "ghz3.json")
    jsonschema.validate(rep, schema("differential_report"))
    assert rep["verdict"]["label"] == "all-flat"
    prod = write_json(tmp_path / "prod.json", {"dims": [2, 2], "amplitudes": {"re": [0.6, 0.8, 0, 0]}})
    assert run_json(capsys, "rays", prod)["verdict"]["label"] == "splits"
    rng = np.random.default_rng(9)
    amps = rng.normal(size=8) + 1j * rng.normal(size=8)
    amps /= np.linalg.norm(amps)
    rand = write_json(tmp_path / "rand.json", {"dims": [2, 2, 2], "amplitudes": {
        "re": amps.real.tolist(), "im": amps.imag.tolist()}})
    rep = run_json(capsys, "rays", rand)
    jsonschema.validate(rep, schema("differential_report"))
    assert rep["verdict"]["label"] == "not-extremal-candidate"


def test_catalog_schema(capsys):
    obj = run_json(capsys, "catalog", 4)
    jsonschema.validate(obj, schema("catalog"))
    names = [i["name"] for i in obj["inequalities"]]
    assert "Zhang-Yeung" in names


def test_thread_cap(monkeypatch):
    monkeypatch.setenv("ENTROCONE_THREADS", "4")
    assert thread_cap() == 4
    monkeypatch.setenv("ENTROCONE_THREADS", "lots")
    assert thread_cap() == 1


@pytest.mark.parametrize("argv", [
    ["stab", "--enumerate", "2", "3", "--format", "csv"],
    ["stab", "--enumerate", "3", "5", "--budget", "15", "--seed", "4"],
    ["rays", str(DATA / "ghz3.json")],
])
def test_output_is_byte_identical_across_processes(argv):
    cmd = [sys.executable, "-m", "entrocone.cli", *argv]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True, env={"ENTROCONE_THREADS": "3", "PATH": ""}).stdout
    assert a == b and a
