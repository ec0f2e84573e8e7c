"""End-to-end runs of the command line tool in a subprocess."""

import json
import subprocess
import sys

import pytest

from stressmatroid.files import (
    arrangement_to_data,
    dump_canonical,
    framework_to_data,
    matroid_to_data,
    stress_to_data,
)
from stressmatroid.sign_matroid import StressMatroid, matroid_from_framework
from stressmatroid.stress_kernel import stress_basis

from conftest import k4_framework


def run_cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "stressmatroid", *argv],
        capture_output=True, text=True)


@pytest.fixture(scope="module")
def workdir(tmp_path_factory, arr2, arr3):
    d = tmp_path_factory.mktemp("cli")
    k4 = k4_framework()
    dump_canonical(framework_to_data(k4), d / "k4.json")
    dump_canonical(arrangement_to_data(arr2), d / "arr2.json")
    dump_canonical(arrangement_to_data(arr3), d / "arr3.json")
    m = matroid_from_framework(k4)
    dump_canonical(matroid_to_data(m), d / "k4_matroid.json")
    s = stress_basis(k4).vectors[0]
    dump_canonical(stress_to_data(k4, s), d / "k4_stress.json")
    return d


def test_stresses(workdir):
    got = run_cli("stresses", str(workdir / "k4.json"))
    assert got.returncode == 0
    data = json.loads(got.stdout)
    assert data["dimension"] == 1
    assert data["stressable"] is True
    assert len(data["stresses"]) == 1


def test_matroid(workdir):
    got = run_cli("matroid", str(workdir / "k4.json"))
    assert got.returncode == 0
    data = json.loads(got.stdout)
    assert data["circuits"] == ["+++---"]
    assert "sha" in data


def test_matroid_with_covectors(workdir):
    got = run_cli("matroid", str(workdir / "k4.json"), "--covectors")
    data = json.loads(got.stdout)
    assert sorted(data["covectors"]) == ["+++---", "000000"]


def test_equal_same_file_exits_zero(workdir):
    path = str(workdir / "k4_matroid.json")
    got = run_cli("equal", path, path)
    assert got.returncode == 0
    assert json.loads(got.stdout) == {"equal": True}


def test_equal_different_circuits_exits_two(workdir, tmp_path):
    base = json.loads((workdir / "k4_matroid.json").read_text())
    other = StressMatroid(tuple(base["edge_order"]), ("++-0+-",))
    dump_canonical(matroid_to_data(other), tmp_path / "other.json")
    got = run_cli("equal", str(workdir / "k4_matroid.json"),
                  str(tmp_path / "other.json"))
    assert got.returncode == 2
    assert json.loads(got.stdout) == {"equal": False}


def test_equal_with_label_map(workdir, tmp_path):
    base = json.loads((workdir / "k4_matroid.json").read_text())
    renamed = StressMatroid(
        tuple(f"e{k}" for k in range(6)), tuple(base["circuits"]))
    dump_canonical(matroid_to_data(renamed), tmp_path / "renamed.json")
    mapping = {lbl: f"e{k}" for k, lbl in enumerate(base["edge_order"])}
    dump_canonical(mapping, tmp_path / "map.json")
    got = run_cli("equal", str(workdir / "k4_matroid.json"),
                  str(tmp_path / "renamed.json"),
                  "--map", str(tmp_path / "map.json"))
    assert got.returncode == 0
    # without a valid map the labels cannot biject
    got = run_cli("equal", str(workdir / "k4_matroid.json"),
                  str(tmp_path / "renamed.json"))
    assert got.returncode == 1
    err = json.loads(got.stderr)
    assert err["error"] == "arity-mismatch"


def test_gadget_build_then_stresses(workdir, tmp_path):
    layout_path = tmp_path / "gadget2.json"
    got = run_cli("gadget-build", str(workdir / "arr2.json"),
                  "-o", str(layout_path))
    assert got.returncode == 0 and got.stdout == ""
    got = run_cli("stresses", str(layout_path))
    assert got.returncode == 0
    assert json.loads(got.stdout)["dimension"] == 3


def test_gadget_verify(workdir, tmp_path):
    layout_path = tmp_path / "gadget2.json"
    run_cli("gadget-build", str(workdir / "arr2.json"), "-o", str(layout_path))
    got = run_cli("gadget-verify", str(layout_path))
    assert got.returncode == 0
    report = json.loads(got.stdout)
    assert report["passed"] is True
    assert set(report["circuit_classes"]) == {"a", "b", "c", "d"}


def test_invariance(workdir):
    got = run_cli("invariance", str(workdir / "arr2.json"),
                  "--trials", "2", "--seed", "0")
    assert got.returncode == 0
    report = json.loads(got.stdout)
    assert report["all_equal"] is True
    assert len(report["trials"]) == 2


def test_k4replace(workdir):
    got = run_cli("k4replace", str(workdir / "k4.json"),
                  "--edge", "1|2", "--side", "right")
    assert got.returncode == 0
    data = json.loads(got.stdout)
    ids = {v["id"] for v in data["vertices"]}
    assert {"K_1_2_a", "K_1_2_b"} <= ids
    assert ["1", "2"] not in data["edges"]


def test_gammaprime(workdir):
    got = run_cli("gammaprime", str(workdir / "arr3.json"))
    assert got.returncode == 0
    data = json.loads(got.stdout)
    assert data["stressable"] is True
    assert len(data["matroid"]["circuits"]) == 3


def test_harmonic(workdir):
    got = run_cli("harmonic", "0", "0", "4", "0", "1", "0")
    assert got.returncode == 0
    data = json.loads(got.stdout)
    assert data["fourth_point"] == {"x": "-2/1", "y": "0/1"}
    assert data["cross_ratio"] == "-1/1"
    assert data["matroids_differ"] is True


def test_svg(workdir, tmp_path):
    out = tmp_path / "k4.svg"
    got = run_cli("svg", str(workdir / "k4.json"),
                  "--stress", str(workdir / "k4_stress.json"),
                  "-o", str(out))
    assert got.returncode == 0
    text = out.read_text()
    assert text.startswith("<svg ") and text.endswith("</svg>\n")


def test_missing_file_is_structured_error(workdir):
    got = run_cli("stresses", str(workdir / "nope.json"))
    assert got.returncode == 1
    err = json.loads(got.stderr)
    assert err["error"] == "io-error"


def test_not_generic_exit_code(tmp_path):
    dump_canonical(
        {"lines": [{"a": "1/1", "b": "1/1", "c": "0/1"},
                   {"a": "1/1", "b": "1/1", "c": "5/1"}]},
        tmp_path / "parallel.json")
    got = run_cli("gadget-build", str(tmp_path / "parallel.json"))
    assert got.returncode == 1
    assert json.loads(got.stderr)["error"] == "not-generic"


def test_runs_are_byte_identical(workdir):
    first = run_cli("matroid", str(workdir / "k4.json"))
    second = run_cli("matroid", str(workdir / "k4.json"))
    assert first.stdout == second.stdout


def test_help_screens_render():
    assert run_cli("--help").returncode == 0
    for verb in ("stresses", "matroid", "equal", "gadget-build",
                 "gadget-verify", "invariance", "k4replace",
                 "gammaprime", "harmonic", "svg"):
        got = run_cli(verb, "--help")
        assert got.returncode == 0, verb
        assert "usage" in got.stdout
