from fractions import Fraction

import pytest

from stressmatroid.errors import (
    ChainNotCollinear,
    InvalidInput,
    NotGeneric,
    SeedDegenerate,
)
from stressmatroid.exact_geom import cross_ratio, pt
from stressmatroid.framework import Framework, make_framework
from stressmatroid.gadget import (
    build_gadget,
    discover_circuits,
    extract_arrangement,
    gamma_prime,
    harmonic_gadget,
    k4_replace,
    matroid_invariance_harness,
    verify_gadget,
)
from stressmatroid.sign_matroid import matroid_equal, matroid_from_framework
from stressmatroid.stress_kernel import dimension, solve_on_support

from conftest import arrangement


def expected_counts(n):
    return 4 + 4 * n + n * (n - 1) // 2, n * n + 7 * n + 6


def test_counts_and_dimension_n2(gadget2):
    nv, ne = expected_counts(2)
    f = gadget2.framework
    assert len(f.vertex_ids) == nv
    assert len(f.edges) == ne
    assert dimension(f) == 3


def test_counts_and_dimension_n3(gadget3):
    nv, ne = expected_counts(3)
    f = gadget3.framework
    assert len(f.vertex_ids) == nv
    assert len(f.edges) == ne
    assert dimension(f) == 4


def test_roles_census(gadget3):
    roles = gadget3.meta["roles"]
    n = gadget3.n
    assert len(roles) == len(gadget3.framework.edges)
    kinds = {}
    for role in roles:
        kinds[role[0]] = kinds.get(role[0], 0) + 1
    assert kinds == {"side": 4 * (n + 1), "diag": 2, "quad": 3 * n,
                     "chord": n * n}
    assert set(gadget3.line_of.keys()) == {1, 2, 3}
    for idxs in gadget3.line_of.values():
        assert len(idxs) == n


def test_build_is_deterministic(arr2):
    a = build_gadget(arr2)
    b = build_gadget(arr2)
    assert a.framework == b.framework
    assert a.meta == b.meta
    assert a.labels == b.labels


def test_rejects_non_generic():
    with pytest.raises(NotGeneric):
        build_gadget(arrangement([(1, 1, 0), (2, 2, 5)]))


def test_verify_gadget_all_green(gadget2):
    report = verify_gadget(gadget2, samples=6, seed=7)
    assert report["n"] == 2
    assert report["passed"] is True
    assert all(c["pass"] for c in report["checks"])
    names = [c["name"] for c in report["checks"]]
    for expected in ("mirror-symmetry", "desargues-on-BD", "chains-collinear",
                     "circuit-classification", "type-a-signs",
                     "side-ratio-invariance", "quadrilateral-vanishing"):
        assert expected in names


def test_discover_circuits_structure(gadget3, gadget3_matroid):
    classes = discover_circuits(gadget3, circuits=gadget3_matroid.circuits)
    n = gadget3.n
    assert isinstance(classes["a"], str)
    assert set(classes["b"].keys()) == {1, 2, 3}
    assert set(classes["c"].keys()) == {1, 2, 3}
    assert set(classes["d"].keys()) == {1, 2, 3}
    assert set(classes["bands"].keys()) == {(1, 2), (2, 3), (1, 3)}
    named = {classes["a"]}
    named.update(classes["c"].values())
    named.update(classes["d"].values())
    assert len(named) == 1 + 2 * n
    # every selected circuit really is a circuit of the matroid
    pool = set(gadget3_matroid.circuits)
    assert named <= pool
    assert set(classes["b"].values()) <= pool
    assert set(classes["other"]) <= pool


def test_type_a_signs_split_sides_from_diagonals(gadget2, gadget2_matroid):
    classes = discover_circuits(gadget2, circuits=gadget2_matroid.circuits)
    a = classes["a"]
    roles = gadget2.meta["roles"]
    side_signs = {a[k] for k, role in enumerate(roles) if role[0] == "side"}
    diag_signs = {a[k] for k, role in enumerate(roles) if role[0] == "diag"}
    rest = {a[k] for k, role in enumerate(roles)
            if role[0] not in ("side", "diag")}
    assert len(side_signs) == 1 and len(diag_signs) == 1
    assert side_signs != diag_signs
    assert rest == {"0"}


def test_band_circuits_avoid_diagonals(gadget3, gadget3_matroid):
    classes = discover_circuits(gadget3, circuits=gadget3_matroid.circuits)
    roles = gadget3.meta["roles"]
    diag_idx = [k for k, role in enumerate(roles) if role[0] == "diag"]
    for band in classes["bands"].values():
        assert all(band[k] == "0" for k in diag_idx)


def test_extract_round_trip(arr2, arr3, gadget2, gadget3):
    assert extract_arrangement(gadget2).lines == arr2.lines
    assert extract_arrangement(gadget3).lines == arr3.lines


def test_extract_rejects_broken_chain(gadget2):
    f = gadget2.framework
    positions = dict(f.positions)
    positions["T1_2"] = positions["T1_2"] + pt(0, 1)
    broken = Framework(f.graph, positions)
    with pytest.raises(ChainNotCollinear):
        extract_arrangement(gadget2, framework=broken)


def test_k4_replace_left_right_matroids_equal(gadget2):
    f = gadget2.framework
    left = k4_replace(f, "A1|B1", "left")
    right = k4_replace(f, "A1|B1", "right")
    assert len(left.vertex_ids) == len(f.vertex_ids) + 2
    assert len(left.edges) == len(f.edges) + 4
    assert "K_A1_B1_a" in left.positions and "K_A1_B1_b" in left.positions
    with pytest.raises(InvalidInput):
        left.edge_index("A1|B1")  # the edge itself is gone
    assert matroid_equal(matroid_from_framework(left),
                         matroid_from_framework(right))


def test_k4_replace_input_validation(gadget2):
    f = gadget2.framework
    with pytest.raises(InvalidInput):
        k4_replace(f, "A1|B1", "up")
    with pytest.raises(InvalidInput):
        k4_replace(f, "A1|C1", "left")  # no such edge


def test_k4_replace_preserves_stress_dimension(gadget2):
    f = gadget2.framework
    assert dimension(k4_replace(f, "A|C", "left")) == dimension(f)


def test_gamma_prime(arr3):
    f, m = gamma_prime(arr3)
    assert len(f.vertex_ids) == 9  # chain endpoints and crossings only
    assert len(f.edges) == 12
    assert dimension(f) == 3
    assert len(m.circuits) == 3
    assert m.edge_order == tuple(f.edge_keys())


def test_harmonic_gadget_known_seed():
    f, quad, extras = harmonic_gadget(pt(0, 0), pt(4, 0), pt(1, 0))
    assert quad == ("1", "2", "3", "4")
    assert extras["cross_ratio"] == -1
    p = [f.pos(v) for v in quad]
    assert cross_ratio(*p) == -1
    assert p[3] == pt(-2, 0)
    assert extras["matroids_differ"] is True


def test_harmonic_witness_separates_realizations():
    f, _, extras = harmonic_gadget(pt(0, 0), pt(4, 0), pt(1, 0))
    flat = extras["comparison"]
    support = [f.edge_index(key) for key in extras["witness_support"]]
    # the witness triangle degenerates only in the all-collinear realization
    assert solve_on_support(flat, support).dimension == 1
    assert solve_on_support(f, support).dimension == 0
    nz = {k for k, ch in enumerate(extras["witness"]) if ch != "0"}
    assert nz == set(support)


def test_harmonic_gadget_seed_degeneracies():
    with pytest.raises(SeedDegenerate):
        harmonic_gadget(pt(0, 0), pt(0, 0), pt(1, 0))
    with pytest.raises(SeedDegenerate):
        harmonic_gadget(pt(0, 0), pt(4, 1), pt(1, 0))
    with pytest.raises(SeedDegenerate):
        harmonic_gadget(pt(0, 0), pt(4, 0), pt(2, 0))  # conjugate at infinity


def test_invariance_harness_smoke(arr2):
    report = matroid_invariance_harness(arr2, trials=2, seed=0)
    assert report["all_equal"] is True
    assert len(report["trials"]) == 2
    assert all(r["equal"] for r in report["trials"])
