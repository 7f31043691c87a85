"""End-to-end acceptance checks, one per advertised guarantee.

Each test prints a single PASS/FAIL line (visible under `pytest -s`) and
asserts the same condition, so the suite doubles as a human-readable
scorecard.  Tolerances are part of the contract and are not adjustable.
"""

import json
import math

import numpy as np

from udes.cli import main
from udes.designs import (
    AXIS_CYCLE,
    classify_min_1design,
    extend_to_2design,
    named_design,
    verify_design,
)
from udes.groups import group_profile, polytope_identify, su2_closure
from udes.linalg import hs_norm
from udes.qubit import SPHERICAL_BASIS, pauli, uu_in_bell_basis, wigner_d1
from udes.su2 import rodrigues, so3_rep, su2_from_axis_angle, su2_from_euler
from udes.twirl import (
    HaarSampler,
    UnitarySet,
    choi_rank,
    frame_potential,
    haar_sample,
    haar_twirl,
    mc_oracle_check,
    superop_of_twirl,
    twirl_finite,
)

B = named_design("B").set
D = named_design("D").set

SHIFT = np.array([[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])


def report(number: int, name: str, ok: bool) -> None:
    print(f"acceptance {number:2d} {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"acceptance criterion {number} ({name}) failed"


def random_density(g) -> np.ndarray:
    A = g.normal(size=(2, 2)) + 1j * g.normal(size=(2, 2))
    rho = A @ A.conj().T
    return rho / np.trace(rho)


def basis_ops(D_):
    for i in range(D_):
        for j in range(D_):
            E = np.zeros((D_, D_), dtype=complex)
            E[i, j] = 1.0
            yield E


def test_criterion_01_first_order_twirl_depolarizes():
    g = np.random.default_rng(1)
    worst = max(
        hs_norm(twirl_finite(B, 1, random_density(g)) - np.eye(2) / 2) for _ in range(100)
    )
    report(1, "order-1 twirl sends states to 1/2", worst <= 1e-12)


def test_criterion_02_second_order_twirl_matches_oracle():
    worst = max(
        hs_norm(twirl_finite(D, 2, E) - haar_twirl(2, E)) for E in basis_ops(4)
    )
    report(2, "order-2 twirl matches the closed form on all E(i,j)", worst <= 1e-12)


def test_criterion_03_frame_potential_values():
    ok = (
        abs(frame_potential(D, 2).value - 2.0) <= 1e-12
        and abs(frame_potential(B, 2).value - 4.0) <= 1e-12
        and abs(frame_potential(B, 1).value - 1.0) <= 1e-12
        and abs(frame_potential(D, 1).value - 1.0) <= 1e-12
    )
    report(3, "frame potentials hit 2 / 4 / 1 / 1", ok)


def test_criterion_04_choi_ranks():
    ok = (
        choi_rank(superop_of_twirl("haar", 1), tol=1e-10) == 4
        and choi_rank(superop_of_twirl("haar", 2), tol=1e-10) == 10
        and choi_rank(superop_of_twirl(B, 2), tol=1e-10) == 4
    )
    report(4, "Choi ranks are 4 / 10 / 4", ok)


def test_criterion_05_covering_map_suite():
    W = su2_from_euler(0.0, math.pi / 2, math.pi / 2)
    ok = hs_norm(so3_rep(W) - SHIFT) <= 1e-12
    h = HaarSampler(5)
    for _ in range(100):
        U = haar_sample(h)
        ok = ok and np.array_equal(so3_rep(U), so3_rep(-U))
    g = np.random.default_rng(5)
    for _ in range(100):
        v = g.normal(size=3)
        axis = tuple(v / np.linalg.norm(v))
        angle = g.uniform(0.0, 2.0 * math.pi)
        dev = hs_norm(rodrigues(axis, angle) - so3_rep(su2_from_axis_angle(axis, angle)))
        ok = ok and dev <= 1e-10
    report(5, "covering map: shift image, two-to-one, axis-angle match", ok)


def test_criterion_06_bell_machinery():
    W = su2_from_euler(0.0, math.pi / 2, math.pi / 2)
    expect = np.array(
        [[1, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1j], [0, -1j, 0, 0]], dtype=complex
    )
    ok = np.max(np.abs(uu_in_bell_basis(W) - expect)) <= 1e-12

    from udes.qubit import adapted_bell_block

    h = HaarSampler(6)
    for _ in range(100):
        U = haar_sample(h)
        ok = ok and hs_norm(adapted_bell_block(U) - so3_rep(U)) <= 1e-10

    g = np.random.default_rng(6)
    P = SPHERICAL_BASIS
    for _ in range(50):
        alpha = g.uniform(0.0, 2.0 * math.pi)
        beta = g.uniform(0.0, math.pi)
        gamma = g.uniform(0.0, 4.0 * math.pi)
        R = so3_rep(su2_from_euler(alpha, beta, gamma))
        dev = hs_norm(wigner_d1(alpha, beta, gamma) - P.conj().T @ R @ P)
        ok = ok and dev <= 1e-10
    report(6, "Bell pictures: frozen matrix, rotation block, spin-1 form", ok)


def test_criterion_07_completion_generality():
    ok = True
    for seed in range(100):
        g = np.random.default_rng(seed)
        h = HaarSampler(seed)
        V, Vp = haar_sample(h), haar_sample(h)
        phases = np.exp(2j * np.pi * g.uniform(size=4))
        S = [phases[m] * V @ pauli(m) @ Vp for m in range(4)]
        design = extend_to_2design(classify_min_1design(S).reconstruct())
        ok = ok and verify_design(design, 2, tol=1e-10).is_design
    report(7, "random orthogonal bases complete to verified 2-designs", ok)


def test_criterion_08_named_normalizations():
    one, I, J, K = (named_design("B0").set[k] for k in range(4))
    W, Wd = AXIS_CYCLE, AXIS_CYCLE.conj().T
    listing = [
        one, -I, -J, -K,
        -W, -(W @ I), -(W @ J), -(W @ K),
        Wd, -(Wd @ I), -(Wd @ J), -(Wd @ K),
    ]
    D2 = named_design("D2").set
    ok = all(hs_norm(a - b) <= 1e-12 for a, b in zip(D2, listing))
    for name in ("D0", "D1", "D2"):
        ok = ok and verify_design(named_design(name).set, 2, tol=1e-10).is_design
    report(8, "signed completions match their listings and verify", ok)


def test_criterion_09_group_and_polytopes():
    CD = su2_closure(D)
    prof = group_profile(CD)
    ok = (
        len(CD) == 24
        and prof.is_group
        and prof.order_histogram == {1: 1, 2: 1, 3: 8, 4: 6, 6: 8}
        and prof.center_size == 2
        and prof.semidirect_check
    )
    ok = ok and polytope_identify(su2_closure(B).points()).kind == "16-cell"
    wings = UnitarySet(list(D.elems[4:]))
    ok = ok and polytope_identify(su2_closure(wings).points()).kind == "tesseract"
    ok = ok and polytope_identify(CD.points()).kind == "24-cell"
    from udes.su2 import quaternion_of

    hexagon = np.array(
        [quaternion_of(np.linalg.matrix_power(AXIS_CYCLE, k)) for k in range(6)]
    )
    pid = polytope_identify(hexagon)
    ok = ok and pid.kind == "hexagon" and pid.distance_spectrum[0] == (1.0, 2)
    report(9, "closure group structure and polytope recognition", ok)


def test_criterion_10_monte_carlo_cross_check():
    ok = True
    for t in (1, 2):
        rep = mc_oracle_check(HaarSampler(20240817), t, 10**6)
        ok = ok and rep.ok and rep.max_ratio <= 5.0
    report(10, "10^6-sample MC twirl within 5 standard errors", ok)


def test_criterion_11_closure_table_exact(capsys):
    code = main(["table", "--format", "json"])
    rows = json.loads(capsys.readouterr().out)["result"]["rows"]
    c = 2.0 * math.pi / (3.0 * math.sqrt(3.0))
    quaternions = {
        "1": (1.0, 0.0, 0.0, 0.0),
        "I": (0.0, 1.0, 0.0, 0.0),
        "J": (0.0, 0.0, 1.0, 0.0),
        "K": (0.0, 0.0, 0.0, 1.0),
        "W": (0.5, 0.5, 0.5, 0.5),
        "WI": (-0.5, 0.5, 0.5, -0.5),
        "WJ": (-0.5, -0.5, 0.5, 0.5),
        "WK": (-0.5, 0.5, -0.5, 0.5),
        "W*": (0.5, -0.5, -0.5, -0.5),
        "W*I": (0.5, 0.5, -0.5, 0.5),
        "W*J": (0.5, 0.5, 0.5, -0.5),
        "W*K": (0.5, -0.5, 0.5, 0.5),
    }
    rotations = {
        "1": (0.0, 0.0, 0.0),
        "I": (math.pi, 0.0, 0.0),
        "J": (0.0, math.pi, 0.0),
        "K": (0.0, 0.0, math.pi),
        "W": (c, c, c),
        "WI": (-c, -c, c),
        "WJ": (c, -c, -c),
        "WK": (-c, c, -c),
        "W*": (-c, -c, -c),
        "W*I": (c, -c, c),
        "W*J": (c, c, -c),
        "W*K": (-c, c, c),
    }
    ok = code == 0 and len(rows) == 24
    for row in rows:
        sign, name = row["label"][0], row["label"][1:]
        expect_q = np.array(quaternions[name])
        if sign == "-":
            expect_q = -expect_q
        ok = ok and tuple(row["quaternion"]) == tuple(expect_q + 0.0)
        ok = ok and tuple(row["rotation"]) == rotations[name]
    report(11, "all 24 closure-table rows carry exact coordinates", ok)
