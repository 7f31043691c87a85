import itertools
import math

import numpy as np
import pytest

from udes.designs import AXIS_CYCLE, named_design
from udes.errors import NonUnitPoint, NotHalfInteger, ProportionalElements
from udes.groups import (
    axis_cycle_closure_table,
    demitesseract_class,
    group_profile,
    polytope_identify,
    snap,
    so3_image_table,
    su2_closure,
)
from udes.qubit import pauli
from udes.su2 import quaternion_of
from udes.twirl import UnitarySet

B = named_design("B").set
D = named_design("D").set
ROT_C = 2 * math.pi / (3 * math.sqrt(3))


def test_closure_doubles_and_pairs():
    C = su2_closure(B)
    assert len(C) == 8
    for k, partner in enumerate(C.pairing):
        assert C.pairing[partner] == k
        assert np.allclose(C.closure[k], -C.closure[partner])
    # even slots carry the canonical representative
    for rep in C.representatives():
        q = np.array(quaternion_of(rep))
        first = q[np.flatnonzero(np.abs(q) > 1e-9)[0]]
        assert first > 0


def test_closure_rejects_proportional_elements():
    with pytest.raises(ProportionalElements):
        su2_closure(UnitarySet([pauli(1), 1j * pauli(1)]))


def test_pauli_closure_is_the_quaternion_group():
    prof = group_profile(su2_closure(B))
    assert prof.is_group
    assert prof.order_histogram == {1: 1, 2: 1, 4: 6}
    assert prof.center_size == 2
    assert prof.cosets is not None and len(prof.cosets) == 2
    # Q8 admits no complement for any of its proper normal subgroups
    assert not prof.semidirect_check


def test_completion_closure_is_binary_tetrahedral():
    prof = group_profile(su2_closure(D))
    assert prof.is_group
    assert prof.order_histogram == {1: 1, 2: 1, 3: 8, 4: 6, 6: 8}
    assert prof.center_size == 2
    assert len(prof.cosets) == 3
    assert sorted(len(c) for c in prof.cosets) == [8, 8, 8]
    assert prof.semidirect_check
    # the quaternion-unit coset comes first and contains index 0 (identity)
    assert 0 in prof.cosets[0]


def test_wing_cosets_alone_do_not_close():
    wings = UnitarySet(list(D.elems[4:]))
    prof = group_profile(su2_closure(wings))
    assert not prof.is_group
    # every element order in the wings is divisible by three
    assert set(prof.order_histogram) == {3, 6}
    assert sum(prof.order_histogram.values()) == 16


def test_polytope_recognition_from_closures():
    assert polytope_identify(su2_closure(B).points()).kind == "16-cell"
    assert polytope_identify(su2_closure(D).points()).kind == "24-cell"
    wings = UnitarySet(list(D.elems[4:]))
    assert polytope_identify(su2_closure(wings).points()).kind == "tesseract"


def test_polytope_hexagon_from_cycle_powers():
    Ws = [np.linalg.matrix_power(AXIS_CYCLE, k) for k in range(6)]
    pts = np.array([quaternion_of(w) for w in Ws])
    pid = polytope_identify(pts)
    assert pid.kind == "hexagon"
    assert pid.distance_spectrum[0] == (1.0, 2)  # unit edge length


def test_polytope_tetrahedron_pair():
    cube = np.array(
        [[0.5, 0.5 * a, 0.5 * b, 0.5 * c] for a, b, c in itertools.product([1, -1], repeat=3)]
    )
    assert polytope_identify(cube).kind == "tetrahedron-pair"


def test_polytope_other_and_validation():
    # a square is none of the recognized solids
    square = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [-1, 0, 0, 0], [0, -1, 0, 0]], dtype=float)
    assert polytope_identify(square).kind == "other"
    with pytest.raises(NonUnitPoint):
        polytope_identify(np.array([[1.0, 1.0, 0.0, 0.0]]))
    with pytest.raises(NonUnitPoint):
        polytope_identify(np.zeros((3, 5)))


def test_polytope_recognition_is_rotation_invariant():
    # chord spectra are unchanged by any global 4d rotation
    g = np.random.default_rng(8)
    M = np.linalg.qr(g.normal(size=(4, 4)))[0]
    pts = su2_closure(D).points() @ M.T
    assert polytope_identify(pts).kind == "24-cell"


@pytest.mark.parametrize("signs", list(itertools.product([1, -1], repeat=4)))
def test_demitesseract_class_by_sign_parity(signs):
    label = demitesseract_class(np.array(signs) * 0.5)
    expect = "W" if signs.count(-1) % 2 == 0 else "W*"
    assert label == expect


def test_demitesseract_class_requires_half_coordinates():
    with pytest.raises(NotHalfInteger):
        demitesseract_class((1.0, 0.0, 0.0, 0.0))


def test_demitesseract_class_is_antipodal_invariant():
    q = np.array([0.5, -0.5, 0.5, 0.5])
    assert demitesseract_class(q) == demitesseract_class(-q)


def test_so3_image_of_pauli_closure():
    table = so3_image_table(su2_closure(B))
    assert len(table) == 4
    assert table[0].angle == 0.0
    for k, aa in enumerate(table[1:]):
        assert aa.angle == pytest.approx(math.pi)
        expect = np.zeros(3)
        expect[k] = 1.0
        assert np.allclose(aa.axis, expect)


def test_snap_hits_only_close_candidates():
    assert snap(0.4999999999999999, (0.5,)) == 0.5
    assert snap(0.499, (0.5,)) == 0.499
    assert snap(-0.0, (0.0,)) == 0.0


def test_closure_table_is_exact():
    rows = axis_cycle_closure_table()
    assert len(rows) == 24
    assert [r.label for r in rows[:6]] == ["+1", "-1", "+I", "-I", "+J", "-J"]
    q_allowed = {0.0, 0.5, -0.5, 1.0, -1.0}
    r_allowed = {0.0, math.pi, ROT_C, -ROT_C}
    for row in rows:
        assert set(row.quaternion) <= q_allowed
        assert set(row.rotation) <= r_allowed
        # quaternion must reproduce the Pauli expansion: U = (c . sigma)/2
        U = sum(c * pauli(m) for m, c in enumerate(row.pauli)) / 2
        assert np.allclose(np.array(quaternion_of(U)), row.quaternion, atol=1e-12)


def test_closure_table_antipodal_rows_share_rotation():
    rows = axis_cycle_closure_table()
    for even, odd in zip(rows[0::2], rows[1::2]):
        assert even.label[1:] == odd.label[1:]
        assert even.rotation == odd.rotation
        assert np.allclose(np.array(even.quaternion), -np.array(odd.quaternion))
