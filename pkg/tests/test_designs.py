import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from udes.designs import (
    AXIS_CYCLE,
    classify_min_1design,
    clifford_bound,
    extend_to_2design,
    named_design,
    verify_design,
    verify_rotation_sum,
)
from udes.errors import (
    NotMinimal1Design,
    NotOrthogonalBasis,
    NotUnitaryElements,
    UnknownName,
    UnsupportedOrder,
)
from udes.linalg import hs_dist, hs_norm
from udes.qubit import pauli
from udes.twirl import HaarSampler, UnitarySet, haar_sample

W = AXIS_CYCLE
SQ2 = 1 / np.sqrt(2)


# ---- named designs -----------------------------------------------------------


@pytest.mark.parametrize(
    "name,size", [("pauli", 4), ("B", 4), ("B0", 4), ("D", 12), ("D0", 12), ("D1", 12), ("D2", 12)]
)
def test_named_design_sizes(name, size):
    nd = named_design(name)
    assert len(nd.set) == size
    assert nd.set.labels is not None and len(nd.set.labels) == size


def test_pauli_aliases_b():
    A = named_design("pauli").set
    B = named_design("B").set
    assert all(np.array_equal(x, y) for x, y in zip(A, B))


def test_unknown_name_raises():
    with pytest.raises(UnknownName):
        named_design("E8")


def test_d_is_the_cycled_pauli_listing():
    D = named_design("D").set
    B = named_design("B").set
    Wd = W.conj().T
    expect = list(B) + [W @ U for U in B] + [Wd @ U for U in B]
    assert all(hs_dist(x, y) < 1e-15 for x, y in zip(D, expect))


def test_d2_matches_its_closed_form_listing():
    # all twelve elements, written out with explicit signs
    one, I, J, K = (named_design("B0").set[k] for k in range(4))
    Wd = W.conj().T
    listing = [
        one, -I, -J, -K,
        -W, -(W @ I), -(W @ J), -(W @ K),
        Wd, -(Wd @ I), -(Wd @ J), -(Wd @ K),
    ]
    D2 = named_design("D2").set
    assert all(hs_norm(x - y) < 1e-15 for x, y in zip(D2, listing))


# ---- verification ------------------------------------------------------------


def test_pauli_basis_is_a_1design_but_not_a_2design():
    B = named_design("B").set
    r1 = verify_design(B, 1)
    assert r1.is_design and r1.frame_gap == pytest.approx(0.0, abs=1e-14)
    r2 = verify_design(B, 2)
    assert not r2.is_design
    assert r2.frame_gap == pytest.approx(2.0, abs=1e-12)
    assert r2.max_twirl_deviation == pytest.approx(SQ2, abs=1e-12)
    assert r2.method_agreement


@pytest.mark.parametrize("name", ["D", "D0", "D1", "D2"])
def test_completions_are_2designs(name):
    S = named_design(name).set
    for t in (1, 2):
        rep = verify_design(S, t)
        assert rep.is_design, f"{name} failed at t={t}"
        assert rep.frame_gap < 1e-12


def test_verify_design_threaded_agrees():
    D = named_design("D").set
    solo = verify_design(D, 2)
    pooled = verify_design(D, 2, threads=4)
    assert solo.is_design == pooled.is_design
    assert solo.max_twirl_deviation == pytest.approx(pooled.max_twirl_deviation)


def test_verify_design_single_methods():
    B = named_design("B").set
    assert verify_design(B, 2, method="twirl").is_design is False
    assert verify_design(B, 2, method="frame").is_design is False


def test_verify_design_unsupported_order():
    with pytest.raises(UnsupportedOrder):
        verify_design(named_design("B").set, 3)


def test_rotation_sum_vanishes_for_designs_only():
    assert verify_rotation_sum(named_design("D").set)
    assert verify_rotation_sum(named_design("B").set)  # already true at order 1
    assert not verify_rotation_sum(UnitarySet([np.eye(2), pauli(1)]))


# ---- classification and completion -------------------------------------------


def random_frame(seed):
    """A generic minimal 1-design: phased, rotated, permuted Pauli basis."""
    g = np.random.default_rng(seed)
    h = HaarSampler(seed)
    V = haar_sample(h)
    Vp = haar_sample(h)
    phases = np.exp(2j * np.pi * g.uniform(size=4))
    perm = g.permutation(4)
    return [phases[m] * V @ pauli(perm[m]) @ Vp for m in range(4)]


def test_classify_pauli_basis_is_trivial():
    frame = classify_min_1design(named_design("B").set)
    assert np.allclose(frame.V, np.eye(2))
    assert np.allclose(frame.Vp, np.eye(2))
    assert frame.permutation == (0, 1, 2, 3)
    assert np.allclose(frame.phases, np.ones(4))


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_classify_reconstructs_arbitrary_frames(seed):
    elems = random_frame(seed)
    frame = classify_min_1design(elems)
    rebuilt = frame.reconstruct()
    assert max(hs_norm(a - b) for a, b in zip(rebuilt, elems)) < 1e-9
    # phases are honest unit scalars
    assert np.allclose(np.abs(frame.phases), 1.0, atol=1e-10)
    # V and Vp are special unitaries
    for M in (frame.V, frame.Vp):
        assert abs(np.linalg.det(M) - 1.0) < 1e-9


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_extension_always_verifies(seed):
    S = extend_to_2design(random_frame(seed))
    assert len(S) == 12
    rep = verify_design(S, 2, tol=1e-10)
    assert rep.is_design


def test_extension_of_pauli_basis_is_the_named_completion():
    D = named_design("D").set
    ext = extend_to_2design(named_design("B").set)
    assert all(np.array_equal(a, b) for a, b in zip(ext, D))


def test_classify_rejects_non_orthogonal_sets():
    H = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    with pytest.raises(NotOrthogonalBasis):
        classify_min_1design([pauli(0), pauli(1), pauli(2), H])


def test_classify_rejects_wrong_size():
    with pytest.raises(NotOrthogonalBasis):
        classify_min_1design([pauli(0), pauli(1)])


def test_classify_rejects_non_unitary():
    bad = np.diag([1.0, 0.5])
    with pytest.raises(NotUnitaryElements):
        classify_min_1design([pauli(0), pauli(1), pauli(2), bad])


def test_extension_wraps_classification_failure():
    H = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    with pytest.raises(NotMinimal1Design):
        extend_to_2design([pauli(0), pauli(1), pauli(2), H])


# ---- size bound ---------------------------------------------------------------


def test_clifford_bound_values():
    assert clifford_bound(2) == 10
    assert clifford_bound(3) == 65
    with pytest.raises(ValueError):
        clifford_bound(1)


def test_completion_exceeds_naive_bound():
    # the guaranteed completion has 12 elements, above the d=2 bound of 10
    assert len(named_design("D").set) > clifford_bound(2)
