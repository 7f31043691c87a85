"""SU(2) closures of unitary sets, finite group structure, and recognition
of the 3-sphere polytopes their quaternion pictures trace out.

Every unitary has exactly two determinant-1 phase shifts, an antipodal pair
on the unit quaternion 3-sphere; the closure collects both for every element
of a set.  For the Pauli basis this yields the quaternion group Q8 (a
16-cell on the 3-sphere), and for its 12-element 2-design completion the
binary tetrahedral group (a 24-cell).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonUnitPoint, NotHalfInteger, ProportionalElements
from .linalg import hs_norm
from .su2 import AxisAngle, axis_angle_of, normalize_to_su2, quaternion_of
from .twirl import UnitarySet

_MEMBER_TOL = 1e-9  # products of lattice-exact elements leave huge margin

_ORDER_CAP = 48  # largest element order we ever probe for


@dataclass(frozen=True)
class Su2Closure:
    """Both determinant-1 normalizations of every element of a set.

    closure[2a] is the canonical normalization of original element a (first
    nonzero quaternion coordinate positive) and closure[2a+1] its negative;
    `pairing` maps each index to its antipodal partner.
    """

    original: UnitarySet
    closure: tuple
    pairing: tuple

    def __len__(self) -> int:
        return len(self.closure)

    def representatives(self) -> list:
        """One canonical element per antipodal pair."""
        return [self.closure[k] for k in range(0, len(self.closure), 2)]

    def points(self) -> np.ndarray:
        """The closure as an (n, 4) array of unit quaternions."""
        return np.array([quaternion_of(U) for U in self.closure])


def su2_closure(S: UnitarySet) -> Su2Closure:
    """Collect both determinant-1 phase shifts of every element.

    Proportional elements share their normalizations, which would collapse
    the closure; they are rejected.  (|tr(U^H V)| = 2 characterizes
    proportionality of unitaries.)
    """
    for a in range(len(S)):
        for b in range(a + 1, len(S)):
            if abs(np.trace(S[a].conj().T @ S[b])) >= 2.0 - _MEMBER_TOL:
                raise ProportionalElements(
                    f"elements {a} and {b} are proportional and share normalizations"
                )
    closure = []
    pairing = []
    for U in S:
        plus, minus = normalize_to_su2(U)
        k = len(closure)
        closure += [plus, minus]
        pairing += [k + 1, k]
    return Su2Closure(S, tuple(closure), tuple(pairing))


@dataclass(frozen=True)
class GroupProfile:
    is_group: bool
    order_histogram: dict
    center_size: int
    cosets: tuple | None
    semidirect_check: bool


def _find(stack: np.ndarray, M: np.ndarray, tol: float = _MEMBER_TOL) -> int:
    d = np.linalg.norm(stack - M, axis=(1, 2))
    k = int(np.argmin(d))
    return k if d[k] <= tol else -1


def _element_order(U: np.ndarray, tol: float = _MEMBER_TOL) -> int:
    """Smallest k >= 1 with U^k = 1, or 0 if none up to the probe cap."""
    P = U.copy()
    eye = np.eye(U.shape[0])
    for k in range(1, _ORDER_CAP + 1):
        if hs_norm(P - eye) <= tol:
            return k
        P = P @ U
    return 0


# the exact lattice elements whose subsets are the candidate normal subgroups
_LATTICE = {
    "1": np.eye(2, dtype=complex),
    "-1": -np.eye(2, dtype=complex),
    "I": np.array([[0.0, -1.0j], [-1.0j, 0.0]]),
    "-I": np.array([[0.0, 1.0j], [1.0j, 0.0]]),
    "J": np.array([[0.0, -1.0], [1.0, 0.0]], dtype=complex),
    "-J": np.array([[0.0, 1.0], [-1.0, 0.0]], dtype=complex),
    "K": np.array([[-1.0j, 0.0], [0.0, 1.0j]]),
    "-K": np.array([[1.0j, 0.0], [0.0, -1.0j]]),
}

_CANDIDATE_SUBGROUPS = (
    ("1", "-1", "I", "-I", "J", "-J", "K", "-K"),  # quaternion group Q8
    ("1", "-1", "I", "-I"),
    ("1", "-1", "J", "-J"),
    ("1", "-1", "K", "-K"),
    ("1", "-1"),
)


def group_profile(C: Su2Closure, tol: float = _MEMBER_TOL) -> GroupProfile:
    """Multiplicative structure of a closure: closure-under-product verdict,
    element orders, center size, coset split by the largest proper normal
    subgroup among the quaternion-unit subgroups, and whether that subgroup
    admits a cyclic complement (an inner semidirect decomposition)."""
    G = list(C.closure)
    n = len(G)
    stack = np.stack(G)
    prod = np.full((n, n), -1, dtype=int)
    is_group = True
    for a in range(n):
        for b in range(n):
            prod[a, b] = _find(stack, G[a] @ G[b], tol)
            if prod[a, b] < 0:
                is_group = False

    histogram: dict = {}
    for U in G:
        k = _element_order(U, tol)
        histogram[k] = histogram.get(k, 0) + 1

    center = 0
    for a in range(n):
        if all(hs_norm(G[a] @ G[b] - G[b] @ G[a]) <= tol for b in range(n)):
            center += 1

    cosets = None
    semidirect = False
    if is_group:
        normal = None
        for names in _CANDIDATE_SUBGROUPS:
            idx = [_find(stack, _LATTICE[nm], tol) for nm in names]
            if any(k < 0 for k in idx) or len(idx) >= n:
                continue
            members = set(idx)
            if all(
                prod[g, h] >= 0 and prod[prod[g, h], _inverse(prod, g)] in members
                for g in range(n)
                for h in members
            ):
                normal = idx
                break
        if normal is not None:
            members = set(normal)
            seen = set()
            parts = []
            for r in range(n):
                if r in seen:
                    continue
                coset = tuple(sorted(int(prod[r, h]) for h in members))
                parts.append(coset)
                seen.update(coset)
            cosets = tuple(parts)
            semidirect = _has_cyclic_complement(prod, members, n)
    return GroupProfile(is_group, histogram, center, cosets, semidirect)


def _inverse(prod: np.ndarray, g: int) -> int:
    """Index of g^-1 in the multiplication table (identity is prod[e,e]=e)."""
    n = prod.shape[0]
    e = next(k for k in range(n) if prod[k, k] == k and all(prod[k, b] == b for b in range(n)))
    return next(h for h in range(n) if prod[g, h] == e)


def _has_cyclic_complement(prod: np.ndarray, members: set, n: int) -> bool:
    if n % len(members) != 0:
        return False
    want = n // len(members)
    e = next(k for k in range(n) if all(prod[k, b] == b for b in range(n)))
    for g in range(n):
        powers = [e]
        cur = g
        while cur != e and len(powers) <= want:
            powers.append(cur)
            cur = prod[cur, g]
        if cur != e or len(powers) != want:
            continue
        if set(powers) & members != {e}:
            continue
        covered = {prod[h, k] for h in members for k in powers}
        if len(covered) == n:
            return True
    return False


@dataclass(frozen=True)
class PolytopeId:
    kind: str
    distance_spectrum: tuple  # ((chord, multiplicity), ...) per vertex


_SQ2, _SQ3 = math.sqrt(2.0), math.sqrt(3.0)

_TEMPLATES = (
    ("16-cell", 8, ((_SQ2, 6), (2.0, 1))),
    ("tesseract", 16, ((1.0, 4), (_SQ2, 6), (_SQ3, 4), (2.0, 1))),
    ("24-cell", 24, ((1.0, 8), (_SQ2, 6), (_SQ3, 8), (2.0, 1))),
    ("hexagon", 6, ((1.0, 2), (_SQ3, 2), (2.0, 1))),
    ("tetrahedron-pair", 8, ((1.0, 3), (_SQ2, 3), (_SQ3, 1))),
)


def _expand(template) -> np.ndarray:
    vals = []
    for chord, mult in template:
        vals.extend([chord] * mult)
    return np.array(sorted(vals))


def polytope_identify(points, tol: float = 1e-9) -> PolytopeId:
    """Recognize a point set on the unit 3-sphere by its chord spectrum.

    Each stored template is the sorted multiset of distances seen from any
    one vertex; a set matches when every vertex sees exactly that multiset.
    Sets matching no template are reported as kind "other" with the spectrum
    of their first vertex.
    """
    P = np.asarray(points, dtype=float)
    if P.ndim != 2 or P.shape[1] != 4:
        raise NonUnitPoint(f"expected an (n, 4) array of quaternions, got {P.shape}")
    norms = np.linalg.norm(P, axis=1)
    bad = np.flatnonzero(np.abs(norms - 1.0) > tol)
    if bad.size:
        raise NonUnitPoint(f"point {bad[0]} has norm {norms[bad[0]]!r}")
    n = P.shape[0]
    dists = np.linalg.norm(P[:, None, :] - P[None, :, :], axis=2)
    rows = np.sort(dists, axis=1)[:, 1:]  # drop each vertex's zero self-distance
    for kind, size, template in _TEMPLATES:
        if n != size:
            continue
        want = _expand(template)
        if np.all(np.abs(rows - want[None, :]) <= tol):
            return PolytopeId(kind, template)
    spectrum = _spectrum_of(rows[0], tol) if n > 1 else ()
    return PolytopeId("other", spectrum)


def _spectrum_of(row: np.ndarray, tol: float) -> tuple:
    out = []
    for d in row:
        if out and abs(d - out[-1][0]) <= tol:
            out[-1] = (out[-1][0], out[-1][1] + 1)
        else:
            out.append((float(d), 1))
    return tuple(out)


def demitesseract_class(q, tol: float = 1e-9) -> str:
    """Which translate-coset a half-integer quaternion belongs to.

    The sixteen points with all coordinates +-1/2 split into the translates
    of the quaternion units by the axis-cycle generator and by its inverse;
    the sign of the coordinate product separates them ("W" for positive,
    "W*" for negative).  Antipodal points always land together.
    """
    vals = [float(v) for v in q]
    if len(vals) != 4 or any(abs(abs(v) - 0.5) > tol for v in vals):
        raise NotHalfInteger(f"expected all coordinates +-1/2, got {vals}")
    product = vals[0] * vals[1] * vals[2] * vals[3]
    return "W" if product > 0 else "W*"


def so3_image_table(C: Su2Closure) -> list[AxisAngle]:
    """Axis-angle of the covering rotation, one per antipodal pair,
    evaluated on the canonical representative of each pair."""
    return [axis_angle_of(U) for U in C.representatives()]


def snap(x: float, candidates, tol: float = 1e-12):
    """Replace x by the unique candidate within tol, if any."""
    for c in candidates:
        if abs(x - c) <= tol:
            return c
    return x


# the values that actually occur in the closure table, exact
_QUATERNION_VALUES = (0.0, 0.5, -0.5, 1.0, -1.0)
_ROTATION_VALUES = (
    0.0,
    math.pi,
    2.0 * math.pi / (3.0 * math.sqrt(3.0)),
    -2.0 * math.pi / (3.0 * math.sqrt(3.0)),
)
_PAULI_COEFF_VALUES = (0.0, 1.0, -1.0, 2.0, -2.0)


@dataclass(frozen=True)
class ClosureTableRow:
    """One element of the binary tetrahedral closure in all four pictures."""

    label: str
    pauli: tuple  # c with U = (c0*1 + c1*X + c2*Y + c3*Z) / 2
    quaternion: tuple
    rotation: tuple  # angle * axis of the covering rotation (shared by +-U)


def axis_cycle_closure_table() -> list[ClosureTableRow]:
    """All 24 elements of the closed quaternion-unit completion, row per
    signed element, with coordinates snapped to their exact values."""
    from .designs import named_design
    from .qubit import pauli
    from .linalg import hs_inner

    base = named_design("D0")
    rows = []
    for U, name in zip(base.set.elems, base.set.labels):
        for sign, tag in ((1.0, "+"), (-1.0, "-")):
            E = sign * U
            coeff = tuple(
                complex(
                    snap(hs_inner(pauli(mu), E).real, _PAULI_COEFF_VALUES),
                    snap(hs_inner(pauli(mu), E).imag, _PAULI_COEFF_VALUES),
                )
                for mu in range(4)
            )
            q = tuple(snap(v, _QUATERNION_VALUES) for v in quaternion_of(E))
            rot = tuple(snap(v, _ROTATION_VALUES) for v in axis_angle_of(E).vector())
            rows.append(ClosureTableRow(tag + name, coeff, q, rot))
    return rows
