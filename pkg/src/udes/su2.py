"""The SU(2) / SO(3) / quaternion triangle.

Conventions, fixed once and used everywhere:

* Euler angles:  U(alpha, beta, gamma) = exp(-i alpha Z/2) exp(-i beta Y/2)
  exp(-i gamma Z/2), with alpha in [0, 2pi), beta in [0, pi], gamma in [0, 4pi).
* Axis-angle:    exp(-i theta n.sigma / 2) = cos(theta/2) 1 - i sin(theta/2) n.sigma.
* Quaternions:   (s, x, y, z)  <->  s 1 - i (x X + y Y + z Z), so the unit
  3-sphere maps one-to-one onto SU(2) and multiplication is respected.
* Covering map:  so3_rep(U)[i, j] = tr(X_i U X_j U^H) / 2, two-to-one with
  kernel {1, -1}; it is blind to phases, so it accepts any U(2) element.

The canonical representative of an antipodal pair {U, -U} is the one whose
quaternion has its first nonzero coordinate positive, reading (s, x, y, z).
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import (
    NonUnitAxis,
    NonUnitQuaternion,
    NotRotation,
    NotSpecialUnitary,
)
from .linalg import as_matrix, assert_unitary, hs_norm

_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
_SIGMA = (_X, _Y, _Z)

#: cyclic coordinate shift e_i -> e_{i+1 mod 3}; the rotation image of the
#: completion generator (axis (1,1,1)/sqrt(3), angle 2pi/3)
SHIFT_RIGHT = np.array([[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
#: inverse cyclic shift e_i -> e_{i-1 mod 3}
SHIFT_LEFT = SHIFT_RIGHT.T.copy()

_RANGE_EPS = 1e-12


class EulerAngles(NamedTuple):
    alpha: float
    beta: float
    gamma: float


class AxisAngle(NamedTuple):
    """A rotation as unit axis plus angle; `vector` packs them as angle*axis."""

    axis: tuple[float, float, float]
    angle: float

    def vector(self) -> np.ndarray:
        return self.angle * np.asarray(self.axis, dtype=float)


class Quaternion(NamedTuple):
    s: float
    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array(self, dtype=float)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.s, -self.x, -self.y, -self.z)


def _euler_args(alpha, beta, gamma) -> EulerAngles:
    """Accept either three angles or a single EulerAngles-like triple."""
    if beta is None and gamma is None:
        alpha, beta, gamma = alpha
    e = EulerAngles(float(alpha), float(beta), float(gamma))
    if not (-_RANGE_EPS <= e.alpha < 2 * math.pi + _RANGE_EPS):
        raise ValueError(f"alpha={e.alpha} outside [0, 2pi)")
    if not (-_RANGE_EPS <= e.beta <= math.pi + _RANGE_EPS):
        raise ValueError(f"beta={e.beta} outside [0, pi]")
    if not (-_RANGE_EPS <= e.gamma < 4 * math.pi + _RANGE_EPS):
        raise ValueError(f"gamma={e.gamma} outside [0, 4pi)")
    return e


def _axis_angle_args(axis, angle) -> tuple[np.ndarray, float]:
    """Accept (axis, angle) or a single AxisAngle-like pair; axis must be unit."""
    if angle is None:
        axis, angle = axis
    n = np.asarray(axis, dtype=float).reshape(3)
    if abs(np.linalg.norm(n) - 1.0) > 1e-12:
        raise NonUnitAxis(f"axis has norm {np.linalg.norm(n)!r}, expected 1")
    return n, float(angle)


def su2_from_euler(alpha, beta: float | None = None, gamma: float | None = None) -> np.ndarray:
    """exp(-i alpha Z/2) exp(-i beta Y/2) exp(-i gamma Z/2), in closed form."""
    alpha, beta, gamma = _euler_args(alpha, beta, gamma)
    c, s = math.cos(beta / 2), math.sin(beta / 2)
    ep = complex(math.cos((alpha + gamma) / 2), -math.sin((alpha + gamma) / 2))
    em = complex(math.cos((alpha - gamma) / 2), -math.sin((alpha - gamma) / 2))
    return np.array([[ep * c, -em * s], [np.conj(em) * s, np.conj(ep) * c]])


def shift_euler_solutions() -> list[EulerAngles]:
    """The four Euler triples whose two-qubit Bell-basis matrix has a phased
    cyclic shift as its triplet block.

    Within the standard ranges the solutions are exactly
    alpha in {0, pi}, beta = pi/2, gamma in {pi/2, 5pi/2}.  The first entry,
    (0, pi/2, pi/2), is the order-6 completion generator used as the default
    throughout; (0, pi/2, 5pi/2) is its negative (order 3).
    """
    h = math.pi / 2
    return [
        EulerAngles(0.0, h, h),
        EulerAngles(0.0, h, 5 * h),
        EulerAngles(math.pi, h, h),
        EulerAngles(math.pi, h, 5 * h),
    ]


def su2_from_axis_angle(axis, angle: float | None = None) -> np.ndarray:
    """cos(theta/2) 1 - i sin(theta/2) (n_x X + n_y Y + n_z Z)."""
    n, angle = _axis_angle_args(axis, angle)
    half = angle / 2
    ndots = n[0] * _X + n[1] * _Y + n[2] * _Z
    return math.cos(half) * np.eye(2, dtype=complex) - 1j * math.sin(half) * ndots


def so3_rep(U) -> np.ndarray:
    """The rotation carried by a 2x2 unitary: R[i,j] = tr(X_i U X_j U^H)/2.

    Insensitive to a global phase of U, hence defined on all of U(2);
    antipodal special unitaries have the same image.
    """
    U = assert_unitary(as_matrix(U, 2))
    Uh = U.conj().T
    R = np.empty((3, 3))
    conj = [U @ s @ Uh for s in _SIGMA]
    for i in range(3):
        for j in range(3):
            R[i, j] = 0.5 * np.trace(_SIGMA[i] @ conj[j]).real
    return R


def rodrigues(axis, angle: float | None = None) -> np.ndarray:
    """Rotation matrix about a unit axis: x -> (x.n)n + cos(phi)(x - (x.n)n) + sin(phi) n x x."""
    n, angle = _axis_angle_args(axis, angle)
    c, s = math.cos(angle), math.sin(angle)
    cross = np.array([[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]])
    return c * np.eye(3) + (1 - c) * np.outer(n, n) + s * cross


def assert_rotation(R, tol: float = 1e-10) -> np.ndarray:
    """Validate orthogonality and det = +1."""
    R = np.asarray(R, dtype=float)
    if R.shape != (3, 3):
        raise NotRotation(f"expected 3x3, got {R.shape}")
    if hs_norm(R.T @ R - np.eye(3)) > tol:
        raise NotRotation("matrix is not orthogonal within tolerance")
    if abs(np.linalg.det(R) - 1.0) > tol:
        raise NotRotation(f"determinant {np.linalg.det(R)} != 1")
    return R


def quaternion_of(U, tol: float = 1e-10) -> Quaternion:
    """Coordinates (s, x, y, z) of a special unitary, U = s 1 - i (x,y,z).sigma."""
    U = assert_unitary(as_matrix(U, 2))
    det = U[0, 0] * U[1, 1] - U[0, 1] * U[1, 0]
    if abs(det - 1.0) > tol:
        raise NotSpecialUnitary(f"det = {det}, expected 1")
    s = 0.5 * (U[0, 0] + U[1, 1]).real
    x = -0.5 * (U[0, 1] + U[1, 0]).imag
    y = 0.5 * (U[1, 0] - U[0, 1]).real
    z = 0.5 * (U[1, 1] - U[0, 0]).imag
    return Quaternion(float(s), float(x), float(y), float(z))


def su2_of_quaternion(q, tol: float = 1e-10) -> np.ndarray:
    """Inverse of quaternion_of; q must be a unit quaternion."""
    s, x, y, z = (float(v) for v in q)
    norm2 = s * s + x * x + y * y + z * z
    if abs(norm2 - 1.0) > 2 * tol:
        raise NonUnitQuaternion(f"|q|^2 = {norm2}, expected 1")
    return np.array([[s - 1j * z, -y - 1j * x], [y - 1j * x, s + 1j * z]])


def canonical_su2(U, ztol: float = 1e-9) -> np.ndarray:
    """Of the antipodal pair {U, -U}, the one whose quaternion has its first
    nonzero coordinate positive, in the order (s, x, y, z)."""
    Ua = as_matrix(U, 2)
    q = quaternion_of(Ua)
    for v in q:
        if abs(v) > ztol:
            return -Ua if v < 0 else Ua
    raise NotSpecialUnitary("zero quaternion cannot come from a unitary")


def su2_from_rotation(R, tol: float = 1e-10) -> tuple[np.ndarray, np.ndarray]:
    """Both special unitaries covering a rotation, canonical one first.

    Quaternion extraction picks the largest of (trace, R00, R11, R22) as
    pivot, so the pi-rotations — where the naive trace formula degenerates —
    stay well-conditioned.
    """
    R = assert_rotation(R, tol)
    t = float(np.trace(R))
    d = np.diag(R)
    choice = int(np.argmax([t, d[0], d[1], d[2]]))
    if choice == 0:
        r = math.sqrt(1.0 + t)
        s = 0.5 * r
        x = (R[2, 1] - R[1, 2]) / (2 * r)
        y = (R[0, 2] - R[2, 0]) / (2 * r)
        z = (R[1, 0] - R[0, 1]) / (2 * r)
    elif choice == 1:
        r = math.sqrt(1.0 + d[0] - d[1] - d[2])
        x = 0.5 * r
        s = (R[2, 1] - R[1, 2]) / (2 * r)
        y = (R[0, 1] + R[1, 0]) / (2 * r)
        z = (R[0, 2] + R[2, 0]) / (2 * r)
    elif choice == 2:
        r = math.sqrt(1.0 - d[0] + d[1] - d[2])
        y = 0.5 * r
        s = (R[0, 2] - R[2, 0]) / (2 * r)
        x = (R[0, 1] + R[1, 0]) / (2 * r)
        z = (R[1, 2] + R[2, 1]) / (2 * r)
    else:
        r = math.sqrt(1.0 - d[0] - d[1] + d[2])
        z = 0.5 * r
        s = (R[1, 0] - R[0, 1]) / (2 * r)
        x = (R[0, 2] + R[2, 0]) / (2 * r)
        y = (R[1, 2] + R[2, 1]) / (2 * r)
    norm = math.sqrt(s * s + x * x + y * y + z * z)
    U = canonical_su2(su2_of_quaternion((s / norm, x / norm, y / norm, z / norm)))
    return U, -U


def normalize_to_su2(U, ztol: float = 1e-9) -> tuple[np.ndarray, np.ndarray]:
    """The two determinant-1 phase shifts of a unitary, canonical one first.

    With omega the principal square root of det(U), the pair is
    {conj(omega) U, -conj(omega) U}; which of the two comes first depends
    only on the ray of U, not on its phase.
    """
    U = assert_unitary(as_matrix(U, 2))
    det = U[0, 0] * U[1, 1] - U[0, 1] * U[1, 0]
    omega = np.sqrt(complex(det))
    V = canonical_su2(np.conj(omega) * U, ztol)
    return V, -V


def axis_angle_of(U, ztol: float = 1e-9) -> AxisAngle:
    """Axis-angle of the rotation carried by a special unitary.

    Uses the canonical antipodal representative, so the angle lands in
    [0, pi] and antipodal inputs agree.  The identity rotation reports
    axis (0, 0, 1) and angle 0.
    """
    q = quaternion_of(canonical_su2(U, ztol))
    vec = np.array([q.x, q.y, q.z])
    vnorm = float(np.linalg.norm(vec))
    if vnorm <= ztol:
        return AxisAngle((0.0, 0.0, 1.0), 0.0)
    angle = 2.0 * math.atan2(vnorm, q.s)
    n = vec / vnorm + 0.0  # the +0.0 turns -0.0 components into +0.0
    return AxisAngle((float(n[0]), float(n[1]), float(n[2])), angle)
