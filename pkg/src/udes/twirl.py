"""Twirling channels over finite unitary sets, closed-form Haar twirl
oracles for one and two qubits, superoperator/Choi machinery, frame
potentials, and a deterministic Monte-Carlo Haar sampler.

Vectorization is column-stacking throughout: vec(A) = A.reshape(-1,
order="F"), so vec(M A M^H) = kron(conj(M), M) vec(A) and the standard
basis operator E(i, j) vectorizes to the unit vector at index j*D + i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, DuplicateElements, NotUnitary, UnsupportedOrder
from .linalg import EQ_TOL, RANK_TOL, as_matrix, assert_unitary, hs_dist, hs_inner, kron_power, rank
from .qubit import singlet_triplet

HAAR = "haar"

_FRAME_POTENTIAL_HAAR = {1: 1.0, 2: 2.0}  # Haar values for U(2)


class UnitarySet:
    """An ordered, duplicate-free, finite set of same-dimension unitaries.

    Elements are validated on construction: each must be unitary within
    `tol`, and no two may coincide in Hilbert-Schmidt distance.  Proportional
    elements (equal up to phase) are allowed here; operations that need
    phase-distinctness check for it themselves.
    """

    def __init__(self, elems, labels=None, tol: float = EQ_TOL):
        mats = [as_matrix(m) for m in elems]
        if not mats:
            raise ValueError("a unitary set must be nonempty")
        d = mats[0].shape[0]
        for k, m in enumerate(mats):
            if m.shape[0] != d:
                raise DimensionMismatch(f"element {k} is {m.shape[0]}x{m.shape[0]}, expected {d}x{d}")
            try:
                assert_unitary(m, tol)
            except NotUnitary as exc:
                raise NotUnitary(f"element {k}: {exc}") from None
        for a in range(len(mats)):
            for b in range(a + 1, len(mats)):
                if hs_dist(mats[a], mats[b]) <= tol:
                    raise DuplicateElements(f"elements {a} and {b} coincide within {tol}")
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != len(mats):
                raise ValueError(f"{len(labels)} labels for {len(mats)} elements")
        self.dim = d
        self.elems = tuple(m.copy() for m in mats)
        self.labels = labels

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __getitem__(self, k) -> np.ndarray:
        return self.elems[k]

    def __repr__(self) -> str:
        return f"UnitarySet(dim={self.dim}, n={len(self.elems)})"


@dataclass(frozen=True)
class SuperOp:
    """A linear map on operators, as a matrix acting on column-stacked vecs."""

    dim: int  # operator-space dimension, D*D for D x D operators
    matrix: np.ndarray


@dataclass(frozen=True)
class FramePotentialReport:
    t: int
    value: float
    haar_value: float | None  # None when no exact reference is implemented
    gap: float | None

    def is_design(self, tol: float = 1e-10) -> bool:
        if self.gap is None:
            raise UnsupportedOrder(f"no Haar reference for t={self.t}")
        return self.gap <= tol


def vec(A) -> np.ndarray:
    """Column-stacking vectorization."""
    return np.asarray(A, dtype=complex).reshape(-1, order="F")


def unvec(v) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    D = math.isqrt(v.size)
    if D * D != v.size:
        raise DimensionMismatch(f"vector of length {v.size} is not a vec'd square matrix")
    return v.reshape(D, D, order="F")


def twirl_finite(S: UnitarySet, t: int, A) -> np.ndarray:
    """(1/N) sum_a U_a^{(x)t} A (U_a^H)^{(x)t} — the order-t twirl over S."""
    if t < 1:
        raise UnsupportedOrder(f"twirl order must be >= 1, got {t}")
    A = as_matrix(A, S.dim**t)
    out = np.zeros_like(A)
    for U in S:
        M = kron_power(U, t)
        out += M @ A @ M.conj().T
    return out / len(S)


def haar_twirl(t: int, A) -> np.ndarray:
    """The Haar-average twirl on qubits, in closed form.

    t = 1 is the completely depolarizing channel A -> tr(A) 1/2; t = 2
    projects onto the span of the singlet and triplet projectors,
    A -> <P_s, A> P_s + <P_t, A> P_t / 3.
    """
    if t == 1:
        A = as_matrix(A, 2)
        return np.trace(A) * np.eye(2, dtype=complex) / 2.0
    if t == 2:
        A = as_matrix(A, 4)
        P_s, P_t = singlet_triplet()
        return hs_inner(P_s, A) * P_s + hs_inner(P_t, A) * P_t / 3.0
    raise UnsupportedOrder(f"haar_twirl implements t in {{1, 2}}, got {t}")


def superop_of_twirl(source, t: int) -> SuperOp:
    """Matrix of the order-t twirl channel on vectorized operators.

    `source` is either a UnitarySet or the string "haar" for the exact
    Haar-average channel (t in {1, 2} only in that case).
    """
    if isinstance(source, str):
        if source != HAAR:
            raise ValueError(f"unknown twirl source {source!r}")
        if t == 1:
            half_eye = vec(np.eye(2, dtype=complex) / 2.0)
            return SuperOp(4, np.outer(half_eye, vec(np.eye(2)).conj()))
        if t == 2:
            P_s, P_t = singlet_triplet()
            vs, vt = vec(P_s), vec(P_t)
            return SuperOp(16, np.outer(vs, vs.conj()) + np.outer(vt, vt.conj()) / 3.0)
        raise UnsupportedOrder(f"haar superoperator implements t in {{1, 2}}, got {t}")
    if t < 1:
        raise UnsupportedOrder(f"twirl order must be >= 1, got {t}")
    D = source.dim**t
    M_sum = np.zeros((D * D, D * D), dtype=complex)
    for U in source:
        M = kron_power(U, t)
        M_sum += np.kron(M.conj(), M)
    return SuperOp(D * D, M_sum / len(source))


def choi(S: SuperOp) -> np.ndarray:
    """Choi matrix sum_ij E(i,j) (x) channel(E(i,j))."""
    D = math.isqrt(S.dim)
    if D * D != S.dim:
        raise DimensionMismatch(f"operator-space dimension {S.dim} is not a perfect square")
    C = np.zeros((S.dim, S.dim), dtype=complex)
    for i in range(D):
        for j in range(D):
            image = unvec(S.matrix[:, j * D + i])
            C[i * D : (i + 1) * D, j * D : (j + 1) * D] = image
    return C


def choi_rank(S: SuperOp, tol: float = RANK_TOL) -> int:
    return rank(choi(S), tol)


def frame_potential(S: UnitarySet, t: int) -> FramePotentialReport:
    """(1/N^2) sum_{a,b} |tr(U_a^H U_b)|^(2t), with the U(2) Haar reference
    for t in {1, 2}; the reference (and the gap) is None for other orders."""
    if t < 1:
        raise UnsupportedOrder(f"frame potential order must be >= 1, got {t}")
    M = np.stack(S.elems)
    gram = np.einsum("aij,bij->ab", M.conj(), M)
    value = float(np.mean(np.abs(gram) ** (2 * t)))
    haar_value = _FRAME_POTENTIAL_HAAR.get(t)
    gap = None if haar_value is None else value - haar_value
    return FramePotentialReport(t, value, haar_value, gap)


# --------------------------------------------------------------------------
# deterministic Haar sampling on SU(2)


@dataclass
class HaarSampler:
    """Deterministic Haar-uniform SU(2) stream.

    The state is (seed, counter) where `counter` indexes quaternions drawn
    so far; any (seed, counter) pair reproduces the identical continuation,
    and bulk draws agree bitwise with repeated single draws.  Not for
    concurrent mutation — give each thread its own sampler.
    """

    seed: int
    counter: int = 0

    def quaternions(self, n: int) -> np.ndarray:
        """Draw n uniform points of S^3 as an (n, 4) array, advancing the state."""
        if n < 1:
            raise ValueError("need n >= 1")
        # Each quaternion consumes one 128-bit counter block (four doubles),
        # so jumping the block counter by `counter` replays the stream tail.
        bits = np.random.Philox(key=np.uint64(self.seed), counter=[self.counter, 0, 0, 0])
        u = np.random.Generator(bits).random((n, 4))
        self.counter += n
        r1 = np.sqrt(-2.0 * np.log1p(-u[:, 0]))
        r2 = np.sqrt(-2.0 * np.log1p(-u[:, 2]))
        a1 = 2.0 * np.pi * u[:, 1]
        a2 = 2.0 * np.pi * u[:, 3]
        g = np.stack([r1 * np.cos(a1), r1 * np.sin(a1), r2 * np.cos(a2), r2 * np.sin(a2)], axis=1)
        return g / np.linalg.norm(g, axis=1, keepdims=True)


def su2_batch(q) -> np.ndarray:
    """Map (n, 4) unit quaternions to an (n, 2, 2) stack of special unitaries."""
    q = np.asarray(q, dtype=float)
    s, x, y, z = q[:, 0], q[:, 1], q[:, 2], q[:, 3]
    U = np.empty((q.shape[0], 2, 2), dtype=complex)
    U[:, 0, 0] = s - 1j * z
    U[:, 0, 1] = -y - 1j * x
    U[:, 1, 0] = y - 1j * x
    U[:, 1, 1] = s + 1j * z
    return U


def haar_sample(h: HaarSampler) -> np.ndarray:
    """One Haar-distributed special unitary, advancing the sampler."""
    return su2_batch(h.quaternions(1))[0]


def _tensor_batch(U: np.ndarray, t: int) -> np.ndarray:
    if t == 1:
        return U
    M = U
    for _ in range(t - 1):
        n, a, _ = M.shape
        M = np.einsum("nab,ncd->nacbd", M, U).reshape(n, 2 * a, 2 * a)
    return M


@dataclass(frozen=True)
class MCTwirlEstimate:
    """Monte-Carlo twirl of one operator: sample mean plus the empirical
    standard error of that mean, aggregated over entries in the HS norm."""

    t: int
    n: int
    mean: np.ndarray
    std_error: float


def mc_haar_twirl(h: HaarSampler, t: int, A, n: int, chunk: int = 65536) -> MCTwirlEstimate:
    """(1/n) sum over Haar samples of U^{(x)t} A (U^H)^{(x)t}."""
    if t < 1 or n < 1:
        raise ValueError("need t >= 1 and n >= 1")
    D = 2**t
    A = as_matrix(A, D)
    total = np.zeros((D, D), dtype=complex)
    total_sq = np.zeros((D, D))
    left = n
    while left > 0:
        m = min(left, chunk)
        M = _tensor_batch(su2_batch(h.quaternions(m)), t)
        terms = np.einsum("nij,jk,nlk->nil", M, A, M.conj())
        total += terms.sum(axis=0)
        total_sq += (np.abs(terms) ** 2).sum(axis=0)
        left -= m
    mean = total / n
    entry_var = np.maximum(total_sq / n - np.abs(mean) ** 2, 0.0)
    return MCTwirlEstimate(t, n, mean, math.sqrt(float(entry_var.sum()) / n))


@dataclass(frozen=True)
class McOracleReport:
    """Per-basis-element comparison of the MC twirl against the exact oracle.

    For each standard basis operator E(i,j), `deviations[j*D+i]` is the
    Euclidean distance between the estimated and exact vectorized twirls and
    `std_errors[j*D+i]` the empirical standard error of the estimate.
    """

    t: int
    n: int
    seed: int
    deviations: np.ndarray
    std_errors: np.ndarray
    nsigma: float = 5.0

    @property
    def max_deviation(self) -> float:
        return float(self.deviations.max())

    @property
    def max_ratio(self) -> float:
        return float((self.deviations / self.std_errors).max())

    @property
    def ok(self) -> bool:
        return bool(np.all(self.deviations <= self.nsigma * self.std_errors))


def mc_oracle_check(
    h: HaarSampler, t: int, n: int, nsigma: float = 5.0, chunk: int = 65536
) -> McOracleReport:
    """Single-pass MC sweep of the twirl over the whole operator basis.

    Accumulates the empirical twirl superoperator (whose column j*D+i is the
    vectorized twirl of E(i,j)) together with entrywise second moments, then
    scores every basis element against the exact Haar oracle.
    """
    if t not in (1, 2):
        raise UnsupportedOrder(f"oracle check implements t in {{1, 2}}, got {t}")
    if n < 2:
        raise ValueError("need n >= 2 for a standard error")
    D = 2**t
    first = np.zeros((D * D, D * D), dtype=complex)
    second = np.zeros((D * D, D * D))
    seed = h.seed
    left = n
    while left > 0:
        m = min(left, chunk)
        M = _tensor_batch(su2_batch(h.quaternions(m)), t)
        # kron(conj(M), M)[(a,c),(b,d)] = conj(M)[a,b] M[c,d], whose squared
        # modulus is an entry of kron(|M|^2, |M|^2) — hence twin accumulators.
        first += np.einsum("nab,ncd->acbd", M.conj(), M).reshape(D * D, D * D)
        P = np.abs(M) ** 2
        second += np.einsum("nab,ncd->acbd", P, P).reshape(D * D, D * D)
        left -= m
    mean = first / n
    entry_var = np.maximum(second / n - np.abs(mean) ** 2, 0.0)
    oracle = np.zeros((D * D, D * D), dtype=complex)
    for i in range(D):
        for j in range(D):
            E = np.zeros((D, D), dtype=complex)
            E[i, j] = 1.0
            oracle[:, j * D + i] = vec(haar_twirl(t, E))
    deviations = np.linalg.norm(mean - oracle, axis=0)
    std_errors = np.sqrt(entry_var.sum(axis=0) / n)
    return McOracleReport(t, n, seed, deviations, std_errors, nsigma)
