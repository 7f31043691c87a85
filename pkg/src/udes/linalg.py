"""Dense complex linear algebra for small matrices.

Everything downstream works with square numpy arrays of complex128, at most
16x16.  This module fixes the conventions once: row-major tensor products,
the Hilbert-Schmidt inner product tr(A^H B), numerical rank by pivoted
elimination, and unitary change of basis T A T^H.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, NotUnitary

#: default tolerance for unitarity certification
UNITARITY_TOL = 1e-10
#: default relative pivot threshold for numerical rank
RANK_TOL = 1e-10
#: default tolerance for matrix equality in HS norm
EQ_TOL = 1e-10

MAX_DIM = 16


def as_matrix(a, dim: int | None = None) -> np.ndarray:
    """Coerce input to a square complex matrix and validate it.

    Rejects non-square shapes, non-finite entries, and (optionally) a
    dimension other than ``dim``.
    """
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_DIM:
        raise DimensionMismatch(f"dimension {m.shape[0]} exceeds the supported maximum {MAX_DIM}")
    if dim is not None and m.shape[0] != dim:
        raise DimensionMismatch(f"expected dimension {dim}, got {m.shape[0]}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise DimensionMismatch("matrix entries must be finite")
    return m


def kron(A, B) -> np.ndarray:
    """Tensor product with row-major index flattening (i,k) -> i*dim(B)+k.

    (A (x) B)[(i,k),(j,l)] = A[i,j] * B[k,l], which is exactly numpy's kron.
    """
    return np.kron(as_matrix(A), as_matrix(B))


def kron_power(A, t: int) -> np.ndarray:
    """t-fold tensor power of A (t >= 1)."""
    if t < 1:
        raise ValueError(f"tensor power needs t >= 1, got {t}")
    A = as_matrix(A)
    out = A
    for _ in range(t - 1):
        out = np.kron(out, A)
    return out


def hs_inner(A, B) -> complex:
    """Hilbert-Schmidt inner product tr(A^H B)."""
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"shapes differ: {A.shape} vs {B.shape}")
    # tr(A^H B) = sum of conj(A) * B entry-wise
    return complex(np.sum(np.conj(A) * B))


def hs_norm(A) -> float:
    """Hilbert-Schmidt (Frobenius) norm."""
    return float(np.linalg.norm(np.asarray(A, dtype=complex)))


def hs_dist(A, B) -> float:
    """HS distance ||A - B||."""
    return hs_norm(np.asarray(A, dtype=complex) - np.asarray(B, dtype=complex))


def rank(A, tol: float = RANK_TOL) -> int:
    """Numerical rank by Gaussian elimination with complete pivoting.

    A pivot counts as nonzero while its magnitude stays above
    ``tol * (largest pivot seen)``.  For the exact lattice-valued matrices
    this library produces, the pivot sequence separates cleanly by many
    orders of magnitude, so the threshold is uncritical.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = as_matrix(A).copy()
    n = m.shape[0]
    pivots: list[float] = []
    rows = list(range(n))
    cols = list(range(n))
    while rows and cols:
        sub = np.abs(m[np.ix_(rows, cols)])
        k = int(np.argmax(sub))
        ri, ci = divmod(k, len(cols))
        piv = sub[ri, ci]
        if piv == 0.0:
            break
        pivots.append(float(piv))
        r, c = rows.pop(ri), cols.pop(ci)
        for r2 in rows:
            m[r2, :] -= (m[r2, c] / m[r, c]) * m[r, :]
    if not pivots:
        return 0
    largest = max(pivots)
    return sum(1 for p in pivots if p >= tol * largest)


def assert_unitary(U, tol: float = UNITARITY_TOL, what: str = "matrix") -> np.ndarray:
    """Validate ||U^H U - 1||_HS <= tol and return U as an array."""
    U = as_matrix(U)
    defect = hs_norm(U.conj().T @ U - np.eye(U.shape[0]))
    if defect > tol:
        raise NotUnitary(f"{what} is not unitary: ||U^H U - 1|| = {defect:.3e} > {tol:.1e}")
    return U


def is_unitary(U, tol: float = UNITARITY_TOL) -> bool:
    try:
        assert_unitary(U, tol)
    except (NotUnitary, DimensionMismatch):
        return False
    return True


def change_of_basis(A, T) -> np.ndarray:
    """Conjugate A by the unitary T: returns T A T^H.

    If the columns of T^H are the new basis vectors expressed in the old one,
    the result is the matrix of A in the new basis.
    """
    A = as_matrix(A)
    T = assert_unitary(T, what="change-of-basis matrix")
    if A.shape != T.shape:
        raise DimensionMismatch(f"shapes differ: {A.shape} vs {T.shape}")
    return T @ A @ T.conj().T
