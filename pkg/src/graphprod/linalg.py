"""Dense symmetric eigendecomposition and vector statistics.

Two solvers share one contract. ``eig_symmetric`` defaults to LAPACK's
divide-and-conquer driver (through numpy) and then verifies residuals and
orthonormality. ``method="jacobi"`` runs a cyclic Jacobi rotation solver that
has no code in common with LAPACK, so tests can use it as an oracle for the
default path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SYMMETRY_TOL = 1e-12
RESIDUAL_TOL = 1e-8
ORTHO_TOL = 1e-8
NORM_TOL = 1e-10
JACOBI_MAX_SWEEPS = 100


class NumericalError(ArithmeticError):
    """A solver failed to converge or its output violated the accuracy contract."""

    def __init__(self, message: str, iterations: int | None = None):
        self.iterations = iterations
        super().__init__(message)


class UndefinedCorrelationError(ValueError):
    """Correlation requested for a (numerically) constant vector."""


@dataclass(frozen=True)
class EigenPairs:
    """Ascending eigenvalues and matching unit eigenvectors.

    ``vectors[:, k]`` pairs with ``values[k]``, the column layout numpy and
    LAPACK use. ``vector(k)`` returns one column.
    """

    values: np.ndarray
    vectors: np.ndarray

    def vector(self, k: int) -> np.ndarray:
        return self.vectors[:, k]

    def __len__(self) -> int:
        return len(self.values)


def _check_symmetric(m) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.size and np.max(np.abs(m - m.T)) > SYMMETRY_TOL:
        raise ValueError("matrix is not symmetric within 1e-12")
    return m


def _jacobi(m: np.ndarray, max_sweeps: int = JACOBI_MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    a = m.copy()
    n = a.shape[0]
    v = np.eye(n)
    scale = max(1.0, np.linalg.norm(a))
    for sweep in range(max_sweeps):
        off = np.sqrt(np.sum(np.triu(a, 1) ** 2))
        if off <= 1e-15 * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = np.copysign(1.0, theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^T A J applied to rows/columns p and q
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap = a[p, :].copy()
                aq = a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        off = np.sqrt(np.sum(np.triu(a, 1) ** 2))
        if off > 1e-15 * scale:
            raise NumericalError(
                f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal norm {off:.3e})",
                iterations=max_sweeps,
            )
    return np.diag(a).copy(), v


def eig_symmetric(m, method: str = "lapack") -> EigenPairs:
    """Eigendecomposition of a real symmetric matrix.

    Parameters
    ----------
    m : array_like
        Square matrix, symmetric within 1e-12.
    method : {"lapack", "jacobi"}
        Solver. Jacobi is O(n^3) per sweep in pure Python loops; keep it to
        small matrices.

    Raises
    ------
    ValueError
        Non-square or asymmetric input.
    NumericalError
        Non-convergence, or a result that fails the residual/orthogonality check.
    """
    m = _check_symmetric(m)
    n = m.shape[0]
    if n == 0:
        return EigenPairs(np.zeros(0), np.zeros((0, 0)))
    if method == "lapack":
        try:
            values, vectors = np.linalg.eigh(m)
        except np.linalg.LinAlgError as exc:
            raise NumericalError(f"LAPACK eigh failed: {exc}") from exc
    elif method == "jacobi":
        values, vectors = _jacobi(m)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")

    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = vectors[:, order]

    bound = RESIDUAL_TOL * max(1.0, np.linalg.norm(m))
    residual = np.linalg.norm(m @ vectors - vectors * values, axis=0)
    if residual.max() > bound:
        raise NumericalError(f"eigenpair residual {residual.max():.3e} exceeds {bound:.3e}")
    gram = vectors.T @ vectors
    if np.max(np.abs(np.diag(gram) - 1.0)) > NORM_TOL:
        raise NumericalError("eigenvectors are not unit norm")
    np.fill_diagonal(gram, 0.0)
    if np.max(np.abs(gram)) > ORTHO_TOL:
        raise NumericalError("eigenvectors are not orthogonal")
    return EigenPairs(values, vectors)


def eigvals_symmetric(m) -> np.ndarray:
    """Ascending eigenvalues only (LAPACK, no vectors, no residual check)."""
    m = _check_symmetric(m)
    try:
        return np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"LAPACK eigvalsh failed: {exc}") from exc


def pearson_correlation(a, b, const_tol: float = 1e-10) -> float:
    """Pearson correlation of two equal-length vectors.

    A vector counts as constant when its spread (max - min) is at most
    ``const_tol * max(1, max|x|)``; rounding noise around an exact constant,
    such as a Laplacian applied to the all-equal vector, then qualifies.
    """
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.size} vs {b.size}")
    if a.size < 2:
        raise ValueError("need at least two entries")
    for x in (a, b):
        if np.ptp(x) <= const_tol * max(1.0, np.max(np.abs(x))):
            raise UndefinedCorrelationError("correlation undefined for a constant vector")
    da = a - a.mean()
    db = b - b.mean()
    r = float(da @ db / (np.linalg.norm(da) * np.linalg.norm(db)))
    return min(1.0, max(-1.0, r))
