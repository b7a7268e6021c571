"""Estimated Laplacian spectra of direct and strong product graphs.

The estimate pairs the factors' Laplacian eigenvalues with their degrees and
evaluates, for every ``(i, j)``::

    direct:  mu_g[i]*d_h[j] + d_g[i]*mu_h[j] - mu_g[i]*mu_h[j]
    strong:  mu_g[i] + mu_h[j] + (direct term)

Degrees are always ascending. How the eigenvalues are lined up against them is
chosen by an :class:`OrderingMethod`; ``CORRELATED`` (both ascending) is the
recommended one. The product matrix is never formed, so the cost is two factor
eigensolves plus an ``m*n`` sort.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .exact import laplacian_spectrum
from .graph import Graph, Spectrum, SpectrumKind, degree_spectrum, is_connected
from .products import ProductKind


class OrderingMethod(str, enum.Enum):
    UNCORRELATED = "uncorrelated"
    CORRELATED = "correlated"
    CORRELATED_RANDOMIZED = "correlated_randomized"
    ANTI_CORRELATED = "anti_correlated"
    ANTI_CORRELATED_RANDOMIZED = "anti_correlated_randomized"


JITTER_LOW, JITTER_HIGH = 0.9, 1.1


def apply_ordering(mu, method: OrderingMethod | str, seed=None) -> np.ndarray:
    """Permute eigenvalues ``mu`` according to ``method``.

    The randomized variants multiply each value by a draw from U[0.9, 1.1]
    and sort on that key, but return the original values in the new order.
    ``seed`` is anything :func:`numpy.random.default_rng` accepts and is only
    consumed by the random methods.
    """
    method = OrderingMethod(method)
    mu = np.asarray(getattr(mu, "values", mu), dtype=float)
    if method is OrderingMethod.CORRELATED:
        return np.sort(mu)
    if method is OrderingMethod.ANTI_CORRELATED:
        return np.sort(mu)[::-1].copy()
    rng = np.random.default_rng(seed)
    if method is OrderingMethod.UNCORRELATED:
        return rng.permutation(mu)
    key = mu * rng.uniform(JITTER_LOW, JITTER_HIGH, size=mu.size)
    order = np.argsort(key, kind="stable")
    if method is OrderingMethod.ANTI_CORRELATED_RANDOMIZED:
        order = order[::-1]
    return mu[order]


@dataclass(frozen=True)
class PairedFactorSpectra:
    """Factor degrees (ascending) lined up with already-ordered eigenvalues."""

    d_g: np.ndarray
    d_h: np.ndarray
    mu_g: np.ndarray
    mu_h: np.ndarray
    seed: int | None = None

    def __post_init__(self):
        for name in ("d_g", "d_h", "mu_g", "mu_h"):
            raw = getattr(self, name)
            object.__setattr__(self, name, np.asarray(getattr(raw, "values", raw), dtype=float))
        if self.d_g.size != self.mu_g.size or self.d_h.size != self.mu_h.size:
            raise ValueError("each factor needs as many degrees as eigenvalues")
        if np.any(np.diff(self.d_g) < 0) or np.any(np.diff(self.d_h) < 0):
            raise ValueError("degree sequences must be sorted ascending")

    @classmethod
    def from_spectra(cls, d_g, mu_g, d_h, mu_h, method=OrderingMethod.CORRELATED, seed=None):
        """Sort the degrees and apply ``method`` to each factor's eigenvalues.

        The two factors draw from independent child streams of ``seed``.
        """
        seed_g, seed_h = child_seeds(seed, 2)
        return cls(
            d_g=np.sort(np.asarray(getattr(d_g, "values", d_g), dtype=float)),
            d_h=np.sort(np.asarray(getattr(d_h, "values", d_h), dtype=float)),
            mu_g=apply_ordering(mu_g, method, seed_g),
            mu_h=apply_ordering(mu_h, method, seed_h),
            seed=seed,
        )


def child_seeds(seed, n: int) -> list[int]:
    """``n`` independent 64-bit seeds derived from ``seed`` via SeedSequence."""
    ss = np.random.SeedSequence(seed)
    return [int(s) for s in ss.generate_state(n, dtype=np.uint64)]


def _direct_terms(ps: PairedFactorSpectra) -> np.ndarray:
    mg = ps.mu_g[:, None]
    mh = ps.mu_h[None, :]
    return mg * ps.d_h[None, :] + ps.d_g[:, None] * mh - mg * mh


def estimate_direct_laplacian(ps: PairedFactorSpectra) -> Spectrum:
    return Spectrum(_direct_terms(ps).ravel(), SpectrumKind.LAPLACIAN)


def estimate_strong_laplacian(ps: PairedFactorSpectra) -> Spectrum:
    est = ps.mu_g[:, None] + ps.mu_h[None, :] + _direct_terms(ps)
    return Spectrum(est.ravel(), SpectrumKind.LAPLACIAN)


def estimate_from_spectra(kind, d_g, mu_g, d_h, mu_h,
                          method=OrderingMethod.CORRELATED, seed=None) -> Spectrum:
    kind = ProductKind(kind)
    if kind is ProductKind.CARTESIAN:
        raise ValueError(
            "the Cartesian product has an exact Laplacian spectrum; "
            "use exact.compose_cartesian_laplacian"
        )
    ps = PairedFactorSpectra.from_spectra(d_g, mu_g, d_h, mu_h, method, seed)
    if kind is ProductKind.DIRECT:
        return estimate_direct_laplacian(ps)
    return estimate_strong_laplacian(ps)


def factor_laplacian_spectrum(g: Graph) -> Spectrum:
    """Laplacian spectrum of a connected factor with its zero eigenvalue made exact.

    The solver returns the zero as rounding noise of order 1e-15; leaving it
    would put the same noise (scaled by degrees) into the estimate.
    """
    if not is_connected(g):
        raise ValueError("factor is not connected")
    vals = laplacian_spectrum(g).values.copy()
    vals[0] = 0.0
    return Spectrum(vals, SpectrumKind.LAPLACIAN)


def estimate_pipeline(kind, g: Graph, h: Graph,
                      method=OrderingMethod.CORRELATED, seed=None) -> Spectrum:
    """Estimate the Laplacian spectrum of ``g * h`` from the factors alone.

    Raises ``ValueError`` for the Cartesian kind or a disconnected factor.
    """
    if ProductKind(kind) is ProductKind.CARTESIAN:
        # fail before the eigensolves
        estimate_from_spectra(kind, [], [], [], [])
    for name, x in (("g", g), ("h", h)):
        if not is_connected(x):
            raise ValueError(f"factor {name} is not connected")
    return estimate_from_spectra(
        kind, degree_spectrum(g), factor_laplacian_spectrum(g),
        degree_spectrum(h), factor_laplacian_spectrum(h), method, seed,
    )
