"""Closed-form spectra of product graphs from the spectra of their factors.

Degree and adjacency spectra compose for all three products; the Laplacian
spectrum composes only for the Cartesian product. For direct and strong
products see :mod:`graphprod.estimator`.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, Spectrum, SpectrumKind, adjacency_matrix, laplacian_matrix
from .linalg import eigvals_symmetric
from .products import ProductKind


def adjacency_spectrum(g: Graph) -> Spectrum:
    return Spectrum(eigvals_symmetric(adjacency_matrix(g)), SpectrumKind.ADJACENCY)


def laplacian_spectrum(g: Graph) -> Spectrum:
    return Spectrum(eigvals_symmetric(laplacian_matrix(g)), SpectrumKind.LAPLACIAN)


def _combine(kind: ProductKind, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    s = x[:, None] + y[None, :]
    p = x[:, None] * y[None, :]
    if kind is ProductKind.CARTESIAN:
        return s.ravel()
    if kind is ProductKind.DIRECT:
        return p.ravel()
    return (s + p).ravel()


def _expect(spec: Spectrum, kind: SpectrumKind, name: str) -> None:
    if spec.kind is not kind:
        raise ValueError(f"{name} must be a {kind.value} spectrum, got {spec.kind.value}")


def compose_degree_spectrum(kind, d_g: Spectrum, d_h: Spectrum) -> Spectrum:
    _expect(d_g, SpectrumKind.DEGREE, "d_g")
    _expect(d_h, SpectrumKind.DEGREE, "d_h")
    # degrees are integral; combine as int64 so the result is exact
    x = np.rint(d_g.values).astype(np.int64)
    y = np.rint(d_h.values).astype(np.int64)
    return Spectrum(_combine(ProductKind(kind), x, y), SpectrumKind.DEGREE)


def compose_adjacency_spectrum(kind, lam_g: Spectrum, lam_h: Spectrum) -> Spectrum:
    _expect(lam_g, SpectrumKind.ADJACENCY, "lam_g")
    _expect(lam_h, SpectrumKind.ADJACENCY, "lam_h")
    return Spectrum(_combine(ProductKind(kind), lam_g.values, lam_h.values),
                    SpectrumKind.ADJACENCY)


def compose_cartesian_laplacian(mu_g: Spectrum, mu_h: Spectrum) -> Spectrum:
    _expect(mu_g, SpectrumKind.LAPLACIAN, "mu_g")
    _expect(mu_h, SpectrumKind.LAPLACIAN, "mu_h")
    return Spectrum(_combine(ProductKind.CARTESIAN, mu_g.values, mu_h.values),
                    SpectrumKind.LAPLACIAN)


def spectra_match(a, b, atol: float = 1e-8) -> bool:
    """Multiset equality: sort both, compare positionally within ``atol``."""
    a = np.sort(np.asarray(getattr(a, "values", a), dtype=float))
    b = np.sort(np.asarray(getattr(b, "values", b), dtype=float))
    return a.shape == b.shape and bool(np.all(np.abs(a - b) <= atol))
