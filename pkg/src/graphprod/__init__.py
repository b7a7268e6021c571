"""Graph products and estimated Laplacian spectra of direct and strong products."""

__version__ = "0.1.0"

from .estimator import OrderingMethod, apply_ordering, estimate_pipeline
from .exact import (
    adjacency_spectrum,
    compose_adjacency_spectrum,
    compose_cartesian_laplacian,
    compose_degree_spectrum,
    laplacian_spectrum,
)
from .graph import (
    Graph,
    Spectrum,
    SpectrumKind,
    adjacency_matrix,
    degree_spectrum,
    is_connected,
    laplacian_matrix,
    read_edgelist,
    write_edgelist,
)
from .linalg import EigenPairs, eig_symmetric, pearson_correlation
from .products import ProductKind, kron_product, kron_sum, product_graph
from .randgen import BAModel, ERModel, generate, parse_model

__all__ = [
    "BAModel", "ERModel", "EigenPairs", "Graph", "OrderingMethod", "ProductKind",
    "Spectrum", "SpectrumKind", "adjacency_matrix", "adjacency_spectrum", "apply_ordering",
    "compose_adjacency_spectrum", "compose_cartesian_laplacian", "compose_degree_spectrum",
    "degree_spectrum", "eig_symmetric", "estimate_pipeline", "generate", "is_connected",
    "kron_product", "kron_sum", "laplacian_matrix", "laplacian_spectrum", "parse_model",
    "pearson_correlation", "product_graph", "read_edgelist", "write_edgelist",
]
