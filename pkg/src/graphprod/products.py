"""Kronecker algebra and the Cartesian, direct and strong graph products.

Node ``(a, b)`` of a product of ``g`` and ``h`` is flattened to index
``a * h.node_count + b``, which is the block layout of ``np.kron``.
"""

from __future__ import annotations

import enum

import numpy as np

from .graph import Graph, adjacency_matrix


class ProductKind(str, enum.Enum):
    CARTESIAN = "cartesian"
    DIRECT = "direct"
    STRONG = "strong"


def kron_product(a, b) -> np.ndarray:
    return np.kron(np.asarray(a, dtype=float), np.asarray(b, dtype=float))


def kron_sum(a, b) -> np.ndarray:
    """``a ⊗ I + I ⊗ b`` for square ``a`` and ``b``."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    for name, m in (("a", a), ("b", b)):
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"kron_sum needs square matrices, {name} has shape {m.shape}")
    return np.kron(a, np.eye(b.shape[0])) + np.kron(np.eye(a.shape[0]), b)


def product_adjacency(kind: ProductKind | str, a_g, a_h) -> np.ndarray:
    kind = ProductKind(kind)
    if kind is ProductKind.CARTESIAN:
        return kron_sum(a_g, a_h)
    if kind is ProductKind.DIRECT:
        return kron_product(a_g, a_h)
    return kron_sum(a_g, a_h) + kron_product(a_g, a_h)


def graph_from_adjacency(a: np.ndarray) -> Graph:
    """Graph whose edges are the nonzero upper-triangle entries of ``a``."""
    rows, cols = np.nonzero(np.triu(a, 1))
    return Graph(a.shape[0], tuple(zip(rows.tolist(), cols.tolist())))


def product_graph(kind: ProductKind | str, g: Graph, h: Graph) -> Graph:
    a = product_adjacency(kind, adjacency_matrix(g), adjacency_matrix(h))
    return graph_from_adjacency(a)


def expected_edge_count(kind: ProductKind | str, g: Graph, h: Graph) -> int:
    kind = ProductKind(kind)
    cart = g.node_count * h.edge_count + h.node_count * g.edge_count
    direct = 2 * g.edge_count * h.edge_count
    return {ProductKind.CARTESIAN: cart, ProductKind.DIRECT: direct,
            ProductKind.STRONG: cart + direct}[kind]
