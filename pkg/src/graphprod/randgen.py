"""Seeded Erdős–Rényi G(n, M) and Barabási–Albert graph generators.

All randomness comes from numpy's PCG64 bit generator
(``numpy.random.default_rng(seed)``). A given ``(model, seed)`` yields the
same edge set on every run and platform that numpy supports.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .graph import Graph, is_connected

ER_MAX_RESAMPLES = 10_000


class GenerationError(RuntimeError):
    """The requested model could not produce a connected graph."""


class InfeasibleModelError(ValueError):
    """Model parameters admit no connected simple graph."""


@dataclass(frozen=True)
class ERModel:
    nodes: int
    edges: int

    def __post_init__(self):
        if self.nodes < 1:
            raise InfeasibleModelError("ER model needs at least one node")
        if self.edges > self.nodes * (self.nodes - 1) // 2:
            raise InfeasibleModelError(
                f"{self.edges} edges do not fit a simple graph on {self.nodes} nodes")
        if self.edges < self.nodes - 1:
            raise InfeasibleModelError(f"{self.edges} edges cannot connect {self.nodes} nodes")

    def __str__(self) -> str:
        return f"er:{self.nodes}:{self.edges}"


@dataclass(frozen=True)
class BAModel:
    nodes: int
    edges_per_node: int

    def __post_init__(self):
        if not 1 <= self.edges_per_node < self.nodes:
            raise InfeasibleModelError("BA model needs 1 <= edges_per_node < nodes")

    @property
    def edge_count(self) -> int:
        m, n = self.edges_per_node, self.nodes
        return m * (m + 1) // 2 + (n - m - 1) * m

    def __str__(self) -> str:
        return f"ba:{self.nodes}:{self.edges_per_node}"


GraphModel = ERModel | BAModel

_MODEL_RE = re.compile(r"^(er|ba):(\d+):(\d+)$")


def parse_model(spec: str) -> GraphModel:
    """Parse ``er:N:M`` or ``ba:N:m``."""
    match = _MODEL_RE.match(spec.strip().lower())
    if not match:
        raise ValueError(f"bad model {spec!r}; expected er:N:M or ba:N:m")
    name, a, b = match.group(1), int(match.group(2)), int(match.group(3))
    return ERModel(a, b) if name == "er" else BAModel(a, b)


def _pair_from_index(k: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    # row-major enumeration of the strict upper triangle
    iu, ju = np.triu_indices(n, 1)
    return iu[k], ju[k]


def _erdos_renyi(model: ERModel, rng: np.random.Generator) -> Graph:
    n, m = model.nodes, model.edges
    total = n * (n - 1) // 2
    for _ in range(ER_MAX_RESAMPLES):
        k = rng.choice(total, size=m, replace=False)
        u, v = _pair_from_index(k, n)
        g = Graph(n, tuple(sorted(zip(u.tolist(), v.tolist()))))
        if is_connected(g):
            return g
    raise GenerationError(
        f"{model} produced no connected graph in {ER_MAX_RESAMPLES} attempts"
    )


def _barabasi_albert(model: BAModel, rng: np.random.Generator) -> Graph:
    n, m = model.nodes, model.edges_per_node
    edges = [(i, j) for i in range(m + 1) for j in range(i + 1, m + 1)]
    deg = np.zeros(n)
    deg[: m + 1] = m
    for new in range(m + 1, n):
        p = deg[:new] / deg[:new].sum()
        targets = rng.choice(new, size=m, replace=False, p=p)
        for t in targets.tolist():
            edges.append((t, new))
            deg[t] += 1
        deg[new] = m
    return Graph(n, tuple(sorted(edges)))


def generate(model: GraphModel | str, seed) -> Graph:
    if isinstance(model, str):
        model = parse_model(model)
    rng = np.random.default_rng(seed)
    if isinstance(model, ERModel):
        return _erdos_renyi(model, rng)
    return _barabasi_albert(model, rng)
