"""Simple undirected graphs, their matrices, and the edge-list file format."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import numpy as np

LAPLACIAN_ZERO_TOL = 1e-9


class GraphError(ValueError):
    """Invalid graph construction (bad endpoint, self-loop, duplicate edge)."""


class EdgeListError(GraphError):
    """Malformed edge-list file. ``line`` is the 1-based line number, if known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on nodes ``0 .. node_count - 1``.

    Edges are stored canonically as a sorted tuple of ``(u, v)`` with ``u < v``.
    Use :meth:`from_edges` to build one from arbitrary pairs; it rejects
    self-loops, out-of-range endpoints and duplicates.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.node_count < 1:
            raise GraphError(f"node_count must be positive, got {self.node_count}")
        prev = None
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.node_count):
                raise GraphError(f"edge {e} is not canonical or out of range")
            if prev is not None and e <= prev:
                raise GraphError("edges must be sorted and unique")
            prev = e

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop on node {u}")
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise GraphError(f"edge ({u}, {v}) out of range for {node_count} nodes")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        return cls(node_count, tuple(sorted(seen)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def relabel(self, perm: Iterable[int]) -> Graph:
        """Return the graph with node ``u`` renamed to ``perm[u]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.node_count)):
            raise GraphError("relabeling must be a permutation of the nodes")
        return Graph.from_edges(self.node_count, ((perm[u], perm[v]) for u, v in self.edges))


class SpectrumKind(str, enum.Enum):
    DEGREE = "degree"
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"


@dataclass(frozen=True)
class Spectrum:
    """Multiset of real values held as a read-only ascending array.

    Values are sorted on construction. The Laplacian invariants (smallest value
    zero, nothing negative) are not enforced here because estimated spectra may
    legitimately violate them; call :meth:`validate` on computed ones.
    """

    values: np.ndarray
    kind: SpectrumKind = field(default=SpectrumKind.LAPLACIAN)

    def __post_init__(self):
        vals = np.sort(np.asarray(self.values, dtype=float).ravel())
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "kind", SpectrumKind(self.kind))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values.tolist())

    def validate(self, tol: float = LAPLACIAN_ZERO_TOL) -> Spectrum:
        if self.kind is SpectrumKind.LAPLACIAN and len(self.values):
            if self.values[0] < -tol or abs(self.values[0]) > tol:
                raise ValueError(
                    f"Laplacian spectrum must start at 0, smallest value is {self.values[0]!r}"
                )
        return self

    def tolist(self) -> list[float]:
        return self.values.tolist()


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.node_count, g.node_count))
    if g.edges:
        idx = np.asarray(g.edges)
        a[idx[:, 0], idx[:, 1]] = 1.0
        a[idx[:, 1], idx[:, 0]] = 1.0
    return a


def degrees(g: Graph) -> np.ndarray:
    """Integer degree of every node, in node order."""
    deg = np.zeros(g.node_count, dtype=np.int64)
    if g.edges:
        idx = np.asarray(g.edges)
        np.add.at(deg, idx[:, 0], 1)
        np.add.at(deg, idx[:, 1], 1)
    return deg


def degree_spectrum(g: Graph) -> Spectrum:
    return Spectrum(degrees(g), SpectrumKind.DEGREE)


def laplacian_matrix(g: Graph) -> np.ndarray:
    a = adjacency_matrix(g)
    return np.diag(degrees(g).astype(float)) - a


def is_connected(g: Graph) -> bool:
    nbrs: list[list[int]] = [[] for _ in range(g.node_count)]
    for u, v in g.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in nbrs[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.node_count


# -- edge-list file format ---------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    """Parse the ``nodes N`` / ``u v`` edge-list format.

    Lines starting with ``#`` and blank lines are ignored. Duplicate and
    out-of-range edges are errors, reported with their line number.
    """
    node_count = None
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if node_count is None:
            if len(tokens) != 2 or tokens[0] != "nodes":
                raise EdgeListError("expected header 'nodes N'", lineno)
            try:
                node_count = int(tokens[1])
            except ValueError:
                raise EdgeListError(f"bad node count {tokens[1]!r}", lineno) from None
            if node_count < 1:
                raise EdgeListError("node count must be positive", lineno)
            continue
        if len(tokens) != 2:
            raise EdgeListError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListError(f"non-integer endpoint in {line!r}", lineno) from None
        if not (0 <= u < node_count and 0 <= v < node_count):
            raise EdgeListError(f"edge ({u}, {v}) out of range for {node_count} nodes", lineno)
        if u == v:
            raise EdgeListError(f"self-loop on node {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(f"duplicate edge {key}", lineno)
        seen.add(key)
    if node_count is None:
        raise EdgeListError("missing 'nodes N' header")
    return Graph(node_count, tuple(sorted(seen)))


def format_edgelist(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"nodes {g.node_count}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edgelist(path: str | Path) -> Graph:
    return parse_edgelist(Path(path).read_text(encoding="utf-8"))


def write_edgelist(g: Graph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_edgelist(g, comment), encoding="utf-8")


# -- small named graphs used throughout tests and examples ---------------------


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 nodes")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(n: int, center: int = 0) -> Graph:
    """Star on ``n`` nodes with the hub at ``center``."""
    return Graph.from_edges(n, [(center, i) for i in range(n) if i != center])
