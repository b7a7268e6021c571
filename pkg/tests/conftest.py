import numpy as np
import pytest

from graphprod.graph import Graph, complete_graph, cycle_graph, star_graph


def _parse(block: str) -> np.ndarray:
    return np.array([[int(t) for t in row.replace("|", " ").split()]
                     for row in block.strip().splitlines() if row.strip() and "-" not in row])


# Printed matrices of the two-factor worked example (4-node star G, triangle H).
EXAMPLE_A_G = _parse("""
0 1 0 0
1 0 1 1
0 1 0 0
0 1 0 0
""")

EXAMPLE_A_H = _parse("""
0 1 1
1 0 1
1 1 0
""")

EXAMPLE_CARTESIAN = _parse("""
0 1 1 | 1 0 0 | 0 0 0 | 0 0 0
1 0 1 | 0 1 0 | 0 0 0 | 0 0 0
1 1 0 | 0 0 1 | 0 0 0 | 0 0 0
1 0 0 | 0 1 1 | 1 0 0 | 1 0 0
0 1 0 | 1 0 1 | 0 1 0 | 0 1 0
0 0 1 | 1 1 0 | 0 0 1 | 0 0 1
0 0 0 | 1 0 0 | 0 1 1 | 0 0 0
0 0 0 | 0 1 0 | 1 0 1 | 0 0 0
0 0 0 | 0 0 1 | 1 1 0 | 0 0 0
0 0 0 | 1 0 0 | 0 0 0 | 0 1 1
0 0 0 | 0 1 0 | 0 0 0 | 1 0 1
0 0 0 | 0 0 1 | 0 0 0 | 1 1 0
""")

EXAMPLE_DIRECT = _parse("""
0 0 0 | 0 1 1 | 0 0 0 | 0 0 0
0 0 0 | 1 0 1 | 0 0 0 | 0 0 0
0 0 0 | 1 1 0 | 0 0 0 | 0 0 0
0 1 1 | 0 0 0 | 0 1 1 | 0 1 1
1 0 1 | 0 0 0 | 1 0 1 | 1 0 1
1 1 0 | 0 0 0 | 1 1 0 | 1 1 0
0 0 0 | 0 1 1 | 0 0 0 | 0 0 0
0 0 0 | 1 0 1 | 0 0 0 | 0 0 0
0 0 0 | 1 1 0 | 0 0 0 | 0 0 0
0 0 0 | 0 1 1 | 0 0 0 | 0 0 0
0 0 0 | 1 0 1 | 0 0 0 | 0 0 0
0 0 0 | 1 1 0 | 0 0 0 | 0 0 0
""")

EXAMPLE_STRONG = _parse("""
0 1 1 | 1 1 1 | 0 0 0 | 0 0 0
1 0 1 | 1 1 1 | 0 0 0 | 0 0 0
1 1 0 | 1 1 1 | 0 0 0 | 0 0 0
1 1 1 | 0 1 1 | 1 1 1 | 1 1 1
1 1 1 | 1 0 1 | 1 1 1 | 1 1 1
1 1 1 | 1 1 0 | 1 1 1 | 1 1 1
0 0 0 | 1 1 1 | 0 1 1 | 0 0 0
0 0 0 | 1 1 1 | 1 0 1 | 0 0 0
0 0 0 | 1 1 1 | 1 1 0 | 0 0 0
0 0 0 | 1 1 1 | 0 0 0 | 0 1 1
0 0 0 | 1 1 1 | 0 0 0 | 1 0 1
0 0 0 | 1 1 1 | 0 0 0 | 1 1 0
""")

EXAMPLE_PRODUCTS = {"cartesian": EXAMPLE_CARTESIAN, "direct": EXAMPLE_DIRECT, "strong": EXAMPLE_STRONG}

# Exact values from characteristic polynomials (sympy, matrices built from the
# node-adjacency rules, not from Kronecker products).
SQ3 = np.sqrt(3.0)
STAR_K3_CARTESIAN_ADJ = sorted([-SQ3 - 1] * 2 + [2 - SQ3] + [-1] * 4 + [2] * 2 + [SQ3 - 1] * 2
                               + [SQ3 + 2])
STAR_K3_DIRECT_ADJ = sorted([-2 * SQ3] + [-SQ3] * 2 + [0] * 6 + [SQ3] * 2 + [2 * SQ3])
SQ7 = np.sqrt(7.0)
STAR_K3_DIRECT_LAP = [0] + [4 - SQ7] * 2 + [2] * 6 + [4 + SQ7] * 2 + [8]
C4_K3_DIRECT_LAP = [0, 2, 2, 4, 4, 4, 4, 4, 4, 6, 6, 8]
C4_K3_STRONG_LAP = [0, 6, 6, 9, 9, 9, 9, 9, 9, 9, 9, 12]
C4_K3_CARTESIAN_LAP = [0, 2, 2, 3, 3, 4, 5, 5, 5, 5, 7, 7]
STAR_K3_CARTESIAN_LAP = [0, 1, 1, 3, 3, 4, 4, 4, 4, 4, 7, 7]


@pytest.fixture
def example_g() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)])


@pytest.fixture
def example_h() -> Graph:
    return complete_graph(3)


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture
def star4() -> Graph:
    return star_graph(4, center=1)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
