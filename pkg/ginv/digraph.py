# ginv/digraph.py
"""D(A) and the structural predicates the formula and classification need.

Vertices are 1..n. Two vertices are *adjacent* when both directed edges exist
(a 2-cycle); a vertex is pendant when it lies on exactly one 2-cycle.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, List, Tuple

import networkx as nx

from ginv.errors import ClassViolation, DimensionMismatch, VertexOutOfRange
from ginv.linalg import RMatrix
from ginv.models import InputClass, StructureReport

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    n: int
    edges: FrozenSet[Edge]
    loops: FrozenSet[int] = frozenset()
    adjacency: Dict[int, FrozenSet[int]] = field(default_factory=dict, compare=False, hash=False)

    def neighbors(self, i: int) -> FrozenSet[int]:
        """N(i): vertices sharing a 2-cycle with i."""
        self._check_vertex(i)
        return self.adjacency[i]

    def _check_vertex(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise VertexOutOfRange(f"vertex {i} outside 1..{self.n}")

    @cached_property
    def simple_symmetric(self) -> bool:
        return not self.loops and all((j, i) in self.edges for (i, j) in self.edges)

    @cached_property
    def two_cycles(self) -> List[Edge]:
        return sorted((i, j) for (i, j) in self.edges if i < j and (j, i) in self.edges)

    @cached_property
    def pendants(self) -> FrozenSet[int]:
        return frozenset(i for i in range(1, self.n + 1) if len(self.adjacency[i]) == 1)

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edges)
        return g

    def underlying_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.two_cycles)
        return g


def build_digraph(a: RMatrix) -> Digraph:
    """D(A): (i, j) is an edge iff a_ij != 0, i != j; nonzero diagonal entries are loops."""
    if not a.is_square:
        raise DimensionMismatch(f"D(A) needs a square matrix, got {a.shape}")
    n = a.n_rows
    edges = set()
    loops = set()
    for i, j in a.nonzero_pattern():
        if i == j:
            loops.add(i)
        else:
            edges.add((i, j))
    adjacency = {i: frozenset() for i in range(1, n + 1)}
    for i, j in edges:
        if (j, i) in edges:
            adjacency[i] = adjacency[i] | {j}
    return Digraph(n=n, edges=frozenset(edges), loops=frozenset(loops), adjacency=adjacency)


def pendant_neighbors(d: Digraph, i: int) -> List[int]:
    """Pendant vertices adjacent to i, ascending."""
    return sorted(d.neighbors(i) & d.pendants)


def _star_center(d: Digraph) -> int:
    if not d.simple_symmetric or d.n < 2:
        return 0
    if len(d.two_cycles) != d.n - 1 or not nx.is_connected(d.underlying_graph()):
        return 0
    if d.n == 2:
        return 1
    centers = [i for i in range(1, d.n + 1) if len(d.adjacency[i]) == d.n - 1]
    return centers[0] if centers else 0


def analyze_structure(d: Digraph) -> StructureReport:
    simple = d.simple_symmetric
    strongly = nx.is_strongly_connected(d.to_networkx())
    pendants = sorted(d.pendants)
    nonpendants = sorted(set(range(1, d.n + 1)) - d.pendants)
    pn = {i: pendant_neighbors(d, i) for i in nonpendants}

    in_class_d = simple and all(pn[i] for i in nonpendants)
    center = _star_center(d)
    is_star = in_class_d and center > 0
    # n = 2 is reported as a star only, so closure output has one label
    is_corona = (
        in_class_d
        and d.n > 2
        and len(pendants) == len(nonpendants)
        and all(len(pn[i]) == 1 for i in nonpendants)
    )
    return StructureReport(
        n=d.n,
        has_loops=bool(d.loops),
        simple_symmetric=simple,
        strongly_connected=strongly,
        pendant_set=pendants,
        nonpendant_set=nonpendants,
        k=len(nonpendants),
        in_class_d=in_class_d,
        is_corona=is_corona,
        is_star=is_star,
        center=center or None,
        pendant_neighbors=pn,
    )


def analyze_matrix(a: RMatrix) -> StructureReport:
    return analyze_structure(build_digraph(a))


def require_class_d(a: RMatrix) -> Tuple[Digraph, StructureReport]:
    """Raise ClassViolation unless D(A) is a strongly connected class-D digraph."""
    d = build_digraph(a)
    report = analyze_structure(d)
    if not report.simple_symmetric:
        raise ClassViolation("D(A) is not a simple symmetric digraph", reason="not_simple_symmetric")
    if not report.in_class_d:
        lonely = [i for i in report.nonpendant_set if not report.pendant_neighbors[i]]
        raise ClassViolation(f"D(A) is not in class D; non-pendant vertices {lonely} have no pendant neighbour")
    if not report.strongly_connected:
        raise ClassViolation("D(A) is not strongly connected", reason="not_strongly_connected")
    return d, report


def structure_class(report: StructureReport) -> InputClass:
    if not report.in_class_d:
        return InputClass.NOT_IN_D
    if report.is_star:
        return InputClass.STAR
    if report.is_corona:
        return InputClass.CORONA
    return InputClass.OTHER_IN_D
