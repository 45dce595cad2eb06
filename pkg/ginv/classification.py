# ginv/classification.py
"""Whether D(A#) stays in class D, and what stars and coronas map to.

D(A#) is in class D exactly when D(A) is a star or a corona. For every other
class-D input the converse construction picks a non-pendant vertex with two or
more pendant neighbours that also touches another non-pendant; in D(A#) that
vertex has no pendant neighbour at all.
"""
import logging
from typing import List, Optional

import networkx as nx

from ginv.chains import graph_group_inverse
from ginv.digraph import Digraph, analyze_matrix, build_digraph, pendant_neighbors, require_class_d, structure_class
from ginv.errors import NoGroupInverse
from ginv.linalg import RMatrix, inverse
from ginv.models import ClosureVerdict, InputClass, StructureReport

logger = logging.getLogger(__name__)

CLOSED_CLASSES = (InputClass.STAR, InputClass.CORONA)


def witness(d: Digraph, report: StructureReport) -> Optional[int]:
    """First non-pendant with >= 2 pendants adjacent to another non-pendant."""
    nonpendants = set(report.nonpendant_set)
    for i in report.nonpendant_set:
        if len(report.pendant_neighbors[i]) >= 2 and d.adjacency[i] & (nonpendants - {i}):
            return i
    return None


def pattern_check(x: RMatrix) -> bool:
    """D(X) is simple symmetric and strongly connected; runs on any square matrix."""
    d = build_digraph(x)
    return d.simple_symmetric and nx.is_strongly_connected(d.to_networkx())


def classify_closure(a: RMatrix, b: Optional[RMatrix] = None) -> ClosureVerdict:
    """Predicted and actual membership of D(A#) in class D."""
    d, report = require_class_d(a)
    b = graph_group_inverse(a) if b is None else b
    input_class = structure_class(report)
    out = analyze_matrix(b)

    witness_vertex = None
    witness_confirmed = None
    if input_class == InputClass.OTHER_IN_D:
        witness_vertex = witness(d, report)
        if witness_vertex is not None:
            witness_confirmed = not pendant_neighbors(build_digraph(b), witness_vertex)

    verdict = ClosureVerdict(
        input_class=input_class,
        predicted_closure=input_class in CLOSED_CLASSES,
        actual_closure=out.in_class_d,
        actual_output_class=structure_class(out),
        output_simple_symmetric=out.simple_symmetric,
        output_strongly_connected=out.strongly_connected,
        witness_vertex=witness_vertex,
        witness_confirmed=witness_confirmed,
    )
    if not verdict.consistent:
        logger.warning(f"closure prediction {verdict.predicted_closure} != actual {verdict.actual_closure}")
    return verdict


def check_symmetric_closure(a: RMatrix) -> bool:
    """D(A#) simple symmetric and strongly connected for a valid class-D input."""
    return pattern_check(graph_group_inverse(a))


def swap_permutation(report: StructureReport) -> dict:
    """Corona vertex swap: each non-pendant trades places with its pendant."""
    sigma = {}
    for q in report.nonpendant_set:
        (p,) = report.pendant_neighbors[q]
        sigma[q] = p
        sigma[p] = q
    return sigma


def check_structure_preservation(a: RMatrix, b: RMatrix) -> List[str]:
    """Star and corona inputs keep their shape under the group inverse."""
    report = analyze_matrix(a)
    out = analyze_matrix(b)
    violations: List[str] = []
    if report.is_star:
        if not out.is_star:
            violations.append("star input but D(A#) is not a star")
        elif out.center != report.center:
            violations.append(f"star centre moved from {report.center} to {out.center}")
        if b.nonzero_pattern() != a.nonzero_pattern():
            violations.append("star input but pattern(A#) != pattern(A)")
    elif report.is_corona:
        try:
            if inverse(a) != b:
                violations.append("corona input but A# != inverse(A)")
        except NoGroupInverse:
            violations.append("corona input but A is singular")
        if not out.is_corona:
            violations.append("corona input but D(A#) is not a corona")
        sigma = swap_permutation(report)
        swapped = frozenset((sigma[i], sigma[j]) for i, j in a.nonzero_pattern())
        if b.nonzero_pattern() != swapped:
            violations.append("pattern(A#) != pattern(A) under the pendant swap")
    return violations
