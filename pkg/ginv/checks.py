# ginv/checks.py
"""Runtime identity checks for a formula-computed group inverse.

Each check returns human-readable violation strings; an empty list means every
identity held exactly.
"""
import logging
from fractions import Fraction
from math import prod
from typing import List, Optional

from ginv.chains import MuTable, build_table, prepare
from ginv.linalg import RMatrix, verify_group_axioms
from ginv.matching import cycle_key, matching_centers, matchings_covering

logger = logging.getLogger(__name__)


def run_invariant_checks(a: RMatrix, b: RMatrix, table: Optional[MuTable] = None) -> List[str]:
    """Check B = A# against the identities the chain formula must satisfy."""
    ctx = prepare(a)
    table = table or build_table(ctx)
    fam, report, d = ctx.family, ctx.report, ctx.digraph
    delta = fam.delta
    n = d.n
    violations: List[str] = []

    axioms = verify_group_axioms(a, b)
    if not axioms.ax_equals_xa:
        violations.append("AB != BA")
    if not axioms.axa_equals_a:
        violations.append("ABA != A")
    if not axioms.xax_equals_x:
        violations.append("BAB != B")

    # entries of AB
    ab = a @ b
    pendants = d.pendants
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            value = ab.entry(i, j)
            if i == j:
                if i in pendants:
                    expected = sum((m.product for m in matchings_covering(fam, i)), Fraction(0)) / delta
                else:
                    expected = Fraction(1)
            elif i in pendants and j in pendants and d.adjacency[i] == d.adjacency[j]:
                (q,) = d.adjacency[i]
                expected = a.entry(q, j) * table.mu.entry(i, q) / delta
            else:
                expected = Fraction(0)
            if value != expected:
                violations.append(f"(AB)[{i},{j}] = {value}, expected {expected}")

    centers = matching_centers(report)
    alpha_product = prod(ctx.alphas.values(), start=Fraction(1))
    if alpha_product != delta:
        violations.append(f"Delta_A = {delta} but product of pendant cycle sums is {alpha_product}")

    nonpendant_pairs = {cycle_key(u, v) for u in report.nonpendant_set for v in report.nonpendant_set if u != v}
    for m in fam.matchings:
        if len(m.cycles) != len(centers):
            violations.append(f"matching {m.label()} has {len(m.cycles)} cycles, expected {len(centers)}")
        if m.keys & nonpendant_pairs:
            violations.append(f"matching {m.label()} uses a non-pendant cycle")

    for q, group in centers.items():
        # every maximum matching covers exactly one pendant of q
        for m in fam.matchings:
            hits = [p for p in group if m.covers(p)]
            if len(hits) != 1:
                violations.append(f"matching {m.label()} covers pendants {hits} of {q}")
        sums = {table.beta_bar_sum.get((p, q)) for p in group}
        if len(sums) != 1:
            violations.append(f"pendants of {q} disagree on the beta-bar sum: {sorted(map(str, sums))}")

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if (b.entry(i, j) != 0) != table.is_matchable(i, j):
                violations.append(f"entry ({i},{j}) nonzero={b.entry(i, j) != 0} but matchable={table.is_matchable(i, j)}")

    if violations:
        logger.warning(f"{len(violations)} invariant violations")
    return violations
