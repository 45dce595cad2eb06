# ginv/chains.py
"""Alternating cycle chains and the combinatorial group inverse.

For a maximally matchable pair (i, j) the entry of A# is

    alpha_ij = beta_ij * sum(beta_bar(M) for M alternating along the chain) / Delta_A

where beta_ij is the signed path product along the unique alternating chain from
i to j and beta_bar(M) is the product of the cycles of M that the chain does not
use. Every other entry is zero.

Alternating chains in a strongly connected class-D digraph have length 1 or 3, so
the fast search only looks there. ``exhaustive_chains`` searches every length and
``audit_chains`` compares the two.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from ginv.digraph import Digraph, require_class_d
from ginv.errors import ClassViolation, InvariantViolation, NoGroupInverse, VertexOutOfRange
from ginv.linalg import RMatrix
from ginv.matching import Matching, MatchingFamily, cycle_key, maximum_matchings, pendant_cycle_sums
from ginv.models import MuEntry, StructureReport

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class CycleChain:
    vertices: Tuple[int, ...]
    path_product: Fraction

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def beta(self) -> Fraction:
        sign = -1 if ((self.length - 1) // 2) % 2 else 1
        return sign * self.path_product

    def cycle_keys(self) -> List[Pair]:
        v = self.vertices
        return [cycle_key(v[s], v[s + 1]) for s in range(self.length)]


@dataclass(frozen=True)
class FormulaContext:
    """Validated input for the formula paths."""

    a: RMatrix
    digraph: Digraph
    report: StructureReport
    family: MatchingFamily
    alphas: Dict[int, Fraction]


@dataclass(frozen=True)
class MuTable:
    n: int
    mu: RMatrix
    matchable: FrozenSet[Pair]
    chains: Dict[Pair, CycleChain]
    supporting: Dict[Pair, Tuple[Matching, ...]]
    beta: Dict[Pair, Fraction]
    beta_bar_sum: Dict[Pair, Fraction]
    delta: Fraction

    def is_matchable(self, i: int, j: int) -> bool:
        return (i, j) in self.matchable

    def entries(self) -> List[MuEntry]:
        return [
            MuEntry(
                i=i,
                j=j,
                mu=str(self.mu.entry(i, j)),
                beta=str(self.beta[(i, j)]),
                chain=list(self.chains[(i, j)].vertices),
                matchings=len(self.supporting[(i, j)]),
            )
            for i, j in sorted(self.matchable)
        ]


# ===== Hypotheses =====
def prepare(a: RMatrix, family: Optional[MatchingFamily] = None) -> FormulaContext:
    """Check every formula precondition; Delta_A = 0 names the vanished alpha_q."""
    d, report = require_class_d(a)
    fam = family or maximum_matchings(a, engine="structure")
    if fam.degenerate:
        raise ClassViolation("D(A) has no 2-cycles", reason="degenerate")
    alphas = pendant_cycle_sums(a, report)
    if fam.delta == 0:
        vanished = [q for q, s in sorted(alphas.items()) if s == 0]
        logger.info(f"Delta_A = 0; pendant cycle sums vanish at {vanished}")
        raise NoGroupInverse(
            f"Delta_A = 0 (pendant cycle sums vanish at {vanished})", vanished=vanished
        )
    return FormulaContext(a=a, digraph=d, report=report, family=fam, alphas=alphas)


# ===== Fast chain search =====
def _find_chain(ctx: FormulaContext, i: int, j: int) -> Optional[Tuple[CycleChain, List[Matching]]]:
    a, d = ctx.a, ctx.digraph
    if i == j:
        return None
    if j in d.adjacency[i]:
        key = cycle_key(i, j)
        support = [m for m in ctx.family.matchings if key in m.keys]
        if support:
            return CycleChain((i, j), a.entry(i, j)), support
        return None
    if i not in d.pendants or j not in d.pendants:
        return None
    (q,) = d.adjacency[i]
    (p,) = d.adjacency[j]
    if q == p or p not in d.adjacency[q]:
        return None
    first, last, middle = cycle_key(i, q), cycle_key(p, j), cycle_key(q, p)
    support = [
        m for m in ctx.family.matchings
        if first in m.keys and last in m.keys and middle not in m.keys
    ]
    if not support:
        return None
    product = a.entry(i, q) * a.entry(q, p) * a.entry(p, j)
    return CycleChain((i, q, p, j), product), support


def alternating_chain(a: RMatrix, fam: MatchingFamily, i: int, j: int) -> Optional[Tuple[CycleChain, List[Matching]]]:
    """The alternating chain from i to j and the matchings it alternates against, or None."""
    ctx = prepare(a, fam)
    for v in (i, j):
        if not 1 <= v <= ctx.digraph.n:
            raise VertexOutOfRange(f"vertex {v} outside 1..{ctx.digraph.n}")
    return _find_chain(ctx, i, j)


def beta_bar(m: Matching, chain: CycleChain) -> Fraction:
    """Product of M's cycles outside the chain; 1 over the empty set."""
    used = set(chain.cycle_keys())
    return prod((c.cycle_product for c in m.cycles if c.key not in used), start=Fraction(1))


def build_table(ctx: FormulaContext) -> MuTable:
    n = ctx.digraph.n
    mu = np.full((n, n), Fraction(0), dtype=object)
    chains: Dict[Pair, CycleChain] = {}
    supporting: Dict[Pair, Tuple[Matching, ...]] = {}
    beta: Dict[Pair, Fraction] = {}
    sums: Dict[Pair, Fraction] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            found = _find_chain(ctx, i, j)
            if found is None:
                continue
            chain, support = found
            total = sum((beta_bar(m, chain) for m in support), Fraction(0))
            chains[(i, j)] = chain
            supporting[(i, j)] = tuple(support)
            beta[(i, j)] = chain.beta
            sums[(i, j)] = total
            mu[i - 1, j - 1] = chain.beta * total
    return MuTable(
        n=n,
        mu=RMatrix._wrap(mu),
        matchable=frozenset(chains),
        chains=chains,
        supporting=supporting,
        beta=beta,
        beta_bar_sum=sums,
        delta=ctx.family.delta,
    )


def mu_table(a: RMatrix, debug: bool = False) -> MuTable:
    ctx = prepare(a)
    table = build_table(ctx)
    if debug:
        violations = audit_chains(ctx, table)
        if violations:
            raise InvariantViolation("; ".join(violations))
    logger.debug(f"mu table: {len(table.matchable)} matchable pairs, Delta_A={table.delta}")
    return table


def inverse_from_table(table: MuTable) -> RMatrix:
    return table.mu.scale(1 / table.delta)


def graph_group_inverse(a: RMatrix, debug: bool = False) -> RMatrix:
    """A# entrywise as mu_ij / Delta_A."""
    return inverse_from_table(mu_table(a, debug=debug))


# ===== Exhaustive search =====
def exhaustive_chains(ctx: FormulaContext) -> Dict[Pair, Dict[Tuple[int, ...], List[Matching]]]:
    """Every alternating chain of any length against every maximum matching."""
    d = ctx.digraph
    found: Dict[Pair, Dict[Tuple[int, ...], List[Matching]]] = {}

    for m in ctx.family.matchings:
        mate = m.mate()

        def extend(path: List[int]) -> None:
            start, end = path[0], path[-1]
            found.setdefault((start, end), {}).setdefault(tuple(path), []).append(m)
            for x in sorted(d.adjacency[end]):
                if x in path or x not in mate or mate[x] in path:
                    continue
                extend(path + [x, mate[x]])

        for i in sorted(mate):
            extend([i, mate[i]])
    return found


def audit_chains(ctx: FormulaContext, table: Optional[MuTable] = None) -> List[str]:
    """Compare the fast chain search with the exhaustive one."""
    table = table or build_table(ctx)
    found = exhaustive_chains(ctx)
    violations = []
    for pair, by_path in sorted(found.items()):
        for path in by_path:
            if len(path) - 1 > 3:
                violations.append(f"chain {path} of length {len(path) - 1}")
        if len(by_path) != 1:
            violations.append(f"pair {pair} has {len(by_path)} alternating chains")
            continue
        (path, support), = by_path.items()
        chain = table.chains.get(pair)
        if chain is None:
            violations.append(f"pair {pair} missed by the fast search")
        elif chain.vertices != path or set(table.supporting[pair]) != set(support):
            violations.append(f"pair {pair}: fast chain {chain.vertices} disagrees with {path}")
    for pair in sorted(table.matchable - set(found)):
        violations.append(f"pair {pair} has no alternating chain")
    if violations:
        logger.warning(f"chain audit: {len(violations)} violations")
    return violations
