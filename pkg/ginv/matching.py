# ginv/matching.py
"""2-cycles, maximum matchings, matching products and Delta_A.

Two engines produce the family of maximum matchings:

* ``brute``: depth-first search over disjoint 2-cycle sets, valid for any simple
  symmetric digraph, capped at ``config.BRUTE_FORCE_LIMIT`` vertices;
* ``structure``: for strongly connected class-D digraphs the maximum matchings are
  exactly one pendant cycle per non-pendant vertex.
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from ginv import config
from ginv.digraph import Digraph, analyze_structure, build_digraph
from ginv.errors import BruteForceLimitExceeded, ClassViolation, VertexOutOfRange
from ginv.linalg import RMatrix
from ginv.models import MatchingEntry, MatchingsReport, StructureReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class TwoCycle:
    u: int
    v: int
    cycle_product: Fraction

    @property
    def key(self) -> Tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class Matching:
    cycles: Tuple[TwoCycle, ...]

    @property
    def product(self) -> Fraction:
        """eta(M)."""
        return prod((c.cycle_product for c in self.cycles), start=Fraction(1))

    @property
    def keys(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(c.key for c in self.cycles)

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(v for c in self.cycles for v in c.key)

    def covers(self, i: int) -> bool:
        return i in self.vertices

    def mate(self) -> Dict[int, int]:
        out = {}
        for c in self.cycles:
            out[c.u] = c.v
            out[c.v] = c.u
        return out

    def label(self) -> str:
        return "{" + ",".join(f"({c.u},{c.v})" for c in self.cycles) + "}"


@dataclass(frozen=True)
class MatchingFamily:
    n: int
    matchings: Tuple[Matching, ...]
    max_size: int
    engine: str

    @property
    def delta(self) -> Fraction:
        """Delta_A: sum of the maximum matching products."""
        return sum((m.product for m in self.matchings), Fraction(0))

    @property
    def degenerate(self) -> bool:
        return self.max_size == 0


def cycle_key(i: int, j: int) -> Tuple[int, int]:
    return (i, j) if i < j else (j, i)


def _make_matching(cycles) -> Matching:
    return Matching(cycles=tuple(sorted(cycles)))


def _require_simple(d: Digraph) -> None:
    if not d.simple_symmetric:
        raise ClassViolation("D(A) is not a simple symmetric digraph", reason="not_simple_symmetric")


def enumerate_two_cycles(a: RMatrix) -> List[TwoCycle]:
    """All 2-cycles sorted by (u, v)."""
    d = build_digraph(a)
    _require_simple(d)
    return _two_cycles(a, d)


def _two_cycles(a: RMatrix, d: Digraph) -> List[TwoCycle]:
    return [TwoCycle(u, v, a.entry(u, v) * a.entry(v, u)) for u, v in d.two_cycles]


# ===== Engines =====
def _brute_force(a: RMatrix, d: Digraph, limit: int) -> MatchingFamily:
    if d.n > limit:
        raise BruteForceLimitExceeded(f"brute-force matching capped at n={limit}, got n={d.n}")
    cycles = {c.key: c for c in _two_cycles(a, d)}
    best: List[Tuple[TwoCycle, ...]] = []
    best_size = 0
    chosen: List[TwoCycle] = []
    covered = set()

    def search(v: int, free_left: int) -> None:
        nonlocal best, best_size
        # free_left counts undecided vertices >= v that are still uncovered
        if len(chosen) + free_left // 2 < best_size:
            return
        if v > d.n:
            size = len(chosen)
            if size > best_size:
                best_size, best = size, [tuple(chosen)]
            elif size == best_size:
                best.append(tuple(chosen))
            return
        if v in covered:
            search(v + 1, free_left)
            return
        for u in sorted(d.adjacency[v]):
            if u > v and u not in covered:
                chosen.append(cycles[(v, u)])
                covered.add(u)
                search(v + 1, free_left - 2)
                covered.discard(u)
                chosen.pop()
        search(v + 1, free_left - 1)

    search(1, d.n)
    matchings = [_make_matching(m) for m in best] if best_size else [Matching(())]
    return MatchingFamily(n=d.n, matchings=_canonical(matchings), max_size=best_size, engine="brute")


def matching_centers(report: StructureReport) -> Dict[int, List[int]]:
    """Non-pendant vertex -> its pendant neighbours; n = 2 counts vertex 1 as the centre."""
    if report.n == 2 and report.k == 0:
        return {1: [2]}
    return {q: list(report.pendant_neighbors[q]) for q in report.nonpendant_set}


def _structural(a: RMatrix, d: Digraph, report: StructureReport) -> MatchingFamily:
    centers = matching_centers(report)
    if not centers:
        return MatchingFamily(n=d.n, matchings=(Matching(()),), max_size=0, engine="structure")
    choices = [[(q, p) for p in centers[q]] for q in sorted(centers)]
    matchings = []
    for pick in itertools.product(*choices):
        matchings.append(_make_matching(
            TwoCycle(*cycle_key(q, p), a.entry(q, p) * a.entry(p, q)) for q, p in pick
        ))
    return MatchingFamily(n=d.n, matchings=_canonical(matchings), max_size=len(centers), engine="structure")


def _canonical(matchings: Sequence[Matching]) -> Tuple[Matching, ...]:
    return tuple(sorted(matchings, key=lambda m: [c.key for c in m.cycles]))


def structural_engine_applies(report: StructureReport) -> bool:
    return report.in_class_d and report.strongly_connected and report.n >= 2


def maximum_matchings(a: RMatrix, engine: str = "auto", limit: Optional[int] = None) -> MatchingFamily:
    """Every maximum matching of D(A) with its product, and Delta_A."""
    d = build_digraph(a)
    _require_simple(d)
    report = analyze_structure(d)
    if engine == "auto":
        engine = "structure" if structural_engine_applies(report) else "brute"
    if engine == "structure":
        if not structural_engine_applies(report):
            raise ClassViolation("structural engine needs a strongly connected class-D digraph")
        fam = _structural(a, d, report)
    elif engine == "brute":
        fam = _brute_force(a, d, config.BRUTE_FORCE_LIMIT if limit is None else limit)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    logger.debug(f"{fam.engine} engine: {len(fam.matchings)} maximum matchings of size {fam.max_size}")
    return fam


def engines_agree(a: RMatrix, limit: Optional[int] = None) -> bool:
    brute = maximum_matchings(a, engine="brute", limit=limit)
    fast = maximum_matchings(a, engine="structure")
    return brute.matchings == fast.matchings and brute.delta == fast.delta


def matchings_covering(fam: MatchingFamily, i: int) -> List[Matching]:
    """M(i): the maximum matchings in which vertex i is matched."""
    if not 1 <= i <= fam.n:
        raise VertexOutOfRange(f"vertex {i} outside 1..{fam.n}")
    return [m for m in fam.matchings if m.covers(i)]


def pendant_cycle_sums(a: RMatrix, report: Optional[StructureReport] = None) -> Dict[int, Fraction]:
    """alpha_q: sum of pendant cycle products at each non-pendant vertex q."""
    report = report or analyze_structure(build_digraph(a))
    return {
        q: sum((a.entry(q, p) * a.entry(p, q) for p in pendants), Fraction(0))
        for q, pendants in matching_centers(report).items()
    }


def family_report(fam: MatchingFamily) -> MatchingsReport:
    return MatchingsReport(
        n=fam.n,
        engine=fam.engine,
        max_size=fam.max_size,
        degenerate=fam.degenerate,
        delta=str(fam.delta),
        matchings=[
            MatchingEntry(cycles=[[c.u, c.v] for c in m.cycles], product=str(m.product))
            for m in fam.matchings
        ],
    )
