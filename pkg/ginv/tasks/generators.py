# ginv/tasks/generators.py
"""Seeded random instance families.

* star: a star tree on n vertices;
* corona: a connected base graph on k vertices, one pendant per base vertex;
* classD: a connected base graph on k >= 2 vertices, at least one of them
  carrying two or more pendants (never a star or a corona);
* singular: classD with one pendant group weighted so its cycle products cancel.

Both directions of every 2-cycle get independent nonzero integer weights in
[-weight, weight], and every instance is randomly relabelled. Instances with
Delta_A = 0 are resampled, except in the singular family where it is the point.
"""
import logging
import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional

import networkx as nx
import numpy as np

from ginv import config
from ginv.digraph import analyze_matrix
from ginv.errors import GenerationError
from ginv.linalg import RMatrix
from ginv.matching import pendant_cycle_sums

logger = logging.getLogger(__name__)

FAMILIES = ("star", "corona", "classD", "singular")


@dataclass(frozen=True)
class GeneratorParams:
    family: str = "classD"
    size: Optional[int] = None
    weight: int = 5
    density: float = 0.5
    max_pendants: int = 3
    max_n: int = 14

    def describe(self) -> str:
        return " ".join(f"{k}={v}" for k, v in asdict(self).items())


@dataclass(frozen=True)
class Instance:
    index: int
    matrix: RMatrix
    provenance: str


def instance_rng(seed: int, index: int) -> random.Random:
    """Independent stream per instance, so parallel sweeps see the same matrices."""
    return random.Random(f"ginv:{seed}:{index}")


def _weight(rng: random.Random, w: int) -> Fraction:
    value = rng.randint(1, w)
    return Fraction(value if rng.random() < 0.5 else -value)


def _connected_base(rng: random.Random, k: int, density: float) -> nx.Graph:
    for _ in range(config.GENERATION_RETRIES):
        g = nx.gnp_random_graph(k, density, seed=rng.randrange(2**32))
        if nx.is_connected(g):
            return g
    raise GenerationError(f"no connected base graph on {k} vertices at density {density}")


def _attach_pendants(g: nx.Graph, counts: List[int]) -> Dict[int, List[int]]:
    groups = {}
    nxt = g.number_of_nodes()
    for q, r in enumerate(counts):
        groups[q] = list(range(nxt, nxt + r))
        g.add_edges_from((q, p) for p in groups[q])
        nxt += r
    return groups


def _weighted_matrix(g: nx.Graph, rng: random.Random, w: int) -> np.ndarray:
    n = g.number_of_nodes()
    a = np.full((n, n), Fraction(0), dtype=object)
    for u, v in sorted(g.edges()):
        a[u, v] = _weight(rng, w)
        a[v, u] = _weight(rng, w)
    return a


def _pendant_counts(rng: random.Random, k: int, params: GeneratorParams) -> List[int]:
    """One pendant each, then at least one extra so some vertex carries two."""
    counts = [1] * k
    room = k * (params.max_pendants - 1)
    if params.size is None:
        room = min(room, params.max_n - 2 * k)
    for _ in range(rng.randint(1, max(1, room))):
        open_slots = [q for q in range(k) if counts[q] < params.max_pendants]
        counts[rng.choice(open_slots)] += 1
    return counts


def _sample_size(rng: random.Random, params: GeneratorParams, low: int, high: int) -> int:
    if params.size is not None:
        if params.size < low:
            raise GenerationError(f"{params.family} needs size >= {low}, got {params.size}")
        return params.size
    return rng.randint(low, max(low, high))


def _cancel_group(rng: random.Random, a: np.ndarray, q: int, group: List[int], w: int) -> bool:
    """Reweight the last pendant of q so q's pendant cycle products sum to zero."""
    *rest, last = group
    partial = sum((a[q, p] * a[p, q] for p in rest), Fraction(0))
    if partial == 0:
        return False
    a[q, last] = _weight(rng, w)
    a[last, q] = -partial / a[q, last]
    return True


def _build(rng: random.Random, params: GeneratorParams) -> Optional[np.ndarray]:
    family = params.family
    if family == "star":
        n = _sample_size(rng, params, 2, params.max_n)
        return _weighted_matrix(nx.star_graph(n - 1), rng, params.weight)

    if family == "corona":
        k = _sample_size(rng, params, 2, params.max_n // 2)
        g = _connected_base(rng, k, params.density)
        _attach_pendants(g, [1] * k)
        return _weighted_matrix(g, rng, params.weight)

    if family in ("classD", "singular"):
        if params.max_pendants < 2:
            raise GenerationError(f"{family} needs max_pendants >= 2")
        k = _sample_size(rng, params, 2, (params.max_n - 1) // 2)
        g = _connected_base(rng, k, params.density)
        counts = _pendant_counts(rng, k, params)
        groups = _attach_pendants(g, counts)
        a = _weighted_matrix(g, rng, params.weight)
        if family == "singular":
            q = rng.choice([v for v in range(k) if counts[v] >= 2])
            if not _cancel_group(rng, a, q, groups[q], params.weight):
                return None
        return a

    raise GenerationError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _delta_nonzero(m: RMatrix) -> bool:
    # Delta_A is the product of the pendant cycle sums
    return all(s != 0 for s in pendant_cycle_sums(m, analyze_matrix(m)).values())


def generate(params: GeneratorParams, seed: int, index: int = 0) -> Instance:
    """One relabelled instance; the same (params, seed, index) always gives the same matrix."""
    rng = instance_rng(seed, index)
    for attempt in range(config.GENERATION_RETRIES):
        a = _build(rng, params)
        if a is None:
            continue
        matrix = RMatrix._wrap(a)
        if params.family != "singular" and not _delta_nonzero(matrix):
            continue
        order = list(range(1, matrix.n_rows + 1))
        rng.shuffle(order)
        if attempt:
            logger.debug(f"instance {index}: {attempt} resamples")
        return Instance(
            index=index,
            matrix=matrix.permute(order),
            provenance=f"gen {params.describe()} seed={seed} index={index}",
        )
    raise GenerationError(
        f"no {params.family} instance with Delta_A as required after {config.GENERATION_RETRIES} attempts"
    )


def generate_family(params: GeneratorParams, seed: int, count: int) -> Iterator[Instance]:
    for index in range(count):
        yield generate(params, seed, index)


def fresh_seed() -> int:
    return random.SystemRandom().randrange(2**63)
