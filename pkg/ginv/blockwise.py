# ginv/blockwise.py
"""Closed block form of A# for a strongly connected class-D digraph.

After ordering the non-pendant vertices first and each group of pendants behind
them, A becomes

    [[E, F],
     [G, 0]]

where F is block diagonal with rows x_q and G block diagonal with columns y_q.
With alpha_q = x_q . y_q the group inverse is

    [[0, Y],
     [Z, -W]]

with Y = diag(x_q / alpha_q), Z = diag(y_q / alpha_q) and
W_qp = e_qp / (alpha_q alpha_p) * y_q x_p.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np

from ginv.digraph import require_class_d
from ginv.errors import NoGroupInverse
from ginv.linalg import RMatrix
from ginv.matching import matching_centers
from ginv.models import StructureReport

logger = logging.getLogger(__name__)


def block_order(report: StructureReport) -> Tuple[List[int], Dict[int, List[int]]]:
    """Non-pendants ascending, then each one's pendants in the same order."""
    centers = matching_centers(report)
    order = sorted(centers)
    for q in sorted(centers):
        order.extend(centers[q])
    return order, centers


def blockwise_group_inverse(a: RMatrix) -> RMatrix:
    _, report = require_class_d(a)
    order, centers = block_order(report)
    b = a.permute(order)
    k = len(centers)

    # positions of each centre's pendants inside the permuted matrix
    slots: List[List[int]] = []
    offset = k
    for q in sorted(centers):
        size = len(centers[q])
        slots.append(list(range(offset, offset + size)))
        offset += size

    xs = [[b[t, s] for s in slots[t]] for t in range(k)]
    ys = [[b[s, t] for s in slots[t]] for t in range(k)]
    alphas = [sum((x * y for x, y in zip(xs[t], ys[t])), Fraction(0)) for t in range(k)]
    vanished = [q for q, alpha in zip(sorted(centers), alphas) if alpha == 0]
    if vanished:
        raise NoGroupInverse(
            f"Delta_A = 0 (pendant cycle sums vanish at {vanished})", vanished=vanished
        )

    n = a.n_rows
    out = np.full((n, n), Fraction(0), dtype=object)
    for t in range(k):
        for s, x, y in zip(slots[t], xs[t], ys[t]):
            out[t, s] = x / alphas[t]
            out[s, t] = y / alphas[t]
    for t in range(k):
        for u in range(k):
            e = b[t, u]
            if t == u or e == 0:
                continue
            scale = e / (alphas[t] * alphas[u])
            for r, y in zip(slots[t], ys[t]):
                for c, x in zip(slots[u], xs[u]):
                    out[r, c] = -scale * y * x
    logger.debug(f"blockwise form: k={k}, order={order}")
    return RMatrix._wrap(out).unpermute(order)
