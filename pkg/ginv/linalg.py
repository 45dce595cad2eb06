# ginv/linalg.py
"""Exact rational dense linear algebra.

Entries are ``fractions.Fraction`` held in numpy object arrays, so products and
row operations stay exact. No floating point is used anywhere in this module.
"""
import logging
import re
from decimal import Decimal
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ginv.errors import DimensionMismatch, MatrixFormatError, NoGroupInverse
from ginv.models import AxiomVerdict

logger = logging.getLogger(__name__)

Scalar = Union[int, str, Fraction]


# ===== Scalars =====
MAX_EXPONENT = 1000

_INTEGER = re.compile(r"[+-]?\d+", re.ASCII)
_FRACTION = re.compile(r"([+-]?\d+)/(\d+)", re.ASCII)
_DECIMAL = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE]([+-]?\d+))?", re.ASCII)


def parse_rational(token: str) -> Fraction:
    """Parse an integer, a ``p/q`` fraction or a finite decimal exactly."""
    text = token.strip()
    if not text:
        raise MatrixFormatError("empty entry")
    if _INTEGER.fullmatch(text):
        return Fraction(int(text))
    m = _FRACTION.fullmatch(text)
    if m:
        if int(m.group(2)) == 0:
            raise MatrixFormatError(f"zero denominator in {token!r}")
        return Fraction(int(m.group(1)), int(m.group(2)))
    m = _DECIMAL.fullmatch(text)
    if not m:
        raise MatrixFormatError(f"bad entry {token!r}")
    # 10**exp is built in full
    if m.group(1) is not None and abs(int(m.group(1))) > MAX_EXPONENT:
        raise MatrixFormatError(f"exponent out of range in {token!r}")
    return Fraction(Decimal(text))


def format_rational(x: Fraction) -> str:
    """Lowest terms, ``p`` or ``p/q``."""
    return str(Fraction(x))


def as_rational(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"unsupported entry type {type(x).__name__}; floats are not exact")


# ===== Matrix type =====
class RMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("_data",)

    def __init__(self, rows: Union[Sequence[Sequence[Scalar]], np.ndarray]):
        if isinstance(rows, np.ndarray):
            data = np.empty(rows.shape, dtype=object)
            for idx, value in np.ndenumerate(rows):
                data[idx] = as_rational(value)
        else:
            rows = [list(r) for r in rows]
            if not rows or not rows[0]:
                raise DimensionMismatch("matrix must have at least one row and column")
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatch("ragged rows")
            data = np.empty((len(rows), width), dtype=object)
            for i, row in enumerate(rows):
                for j, value in enumerate(row):
                    data[i, j] = as_rational(value)
        if data.ndim != 2 or 0 in data.shape:
            raise DimensionMismatch(f"expected a non-empty 2-d matrix, got shape {data.shape}")
        data.flags.writeable = False
        self._data = data

    @classmethod
    def _wrap(cls, data: np.ndarray) -> "RMatrix":
        # trusted path: data already holds Fractions
        obj = cls.__new__(cls)
        data = np.array(data, dtype=object)
        data.flags.writeable = False
        obj._data = data
        return obj

    @property
    def n_rows(self) -> int:
        return self._data.shape[0]

    @property
    def n_cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    @property
    def entries(self) -> List[Fraction]:
        """Row-major entry list."""
        return list(self._data.flat)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        return self._data[index]

    def entry(self, i: int, j: int) -> Fraction:
        """1-based access, matching vertex labels."""
        return self._data[i - 1, j - 1]

    def to_array(self) -> np.ndarray:
        """A writable copy."""
        return self._data.copy()

    def rows(self) -> List[List[Fraction]]:
        return [list(r) for r in self._data]

    def to_strings(self) -> List[List[str]]:
        return [[format_rational(x) for x in r] for r in self._data]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._data == other._data))

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self._data.flat)))

    def __repr__(self) -> str:
        return f"RMatrix({self.to_strings()})"

    def __matmul__(self, other: "RMatrix") -> "RMatrix":
        return mat_mul(self, other)

    def __add__(self, other: "RMatrix") -> "RMatrix":
        _require_same_shape(self, other)
        return RMatrix._wrap(self._data + other._data)

    def __sub__(self, other: "RMatrix") -> "RMatrix":
        _require_same_shape(self, other)
        return RMatrix._wrap(self._data - other._data)

    def __neg__(self) -> "RMatrix":
        return RMatrix._wrap(-self._data)

    def scale(self, c: Scalar) -> "RMatrix":
        return RMatrix._wrap(self._data * as_rational(c))

    def transpose(self) -> "RMatrix":
        return RMatrix._wrap(self._data.T)

    @property
    def T(self) -> "RMatrix":
        return self.transpose()

    def permute(self, order: Sequence[int]) -> "RMatrix":
        """Return P A Pᵀ where new index s holds old vertex ``order[s]`` (1-based)."""
        idx = _order_index(order, self.n_rows)
        return RMatrix._wrap(self._data[np.ix_(idx, idx)])

    def unpermute(self, order: Sequence[int]) -> "RMatrix":
        """Inverse of :meth:`permute` for the same ``order``."""
        idx = _order_index(order, self.n_rows)
        out = np.empty(self._data.shape, dtype=object)
        out[np.ix_(idx, idx)] = self._data
        return RMatrix._wrap(out)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._data.flat)

    def nonzero_pattern(self) -> frozenset:
        """1-based positions of nonzero entries."""
        return frozenset((i + 1, j + 1) for (i, j), x in np.ndenumerate(self._data) if x != 0)

    def is_combinatorially_symmetric_zero_diagonal(self) -> bool:
        if not self.is_square:
            return False
        n = self.n_rows
        for i in range(n):
            if self._data[i, i] != 0:
                return False
            for j in range(i + 1, n):
                if (self._data[i, j] != 0) != (self._data[j, i] != 0):
                    return False
        return True


def _order_index(order: Sequence[int], n: int) -> List[int]:
    idx = [v - 1 for v in order]
    if sorted(idx) != list(range(n)):
        raise DimensionMismatch(f"order {list(order)} is not a permutation of 1..{n}")
    return idx


def _require_same_shape(a: RMatrix, b: RMatrix) -> None:
    if a.shape != b.shape:
        raise DimensionMismatch(f"shape {a.shape} vs {b.shape}")


def identity(n: int) -> RMatrix:
    return RMatrix([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])


def zeros(n_rows: int, n_cols: Optional[int] = None) -> RMatrix:
    n_cols = n_rows if n_cols is None else n_cols
    return RMatrix([[Fraction(0)] * n_cols for _ in range(n_rows)])


# ===== Operations =====
def mat_mul(a: RMatrix, b: RMatrix) -> RMatrix:
    """Exact product."""
    if a.n_cols != b.n_rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    out = np.empty((a.n_rows, b.n_cols), dtype=object)
    left, right = a._data, b._data
    for i in range(a.n_rows):
        row = left[i]
        for j in range(b.n_cols):
            out[i, j] = sum((x * y for x, y in zip(row, right[:, j]) if x and y), Fraction(0))
    return RMatrix._wrap(out)


def rref(a: RMatrix) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form and pivot columns (0-based)."""
    m = a.to_array()
    n_rows, n_cols = m.shape
    pivots: List[int] = []
    row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(row, n_rows) if m[r, col] != 0), None)
        if pivot is None:
            continue
        if pivot != row:
            m[[row, pivot]] = m[[pivot, row]]
        m[row, :] = m[row, :] / m[row, col]
        for r in range(n_rows):
            if r != row and m[r, col] != 0:
                m[r, :] = m[r, :] - m[r, col] * m[row, :]
        pivots.append(col)
        row += 1
        if row == n_rows:
            break
    return m, pivots


def rank(a: RMatrix) -> int:
    """Rank over the rationals."""
    return len(rref(a)[1])


def inverse(a: RMatrix) -> RMatrix:
    """Exact inverse by Gauss-Jordan elimination on ``[A I]``."""
    if not a.is_square:
        raise DimensionMismatch(f"inverse of non-square {a.shape}")
    n = a.n_rows
    augmented = RMatrix._wrap(np.hstack((a._data, identity(n)._data)))
    reduced, pivots = rref(augmented)
    if pivots[:n] != list(range(n)):
        raise NoGroupInverse("matrix is singular", reason="singular")
    return RMatrix._wrap(reduced[:, n:])


def full_rank_factorization(a: RMatrix) -> Tuple[RMatrix, RMatrix]:
    """A = F·G with F the pivot columns of A and G the nonzero rows of rref(A)."""
    reduced, pivots = rref(a)
    r = len(pivots)
    if r == 0:
        raise DimensionMismatch("zero matrix has no full-rank factorization")
    f = RMatrix._wrap(a._data[:, pivots])
    g = RMatrix._wrap(reduced[:r, :])
    return f, g


def group_inverse_oracle(a: RMatrix) -> RMatrix:
    """Algebraic group inverse ``F (GF)^-2 G``; independent of any graph structure."""
    if not a.is_square:
        raise DimensionMismatch(f"group inverse of non-square {a.shape}")
    if a.is_zero():
        return zeros(a.n_rows)
    f, g = full_rank_factorization(a)
    try:
        core = inverse(g @ f)
    except NoGroupInverse:
        logger.info(f"GF singular: rank(A)={f.n_cols}, rank(A^2)={rank(a @ a)}")
        raise NoGroupInverse("rank(A) != rank(A^2)", reason="rank_deficient")
    return f @ core @ core @ g


def verify_group_axioms(a: RMatrix, x: RMatrix) -> AxiomVerdict:
    """Exact truth of AXA=A, XAX=X and AX=XA."""
    if not (a.is_square and x.is_square) or a.shape != x.shape:
        raise DimensionMismatch(f"axioms need equal square shapes, got {a.shape} and {x.shape}")
    ax = a @ x
    xa = x @ a
    return AxiomVerdict(
        axa_equals_a=(ax @ a) == a,
        xax_equals_x=(x @ ax) == x,
        ax_equals_xa=ax == xa,
    )
