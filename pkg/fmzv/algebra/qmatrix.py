from __future__ import annotations

import logging
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from fmzv.algebra.arith import as_rational, nu_p
from fmzv.misc.errors import DimensionError

__all__ = ["QMatrix", "EchelonBasis", "det_exact", "rank_and_kernel", "two_adic_certificate"]

logger = logging.getLogger(__name__)

SparseVector = Dict[int, Fraction]


class QMatrix:
    """Dense matrix of exact rationals, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(as_rational(x) for x in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")

        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> QMatrix:
        rows = [list(row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionError(f"row {i} has {len(row)} entries, expected {cols}")
        return cls(len(rows), cols, [x for row in rows for x in row])

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> QMatrix:
        return cls(rows, cols, [0] * (rows * cols))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List[Fraction]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> List[List[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> List[Fraction]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def transpose(self) -> QMatrix:
        return QMatrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __matmul__(self, other: QMatrix) -> QMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        return QMatrix(self.rows, other.cols, [
            sum((self[i, k] * other[k, j] for k in range(self.cols)), Fraction(0))
            for i in range(self.rows) for j in range(other.cols)
        ])

    def apply_left(self, vector: Sequence[Fraction]) -> List[Fraction]:
        """Row vector times matrix."""
        if len(vector) != self.rows:
            raise DimensionError(f"vector of length {len(vector)} against {self.rows} rows")
        out = [Fraction(0)] * self.cols
        for i, x in enumerate(vector):
            if x:
                base = i * self.cols
                for j in range(self.cols):
                    e = self.entries[base + j]
                    if e:
                        out[j] += x * e
        return out

    def inverse(self) -> QMatrix:
        if not self.is_square:
            raise DimensionError(f"inverse of non-square {self.rows}x{self.cols} matrix")

        n = self.rows
        work = [self.row(i) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                raise DimensionError("matrix is singular")
            work[col], work[pivot] = work[pivot], work[col]
            inv = 1 / work[col][col]
            work[col] = [x * inv for x in work[col]]
            for r in range(n):
                factor = work[r][col]
                if r != col and factor:
                    work[r] = [a - factor * b for a, b in zip(work[r], work[col])]

        return QMatrix.from_rows([row[n:] for row in work], cols=n)

    def to_csv(self) -> str:
        return "\n".join(",".join(str(x) for x in self.row(i)) for i in range(self.rows))

    def to_json_rows(self) -> List[List[str]]:
        return [[str(x) for x in self.row(i)] for i in range(self.rows)]

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols}, {self.to_json_rows()})"


class EchelonBasis:
    """Incrementally built, fully reduced echelon basis of sparse rational vectors.

    The pivot of a row is its last nonzero column; every row is zero on every other pivot,
    so reduction against the basis is a single pass and the residual is canonical.
    """

    def __init__(self, size: int):
        self.size = size
        self._rows: Dict[int, SparseVector] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self._rows)

    def free_columns(self) -> List[int]:
        return [c for c in range(self.size) if c not in self._rows]

    def rows(self) -> List[SparseVector]:
        return [dict(self._rows[p]) for p in self.pivots]

    def reduce(self, vector: SparseVector) -> SparseVector:
        v = {c: as_rational(x) for c, x in vector.items() if x}
        for c in [c for c in v if c in self._rows]:
            factor = v.get(c)
            if not factor:
                continue
            for col, x in self._rows[c].items():
                value = v.get(col, 0) - factor * x
                if value:
                    v[col] = value
                else:
                    v.pop(col, None)
        return v

    def add(self, vector: SparseVector) -> bool:
        v = self.reduce(vector)
        if not v:
            return False

        pivot = max(v)
        inv = 1 / v[pivot]
        v = {c: x * inv for c, x in v.items()}

        for row in self._rows.values():
            factor = row.get(pivot)
            if factor:
                for col, x in v.items():
                    value = row.get(col, 0) - factor * x
                    if value:
                        row[col] = value
                    else:
                        row.pop(col, None)

        self._rows[pivot] = v
        return True

    def contains(self, vector: SparseVector) -> bool:
        return not self.reduce(vector)


def _clear_denominators(m: QMatrix) -> Tuple[List[List[int]], int]:
    scales = []
    for j in range(m.cols):
        scales.append(lcm(*(x.denominator for x in m.column(j))) if m.rows else 1)

    rows = [[int(m[i, j] * scales[j]) for j in range(m.cols)] for i in range(m.rows)]
    scale = 1
    for s in scales:
        scale *= s
    return rows, scale


def det_exact(m: QMatrix) -> Fraction:
    if not m.is_square:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")

    n = m.rows
    if n == 0:
        return Fraction(1)

    a, scale = _clear_denominators(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]

    return Fraction(sign * a[n - 1][n - 1], scale)


def rank_and_kernel(m: QMatrix) -> Tuple[int, List[List[Fraction]]]:
    basis = EchelonBasis(m.cols)
    for i in range(m.rows):
        basis.add({j: x for j, x in enumerate(m.row(i)) if x})
        if basis.rank == m.cols:
            break

    kernel = []
    for free in basis.free_columns():
        vector = [Fraction(0)] * m.cols
        vector[free] = Fraction(1)
        for pivot, row in basis._rows.items():
            x = row.get(free)
            if x:
                vector[pivot] = -x
        lead = next(x for x in vector if x)
        kernel.append([x / lead for x in vector])

    return basis.rank, kernel


def two_adic_certificate(m: QMatrix) -> bool:
    if not m.is_square:
        raise DimensionError(f"2-adic certificate of non-square {m.rows}x{m.cols} matrix")

    for j in range(m.cols):
        column = [nu_p(2, x) for x in m.column(j)]
        if any(v < 1 for v in column[j + 1:]):
            return False
        diagonal = column[j]
        if diagonal.is_infinite or diagonal != min(column) or diagonal > 0:
            return False

    return True
