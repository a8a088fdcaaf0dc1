"""Exact rational linear algebra plus a floating complex companion path.

All matrices here are small and dense.  Rational entries are plain
`fractions.Fraction` values (always lowest terms, positive denominator), so
every exact operation is exact end to end.  Rank, kernel and determinant go
through a single fraction-free elimination: each row is scaled to integers
and pivoting follows Bareiss' scheme, which keeps intermediate entries as
minors of the input instead of letting numerators explode.

The complex path (`ComplexMatrix`, `rank_numeric`) exists for evaluation
points that are not rational; its rank is tolerance-based on singular values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from .errors import DimensionError, InputError

__all__ = [
    "RationalMatrix",
    "ComplexMatrix",
    "KernelBasis",
    "parse_rational",
    "format_rational",
    "rank_exact",
    "kernel_exact",
    "det_exact",
    "vandermonde",
    "rank_numeric",
    "hstack",
    "vstack",
]


def parse_rational(s) -> Fraction:
    """Parse a canonical 'p/q' (or plain 'p') string into an exact rational."""
    try:
        return Fraction(s)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"invalid rational value {s!r}") from exc


def format_rational(x: Fraction) -> str:
    """Canonical 'p/q' string; the '/q' part is omitted when q = 1."""
    return str(x)


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable dense matrix over the rationals, entries in row-major order."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]
    row_labels: tuple[str, ...] | None = None
    col_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"matrix {self.rows}x{self.cols} needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )
        if self.row_labels is not None and len(self.row_labels) != self.rows:
            raise DimensionError("row_labels length does not match row count")
        if self.col_labels is not None and len(self.col_labels) != self.cols:
            raise DimensionError("col_labels length does not match column count")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], row_labels=None, col_labels=None):
        rows = [list(r) for r in rows]
        if not rows:
            raise DimensionError("cannot build a matrix from zero rows")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        entries = tuple(Fraction(x) for r in rows for x in r)
        return cls(
            len(rows),
            ncols,
            entries,
            tuple(row_labels) if row_labels is not None else None,
            tuple(col_labels) if col_labels is not None else None,
        )

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "RationalMatrix":
        entries = tuple(self.entry(i, j) for i in row_idx for j in col_idx)
        rl = tuple(self.row_labels[i] for i in row_idx) if self.row_labels else None
        cl = tuple(self.col_labels[j] for j in col_idx) if self.col_labels else None
        return RationalMatrix(len(row_idx), len(col_idx), entries, rl, cl)

    def transpose(self) -> "RationalMatrix":
        entries = tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows))
        return RationalMatrix(self.cols, self.rows, entries, self.col_labels, self.row_labels)

    def scale_rows(self, factors: Sequence[Fraction]) -> "RationalMatrix":
        if len(factors) != self.rows:
            raise DimensionError("one factor per row required")
        entries = tuple(
            self.entry(i, j) * factors[i] for i in range(self.rows) for j in range(self.cols)
        )
        return RationalMatrix(self.rows, self.cols, entries, self.row_labels, self.col_labels)

    def matvec(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise DimensionError("vector length does not match column count")
        return tuple(
            sum((self.entry(i, j) * v[j] for j in range(self.cols)), start=Fraction(0))
            for i in range(self.rows)
        )

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionError("inner dimensions do not match")
        entries = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                entries.append(
                    sum((ri[k] * other.entry(k, j) for k in range(self.cols)), start=Fraction(0))
                )
        return RationalMatrix(self.rows, other.cols, tuple(entries))

    def to_complex(self) -> "ComplexMatrix":
        data = np.array(
            [[complex(self.entry(i, j)) for j in range(self.cols)] for i in range(self.rows)],
            dtype=np.complex128,
        )
        return ComplexMatrix.from_array(data)

    def to_obj(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [
                [format_rational(self.entry(i, j)) for j in range(self.cols)]
                for i in range(self.rows)
            ],
        }

    @classmethod
    def from_obj(cls, obj) -> "RationalMatrix":
        try:
            rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"matrix object must carry rows/cols/entries: {exc}") from exc
        if len(entries) != rows:
            raise InputError(f"matrix declares {rows} rows but entries has {len(entries)}")
        parsed = []
        for i, r in enumerate(entries):
            if len(r) != cols:
                raise InputError(f"entries[{i}] has {len(r)} values, expected {cols}")
            parsed.append([parse_rational(x) for x in r])
        return cls.from_rows(parsed)


@dataclass(frozen=True, eq=False)
class ComplexMatrix:
    """Dense complex matrix for evaluation points outside the rationals."""

    rows: int
    cols: int
    data: np.ndarray

    @classmethod
    def from_array(cls, data: np.ndarray) -> "ComplexMatrix":
        data = np.asarray(data, dtype=np.complex128)
        if data.ndim != 2:
            raise DimensionError("complex matrix data must be two-dimensional")
        data = data.copy()
        data.setflags(write=False)
        return cls(data.shape[0], data.shape[1], data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[complex]]) -> "ComplexMatrix":
        return cls.from_array(np.array([[complex(x) for x in r] for r in rows]))

    def entry(self, i: int, j: int) -> complex:
        return complex(self.data[i, j])

    def submatrix(self, row_idx, col_idx) -> "ComplexMatrix":
        return ComplexMatrix.from_array(self.data[np.ix_(list(row_idx), list(col_idx))])

    def to_obj(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [
                [[float(z.real), float(z.imag)] for z in map(complex, row)]
                for row in self.data
            ],
        }


@dataclass(frozen=True)
class KernelBasis:
    """Basis of a right null space; vectors are nonzero and independent."""

    ambient_dim: int
    vectors: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for v in self.vectors:
            if len(v) != self.ambient_dim:
                raise DimensionError("kernel vector has wrong length")
            if all(x == 0 for x in v):
                raise ValueError("kernel basis may not contain the zero vector")

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def to_obj(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "vectors": [[format_rational(x) for x in v] for v in self.vectors],
        }


def _cleared_int_rows(m: RationalMatrix) -> tuple[list[list[int]], list[Fraction]]:
    """Scale each row to integers; returns rows and the multipliers used."""
    rows, mults = [], []
    for i in range(m.rows):
        r = m.row(i)
        mult = Fraction(lcm(*(x.denominator for x in r)) if r else 1)
        rows.append([int(x * mult) for x in r])
        mults.append(mult)
    return rows, mults


def _bareiss_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int], int]:
    """Fraction-free forward elimination.

    Returns (echelon rows, pivot column indices, sign of the row permutation).
    Pivots are chosen by largest absolute value in the current column, ties
    broken by lowest row index, so elimination traces are reproducible.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    piv_cols: list[int] = []
    sign = 1
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        best = None
        for i in range(r, nrows):
            v = abs(rows[i][c])
            if v and (best is None or v > abs(rows[best][c])):
                best = i
        if best is None:
            continue
        if best != r:
            rows[r], rows[best] = rows[best], rows[r]
            sign = -sign
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            val = rows[i][c]
            ri, rr = rows[i], rows[r]
            for j in range(c + 1, ncols):
                ri[j] = (piv * ri[j] - val * rr[j]) // prev
            ri[c] = 0
        prev = piv
        piv_cols.append(c)
        r += 1
    return rows, piv_cols, sign


def rank_exact(m: RationalMatrix) -> int:
    """Exact rank over the rationals via fraction-free elimination."""
    rows, _ = _cleared_int_rows(m)
    _, piv_cols, _ = _bareiss_echelon(rows)
    return len(piv_cols)


def kernel_exact(m: RationalMatrix) -> KernelBasis:
    """Exact basis of the right null space.

    Each basis vector is scaled so that its first nonzero entry is 1; vectors
    are ordered by their free column, so output is reproducible.
    """
    rows, _ = _cleared_int_rows(m)
    ech, piv_cols, _ = _bareiss_echelon(rows)
    piv_set = set(piv_cols)
    free_cols = [c for c in range(m.cols) if c not in piv_set]
    vectors = []
    for fc in free_cols:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for r in range(len(piv_cols) - 1, -1, -1):
            pc = piv_cols[r]
            s = sum((Fraction(ech[r][j]) * v[j] for j in range(pc + 1, m.cols)), start=Fraction(0))
            v[pc] = -s / ech[r][pc]
        lead = next(x for x in v if x != 0)
        vectors.append(tuple(x / lead for x in v))
    return KernelBasis(m.cols, tuple(vectors))


def det_exact(m: RationalMatrix) -> Fraction:
    """Exact determinant of a square matrix."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    rows, mults = _cleared_int_rows(m)
    ech, piv_cols, sign = _bareiss_echelon(rows)
    if len(piv_cols) < m.rows:
        return Fraction(0)
    # Bareiss leaves det(permuted integer matrix) as the last pivot.
    last_pivot = ech[m.rows - 1][piv_cols[-1]]
    denom = Fraction(1)
    for f in mults:
        denom *= f
    return Fraction(sign) * last_pivot / denom


def vandermonde(points: Sequence[Fraction], width: int) -> RationalMatrix:
    """Matrix with entry (s, j) = t_s**j for j = 0..width-1."""
    pts = [Fraction(t) for t in points]
    if len(set(pts)) != len(pts):
        raise ValueError("vandermonde points must be pairwise distinct")
    rows = []
    for t in pts:
        row, acc = [], Fraction(1)
        for _ in range(width):
            row.append(acc)
            acc *= t
        rows.append(row)
    return RationalMatrix.from_rows(rows)


def rank_numeric(m: ComplexMatrix, tol: float = 1e-8) -> int:
    """Count singular values above tol times the largest one."""
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    if not np.all(np.isfinite(m.data)):
        raise ValueError("matrix has non-finite entries")
    s = np.linalg.svd(m.data, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


def hstack(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.rows != b.rows:
        raise DimensionError("hstack needs equal row counts")
    rows = [list(a.row(i)) + list(b.row(i)) for i in range(a.rows)]
    return RationalMatrix.from_rows(rows)


def vstack(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.cols != b.cols:
        raise DimensionError("vstack needs equal column counts")
    return RationalMatrix.from_rows(a.to_rows() + b.to_rows())
