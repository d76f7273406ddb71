"""
Sparse exact matrices

Stored column by column: every map in the toolkit is built as the images of basis
vectors, one column at a time.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence, Tuple

Column = Dict[int, Fraction]


@dataclass(frozen=True)
class SparseMatrix:
    nrows: int
    ncols: int
    columns: Tuple[Column, ...]

    @classmethod
    def from_columns(cls, nrows: int, columns: Iterable[Column]) -> "SparseMatrix":
        cols = tuple({i: c for i, c in col.items() if c != 0} for col in columns)
        for col in cols:
            for i in col:
                if not 0 <= i < nrows:
                    raise IndexError(f"row index {i} outside 0..{nrows - 1}")
        return cls(nrows, len(cols), cols)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "SparseMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        columns: List[Column] = [{} for _ in range(ncols)]
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                if value != 0:
                    columns[j][i] = Fraction(value)
        return cls(nrows, ncols, tuple(columns))

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, tuple({i: Fraction(1)} for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "SparseMatrix":
        return cls(nrows, ncols, tuple({} for _ in range(ncols)))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def nnz(self) -> int:
        return sum(len(col) for col in self.columns)

    def is_zero(self) -> bool:
        return all(not col for col in self.columns)

    def rows(self) -> List[Column]:
        """Row-major view: one dict {column: value} per row."""
        out: List[Column] = [{} for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, value in col.items():
                out[i][j] = value
        return out

    def to_dense(self) -> List[List[Fraction]]:
        dense = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, value in col.items():
                dense[i][j] = value
        return dense

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        columns = []
        for col in other.columns:
            acc: Column = {}
            for k, b in col.items():
                for i, a in self.columns[k].items():
                    acc[i] = acc.get(i, 0) + a * b
            columns.append(acc)
        return SparseMatrix.from_columns(self.nrows, columns)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for a, b in zip(self.columns, other.columns)
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.nnz()))
