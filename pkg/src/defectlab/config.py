"""Point configurations, homogenizations, pyramids and Gale duals."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .exactlin import ExactMatrix, in_row_span, integer_vectors, kernel_basis, primitive, rank
from .errors import DualHomogeneityError
from .matroid import LinearMatroid


@dataclass(frozen=True, eq=False)
class PointConfiguration:
    """Points ``a_1..a_n`` as the columns of an ``e x n`` rational matrix.

    Repeated points are allowed. ``n``, ``d`` (affine dimension), ``m``
    (codimension) and homogeneity are computed once and cached.
    """

    matrix: ExactMatrix

    def __post_init__(self):
        if self.matrix.ncols == 0:
            raise ValueError("empty configuration")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PointConfiguration":
        return cls(ExactMatrix(rows))

    @classmethod
    def from_points(cls, points: Sequence[Sequence]) -> "PointConfiguration":
        return cls(ExactMatrix.from_columns(points))

    def __eq__(self, other) -> bool:
        return isinstance(other, PointConfiguration) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"PointConfiguration(n={self.n}, d={self.d}, m={self.m}, homogeneous={self.homogeneous})"

    @property
    def e(self) -> int:
        return self.matrix.nrows

    @property
    def n(self) -> int:
        return self.matrix.ncols

    @cached_property
    def rank(self) -> int:
        return rank(self.matrix)

    @cached_property
    def d(self) -> int:
        return rank(self.matrix.stack([1] * self.n)) - 1

    @property
    def m(self) -> int:
        return self.n - self.d - 1

    @cached_property
    def homogeneous(self) -> bool:
        return in_row_span([1] * self.n, self.matrix)

    @cached_property
    def points(self) -> list[tuple[Fraction, ...]]:
        return self.matrix.columns()

    @cached_property
    def int_points(self) -> list[tuple[int, ...]]:
        """Columns scaled by one common factor (all relations preserved)."""
        return integer_vectors(self.points)[0]

    @cached_property
    def column_matroid(self) -> LinearMatroid:
        return LinearMatroid(self.points)

    @cached_property
    def gale(self) -> "GaleDual":
        return gale_dual(self)

    def restrict(self, keep: Sequence[int]) -> "PointConfiguration":
        return PointConfiguration(self.matrix.select_columns(list(keep)))


@dataclass(frozen=True, eq=False)
class GaleDual:
    """``n x k`` matrix whose columns are a basis of ``ker A``; row ``i`` is ``b_i``."""

    matrix: ExactMatrix
    source: PointConfiguration | None = field(default=None, repr=False)

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence], dim: int | None = None) -> "GaleDual":
        rows = [tuple(v) for v in vectors]
        if not rows:
            return cls(ExactMatrix((), ncols=dim or 0))
        return cls(ExactMatrix(rows))

    @property
    def n(self) -> int:
        return self.matrix.nrows

    @property
    def rows(self) -> list[tuple[Fraction, ...]]:
        return list(self.matrix.rows)

    @cached_property
    def matroid(self) -> LinearMatroid:
        return LinearMatroid(self.matrix.rows, dim=self.matrix.ncols)

    @property
    def rank(self) -> int:
        return self.matroid.rank

    @cached_property
    def total(self) -> tuple[Fraction, ...]:
        """``s(B)``, the sum of all the vectors."""
        return tuple(sum(col, Fraction(0)) for col in self.matrix.columns())

    @property
    def dual_homogeneous(self) -> bool:
        return not any(self.total)

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True)
class PyramidInfo:
    p: int
    apexes: tuple[int, ...]
    core: PointConfiguration | None  # None when every point is an apex
    kept: tuple[int, ...]


def make_configuration(A) -> PointConfiguration:
    if isinstance(A, PointConfiguration):
        return A
    if not isinstance(A, ExactMatrix):
        A = ExactMatrix(A)
    return PointConfiguration(A)


def bar(A: PointConfiguration) -> PointConfiguration:
    """Prepend a row of ones: ``(1, a_i)`` for every point."""
    return PointConfiguration(ExactMatrix([[1] * A.n], ncols=A.n).stack(A.matrix))


def homogenize(A: PointConfiguration) -> PointConfiguration:
    """``A^h``: the point ``(1, 0, ..., 0)`` (index 0) followed by ``bar(A)``."""
    top = [[1] * (A.n + 1)]
    body = [[0] + list(r) for r in A.matrix.rows]
    return PointConfiguration(ExactMatrix(top + body, ncols=A.n + 1))


def gale_dual(A: PointConfiguration) -> GaleDual:
    """Canonical Gale dual of the matrix as given (``ker A``, no bar).

    Each kernel basis vector from the rref is cleared to a primitive integer
    vector with positive first nonzero entry.
    """
    K = kernel_basis(A.matrix)
    cols = [primitive(integer_vectors([c])[0][0]) for c in K.columns()]
    if not cols:
        return GaleDual(ExactMatrix([[] for _ in range(A.n)], ncols=0), source=A)
    return GaleDual(ExactMatrix.from_columns(cols), source=A)


def gale_homogenize(B: GaleDual) -> GaleDual:
    """``B^H``: prepend ``-s(B)``. Needs ``s(B) != 0``."""
    s = B.total
    if not any(s):
        raise DualHomogeneityError("already dual-homogeneous")
    M = ExactMatrix([[-x for x in s]], ncols=B.matrix.ncols).stack(B.matrix)
    src = homogenize(B.source) if B.source is not None else None
    return GaleDual(M, source=src)


def pyramid_index(A: PointConfiguration) -> PyramidInfo:
    """Pyramidal index: zero rows of a Gale dual of ``bar(A)``.

    The apexes are removed to give the core ``A'`` (which has ``p = 0``).
    """
    barred = A.matrix.stack([1] * A.n) if not A.homogeneous else A.matrix
    K = kernel_basis(barred)
    apexes = tuple(i for i, row in enumerate(K.rows) if not any(row))
    kept = tuple(i for i in range(A.n) if i not in set(apexes))
    core = A.restrict(kept) if kept else None
    return PyramidInfo(len(apexes), apexes, core, kept)
