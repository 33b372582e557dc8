"""Exact linear algebra over the rationals.

Everything here is exact: entries are :class:`fractions.Fraction` and the
elimination kernels work on integer-scaled rows (fraction-free, Bareiss
style) so rank decisions never depend on rounding.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def integer_row(row: Sequence[Fraction]) -> list[int]:
    """Scale a rational row to integers (same span, same zero pattern)."""
    den = reduce(_lcm, (Fraction(x).denominator for x in row), 1)
    return [int(Fraction(x) * den) for x in row]


def integer_vectors(vectors: Sequence[Sequence]) -> tuple[list[tuple[int, ...]], int]:
    """Scale a whole vector family by one common factor.

    Returns the integer vectors and the factor used.  A single factor keeps
    every linear relation *and* every subset sum intact, which per-vector
    scaling would not.
    """
    den = 1
    for v in vectors:
        for x in v:
            den = _lcm(den, Fraction(x).denominator)
    return [tuple(int(Fraction(x) * den) for x in v) for v in vectors], den


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries; first nonzero > 0."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    out = [x // g for x in v]
    for x in out:
        if x:
            if x < 0:
                out = [-y for y in out]
            break
    return tuple(out)


class ExactMatrix:
    """Dense immutable matrix of rationals.

    Empty shapes (``e x 0`` and ``0 x n``) are allowed; pass ``ncols`` when
    there are no rows.
    """

    __slots__ = ("rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable] = (), ncols: int | None = None):
        data = tuple(tuple(_frac(x) for x in r) for r in rows)
        if data:
            width = len(data[0])
            for i, r in enumerate(data):
                if len(r) != width:
                    raise ValueError(f"ragged matrix: row {i} has {len(r)} entries, expected {width}")
            if ncols is not None and ncols != width:
                raise ValueError(f"ncols={ncols} does not match row width {width}")
        else:
            width = ncols or 0
        self.rows = data
        self.nrows = len(data)
        self.ncols = width
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> "ExactMatrix":
        cols = [tuple(c) for c in columns]
        if not cols:
            return cls([[] for _ in range(nrows or 0)], ncols=0)
        height = len(cols[0])
        if any(len(c) != height for c in cols):
            raise ValueError("columns of unequal length")
        if height == 0:
            return cls((), ncols=len(cols))
        return cls(zip(*cols), ncols=len(cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.rows[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "ExactMatrix":
        if self.nrows == 0:
            return ExactMatrix([[] for _ in range(self.ncols)], ncols=0) if self.ncols else ExactMatrix()
        return ExactMatrix(zip(*self.rows), ncols=self.nrows)

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def select_columns(self, idx: Sequence[int]) -> "ExactMatrix":
        if self.nrows == 0:
            return ExactMatrix((), ncols=len(idx))
        return ExactMatrix(([r[j] for j in idx] for r in self.rows), ncols=len(idx))

    def select_rows(self, idx: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix((self.rows[i] for i in idx), ncols=self.ncols)

    def stack(self, other: "ExactMatrix | Sequence") -> "ExactMatrix":
        """Vertical concatenation; ``other`` may be a matrix or a single row."""
        if not isinstance(other, ExactMatrix):
            other = ExactMatrix([other], ncols=self.ncols)
        if other.ncols != self.ncols:
            raise ValueError(f"cannot stack {self.shape} over {other.shape}")
        return ExactMatrix(self.rows + other.rows, ncols=self.ncols)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        return ExactMatrix(
            ([sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self.rows),
            ncols=other.ncols,
        )

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def int_rows(self) -> list[list[int]]:
        return [integer_row(r) for r in self.rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, self.rows))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"ExactMatrix({self.nrows}x{self.ncols}: [{body}])"

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]


def _bareiss_rank(rows: list[list[int]]) -> int:
    if not rows:
        return 0
    m = [r[:] for r in rows]
    nr, nc = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nr):
            a = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, nc):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == nr:
            break
    return r


def rank(M: ExactMatrix) -> int:
    """Exact rank over the rationals (0 for empty matrices)."""
    if M.nrows == 0 or M.ncols == 0:
        return 0
    return _bareiss_rank(M.int_rows())


def rref(M: ExactMatrix) -> tuple[ExactMatrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns.

    Pivoting is leftmost column first, first nonzero row within it, so the
    result is deterministic. Elimination is fraction-free; rows are divided
    by their pivots only at the end.
    """
    if M.nrows == 0:
        return M, ()
    m = M.int_rows()
    nr, nc = M.nrows, M.ncols
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p_row = m[r]
        p = p_row[c]
        for i in range(nr):
            if i == r or m[i][c] == 0:
                continue
            a = m[i][c]
            new = [p * x - a * y for x, y in zip(m[i], p_row)]
            g = 0
            for x in new:
                g = gcd(g, x)
            m[i] = [x // g for x in new] if g > 1 else new
        pivots.append(c)
        r += 1
        if r == nr:
            break
    out = []
    for i, row in enumerate(m):
        if i < len(pivots):
            p = row[pivots[i]]
            out.append([Fraction(x, p) for x in row])
        else:
            out.append([Fraction(0)] * nc)
    return ExactMatrix(out, ncols=nc), tuple(pivots)


def kernel_basis(M: ExactMatrix) -> ExactMatrix:
    """Columns form a basis of the right kernel of ``M``.

    One basis vector per free column of ``rref(M)``, in increasing column
    order, with a 1 in its free position.
    """
    n = M.ncols
    R, pivots = rref(M)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    cols = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R[i, f]
        cols.append(v)
    if not cols:
        return ExactMatrix([[] for _ in range(n)], ncols=0) if n else ExactMatrix()
    return ExactMatrix.from_columns(cols)


def in_row_span(v: Sequence, M: ExactMatrix) -> bool:
    """True iff ``v`` is a rational combination of the rows of ``M``."""
    if len(v) != M.ncols:
        raise ValueError(f"vector of length {len(v)} against matrix with {M.ncols} columns")
    if all(_frac(x) == 0 for x in v):
        return True
    return rank(M.stack(list(v))) == rank(M)


def column_span_equal(M: ExactMatrix, N: ExactMatrix) -> bool:
    """Do the columns of ``M`` and ``N`` span the same subspace?"""
    if M.nrows != N.nrows:
        return False
    r = rank(M)
    return r == rank(N) and rank(ExactMatrix.from_columns(M.columns() + N.columns(), M.nrows)) == r


class Echelon:
    """Incrementally built integer echelon basis of a subspace.

    Rows are kept primitive; each stored row is already reduced against the
    rows before it, so reducing a vector in insertion order is exact.
    ``pop`` undoes the most recent successful ``add`` (used by DFS searches).
    """

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int, vectors: Iterable[Sequence[int]] = ()):
        self.dim = dim
        self.rows: list[tuple[int, tuple[int, ...]]] = []
        for v in vectors:
            self.add(v)

    def copy(self) -> "Echelon":
        e = Echelon(self.dim)
        e.rows = list(self.rows)
        return e

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[int]) -> list[int]:
        w = list(v)
        for p, row in self.rows:
            a = w[p]
            if a:
                b = row[p]
                w = [b * x - a * y for x, y in zip(w, row)]
        return w

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence[int]) -> bool:
        w = self.reduce(v)
        for p, x in enumerate(w):
            if x:
                self.rows.append((p, primitive(w)))
                return True
        return False

    def pop(self) -> None:
        self.rows.pop()

    def key(self) -> tuple:
        """Canonical key of the subspace.

        Integer form of the reduced row echelon form: rows sorted by pivot,
        cleared above and below every pivot, primitive with positive pivot.
        """
        rows = sorted(self.rows)
        out: list[list[int]] = [list(r) for _, r in rows]
        piv = [p for p, _ in rows]
        for k in range(len(out) - 1, -1, -1):
            p, rk = piv[k], out[k]
            for i in range(k):
                a = out[i][p]
                if a:
                    b = rk[p]
                    out[i] = [b * x - a * y for x, y in zip(out[i], rk)]
        keyed = []
        for p, r in zip(piv, out):
            v = primitive(r)
            if v[p] < 0:
                v = tuple(-x for x in v)
            keyed.append(v)
        return tuple(keyed)
