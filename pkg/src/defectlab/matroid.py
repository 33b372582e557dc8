"""Linear matroids over the rationals.

Used twice: as the column matroid of a configuration (circuits are the
minimal kernel supports) and as the row matroid of a Gale dual (flats,
closures, subset sums). Ground sets are index bitmasks, at most 64 wide.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Sequence

from . import bitset
from .exactlin import Echelon, integer_vectors, primitive
from .errors import NotAFlatError

MAX_GROUND = 64


class LinearMatroid:
    """Matroid of a finite list of rational vectors, indexed ``0..n-1``.

    The vectors are scaled by one common integer so all internal arithmetic
    is on ints; sums are reported back in the original scale.
    """

    def __init__(self, vectors: Sequence[Sequence], dim: int | None = None):
        vecs = [tuple(Fraction(x) for x in v) for v in vectors]
        if len(vecs) > MAX_GROUND:
            raise ValueError(f"ground set of {len(vecs)} elements exceeds the {MAX_GROUND}-element cap")
        if vecs:
            dim = len(vecs[0])
            if any(len(v) != dim for v in vecs):
                raise ValueError("vectors of unequal length")
        self.n = len(vecs)
        self.dim = dim or 0
        self.vectors = vecs
        self.int_vectors, self.scale = integer_vectors(vecs)
        self.ground = bitset.full(self.n)
        self._rank_memo: dict[int, int] = {0: 0}
        self._closure_memo: dict[int, int] = {}
        self._lock = threading.Lock()
        self._circuits: list[int] | None = None

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"LinearMatroid(n={self.n}, rank={self.rank})"

    # rank and spans

    def echelon(self, S: int) -> Echelon:
        return Echelon(self.dim, (self.int_vectors[i] for i in bitset.iter_bits(S)))

    def rank_of(self, S: int) -> int:
        """Dimension of the span of the selected vectors."""
        r = self._rank_memo.get(S)
        if r is None:
            r = self.echelon(S).rank
            with self._lock:
                self._rank_memo[S] = r
        return r

    @property
    def rank(self) -> int:
        return self.rank_of(self.ground)

    def is_independent(self, S: int) -> bool:
        return self.rank_of(S) == bitset.size(S)

    def closure(self, S: int) -> int:
        """All elements whose vector lies in the span of ``S``."""
        c = self._closure_memo.get(S)
        if c is None:
            ech = self.echelon(S)
            c = S
            for i in range(self.n):
                if not (S >> i) & 1 and ech.contains(self.int_vectors[i]):
                    c |= 1 << i
            with self._lock:
                self._closure_memo[S] = c
        return c

    def is_flat(self, S: int) -> bool:
        return self.closure(S) == S

    @property
    def loops(self) -> int:
        return self.closure(0)

    def in_span(self, v: Sequence[int], S: int) -> bool:
        """Is the integer vector ``v`` (internal scale) in the span of ``S``?"""
        return self.echelon(S).contains(v)

    # sums

    def int_sum(self, S: int) -> tuple[int, ...]:
        acc = [0] * self.dim
        for i in bitset.iter_bits(S):
            for k, x in enumerate(self.int_vectors[i]):
                acc[k] += x
        return tuple(acc)

    def subset_sum(self, S: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.scale) for x in self.int_sum(S))

    # circuits and flats

    def circuits(self) -> list[int]:
        """All circuits, sorted by size and then lexicographically.

        Independent sets are grown in increasing index order; a dependent
        extension ``I + x`` is reported when it is itself minimal, which finds
        every circuit exactly once (at its largest element).
        """
        if self._circuits is not None:
            return list(self._circuits)
        found: list[int] = []
        vecs = self.int_vectors

        def grow(I: int, ech: Echelon, start: int) -> None:
            for x in range(start, self.n):
                if ech.add(vecs[x]):
                    grow(I | (1 << x), ech, x + 1)
                    ech.pop()
                else:
                    cand = I | (1 << x)
                    k = bitset.size(I)
                    if all(self.rank_of(cand & ~(1 << y)) == k for y in bitset.iter_bits(I)):
                        found.append(cand)

        grow(0, Echelon(self.dim), 0)
        found.sort(key=bitset.sort_key)
        self._circuits = found
        return list(found)

    def rank_one_flats(self) -> list[int]:
        """Parallel classes of the nonzero vectors, ordered by smallest element."""
        classes: dict[tuple[int, ...], int] = {}
        order: list[tuple[int, ...]] = []
        for i, v in enumerate(self.int_vectors):
            if not any(v):
                continue
            key = primitive(v)
            if key not in classes:
                classes[key] = 0
                order.append(key)
            classes[key] |= 1 << i
        return [classes[k] for k in order]

    def covers(self, F: int) -> list[int]:
        """Flats of rank ``rank(F) + 1`` containing the flat ``F``."""
        if not self.is_flat(F):
            raise NotAFlatError(f"{bitset.indices(F)} is not a flat")
        out: list[int] = []
        seen = F
        for x in range(self.n):
            if (seen >> x) & 1:
                continue
            G = self.closure(F | (1 << x))
            out.append(G)
            seen |= G
        out.sort(key=bitset.lex_key)
        return out
