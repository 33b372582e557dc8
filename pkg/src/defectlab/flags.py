"""Non-splitting flags of a Gale dual, lambda(B) and the reduction B^red."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import bitset
from .config import GaleDual
from .errors import InvalidFlagError, PyramidError
from .exactlin import ExactMatrix, rref


@dataclass(frozen=True)
class Flag:
    flats: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.flats)

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(bitset.indices(F) for F in self.flats)


@dataclass(frozen=True)
class LambdaResult:
    value: int
    witness: Flag


def _check_flag(B: GaleDual, flag: Flag) -> None:
    M = B.matroid
    prev = M.loops
    for j, F in enumerate(flag.flats):
        if not M.is_flat(F):
            raise InvalidFlagError(f"member {j} is not a flat")
        if prev & ~F or F == prev:
            raise InvalidFlagError(f"member {j} does not contain member {j - 1}")
        if M.rank_of(F) != j + 1:
            raise InvalidFlagError(f"member {j} has rank {M.rank_of(F)}, expected {j + 1}")
        prev = F


def _escapes(B: GaleDual, F: int, G: int) -> bool:
    """Is ``s(G)`` outside ``L(F)``?"""
    M = B.matroid
    return not M.in_span(M.int_sum(G), F)


def is_nonsplitting(B: GaleDual, flag: Flag) -> bool:
    _check_flag(B, flag)
    prev = B.matroid.loops
    for F in flag.flats:
        if not _escapes(B, prev, F):
            return False
        prev = F
    return True


def lambda_(B: GaleDual, allow_loops: bool = False) -> LambdaResult:
    """Longest non-splitting flag, memoized per flat.

    ``best(F) = max 1 + best(G)`` over covers ``G`` of ``F`` with
    ``s(G)`` outside ``L(F)``. The witness is the lexicographically least
    longest flag.
    """
    M = B.matroid
    if M.loops and not allow_loops:
        raise PyramidError("zero vectors present; strip pyramid apexes first")
    memo: dict[int, tuple[int, int | None]] = {}

    def best(F: int) -> int:
        hit = memo.get(F)
        if hit is not None:
            return hit[0]
        val, pick = 0, None
        for G in M.covers(F):
            if _escapes(B, F, G):
                v = 1 + best(G)
                if v > val:
                    val, pick = v, G
        memo[F] = (val, pick)
        return val

    root = M.loops
    value = best(root)
    flats = []
    F = memo[root][1]
    while F is not None:
        flats.append(F)
        F = memo[F][1]
    return LambdaResult(value, Flag(tuple(flats)))


def nonsplitting_flags(B: GaleDual) -> Iterator[Flag]:
    """Every non-splitting flag, of every length (small inputs only)."""
    M = B.matroid

    def walk(F: int, path: tuple[int, ...]) -> Iterator[Flag]:
        for G in M.covers(F):
            if _escapes(B, F, G):
                nxt = path + (G,)
                yield Flag(nxt)
                yield from walk(G, nxt)

    yield Flag(())
    yield from walk(M.loops, ())


@dataclass(frozen=True)
class Reduction:
    reduced: GaleDual
    sources: tuple[int, ...]  # the rank-one flat behind each reduced vector
    splitting: tuple[int, ...]


def reduce(B: GaleDual) -> Reduction:
    """Drop splitting lines, replace each non-splitting line by its sum."""
    M = B.matroid
    vecs, src, split = [], [], []
    for F in M.rank_one_flats():
        s = M.subset_sum(F)
        if any(s):
            vecs.append(s)
            src.append(F)
        else:
            split.append(F)
    return Reduction(GaleDual.from_vectors(vecs, dim=M.dim), tuple(src), tuple(split))


def is_irreducible(B: GaleDual) -> bool:
    M = B.matroid
    return not M.loops and all(bitset.size(F) == 1 for F in M.rank_one_flats())


def quotient(B: GaleDual, F: int) -> tuple[GaleDual, tuple[int, ...]]:
    """Project ``B`` minus ``F`` to ``L(B) / L(F)``.

    Coordinates of the quotient are the non-pivot coordinates after
    reduction against the reduced echelon basis of ``L(F)``. Returns the
    projected configuration and the surviving indices.
    """
    M = B.matroid
    keep = tuple(i for i in range(B.n) if not (F >> i) & 1)
    basis = [M.vectors[i] for i in bitset.iter_bits(F)]
    R, piv = rref(ExactMatrix(basis, ncols=M.dim)) if basis else (ExactMatrix((), ncols=M.dim), ())
    free = [k for k in range(M.dim) if k not in piv]
    out = []
    for i in keep:
        v = list(M.vectors[i])
        for r, p in enumerate(piv):
            a = v[p]
            if a:
                v = [x - a * y for x, y in zip(v, R.row(r))]
        out.append(tuple(v[k] for k in free))
    return GaleDual.from_vectors(out, dim=len(free)), keep


def restrict(B: GaleDual, S: int | Sequence[int]) -> GaleDual:
    idx = bitset.indices(S) if isinstance(S, int) else tuple(S)
    return GaleDual.from_vectors([B.matrix.row(i) for i in idx], dim=B.matrix.ncols)


def as_vectors(B: GaleDual) -> list[tuple[Fraction, ...]]:
    return list(B.matrix.rows)
