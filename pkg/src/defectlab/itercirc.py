"""Iterated circuits, eta, iota and the maps phi / psi to support chains.

Parts are bitmasks over the point indices. Projections modulo the span of
earlier parts are never formed explicitly: every quantity needed is a
difference of ranks of integer vector families.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import bitset
from .budget import Budget
from .config import PointConfiguration, pyramid_index
from .errors import InvalidIteratedCircuit, PyramidError, SimplexError
from .exactlin import Echelon
from .rho import SupportChain, _lattice


@dataclass(frozen=True)
class IteratedCircuit:
    parts: tuple[int, ...]

    @property
    def union(self) -> int:
        u = 0
        for p in self.parts:
            u |= p
        return u

    def __len__(self) -> int:
        return len(self.parts)

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(bitset.indices(p) for p in self.parts)


@dataclass(frozen=True)
class IotaResult:
    value: int
    witness: IteratedCircuit
    exhaustive: bool = True


def _as_mask(part) -> int:
    return part if isinstance(part, int) else bitset.from_indices(part)


class _Projector:
    """Rank arithmetic of points modulo the span of a fixed index set."""

    def __init__(self, A: PointConfiguration, base: int):
        self.pts = A.int_points
        self.base = Echelon(A.e, (self.pts[i] for i in bitset.iter_bits(base)))
        self.dim = self.base.rank

    def linear_rank(self, idx: Sequence[int]) -> int:
        e = self.base.copy()
        for i in idx:
            e.add(self.pts[i])
        return e.rank - self.dim

    def affine_dim(self, idx: Sequence[int]) -> int:
        if not idx:
            return -1
        e = self.base.copy()
        t0 = self.pts[idx[0]]
        for i in idx[1:]:
            e.add([x - y for x, y in zip(self.pts[i], t0)])
        return e.rank - self.dim

    def same_point(self, i: int, j: int) -> bool:
        return self.base.contains([x - y for x, y in zip(self.pts[i], self.pts[j])])

    def is_zero(self, i: int) -> bool:
        return self.base.contains(self.pts[i])


def _part_condition(P: _Projector, idx: tuple[int, ...]) -> str | None:
    """None when the projected part is admissible, else the failed condition."""
    if len(idx) < 2:
        return "part has fewer than two points"
    if len(idx) == 2 and P.same_point(*idx):
        return None
    for i, j in combinations(idx, 2):
        if P.same_point(i, j):
            return "projection is not injective"
    k = len(idx) - 1
    if P.linear_rank(idx) != k:
        return "projection is not minimally linearly dependent"
    for drop in range(len(idx)):
        if P.linear_rank(idx[:drop] + idx[drop + 1:]) != k:
            return "projection is not minimally linearly dependent"
    return None


def _part_weight(P: _Projector, idx: tuple[int, ...]) -> int:
    if len(idx) == 2 and P.same_point(*idx):
        return 0
    return P.affine_dim(idx)


def validate(A: PointConfiguration, parts: Sequence) -> IteratedCircuit:
    """Check the iterated circuit conditions; raise naming the failing part."""
    masks = tuple(_as_mask(p) for p in parts)
    if not masks:
        raise InvalidIteratedCircuit(0, "no parts")
    seen = 0
    for j, p in enumerate(masks):
        if p & seen:
            raise InvalidIteratedCircuit(j, "parts are not disjoint")
        if p >> A.n:
            raise InvalidIteratedCircuit(j, "index out of range")
        if j == 0:
            if p not in A.column_matroid.circuits():
                raise InvalidIteratedCircuit(0, "first part is not a circuit")
        else:
            why = _part_condition(_Projector(A, seen), bitset.indices(p))
            if why:
                raise InvalidIteratedCircuit(j, why)
        seen |= p
    return IteratedCircuit(masks)


def eta(A: PointConfiguration, I: IteratedCircuit) -> int:
    """Sum of the affine dimensions of the projected parts.

    The first part is a circuit and contributes ``|I_1| - 2``; a part that
    collapses to a repeated point contributes 0.
    """
    total = bitset.size(I.parts[0]) - 2
    seen = I.parts[0]
    for p in I.parts[1:]:
        total += _part_weight(_Projector(A, seen), bitset.indices(p))
        seen |= p
    return total


def affine_dim(A: PointConfiguration, S: int) -> int:
    return A.column_matroid.rank_of(S) - 1 if S else -1


def _check_input(A: PointConfiguration, allow_pyramid: bool) -> None:
    if A.m == 0:
        raise SimplexError("m(A) = 0: no circuit exists")
    if not allow_pyramid and pyramid_index(A).p > 0:
        raise PyramidError("pyramidal input; strip apexes with pyramid_index first")


def _step_weight(A: PointConfiguration, sigma: int, tau: int) -> int:
    diff = tau & ~sigma
    if bitset.size(diff) == 1:
        return 0
    return _part_weight(_Projector(A, sigma), bitset.indices(diff))


def iota(A: PointConfiguration, budget: Budget | None = None, allow_pyramid: bool = False) -> IotaResult:
    """Maximal eta, as a longest-path problem on the support lattice.

    Every maximal chain of supports yields an iterated circuit (its
    differences of size at least two) and the optimum is attained this way,
    so ``g(s) = max_t [w(s, t) + g(t)]`` over covers ``t`` of ``s`` suffices.
    Singleton differences lie in the span of what precedes them, so the
    span of the earlier parts equals the span of ``s``.
    """
    _check_input(A, allow_pyramid)
    lat = _lattice(A)
    meter = (budget or Budget()).meter()
    memo: dict[int, int] = {}
    choice: dict[int, int] = {}

    def g(sigma: int) -> int:
        v = memo.get(sigma)
        if v is not None:
            return v
        meter.tick()
        best, pick = 0, None
        if sigma != lat.top:
            best = -1
            for tau in lat.children(sigma):
                cand = _step_weight(A, sigma, tau) + g(tau)
                if cand > best:
                    best, pick = cand, tau
        memo[sigma] = best
        choice[sigma] = pick
        return best

    best, root = -1, None
    for c in lat.circuits:
        v = bitset.size(c) - 2 + g(c)
        if v > best:
            best, root = v, c

    chain = [root]
    while choice[chain[-1]] is not None:
        chain.append(choice[chain[-1]])
    return IotaResult(best, psi(A, SupportChain(tuple(chain))), not meter.exhausted)


def _admissible_parts(A: PointConfiguration, used: int):
    P = _Projector(A, used)
    free = [i for i in range(A.n) if not (used >> i) & 1]
    for k in range(2, len(free) + 1):
        for idx in combinations(free, k):
            if _part_condition(P, idx) is None:
                yield bitset.from_indices(idx), _part_weight(P, idx)


def iota_direct(A: PointConfiguration, allow_pyramid: bool = False) -> int:
    """Oracle: exhaustive search over part sequences (small n only)."""
    _check_input(A, allow_pyramid)
    memo: dict[int, int] = {}

    def f(used: int) -> int:
        if used in memo:
            return memo[used]
        best = 0
        for T, w in _admissible_parts(A, used):
            best = max(best, w + f(used | T))
        memo[used] = best
        return best

    return max(bitset.size(c) - 2 + f(c) for c in A.column_matroid.circuits())


def all_iterated_circuits(A: PointConfiguration, limit: int = 100_000) -> list[IteratedCircuit]:
    """Every iterated circuit (small n only), for the bijection tests."""
    out: list[IteratedCircuit] = []

    def grow(parts: tuple[int, ...], used: int) -> None:
        if len(out) >= limit:
            return
        out.append(IteratedCircuit(parts))
        for T, _ in _admissible_parts(A, used):
            grow(parts + (T,), used | T)

    for c in A.column_matroid.circuits():
        grow((c,), c)
    return out


def extend_to_full(A: PointConfiguration, I: IteratedCircuit) -> IteratedCircuit:
    """Append parts until the union spans ``A``.

    Each new part is the first admissible set, by size then lex order, that
    contains a point outside the current span.
    """
    parts, used = list(I.parts), I.union
    full_rank = A.column_matroid.rank
    M = A.column_matroid
    while M.rank_of(used) < full_rank:
        P = _Projector(A, used)
        free = [i for i in range(A.n) if not (used >> i) & 1]
        found = None
        for k in range(2, len(free) + 1):
            for idx in combinations(free, k):
                if all(P.is_zero(i) for i in idx):
                    continue
                if _part_condition(P, idx) is None:
                    found = bitset.from_indices(idx)
                    break
            if found:
                break
        if found is None:
            raise InvalidIteratedCircuit(len(parts), "no admissible extension found")
        parts.append(found)
        used |= found
    return IteratedCircuit(tuple(parts))


def phi(A: PointConfiguration, I: IteratedCircuit) -> SupportChain:
    """Chain whose differences are the parts, then the remaining singletons."""
    if A.column_matroid.rank_of(I.union) < A.column_matroid.rank:
        raise ValueError("extend first: the iterated circuit is not full-dimensional")
    sups, acc = [], 0
    for p in I.parts:
        acc |= p
        sups.append(acc)
    for i in range(A.n):
        if not (acc >> i) & 1:
            acc |= 1 << i
            sups.append(acc)
    return SupportChain(tuple(sups))


def psi(A: PointConfiguration, chain: SupportChain) -> IteratedCircuit:
    """Differences of size at least two, in chain order."""
    return IteratedCircuit(tuple(d for d in chain.differences() if bitset.size(d) >= 2))
