"""Supports of kernel vectors, maximal chains of supports and rho(A).

A support is the zero pattern complement of a kernel vector of A. Over a
field of characteristic zero the supports are exactly the unions of
circuits of the column matroid, which is what the chain search walks.

Ranks of sigma-matrices are computed through the Gale dual: the quotient
of Q^n by the row space of A is identified with Q^m by x -> B^T x, so

    rank(A; 1_s1; ...; 1_sj) = rank(A) + rank{s(B|s1), ..., s(B|sj)}

and only m-dimensional integer vectors are ever eliminated in the search.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import bitset
from .budget import Budget, Meter
from .config import PointConfiguration, pyramid_index
from .errors import InvalidChainError, PyramidError, SimplexError
from .exactlin import Echelon, ExactMatrix, rank


@dataclass(frozen=True)
class SupportChain:
    supports: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.supports)

    def __iter__(self):
        return iter(self.supports)

    def differences(self) -> tuple[int, ...]:
        out, prev = [], 0
        for s in self.supports:
            out.append(s & ~prev)
            prev = s
        return tuple(out)

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(bitset.indices(s) for s in self.supports)

    def as_indices(self) -> list[list[int]]:
        return [list(bitset.indices(s)) for s in self.supports]


@dataclass(frozen=True)
class RhoResult:
    value: int
    witness: SupportChain | None
    exhaustive: bool
    nodes: int = 0


class SupportLattice:
    """Supports of ``ker A`` reachable from the circuits, with cached covers."""

    def __init__(self, A: PointConfiguration):
        self.A = A
        self.matroid = A.column_matroid
        self.circuits = sorted(self.matroid.circuits(), key=bitset.lex_key)
        top = 0
        for c in self.circuits:
            top |= c
        self.top = top
        self._children: dict[int, tuple[int, ...]] = {}
        self._lock = threading.Lock()

    def kernel_dim(self, S: int) -> int:
        """``dim{v in ker A : supp v in S}``."""
        return bitset.size(S) - self.matroid.rank_of(S)

    def is_support(self, S: int) -> bool:
        covered = 0
        for c in self.circuits:
            if c & ~S == 0:
                covered |= c
        return covered == S

    def children(self, sigma: int) -> tuple[int, ...]:
        """Minimal supports strictly containing ``sigma``, in lex order."""
        kids = self._children.get(sigma)
        if kids is not None:
            return kids
        cands = {sigma | c for c in self.circuits if c & ~sigma}
        minimal = [t for t in cands if not any(u != t and u & ~t == 0 for u in cands)]
        kids = tuple(sorted(minimal, key=bitset.lex_key))
        with self._lock:
            self._children[sigma] = kids
        return kids


def _lattice(A: PointConfiguration) -> SupportLattice:
    lat = A.__dict__.get("_support_lattice")
    if lat is None:
        lat = SupportLattice(A)
        A.__dict__["_support_lattice"] = lat
    return lat


def is_support(A: PointConfiguration, S: int | Sequence[int]) -> bool:
    """True iff some vector of ``ker A`` has support exactly ``S``."""
    if not isinstance(S, int):
        S = bitset.from_indices(S)
    return _lattice(A).is_support(S)


def _check_input(A: PointConfiguration, allow_pyramid: bool) -> None:
    if A.m == 0:
        raise SimplexError("m(A) = 0: no circuits, no chains")
    if not allow_pyramid and pyramid_index(A).p > 0:
        raise PyramidError("pyramidal input; strip apexes with pyramid_index first")


def maximal_chains(A: PointConfiguration, budget: Budget | None = None,
                   meter: Meter | None = None) -> Iterator[SupportChain]:
    """Every maximal chain of supports, in lexicographic order.

    The top of every chain is the union of all circuits (the full index set
    when ``A`` is not a pyramid). Stops silently when the budget runs out;
    check ``meter.exhausted`` to tell a partial stream from a complete one.
    """
    if A.m == 0:
        raise SimplexError("m(A) = 0: no circuits, no chains")
    lat = _lattice(A)
    meter = meter or (budget or Budget()).meter()
    path: list[int] = []

    def walk(sigma: int) -> Iterator[SupportChain]:
        if not meter.tick():
            return
        path.append(sigma)
        if sigma == lat.top:
            yield SupportChain(tuple(path))
        else:
            for tau in lat.children(sigma):
                yield from walk(tau)
                if meter.exhausted:
                    break
        path.pop()

    for c in lat.circuits:
        yield from walk(c)
        if meter.exhausted:
            return


def check_chain(A: PointConfiguration, chain: SupportChain) -> None:
    lat = _lattice(A)
    sup = chain.supports
    if not sup or sup[0] not in lat.circuits:
        raise InvalidChainError("first support is not a circuit")
    for a, b in zip(sup, sup[1:]):
        if b not in lat.children(a):
            raise InvalidChainError(f"{bitset.indices(b)} does not cover {bitset.indices(a)}")
    if sup[-1] != lat.top:
        raise InvalidChainError("chain does not reach the top support")


def sigma_matrix(A: PointConfiguration, chain: SupportChain) -> ExactMatrix:
    """``A`` stacked over the 0/1 indicator rows of a maximal chain."""
    check_chain(A, chain)
    M = A.matrix
    for s in chain.supports:
        M = M.stack([1 if (s >> i) & 1 else 0 for i in range(A.n)])
    return M


def sigma_rank(A: PointConfiguration, supports: Sequence[int]) -> int:
    """Rank of ``A`` stacked over indicator rows, via the Gale projection."""
    G = A.gale.matroid
    ech = Echelon(G.dim, (G.int_sum(s) for s in supports))
    return A.rank + ech.rank


def rho(A: PointConfiguration, budget: Budget | None = None, seed: SupportChain | None = None,
        allow_pyramid: bool = False) -> RhoResult:
    """Maximum sigma-matrix rank by branch and bound over chains.

    ``seed`` (typically the phi-image of an optimal iterated circuit) gives
    a floor that prunes from the start. Among chains of maximal rank the
    lexicographically least is returned.
    """
    _check_input(A, allow_pyramid)
    lat = _lattice(A)
    G = A.gale.matroid
    m, base = A.m, A.rank
    top_drop = 0 if any(G.int_sum(lat.top)) else 1
    ceiling = base + m - top_drop

    meter = (budget or Budget()).meter()
    floor = sigma_rank(A, seed.supports) if seed is not None else -1
    best = -1
    best_chain: tuple[int, ...] | None = None
    path: list[int] = []
    ech = Echelon(G.dim)
    # (support, span) states already explored: a revisit cannot beat the best
    done: set = set()

    def walk(sigma: int) -> bool:
        nonlocal best, best_chain
        if not meter.tick():
            return False
        added = ech.add(G.int_sum(sigma))
        state = (sigma, ech.key())
        if state in done:
            if added:
                ech.pop()
            return True
        path.append(sigma)
        j = len(path)
        if sigma == lat.top:
            value = base + ech.rank
            if value > best:
                best, best_chain = value, tuple(path)
        else:
            bound = base + ech.rank + (m - j) - top_drop
            if bound >= floor and bound > best:
                for tau in lat.children(sigma):
                    if not walk(tau) or best == ceiling:
                        break
        path.pop()
        if added:
            ech.pop()
        if meter.exhausted:
            return False
        done.add(state)
        return True

    for c in lat.circuits:
        if not walk(c) or best == ceiling:
            break

    exhaustive = not meter.exhausted
    if best < floor:
        return RhoResult(floor, seed, False, meter.nodes)
    return RhoResult(best, SupportChain(best_chain), exhaustive, meter.nodes)


def literal_rank(A: PointConfiguration, chain: SupportChain) -> int:
    """Oracle: rank of the explicit sigma-matrix."""
    return rank(sigma_matrix(A, chain))
