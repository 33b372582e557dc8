"""Cayley decompositions on the Gale side: c, theta and the FI-decomposition.

A Cayley decomposition of A corresponds to a partition of the Gale dual
into zero-sum parts. For such a partition with r + 1 parts,

    r - c = sum over parts (1 - dim L(B_j)) - 1 + dim L(B),

which is additive over parts, so theta is a maximum over set partitions
solved by dynamic programming on the set of still unassigned indices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from . import bitset
from .config import GaleDual, PointConfiguration
from .errors import DualHomogeneityError, InvalidPartitionError, PyramidError
from .exactlin import Echelon, ExactMatrix, rank
from .flags import reduce, restrict

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CayleyPartition:
    """Parts as bitmasks, ordered by their smallest element."""

    parts: tuple[int, ...]

    @classmethod
    def of(cls, parts: Sequence) -> "CayleyPartition":
        masks = [p if isinstance(p, int) else bitset.from_indices(p) for p in parts]
        return cls(tuple(sorted(masks, key=bitset.lowest)))

    @property
    def r(self) -> int:
        return len(self.parts) - 1

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(bitset.indices(p) for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class ThetaResult:
    theta: int
    best_partition: CayleyPartition
    fi_partition: CayleyPartition
    all_theta_partitions_count: int
    fi_count: int = 1

    @property
    def fi_unique(self) -> bool:
        return self.fi_count == 1


def _check_partition(B: GaleDual, P: CayleyPartition) -> None:
    M = B.matroid
    seen = 0
    for p in P.parts:
        if not p:
            raise InvalidPartitionError("empty part")
        if p & seen:
            raise InvalidPartitionError("parts overlap")
        if any(M.int_sum(p)):
            raise InvalidPartitionError(f"part {bitset.indices(p)} does not sum to zero")
        seen |= p
    if seen != M.ground:
        raise InvalidPartitionError("parts do not cover the configuration")


def c_of_partition(B: GaleDual, P: CayleyPartition | Sequence) -> int:
    if not isinstance(P, CayleyPartition):
        P = CayleyPartition.of(P)
    _check_partition(B, P)
    M = B.matroid
    return sum(M.rank_of(p) for p in P.parts) - M.rank


def zero_sum_subsets(B: GaleDual, within: int | None = None) -> list[int]:
    """Nonempty zero-sum subsets of ``within`` (default: everything).

    Depth-first over the elements in index order. A branch is cut when, in
    some coordinate, the partial sum cannot be brought back to zero by the
    positive and negative entries still available.
    """
    M = B.matroid
    idx = list(bitset.iter_bits(M.ground if within is None else within))
    vecs = [M.int_vectors[i] for i in idx]
    dim, k = M.dim, len(idx)
    # suffix totals of positive and negative entries, per coordinate
    pos = [[0] * dim for _ in range(k + 1)]
    neg = [[0] * dim for _ in range(k + 1)]
    for t in range(k - 1, -1, -1):
        for c in range(dim):
            x = vecs[t][c]
            pos[t][c] = pos[t + 1][c] + (x if x > 0 else 0)
            neg[t][c] = neg[t + 1][c] + (x if x < 0 else 0)
    out: list[int] = []
    acc = [0] * dim

    def walk(t: int, mask: int) -> None:
        for c in range(dim):
            if acc[c] + pos[t][c] < 0 or acc[c] + neg[t][c] > 0:
                return
        if t == k:
            if mask and not any(acc):
                out.append(mask)
            return
        v = vecs[t]
        for c in range(dim):
            acc[c] += v[c]
        walk(t + 1, mask | (1 << idx[t]))
        for c in range(dim):
            acc[c] -= v[c]
        walk(t + 1, mask)

    walk(0, 0)
    return out


def _parts_by_owner(B: GaleDual) -> dict[int, list[int]]:
    owners: dict[int, list[int]] = {}
    for S in zero_sum_subsets(B):
        owners.setdefault(bitset.lowest(S), []).append(S)
    for lst in owners.values():
        lst.sort(key=bitset.lex_key)
    return owners


def dual_homogeneous_partitions(B: GaleDual) -> Iterator[CayleyPartition]:
    """Every partition into zero-sum parts; each part owned by its minimum."""
    if not B.dual_homogeneous:
        raise DualHomogeneityError("s(B) != 0")
    owners = _parts_by_owner(B)

    def walk(R: int, acc: tuple[int, ...]) -> Iterator[CayleyPartition]:
        if not R:
            yield CayleyPartition(acc)
            return
        for P in owners.get(bitset.lowest(R), ()):
            if P & ~R == 0:
                yield from walk(R & ~P, acc + (P,))

    if B.n:
        yield from walk(B.matroid.ground, ())


@dataclass
class _Cell:
    score: int  # sum of (1 - dim L(part)) over the parts
    count: int
    best: tuple  # canonical maximizer
    min_parts: int
    min_count: int
    fi: tuple  # canonical maximizer with the fewest parts


def theta(B: GaleDual) -> ThetaResult:
    """Exact theta with the canonical best and FI partitions.

    Canonical order compares partitions as tuples of sorted index tuples,
    parts listed by smallest element. Ties in theta go to the fewest parts.
    """
    if not B.dual_homogeneous:
        raise DualHomogeneityError("s(B) != 0")
    M = B.matroid
    if M.loops:
        raise PyramidError("zero vectors present; strip pyramid apexes first")
    if B.n == 0:
        raise InvalidPartitionError("empty configuration")
    owners = _parts_by_owner(B)
    memo: dict[int, _Cell] = {0: _Cell(0, 1, (), 0, 1, ())}

    def solve(R: int) -> _Cell | None:
        if R in memo:
            return memo[R]
        cell = None
        for P in owners.get(bitset.lowest(R), ()):
            if P & ~R:
                continue
            sub = solve(R & ~P)
            if sub is None:
                continue
            score = 1 - M.rank_of(P) + sub.score
            head = (bitset.indices(P),)
            cand = _Cell(score, sub.count, head + sub.best, sub.min_parts + 1, sub.min_count, head + sub.fi)
            if cell is None or score > cell.score:
                cell = cand
            elif score == cell.score:
                cell.count += cand.count
                cell.best = min(cell.best, cand.best)
                if cand.min_parts < cell.min_parts:
                    cell.min_parts, cell.min_count, cell.fi = cand.min_parts, cand.min_count, cand.fi
                elif cand.min_parts == cell.min_parts:
                    cell.min_count += cand.min_count
                    cell.fi = min(cell.fi, cand.fi)
        memo[R] = cell
        return cell

    top = solve(M.ground)
    th = top.score - 1 + M.rank
    result = ThetaResult(
        th,
        CayleyPartition.of(top.best),
        CayleyPartition.of(top.fi),
        top.count,
        top.min_count,
    )
    if top.min_count > 1:
        log.warning("%d FI-decompositions of minimal length found", top.min_count)
    return result


def theta_of_subset(B: GaleDual, S: int) -> int:
    return theta(restrict(B, S)).theta


@dataclass
class StructureReport:
    checks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def violations(self) -> list[str]:
        return [name for name, ok in self.checks if not ok]


def _sub_union_checks(B: GaleDual, P: CayleyPartition, strict: bool) -> list[tuple[str, bool]]:
    M = B.matroid
    out = []
    for size in range(2, len(P.parts) + 1):
        for sel in combinations(range(len(P.parts)), size):
            union = 0
            for i in sel:
                union |= P.parts[i]
            c = sum(M.rank_of(P.parts[i]) for i in sel) - M.rank_of(union)
            ok = c < size - 1 if strict else c <= size - 1
            out.append((f"inequality on parts {sel}", ok))
            sub = restrict(B, union)
            res = theta(sub)
            own = (size - 1) - c
            out.append((f"parts {sel} form a theta-decomposition", res.theta == own))
            if strict:
                out.append((f"parts {sel} form an FI-decomposition", res.fi_partition.r == size - 1))
    return out


def verify_fi_structure(B: GaleDual, P: CayleyPartition, fi: bool = True) -> StructureReport:
    """Necessary conditions on a theta (or FI) decomposition."""
    M = B.matroid
    rep = StructureReport()
    for j, p in enumerate(P.parts):
        rep.checks.append((f"theta of part {j} is 0", theta_of_subset(B, p) == 0))
        if fi:
            rep.checks.append((f"part {j} is a flat", M.is_flat(p)))
    if fi:
        for i, j in combinations(range(len(P.parts)), 2):
            a, b = P.parts[i], P.parts[j]
            rep.checks.append((f"spans of parts {i},{j} meet in 0",
                               M.rank_of(a | b) == M.rank_of(a) + M.rank_of(b)))
    rep.checks.extend(_sub_union_checks(B, P, strict=fi))
    return rep


def lambda_from_partition(B: GaleDual, P: CayleyPartition) -> int:
    return sum(B.matroid.rank_of(p) - 1 for p in P.parts)


def theta_or_empty(B: GaleDual) -> int:
    """theta, with the convention theta(empty) = -1."""
    return -1 if B.n == 0 else theta(B).theta


@dataclass(frozen=True)
class ReductionCheck:
    lhs: int
    rhs: int
    theta_red: int
    dim_b: int
    dim_red: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def theta_reduction_identity(B: GaleDual) -> ReductionCheck:
    red = reduce(B).reduced
    t = theta(B).theta
    tr = theta_or_empty(red)
    db, dr = B.rank, red.rank
    return ReductionCheck(t, tr + db - dr, tr, db, dr)


def converse_candidates(B: GaleDual, limit: int = 10_000) -> list[CayleyPartition]:
    """Non-FI partitions that nonetheless pass the necessary FI conditions.

    The conditions are only known to be necessary; anything returned here
    is logged as an instance where sufficiency would be exercised.
    """
    res = theta(B)
    out = []
    for k, P in enumerate(dual_homogeneous_partitions(B)):
        if k >= limit:
            break
        if P == res.fi_partition:
            continue
        if verify_fi_structure(B, P, fi=True).ok:
            log.info("partition %s passes the FI conditions but is not the FI-decomposition", P.key())
            out.append(P)
    return out


def cayley_matrix(A: PointConfiguration, P: CayleyPartition) -> ExactMatrix:
    """Block form of ``A`` for a zero-sum partition of its Gale dual.

    Rows are the part indicators followed by rows of ``A`` completing them to
    a basis of the row space. Columns keep their original order; restricted
    to the columns of part j the indicator block is ``e_j``.
    """
    rows: list[list[int]] = [[1 if (p >> i) & 1 else 0 for i in range(A.n)] for p in P.parts]
    ech = Echelon(A.n)
    for r in rows:
        if not ech.add(r):
            raise InvalidPartitionError("part indicators are dependent")
    for r in A.matrix.int_rows():
        if ech.add(r):
            rows.append(r)
    C = ExactMatrix(rows, ncols=A.n)
    if rank(C) != A.rank or rank(C.stack(A.matrix)) != A.rank:
        raise InvalidPartitionError("partition is not zero-sum for this configuration")
    return C
