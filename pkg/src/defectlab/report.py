"""Run all four engines, apply the conventions and check the identities."""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from . import bitset
from .budget import Budget
from .cayley import theta
from .config import PointConfiguration, bar, gale_homogenize, homogenize, make_configuration, pyramid_index
from .exactlin import rank
from .flags import lambda_
from .itercirc import extend_to_full, iota, phi
from .rho import _lattice, maximal_chains, rho, sigma_matrix

PASS, FAIL, SKIP = "pass", "fail", "skipped"


@dataclass(frozen=True)
class Identity:
    name: str
    lhs: int | None
    rhs: int | None
    status: str

    @property
    def passed(self) -> bool:
        return self.status == PASS


def _identity(name: str, lhs: int, rhs: int) -> Identity:
    return Identity(name, lhs, rhs, PASS if lhs == rhs else FAIL)


@dataclass
class InvariantReport:
    n: int
    d: int
    m: int
    p: int
    homogeneous: bool
    rho: int | None = None
    iota: int | None = None
    lambda_: int | None = None
    theta: int | None = None
    defect: int = 0
    identities: list[Identity] = field(default_factory=list)
    witnesses: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    rho_exhaustive: bool = True

    @property
    def ok(self) -> bool:
        return not any(i.status == FAIL for i in self.identities)

    @property
    def budget_exhausted(self) -> bool:
        return not self.rho_exhaustive

    def to_dict(self) -> dict[str, Any]:
        def num(x):
            return None if x is None else str(x)

        return {
            "n": num(self.n),
            "d": num(self.d),
            "m": num(self.m),
            "p": num(self.p),
            "homogeneous": self.homogeneous,
            "rho": num(self.rho),
            "iota": num(self.iota),
            "lambda": num(self.lambda_),
            "theta": num(self.theta),
            "defect": num(self.defect),
            "identities": [
                {"name": i.name, "lhs": num(i.lhs), "rhs": num(i.rhs), "status": i.status}
                for i in self.identities
            ],
            "witnesses": self.witnesses,
            "notes": list(self.notes),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_table(self) -> str:
        def show(x):
            return "n/a" if x is None else str(x)

        rows = [
            ("n", self.n), ("d", self.d), ("m", self.m), ("p", self.p),
            ("homogeneous", self.homogeneous), ("rho", self.rho), ("iota", self.iota),
            ("lambda", self.lambda_), ("theta", self.theta), ("defect", self.defect),
        ]
        width = max(len(k) for k, _ in rows)
        lines = [f"{k.ljust(width)}  {show(v)}" for k, v in rows]
        if self.identities:
            lines.append("")
            lines.append("identities:")
            for i in self.identities:
                lines.append(f"  [{i.status}] {i.name}: {show(i.lhs)} = {show(i.rhs)}")
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines)


def thread_count(threads: int | None = None) -> int:
    if threads is None:
        env = os.environ.get("DEFECTLAB_THREADS")
        threads = int(env) if env else 1
    return max(1, threads)


def _idx(mask: int) -> list[int]:
    return list(bitset.indices(mask))


def _engines(A: PointConfiguration, budget: Budget | None, threads: int, allow_pyramid: bool = False):
    """iota first (its witness seeds rho), then rho, lambda, theta concurrently."""
    # warm the shared caches before any worker touches them
    A.gale.matroid.rank
    _lattice(A)
    io = iota(A, budget, allow_pyramid=allow_pyramid)
    seed = None
    if not allow_pyramid:
        seed = phi(A, extend_to_full(A, io.witness))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        f_rho = pool.submit(rho, A, budget, seed, allow_pyramid)
        f_lam = pool.submit(lambda_, A.gale, allow_pyramid)
        f_th = None if allow_pyramid else pool.submit(theta, A.gale)
        return io, f_rho.result(), f_lam.result(), (f_th.result() if f_th else None)


def compute_all(A, budget: Budget | None = None, threads: int | None = None) -> InvariantReport:
    A = make_configuration(A)
    threads = thread_count(threads)
    notes: list[str] = []
    given_homogeneous = A.homogeneous
    if not given_homogeneous:
        A = bar(A)
        notes.append("input is not homogeneous; invariants refer to the configuration with a row of ones prepended")
    pyr = pyramid_index(A)
    rep = InvariantReport(A.n, A.d, A.m, pyr.p, given_homogeneous, notes=notes)
    if A.m == 0:
        rep.notes.append("m = 0 (simplex): defect 0, no circuits, chains or flags to search")
        return rep

    core = pyr.core if pyr.p else A
    io, rh, lam, th = _engines(core, budget, threads)

    rho_core = rh.value
    if not rh.exhaustive:
        rho_core = core.n - 1 - (core.m - 1 - lam.value)
        rep.rho_exhaustive = False
        rep.notes.append(f"rho search budget exhausted; rho via identity (proved), search lower bound = {rh.value + pyr.p}")

    rep.iota = io.value
    rep.lambda_ = lam.value
    rep.rho = rho_core + pyr.p
    rep.theta = th.theta + pyr.p
    rep.defect = A.d - io.value
    rep.witnesses = {
        "rho_chain": [_idx(s) for s in (rh.witness.supports if rh.witness else ())],
        "iterated_circuit": [_idx(s) for s in io.witness.parts],
        "flag": [_idx(F) for F in lam.witness.flats],
        "fi_decomposition": [_idx(P) for P in th.fi_partition.parts],
    }

    n, d, m = core.n, core.d, core.m
    ids = [_identity("theta = m-1-lambda", th.theta, m - 1 - lam.value)]
    if rh.exhaustive:
        ids.append(_identity("m-1-lambda = n-1-rho", m - 1 - lam.value, n - 1 - rh.value))
        ids.append(_identity("n-1-rho = d-iota", n - 1 - rh.value, d - io.value))
    else:
        ids.append(Identity("m-1-lambda = n-1-rho", m - 1 - lam.value, None, SKIP))
        ids.append(Identity("n-1-rho = d-iota", None, d - io.value, SKIP))
    ids.append(_identity("m-1-lambda = d-iota", m - 1 - lam.value, d - io.value))

    if pyr.p:
        rep.witnesses = _remap(rep.witnesses, pyr.kept)
        rep.notes.append(f"pyramid with apexes {list(pyr.apexes)}; engines ran on the core, defect = defect(core) + p")
        ids.extend(_pyramid_relations(A, core, pyr.p, io.value, rh, lam.value, budget, threads))
    ids.append(_identity("defect = theta", rep.defect, rep.theta))
    rep.identities = ids
    return rep


def _remap(w: dict[str, Any], kept: tuple[int, ...]) -> dict[str, Any]:
    """Translate core indices back to indices of the full configuration."""
    return {k: [[kept[i] for i in part] for part in v] for k, v in w.items()}


def _pyramid_relations(A, core, p, iota_core, rho_core, lam_core, budget, threads) -> list[Identity]:
    io, rh, lam, _ = _engines(A, budget, threads, allow_pyramid=True)
    out = [
        _identity("n(A) = n(A') + p", A.n, core.n + p),
        _identity("d(A) = d(A') + p", A.d, core.d + p),
        _identity("m(A) = m(A')", A.m, core.m),
        _identity("iota(A) = iota(A')", io.value, iota_core),
        _identity("lambda(A) = lambda(A')", lam.value, lam_core),
    ]
    if rh.exhaustive and rho_core.exhaustive:
        out.append(_identity("rho(A) = rho(A') + p", rh.value, rho_core.value + p))
    else:
        out.append(Identity("rho(A) = rho(A') + p", None, None, SKIP))
    return out


def crosscheck(A, budget: Budget | None = None, threads: int | None = None) -> list[Identity]:
    """Every identity of the chain; pyramid relations instead when p > 0."""
    rep = compute_all(A, budget, threads)
    if rep.m == 0:
        return [Identity("identity chain", None, None, SKIP)]
    return rep.identities


def lemma_suite(A) -> list[tuple[str, bool]]:
    """Instantiate the homogenization and circuit lemmas on ``A``."""
    A = make_configuration(A)
    out: list[tuple[str, bool]] = []
    if not A.homogeneous:
        Ah = homogenize(A)
        rho_h = rho(Ah, allow_pyramid=True).value
        for chain in maximal_chains(A):
            r = rank(sigma_matrix(A, chain))
            out.append((f"rho(A^h) >= rank(A; chain {chain.key()})", rho_h >= r))
        B = A.gale
        BH = gale_homogenize(B)
        lb, lh = lambda_(B, allow_loops=True).value, lambda_(BH, allow_loops=True).value
        out.append(("lambda(B) = lambda(B^H) + 1", lb == lh + 1))
        return out
    if A.m == 0 or pyramid_index(A).p:
        return out
    out.extend(circuit_lemma_checks(A))
    return out


def circuit_lemma_checks(A: PointConfiguration) -> list[tuple[str, bool]]:
    M, G = A.column_matroid, A.gale.matroid
    m = G.rank
    out = []
    for Z in M.circuits():
        span = M.closure(Z)
        A1 = span & ~Z
        rest = G.ground & ~Z
        A2 = rest & ~A1
        tag = f"circuit {bitset.indices(Z)}"
        out.append((f"{tag}: complement is a codimension-one flat", G.is_flat(rest) and G.rank_of(rest) == m - 1))
        out.append((f"{tag}: B_1 independent", G.is_independent(A1)))
        out.append((f"{tag}: B_2 flat of codimension n(A_1)+1",
                    G.is_flat(A2) and G.rank_of(A2) == m - bitset.size(A1) - 1))
        out.append((f"{tag}: L(B_1 + B_2) direct sum", G.rank_of(rest) == G.rank_of(A1) + G.rank_of(A2)))
    return out

