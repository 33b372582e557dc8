"""Named example configurations and seeded random generators."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any

from .config import GaleDual, PointConfiguration, bar, make_configuration, pyramid_index
from .exactlin import ExactMatrix, kernel_basis


@dataclass(frozen=True)
class NamedExample:
    name: str
    config: PointConfiguration
    expected: dict[str, int]
    provenance: dict[str, str] = field(default_factory=dict)
    description: str = ""

    @property
    def matrix(self) -> ExactMatrix:
        return self.config.matrix


def _e(dim: int, *terms: tuple[int, int]) -> tuple[int, ...]:
    v = [0] * dim
    for coef, i in terms:
        v[i - 1] += coef
    return tuple(v)


# Gale dual of the four-factor Cayley configuration, grouped by factor
FI14_GALE = [
    _e(8, (1, 1), (-1, 8)), _e(8, (-2, 1), (1, 8)), _e(8, (1, 1)),
    _e(8, (1, 2), (-1, 7), (-1, 8)), _e(8, (-2, 2), (1, 7), (1, 8)), _e(8, (1, 2)),
    _e(8, (1, 3), (1, 5), (1, 6), (1, 8)), _e(8, (-1, 3), (-1, 5)), _e(8, (-1, 3), (-1, 6)), _e(8, (1, 3), (-1, 8)),
    _e(8, (1, 4), (-1, 5), (-1, 6), (1, 7)), _e(8, (-1, 4), (1, 5)), _e(8, (-1, 4), (1, 6), (-1, 7)), _e(8, (1, 4)),
]
FI14_PARTS = [(0, 1, 2), (3, 4, 5), (6, 7, 8, 9), (10, 11, 12, 13)]

# prism Gale dual as labelled in the source: parallel pairs {0,3}, {1,4}, {2,5}
PRISM_GALE = [(1, 0), (0, 1), (-1, -1), (-1, 0), (0, -1), (1, 1)]
OCT_GALE = [(1, 0), (1, 0), (0, 1), (0, 1), (-1, -1), (-1, -1)]
GALE6_GALE = [(1, 0, 0), (0, 1, 0), (-1, -1, 0), (0, 0, 1), (1, 0, 1), (-1, 0, -2)]
LINE123_GALE = [(-2, 0), (1, -3), (0, 2)]

PRISM_POINTS = [(1, 0, 0), (1, 0, 1), (0, 1, 0), (0, 1, 1), (0, 0, 0), (0, 0, 1)]


def _from_gale(vectors) -> PointConfiguration:
    """A configuration whose kernel is spanned by the columns of ``B``."""
    K = kernel_basis(ExactMatrix(vectors).T)
    return PointConfiguration(K.T)


def _build() -> dict[str, NamedExample]:
    oct_ = make_configuration([[1] * 6, [1, -1, 0, 0, 0, 0], [0, 0, 1, -1, 0, 0], [0, 0, 0, 0, 1, -1]])
    prism = bar(PointConfiguration.from_points(PRISM_POINTS))
    line = make_configuration([[1, 2, 3]])
    gale6 = make_configuration([[1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 1], [1, 0, 0, 1, -1, 0]])
    fi14 = _from_gale(FI14_GALE)
    fano = make_configuration([[1, 1, 1, 0, 0, 0, 0], [0, 0, 0, 1, 1, 1, 1],
                               [1, 0, 0, 0, 0, 1, 1], [0, 1, 0, 0, 1, 0, 1]])
    src, der = "worked example", "derived by exhaustive search"
    return {
        "OCT": NamedExample(
            "OCT", oct_,
            {"n": 6, "d": 3, "m": 2, "rho": 5, "iota": 3, "lambda": 1, "theta": 0, "defect": 0},
            {"iota": src, "defect": src, "rho": der, "lambda": der, "theta": der},
            "octahedron: the six points +-e_i with a row of ones",
        ),
        "PRISM": NamedExample(
            "PRISM", prism,
            {"n": 6, "d": 3, "m": 2, "rho": 4, "iota": 2, "lambda": 0, "theta": 1, "defect": 1},
            {"iota": src, "lambda": src, "theta": src, "defect": src, "rho": der},
            "triangular prism with a row of ones",
        ),
        "LINE123": NamedExample(
            "LINE123", line,
            {"n": 3, "d": 1, "m": 1, "lambda_raw": 2, "lambda_h": 1, "lambda_bar": 0},
            {"lambda_raw": src, "lambda_h": src, "lambda_bar": src},
            "three collinear points 1, 2, 3 (not homogeneous)",
        ),
        "GALE6": NamedExample(
            "GALE6", gale6,
            {"n": 6, "d": 2, "m": 3, "rho": 5, "iota": 2, "lambda": 2, "theta": 0, "defect": 0},
            {"theta": src, "rho": der, "iota": der, "lambda": der},
            "two triangles, non-defective, irreducible Gale dual",
        ),
        "FI14": NamedExample(
            "FI14", fi14,
            {"n": 14, "d": 5, "m": 8, "rho": 12, "iota": 4, "lambda": 6, "theta": 1, "defect": 1},
            {k: src for k in ("rho", "iota", "lambda", "theta", "defect")},
            "Cayley configuration of four planar factors, recovered from its Gale dual",
        ),
        "FANO7": NamedExample(
            "FANO7", fano,
            {"n": 7, "d": 3, "m": 3, "lambda": 2, "theta": 0, "defect": 0},
            {"lambda": src, "theta": src, "defect": src},
            "the 4x7 incidence-style matrix read over the integers",
        ),
    }


EXAMPLES = _build()


def example(name: str) -> NamedExample:
    try:
        return EXAMPLES[name.upper()]
    except KeyError:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(EXAMPLES)}") from None


def random_config(n: int, d: int, seed: int, homogeneous: bool = True, non_pyramidal: bool = True,
                  box: int = 2, max_tries: int = 2000) -> PointConfiguration:
    """Seeded random configuration of ``n`` points with affine dimension ``d``.

    Points are integer vectors in ``[-box, box]^d``. In homogeneous mode they
    get a row of ones; non-pyramidal mode rejects until ``p = 0``.
    """
    if n < d + 1:
        raise ValueError(f"need n >= d + 1 (got n={n}, d={d})")
    rng = random.Random(seed)
    for _ in range(max_tries):
        pts = [[rng.randint(-box, box) for _ in range(d)] for _ in range(n)]
        A = PointConfiguration.from_points(pts) if d else make_configuration([[0] * n])
        if A.d != d:
            continue
        if homogeneous:
            A = bar(A)
        if non_pyramidal and pyramid_index(A).p:
            continue
        return A
    raise ValueError(f"no configuration with n={n}, d={d} found after {max_tries} tries")


def random_cayley(sizes: list[int], k: int, seed: int, box: int = 1, non_pyramidal: bool = True,
                  max_tries: int = 2000) -> PointConfiguration:
    """Seeded random Cayley configuration of factors with the given sizes in ``Z^k``.

    Rows are the factor indicators followed by the coordinates, so the
    result is homogeneous. Many factors in a small ``k`` give defective
    instances, which random point clouds almost never are.
    """
    rng = random.Random(seed)
    n = sum(sizes)
    for _ in range(max_tries):
        rows = []
        start = 0
        for sz in sizes:
            rows.append([1 if start <= i < start + sz else 0 for i in range(n)])
            start += sz
        pts = [[rng.randint(-box, box) for _ in range(k)] for _ in range(n)]
        rows.extend([p[c] for p in pts] for c in range(k))
        A = make_configuration(rows)
        if A.m == 0 or (non_pyramidal and pyramid_index(A).p):
            continue
        return A
    raise ValueError(f"no Cayley configuration with sizes {sizes} found after {max_tries} tries")


def random_gale(n: int, k: int, seed: int, dual_homogeneous: bool = False, irreducible: bool = False,
                box: int = 2, max_tries: int = 2000) -> GaleDual:
    """Seeded random nonzero vectors in ``Q^k`` spanning the whole space.

    ``dual_homogeneous`` forces a zero sum (the last vector closes the sum);
    otherwise a nonzero sum is enforced. ``irreducible`` rejects parallel pairs.
    """
    rng = random.Random(seed)
    for _ in range(max_tries):
        m = n - 1 if dual_homogeneous else n
        vecs = [tuple(rng.randint(-box, box) for _ in range(k)) for _ in range(m)]
        if dual_homogeneous:
            vecs.append(tuple(-sum(v[c] for v in vecs) for c in range(k)))
        if any(not any(v) for v in vecs):
            continue
        B = GaleDual.from_vectors(vecs)
        if B.rank != k:
            continue
        if not dual_homogeneous and B.dual_homogeneous:
            continue
        if irreducible and any(bin(F).count("1") > 1 for F in B.matroid.rank_one_flats()):
            continue
        return B
    raise ValueError(f"no Gale configuration with n={n}, k={k} found after {max_tries} tries")


def expected_table() -> list[dict[str, Any]]:
    return [
        {"name": ex.name, "description": ex.description, "expected": ex.expected, "provenance": ex.provenance}
        for ex in EXAMPLES.values()
    ]
