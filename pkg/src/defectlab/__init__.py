"""Dual defect of rational point configurations, computed four ways.

The four engines (sigma-matrix rank, iterated circuits, non-splitting flags
and Cayley decompositions of the Gale dual) are independent; ``compute_all``
runs them together and checks that they agree.
"""

from .budget import UNLIMITED, Budget
from .cayley import CayleyPartition, ThetaResult, c_of_partition, dual_homogeneous_partitions, theta
from .config import (
    GaleDual,
    PointConfiguration,
    bar,
    gale_dual,
    gale_homogenize,
    homogenize,
    make_configuration,
    pyramid_index,
)
from .exactlin import ExactMatrix, in_row_span, kernel_basis, rank, rref
from .flags import Flag, is_irreducible, is_nonsplitting, lambda_, reduce
from .fixtures import example, random_config
from .itercirc import IteratedCircuit, eta, extend_to_full, iota, phi, psi, validate
from .matroid import LinearMatroid
from .report import InvariantReport, compute_all, crosscheck, lemma_suite
from .rho import SupportChain, is_support, maximal_chains, rho, sigma_matrix

__all__ = [
    "bar",
    "Budget",
    "c_of_partition",
    "CayleyPartition",
    "compute_all",
    "crosscheck",
    "dual_homogeneous_partitions",
    "eta",
    "ExactMatrix",
    "example",
    "extend_to_full",
    "Flag",
    "gale_dual",
    "gale_homogenize",
    "GaleDual",
    "homogenize",
    "in_row_span",
    "InvariantReport",
    "iota",
    "is_irreducible",
    "is_nonsplitting",
    "is_support",
    "IteratedCircuit",
    "kernel_basis",
    "lambda_",
    "lemma_suite",
    "LinearMatroid",
    "make_configuration",
    "maximal_chains",
    "phi",
    "PointConfiguration",
    "psi",
    "pyramid_index",
    "random_config",
    "rank",
    "reduce",
    "rho",
    "rref",
    "sigma_matrix",
    "SupportChain",
    "theta",
    "ThetaResult",
    "UNLIMITED",
    "validate",
]

__version__ = "0.1.0"
