"""Exact fixity computations for finite subgroups of U(n) and their free actions on Stiefel manifolds."""

from .cyclo import CycloMatrix, CyclotomicNumber, kernel_rank, zeta
from .groups import MatrixGroup, enumerate_group, p_rank, rank_inventory
from .reps import Representation, fixed_dim, fixity, free_on_stiefel, isotropy_tower, natural
from .families import (
    build_family,
    exceptional_family_three,
    exceptional_family_two,
    g_p,
    heisenberg,
    induce,
    modular_metacyclic,
    wreath,
)
from .topology import chi_tor_composite, poincare_series, propagation_report, sphere_dims, swan_unit

__version__ = "0.1.0"

__all__ = [
    "CycloMatrix", "CyclotomicNumber", "kernel_rank", "zeta",
    "MatrixGroup", "enumerate_group", "p_rank", "rank_inventory",
    "Representation", "fixed_dim", "fixity", "free_on_stiefel", "isotropy_tower", "natural",
    "build_family", "exceptional_family_three", "exceptional_family_two", "g_p", "heisenberg",
    "induce", "modular_metacyclic", "wreath",
    "chi_tor_composite", "poincare_series", "propagation_report", "sphere_dims", "swan_unit",
]
