"""Quantum Schubert calculus of Grassmannians at q = 1, modulo its symmetries."""

from .cohclass import CohClass
from .partitions import (
    BoxContext,
    conjugate_diagram,
    durfee,
    embed,
    enumerate_box,
    fits_box,
    gs_from_invariant,
    in_gs,
    poincare_dual,
)
from .quantum import conj, degree_mod_n, gw, phi, qprod, zn_shift
from .quotient import ann_p, positivity_experiment, psi, reduce_to_gs, sum_pairing
from .schur import cup_product, lr_coefficient, lr_sum_lhs, lr_sum_rhs, schur_product
from .spectrum import RootChoice, character_matrix, evaluate, point, sigma_k_value

__all__ = [
    "BoxContext", "CohClass", "RootChoice",
    "ann_p", "character_matrix", "conj", "conjugate_diagram", "cup_product", "degree_mod_n",
    "durfee", "embed", "enumerate_box", "evaluate", "fits_box", "gs_from_invariant", "gw",
    "in_gs", "lr_coefficient", "lr_sum_lhs", "lr_sum_rhs", "phi", "point", "poincare_dual",
    "positivity_experiment", "psi", "qprod", "reduce_to_gs", "schur_product", "sigma_k_value",
    "sum_pairing", "zn_shift",
]
