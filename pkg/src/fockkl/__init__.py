"""Canonical bases of the level-1 q-deformed Fock space computed through
parabolic Kazhdan-Lusztig polynomials of the affine symmetric group."""

from .affine import AffinePerm, act_level, bruhat_leq, generator, is_min_coset_rep, stabilizer_longest, w_min
from .fock import (
    FockMatrix,
    FockVector,
    TheoremCheck,
    check_theorem1,
    check_theorem2,
    d_matrix,
    d_poly,
    d_poly_via_r,
    e_matrix,
    ell_mu,
    gplus_vector,
)
from .kl import KLTable, kl_table
from .laurent import LaurentPoly, q
from .llt import fock_f, llt_gplus_oracle
from .partitions import Partition, conjugate, dominance_leq, hat, is_n_regular, n_core, restricted_decomp, tilde

__version__ = "0.1.0"

__all__ = [
    "AffinePerm",
    "FockMatrix",
    "FockVector",
    "KLTable",
    "LaurentPoly",
    "Partition",
    "TheoremCheck",
    "act_level",
    "bruhat_leq",
    "check_theorem1",
    "check_theorem2",
    "conjugate",
    "d_matrix",
    "d_poly",
    "d_poly_via_r",
    "dominance_leq",
    "e_matrix",
    "ell_mu",
    "fock_f",
    "generator",
    "gplus_vector",
    "hat",
    "is_min_coset_rep",
    "is_n_regular",
    "kl_table",
    "llt_gplus_oracle",
    "n_core",
    "q",
    "restricted_decomp",
    "stabilizer_longest",
    "tilde",
    "w_min",
]
