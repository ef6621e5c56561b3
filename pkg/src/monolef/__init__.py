"""Exact Lefschetz-property and minimal-resolution computations for artinian monomial algebras."""

from .conjectures import conjecture39_check, ehu_containment, exhaustive_ideals, sample_ideal
from .lefschetz import (
    LefschetzReport,
    check_support_chain,
    differentiation_matrix,
    multiplication_matrix,
    power_map_check,
    slp_check,
    wlp_check,
    wlp_failure_witness,
)
from .monomials import MonomialIdeal, hilbert_function, socle, standard_monomials, support_profile
from .parsing import parse_gens
from .resolution import betti_table, linear_steps, regularity
from .toeplitz import toeplitz_invertible, toeplitz_matrix, two_var_cross_oracle

__version__ = "0.1.0"

__all__ = [
    "LefschetzReport",
    "MonomialIdeal",
    "betti_table",
    "check_support_chain",
    "conjecture39_check",
    "differentiation_matrix",
    "ehu_containment",
    "exhaustive_ideals",
    "hilbert_function",
    "linear_steps",
    "multiplication_matrix",
    "parse_gens",
    "power_map_check",
    "regularity",
    "sample_ideal",
    "slp_check",
    "socle",
    "standard_monomials",
    "support_profile",
    "toeplitz_invertible",
    "toeplitz_matrix",
    "two_var_cross_oracle",
    "wlp_check",
    "wlp_failure_witness",
]
