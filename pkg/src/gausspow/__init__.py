"""Exact arithmetic for power sums of Gaussian integers modulo n.

The package evaluates sigma_k(n), the sum of (a+bi)^k over the square
1 <= a, b <= n reduced mod n, through a stack of mutually checking routes
(closed form, binomial expansion, brute force), characterizes the congruence
sets where the sum vanishes, computes their asymptotic densities in exact
rational arithmetic, and searches a Gaussian analogue of a classical
power-sum Diophantine equation.
"""

from .arith import (
    decimal_render,
    factorize,
    lcm_accumulate,
    mod_pow,
    sieve_inert_primes,
)
from .binomial_sums import binom_mod_p, dilcher_sum, hermite_sum, signed_lacunary_sum
from .closed_form import (
    imag_part_closed,
    real_part_closed,
    sigma_by_parts,
    sigma_closed,
    sigma_expansion,
    witness_primes,
)
from .congruence_sets import (
    WitnessReport,
    diagonal_witness,
    divides_sigma,
    eight_multiple_exclusion,
    outside_column_zeros,
    outside_row_zeros,
    witness_forces_24,
)
from .density import (
    DensityInterval,
    DiagonalBracket,
    diagonal_bracket,
    incompatible,
    intersection_density,
    sieve_complement_count,
    squarefree_term,
    tail_bound,
    union_density,
    witness_density,
    zero_row_density,
)
from .gaussian import GaussianInt, GaussianResidue, sigma_brute, sigma_exact
from .moser_search import Solution, norm_prefilter, search_solutions
from .power_sums import carlitz_parity, divides_s, s_mod_closed, s_mod_naive

__version__ = "0.1.0"

__all__ = [
    "DensityInterval",
    "DiagonalBracket",
    "GaussianInt",
    "GaussianResidue",
    "Solution",
    "WitnessReport",
    "binom_mod_p",
    "carlitz_parity",
    "decimal_render",
    "diagonal_bracket",
    "diagonal_witness",
    "dilcher_sum",
    "divides_s",
    "divides_sigma",
    "eight_multiple_exclusion",
    "factorize",
    "hermite_sum",
    "imag_part_closed",
    "incompatible",
    "intersection_density",
    "lcm_accumulate",
    "mod_pow",
    "norm_prefilter",
    "outside_column_zeros",
    "outside_row_zeros",
    "real_part_closed",
    "s_mod_closed",
    "s_mod_naive",
    "search_solutions",
    "sieve_complement_count",
    "sieve_inert_primes",
    "sigma_brute",
    "sigma_by_parts",
    "sigma_closed",
    "sigma_exact",
    "sigma_expansion",
    "signed_lacunary_sum",
    "squarefree_term",
    "tail_bound",
    "union_density",
    "witness_density",
    "witness_forces_24",
    "witness_primes",
    "zero_row_density",
]
