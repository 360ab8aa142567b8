"""Exact tools for 4/n = 1/x + 1/y + 1/z: continued fractions of 4/p,
solution censuses by type, and the lattice count a_N."""

from .arith import as_odd_square_root, gcd, is_prime, isqrt, rat_make, rat_sub_abs
from .cf import (CFExpansion, Convergent, ErrorTerm, cf_expand, complete_quotient,
                 convergents, error_term, four_over_p_closed_form, legendre_check)
from .lattice import (LatticeReport, TotientTable, asymptotic_report, count_lattice_brute,
                      count_lattice_sliced, threshold, totient_sieve, totient_summatory)
from .solver import (Census, ESSolution, ProofTrace, SolutionKind, SolutionType, census,
                     cf_residue_classifier, classify, enumerate_solutions,
                     enumerate_solutions_general, proof_trace, solve_sum_product,
                     verify_type_iii_absent)

__version__ = "0.1.0"
