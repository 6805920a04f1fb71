"""Exact-arithmetic toolkit for symmetric-group characters: normalized and
central characters, free cumulants of Young diagrams, the universal character
polynomials Sigma_k in the R and C bases, character polynomials of
multi-rectangular shapes with their positivity reports, and shift Schur
evaluations."""

from .algebra import MultiPoly, TruncSeries, compositional_inverse, lagrange_coeff
from .characters import (central_character, connection_coefficient,
                         factorization_character, mn_character,
                         normalized_character, normalized_character_class,
                         schur_principal_specialization)
from .errors import BudgetExceededError, RingMismatchError, SingularMatrixError
from .kerov import (KerovExpansion, c_expansion, c_monomial, free_cumulants,
                    graded_component, kerov_polynomial, positivity_check)
from .partitions import (InterlacingCoords, MultiRect, Partition, class_size,
                         contents, dimension, expand_shape, hook_product,
                         interlacing, make_partition, parse_multirect,
                         parse_partition)
from .shifted import (falling_factorial, p_sharp, shift_schur, shift_schur_det,
                      shift_schur_rect, shift_schur_tableaux)
from .stanley import (extract_cumulant, g_series_direct, negate_q, oracle_stanley,
                      phi_series, positivity_report, stanley_polynomial)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError", "InterlacingCoords", "KerovExpansion", "MultiPoly",
    "MultiRect", "Partition", "RingMismatchError", "SingularMatrixError",
    "TruncSeries", "c_expansion", "c_monomial", "central_character",
    "class_size", "compositional_inverse", "connection_coefficient",
    "contents", "dimension", "expand_shape", "extract_cumulant",
    "factorization_character", "falling_factorial", "free_cumulants",
    "g_series_direct", "graded_component", "hook_product", "interlacing",
    "kerov_polynomial", "lagrange_coeff", "make_partition", "mn_character",
    "negate_q", "normalized_character", "normalized_character_class",
    "oracle_stanley", "p_sharp", "parse_multirect", "parse_partition",
    "phi_series", "positivity_check", "positivity_report",
    "schur_principal_specialization", "shift_schur", "shift_schur_det",
    "shift_schur_rect", "shift_schur_tableaux", "stanley_polynomial",
]
