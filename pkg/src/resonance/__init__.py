"""Exact computations for S-arrangements: characteristic polynomials, chambers,
graded Orlik-Solomon and Cordovil algebras with their symmetric group
characters, FS^op-module generation, and generating-function fits."""

from .algebra import Convention, GradedAlgebra, nbc_basis, permutation_action, straighten
from .arrangement import (ArrangementSpec, CoefficientSet, GroundSet, arrangement, broken_circuits,
                          build_arrangement, canonicalize, circuits, parse_coefficients, rank)
from .chambers import enumerate_chambers, fixed_chambers
from .charpoly import (CharPoly, betti_numbers, chamber_count, char_poly_finite_field, char_poly_nbc,
                       count_complement_points)
from .equivariant import (DirectQuotient, chamber_character, character, padded_multiplicity_table,
                          row_bound_report, total_character)
from .errors import (BadPrime, ConventionMismatch, InsufficientData, InterpolationMismatch,
                     InvalidArrangement, LeadingNotConstant, LimitExceeded, MissingCircuit,
                     NonAlternating, NonCharacter, PadTooSmall, ResonanceError, StoreConflict)
from .fsop import (BettiModule, certify_generation, enumerate_surjections, minimal_generation_degree,
                   pullback_on_betti, tensor_generators)
from .genfun import fit_exp_poly, fq_betti, fq_hilbert_series, to_rational_function
from .store import Store
from .symmetric import CharacterVector, decompose, irreducible_character

__all__ = [
    "Convention", "GradedAlgebra", "nbc_basis", "permutation_action", "straighten",
    "ArrangementSpec", "CoefficientSet", "GroundSet", "arrangement", "broken_circuits",
    "build_arrangement", "canonicalize", "circuits", "parse_coefficients", "rank",
    "enumerate_chambers", "fixed_chambers", "CharPoly", "betti_numbers", "chamber_count",
    "char_poly_finite_field", "char_poly_nbc", "count_complement_points", "DirectQuotient",
    "chamber_character", "character", "padded_multiplicity_table", "row_bound_report",
    "total_character", "BadPrime", "ConventionMismatch", "InsufficientData",
    "InterpolationMismatch", "InvalidArrangement", "LeadingNotConstant", "LimitExceeded",
    "MissingCircuit", "NonAlternating", "NonCharacter", "PadTooSmall", "ResonanceError",
    "StoreConflict", "BettiModule", "certify_generation", "enumerate_surjections",
    "minimal_generation_degree", "pullback_on_betti", "tensor_generators", "fit_exp_poly",
    "fq_betti", "fq_hilbert_series", "to_rational_function", "Store", "CharacterVector",
    "decompose", "irreducible_character",
]

__version__ = "0.1.0"
