"""Construct and verify rotation symmetric bent functions."""

from .errors import (CapacityError, ConstraintError, DimensionError, InvariantViolation,
                     NormalizationError, ParityError, RSBentError)
from .f2core import (ZERO_DEGREE, AnfPoly, BitVec, BoolFn, HalfPair, algebraic_degree, anf_of,
                     anf_from_text, anf_to_text, covers, degree, fn_from_support, fn_of_anf,
                     half_dot, half_star_zero, split_halves, tt_from_hex, tt_to_hex, xor_fn)
from .orbitkit import (Orbit, OrbitSet, RepList, close_under_rotation, enumerate_reps,
                       is_rotation_symmetric, orbit, representative, rotate)
from .spectral import WalshSpectrum, complement_kernel, is_bent, nonlinearity, walsh
from .constructor import (ModificationSpec, OrbitSumDecomposition, build_from_gamma,
                          build_from_orbit_sum, build_from_orbit_sums, build_from_weight_class,
                          carlet_cubic, covering_sum_anf, gao_cubic, half_dot_function,
                          modification_set, modification_set_anf, orbit_monomial_sum,
                          reaches_max_degree, solve_orbit_sum, weight_class_anf, weight_class_set)

__version__ = "0.1.0"

__all__ = [
    "CapacityError", "ConstraintError", "DimensionError", "InvariantViolation",
    "NormalizationError", "ParityError", "RSBentError", "ZERO_DEGREE", "AnfPoly", "BitVec",
    "BoolFn", "HalfPair", "algebraic_degree", "anf_of", "anf_from_text", "anf_to_text",
    "covers", "degree", "fn_from_support", "fn_of_anf", "half_dot", "half_star_zero",
    "split_halves", "tt_from_hex", "tt_to_hex", "xor_fn", "Orbit", "OrbitSet", "RepList",
    "close_under_rotation", "enumerate_reps", "is_rotation_symmetric", "orbit",
    "representative", "rotate", "WalshSpectrum", "complement_kernel", "is_bent",
    "nonlinearity", "walsh", "ModificationSpec", "OrbitSumDecomposition", "build_from_gamma",
    "build_from_orbit_sum", "build_from_orbit_sums", "build_from_weight_class", "carlet_cubic",
    "covering_sum_anf", "gao_cubic", "half_dot_function", "modification_set",
    "modification_set_anf", "orbit_monomial_sum", "reaches_max_degree", "solve_orbit_sum",
    "weight_class_anf", "weight_class_set", "__version__",
]
