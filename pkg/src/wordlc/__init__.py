"""Linear complexity and word linear complexity of vector sequences over GF(p).

The top-level namespace re-exports the main entry points; see the
submodules for the full API.
"""

from .dynamics import MapSpec, SplitMix64, apply_map, detect_period, iterate_map, local_invert, random_map
from .errors import WordLCError
from .field import GF, FieldElem, FieldParams
from .matpoly import MatrixPoly, Side, annihilates, euclid_divide, matpoly_det, matpoly_mul
from .poly import Poly, berlekamp_massey, component_minpoly_lcm, hankel, hankel_scalar_minpoly
from .sequence import VectorSequence
from .wlc import (
    WlcReport,
    block_hankel,
    compute_wlc,
    local_inverse_from_matrix_minpoly,
    local_inverse_from_scalar_minpoly,
)

__version__ = "0.1.0"

__all__ = [
    "GF",
    "FieldElem",
    "FieldParams",
    "MapSpec",
    "MatrixPoly",
    "Poly",
    "Side",
    "SplitMix64",
    "VectorSequence",
    "WlcReport",
    "WordLCError",
    "annihilates",
    "apply_map",
    "berlekamp_massey",
    "block_hankel",
    "component_minpoly_lcm",
    "compute_wlc",
    "detect_period",
    "euclid_divide",
    "hankel",
    "hankel_scalar_minpoly",
    "iterate_map",
    "local_invert",
    "local_inverse_from_matrix_minpoly",
    "local_inverse_from_scalar_minpoly",
    "matpoly_det",
    "matpoly_mul",
    "random_map",
]
