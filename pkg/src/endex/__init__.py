"""Exact computation of index step functions for weighted de Rham
complexes on manifolds with periodic ends.

The pipeline: a cell structure for the infinite cyclic cover (or the
characteristic polynomials directly) -> homology as modules over the
Laurent ring -> characteristic polynomials of the covering translation ->
exceptional weights -> the piecewise constant index function, together
with independent verification oracles (twisted fibers, coefficient
splittings, weighted shift kernels, cup products).
"""

from .complexes import (
    ChainComplexOverLambda,
    ManifoldContext,
    SimplicialInput,
    euler_characteristic_x,
    from_boundary_matrices,
    lift_simplicial,
)
from .cup import cup_product_check
from .errors import (
    AmbiguousWallError,
    ComplexValidationError,
    EndexError,
    NotFiniteError,
    OnWallError,
    UnsupportedInputError,
    WindowTooSmallError,
)
from .homology import (
    AlexanderData,
    FinitenessVerdict,
    HomologyModule,
    alexander_polynomials,
    finiteness_check,
    homology,
)
from .indexfn import (
    IndexFunction,
    duality_check,
    excision_index,
    index_at,
    index_function,
    jump_at,
)
from .laurent import LaurentPoly, canonicalize, laurent_gcd, poly, squarefree_decomposition
from .polymatrix import LaurentMatrix, SnfResult, determinant, rank_ff, smith_normal_form
from .rationals import GaussianRational
from .spectral import ExceptionalSet, RootDatum, Wall, exceptional_weights, find_roots
from .twisted import (
    TwistedFiber,
    WeightedWindow,
    fredholm_check,
    l2_hom_dim_analytic,
    l2_kernel_truncated,
    twisted_dims,
    uct_dims,
)

__version__ = "0.1.0"

__all__ = [
    "AlexanderData",
    "AmbiguousWallError",
    "ChainComplexOverLambda",
    "ComplexValidationError",
    "EndexError",
    "ExceptionalSet",
    "FinitenessVerdict",
    "GaussianRational",
    "HomologyModule",
    "IndexFunction",
    "LaurentMatrix",
    "LaurentPoly",
    "ManifoldContext",
    "NotFiniteError",
    "OnWallError",
    "RootDatum",
    "SimplicialInput",
    "SnfResult",
    "TwistedFiber",
    "UnsupportedInputError",
    "Wall",
    "WeightedWindow",
    "WindowTooSmallError",
    "alexander_polynomials",
    "canonicalize",
    "cup_product_check",
    "determinant",
    "duality_check",
    "euler_characteristic_x",
    "excision_index",
    "exceptional_weights",
    "find_roots",
    "finiteness_check",
    "fredholm_check",
    "from_boundary_matrices",
    "homology",
    "index_at",
    "index_function",
    "jump_at",
    "l2_hom_dim_analytic",
    "l2_kernel_truncated",
    "laurent_gcd",
    "lift_simplicial",
    "poly",
    "rank_ff",
    "smith_normal_form",
    "squarefree_decomposition",
    "twisted_dims",
    "uct_dims",
]
