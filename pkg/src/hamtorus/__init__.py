"""Exact homology of weight-graded Hamiltonian vector fields on tori.

The package builds the weight-graded chain complexes attached to the
algebra of trigonometric (or polynomial) Hamiltonians under a constant
Poisson tensor, assembles their boundary operators as sparse matrices
over the rationals, and computes kernel dimensions, Betti numbers and
degree-1 coranks exactly, cross-checking matrix results against closed
and recursive corank formulas.
"""

from .basis import (
    BasisKind,
    BasisWord,
    LinearCombination,
    differentiate,
    dim_graded_piece,
    enumerate_graded_piece,
    graded_index,
    multiply_top,
    psi_map,
)
from .bracket import (
    PoissonStructure,
    bracket_t2_fourier_oracle,
    bracket_t2_product_oracle,
    bracket_top,
    cokernel_witnesses_t2,
)
from .cache import MatrixCache, default_cache_dir
from .chains import (
    ChainBasis,
    YoungShape,
    boundary_matrix,
    chain_basis,
    chain_dim,
    normalize_wedge,
    young_shapes,
)
from .homology import (
    BettiTable,
    CorankSeries,
    alternating_identity_check,
    betti_table,
    corank_closed,
    corank_computed,
    corank_poisson_product,
    corank_recursive,
    corank_series,
)
from .linalg import (
    PrimeDividesDenominator,
    RankCertificate,
    SparseRationalMatrix,
    rank,
    rank_exact,
    rank_modular,
)

__version__ = "0.1.0"

__all__ = [
    "BasisKind",
    "BasisWord",
    "BettiTable",
    "ChainBasis",
    "CorankSeries",
    "LinearCombination",
    "MatrixCache",
    "PoissonStructure",
    "PrimeDividesDenominator",
    "RankCertificate",
    "SparseRationalMatrix",
    "YoungShape",
    "alternating_identity_check",
    "betti_table",
    "boundary_matrix",
    "bracket_t2_fourier_oracle",
    "bracket_t2_product_oracle",
    "bracket_top",
    "chain_basis",
    "chain_dim",
    "cokernel_witnesses_t2",
    "corank_closed",
    "corank_computed",
    "corank_poisson_product",
    "corank_recursive",
    "corank_series",
    "default_cache_dir",
    "differentiate",
    "dim_graded_piece",
    "enumerate_graded_piece",
    "graded_index",
    "multiply_top",
    "normalize_wedge",
    "psi_map",
    "rank",
    "rank_exact",
    "rank_modular",
    "young_shapes",
]
