"""Exact rank functions on perfect complexes over finite-dimensional algebras."""

from .coeff import INF, CoeffPoly, PeriodError, divide_q_plus_1, normalize, reduce_period
from .fdalg import (FDAlgebra, MatAlgebraHom, from_quiver, from_structure_constants,
                    local_matrix_rank, monoid_algebra, radical_and_residue, verify_hom)
from .homalg import FDModule, homological_epi_check, module_from_hom, resolution, tor_dims
from .linal import QQ, FieldSpec
from .perf import ChainMap, FreeComplex, IdempotentObject, MatrixOverA, cone, free_module, two_term
from .rank import (RankFunction, SylvesterRank, derived_morphism_rank, derived_object_rank,
                   full_square_submatrix, fullness_and_kernel, idempotent_rank,
                   localizing_diagnostic, sylvester_module_rank, sylvester_morphism_rank)

__version__ = "0.1.0"

__all__ = [
    "INF", "CoeffPoly", "PeriodError", "divide_q_plus_1", "normalize", "reduce_period",
    "FDAlgebra", "MatAlgebraHom", "from_quiver", "from_structure_constants", "local_matrix_rank",
    "monoid_algebra", "radical_and_residue", "verify_hom",
    "FDModule", "homological_epi_check", "module_from_hom", "resolution", "tor_dims",
    "QQ", "FieldSpec",
    "ChainMap", "FreeComplex", "IdempotentObject", "MatrixOverA", "cone", "free_module", "two_term",
    "RankFunction", "SylvesterRank", "derived_morphism_rank", "derived_object_rank",
    "full_square_submatrix", "fullness_and_kernel", "idempotent_rank", "localizing_diagnostic",
    "sylvester_module_rank", "sylvester_morphism_rank",
]
