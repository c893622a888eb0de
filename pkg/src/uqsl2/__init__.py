"""Exact computer algebra for the restricted quantum group of sl2 at q = exp(pi i / p).

Everything is computed over the cyclotomic field Q(zeta_2p) with no floating
point anywhere: the 2p^3-dimensional algebra in its PBW basis, primitive
idempotents, simple and projective modules, the Casimir block decomposition,
and the basic algebras whose commutator quotients count symmetric linear
functions.
"""

from .cyclotomic import CycNum, CyclotomicField, ParameterError, RationalPoly, cyclotomic_polynomial, field, q_int
from .linalg import Coordinatizer, Matrix, NotInSpan, RankAccumulator, coordinates, rank, rref, span_rank
from .algebra import AlgebraElement, UqAlgebra, algebra, commutator, monomial, normal_product
from .idempotents import (
    GammaDelta,
    NotIdempotent,
    Sign,
    basic_set,
    gamma_delta,
    left_ideal_basis,
    left_ideal_dimension,
    primitive_idempotent,
)
from .representations import check_relations, projective_module, simple_module
from .center import block_dimension, block_projectors, casimir, minimal_polynomial
from .basic import (
    ConstructionError,
    basic_basis,
    basic_idempotent,
    commutator_table,
    full_algebra_slf,
    mult_table,
    slf_blocks,
    slf_dimension,
    slf_total,
)
from .verify import VerifyReport, run_verify

__version__ = "0.1.0"

__all__ = [
    "CycNum", "CyclotomicField", "ParameterError", "RationalPoly", "cyclotomic_polynomial", "field", "q_int",
    "Coordinatizer", "Matrix", "NotInSpan", "RankAccumulator", "coordinates", "rank", "rref", "span_rank",
    "AlgebraElement", "UqAlgebra", "algebra", "commutator", "monomial", "normal_product",
    "GammaDelta", "NotIdempotent", "Sign", "basic_set", "gamma_delta", "left_ideal_basis",
    "left_ideal_dimension", "primitive_idempotent",
    "check_relations", "projective_module", "simple_module",
    "block_dimension", "block_projectors", "casimir", "minimal_polynomial",
    "ConstructionError", "basic_basis", "basic_idempotent", "commutator_table", "full_algebra_slf",
    "mult_table", "slf_blocks", "slf_dimension", "slf_total",
    "VerifyReport", "run_verify",
]
