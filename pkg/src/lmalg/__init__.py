"""Exact computations with Steinitz numbers, Clifford and generalized Clifford
algebras, and unital locally matrix algebras presented as embedding chains."""

from .errors import (ChainError, ConsistencyError, DegenerateForm, DomainError, FieldExtensionRequired,
                     FormMismatch, NonSplitForm, NotInvariant, OrderMismatch, SchemaError, TableError)
from .exactnum import Cyclotomic, IntMatrix, Rational, ScalarField, cyclo_arith, kernel_mod, smith_normal_form
from .steinitz import INF, ONE, TOP, SteinitzNumber, st_divides, st_gcd, st_lcm, st_lcm_of_set, st_mul
from .fdalg import AlgebraProfile, StructureTable
from .clifford import (DiagonalForm, Multivector, Subspace, center, centralizer, lemma22_check, mv_mul,
                       structure_id, subalgebra_basis)
from .genclifford import (GCElement, GCParams, center_basis, clock_shift_rep, extract_components, gc_mul,
                          invariant_span_check, phi, radical_dim, wedderburn)
from .locmat import (EmbeddingChain, check_matrix_units, d_membership, isomorphic_countable, steinitz_of_chain,
                     steinitz_realization, tensor, unital_embedding_exists, universally_equivalent)

__version__ = "0.1.0"

__all__ = [
    "ChainError",
    "ConsistencyError",
    "DegenerateForm",
    "DomainError",
    "FieldExtensionRequired",
    "FormMismatch",
    "NonSplitForm",
    "NotInvariant",
    "OrderMismatch",
    "SchemaError",
    "TableError",
    "Cyclotomic",
    "IntMatrix",
    "Rational",
    "ScalarField",
    "cyclo_arith",
    "kernel_mod",
    "smith_normal_form",
    "INF",
    "ONE",
    "TOP",
    "SteinitzNumber",
    "st_divides",
    "st_gcd",
    "st_lcm",
    "st_lcm_of_set",
    "st_mul",
    "AlgebraProfile",
    "StructureTable",
    "DiagonalForm",
    "Multivector",
    "Subspace",
    "center",
    "centralizer",
    "lemma22_check",
    "mv_mul",
    "structure_id",
    "subalgebra_basis",
    "GCElement",
    "GCParams",
    "center_basis",
    "clock_shift_rep",
    "extract_components",
    "gc_mul",
    "invariant_span_check",
    "phi",
    "radical_dim",
    "wedderburn",
    "EmbeddingChain",
    "check_matrix_units",
    "d_membership",
    "isomorphic_countable",
    "steinitz_of_chain",
    "steinitz_realization",
    "tensor",
    "unital_embedding_exists",
    "universally_equivalent",
]
