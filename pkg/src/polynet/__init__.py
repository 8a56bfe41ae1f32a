"""Discrete polymatroids and the vector linear network codes built from
their finite-field representations."""

from __future__ import annotations

from ._kernels import BACKEND
from .coding import (
    BudgetExceeded,
    PolymatroidMapping,
    VectorLinearCode,
    check_dpn,
    code_from_representation,
    polymatroid_from_code,
    search_scalar_solution,
    verify_code,
)
from .constructor import ChoiceScript, ConstructionResult, construct, isomorphic, replay_check
from .ff import FieldSpec, FqMatrix
from .matroid import Matroid, check_matroid, uniform
from .network import Network, ancestral_order, in_out_sets, validate
from .polymatroid import DiscretePolymatroid, RankTable, check_rank_axioms, membership
from .representation import Representation, rank_table_from_matrices, search_representation

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "ChoiceScript",
    "ConstructionResult",
    "DiscretePolymatroid",
    "FieldSpec",
    "FqMatrix",
    "Matroid",
    "Network",
    "PolymatroidMapping",
    "RankTable",
    "Representation",
    "VectorLinearCode",
    "ancestral_order",
    "check_dpn",
    "check_matroid",
    "check_rank_axioms",
    "code_from_representation",
    "construct",
    "in_out_sets",
    "isomorphic",
    "membership",
    "polymatroid_from_code",
    "rank_table_from_matrices",
    "replay_check",
    "search_representation",
    "search_scalar_solution",
    "uniform",
    "validate",
    "verify_code",
]
