"""Modular data, module counting and branching functions of diagonal coset
vertex operator algebras built from affine Lie algebras."""

__version__ = "0.1.0"

from .affine import (affine_qdim, central_charge, level_weights, s_row, sugawara_weight,
                     sum_rule_report, vacuum_s_entry)
from .characters import GradedCharacter, QSeries, branch, graded_character
from .coset import (CosetTriple, coset_central_charge, coset_global_dim, coset_qdim,
                    dedup_orbits, selection_triples, verify_classification)
from .errors import ConsistencyError, DimensionError, DomainError, ResourceLimitError
from .lie import RootSystem, build_root_system, inner_product
from .minimal import ising_fuse, minimal_model

__all__ = [
    "ConsistencyError", "CosetTriple", "DimensionError", "DomainError", "GradedCharacter",
    "QSeries", "ResourceLimitError", "RootSystem", "affine_qdim", "branch",
    "build_root_system", "central_charge", "coset_central_charge", "coset_global_dim",
    "coset_qdim", "dedup_orbits", "graded_character", "inner_product", "ising_fuse",
    "level_weights", "minimal_model", "s_row", "selection_triples", "sugawara_weight",
    "sum_rule_report", "vacuum_s_entry", "verify_classification",
]
