"""Polynilpotent multipliers and varietal capability of finitely generated abelian groups."""

from .abelian import (
    INFINITE,
    FGAbelianGroup,
    GroupElement,
    UnsupportedOperation,
    canonicalize,
    elements,
    enumerate_abelian_groups,
    is_valid_subgroup_shape,
    order,
    quotient_by_subgroup,
    subgroup_generated,
)
from .capability import (
    CapabilityVerdict,
    EpicenterResult,
    epicenter,
    injectivity_test,
    is_capable_closed_form,
    is_capable_oracle,
    largest_capable_quotient,
)
from .multiplier import (
    MultiplierStructure,
    multiplier_order,
    multiplier_torsion_free_rank,
    polynilpotent_multiplier,
    torsion_part,
)
from .snf import SNFResult, smith_normal_form
from .witt import ClassRow, chi_chain, mobius, witt

__all__ = [
    "INFINITE", "FGAbelianGroup", "GroupElement", "UnsupportedOperation",
    "canonicalize", "elements", "enumerate_abelian_groups", "is_valid_subgroup_shape",
    "order", "quotient_by_subgroup", "subgroup_generated",
    "CapabilityVerdict", "EpicenterResult", "epicenter", "injectivity_test",
    "is_capable_closed_form", "is_capable_oracle", "largest_capable_quotient",
    "MultiplierStructure", "multiplier_order", "multiplier_torsion_free_rank",
    "polynilpotent_multiplier", "torsion_part",
    "SNFResult", "smith_normal_form",
    "ClassRow", "chi_chain", "mobius", "witt",
]
