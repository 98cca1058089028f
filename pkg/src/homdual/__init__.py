"""
Ext^1, Tor_1, character modules and idempotent machinery
"""
from ..modules.groups import FgAbGroup
from .character import CharModule, DualExactness, character, pontryagin_dual, verify_dual_exactness
from .derived import ext1, ext1_cocycles, hom_group, long_exact_orders, random_cocycle, tensor_product, tor1
from .duality import (
    STATEMENTS,
    DualityRecord,
    EquivalenceRecord,
    EquivalenceRow,
    verify_ext_tor_duality,
    verify_flat_injective_duality,
    verify_injective_flat_duality,
)
from .idempotents import UnitalComponent, UnitalDecomposition, YonedaRecord, unital_decomposition, yoneda_check

__all__ = [
    "STATEMENTS",
    "CharModule",
    "DualExactness",
    "DualityRecord",
    "EquivalenceRecord",
    "EquivalenceRow",
    "FgAbGroup",
    "UnitalComponent",
    "UnitalDecomposition",
    "YonedaRecord",
    "character",
    "ext1",
    "ext1_cocycles",
    "hom_group",
    "long_exact_orders",
    "pontryagin_dual",
    "random_cocycle",
    "tensor_product",
    "tor1",
    "unital_decomposition",
    "verify_dual_exactness",
    "verify_ext_tor_duality",
    "verify_flat_injective_duality",
    "verify_injective_flat_duality",
    "yoneda_check",
]
