"""
Finitely presented modules and finitely generated abelian groups
"""
from .fpmodule import (
    FpModule,
    HomResult,
    ModMorphism,
    NPresentation,
    PdCertificate,
    build_n_presentation,
    hom_module,
    is_projective,
    module_key,
    pd_le_1,
    projective_dimension,
    relation_lattice,
    syzygy,
    underlying_group,
    verify_presentation,
)
from .groups import FgAbGroup, LatticeQuotient, homology, quotient_group

__all__ = [
    "FgAbGroup",
    "FpModule",
    "HomResult",
    "LatticeQuotient",
    "ModMorphism",
    "NPresentation",
    "PdCertificate",
    "build_n_presentation",
    "hom_module",
    "homology",
    "is_projective",
    "module_key",
    "pd_le_1",
    "projective_dimension",
    "quotient_group",
    "relation_lattice",
    "syzygy",
    "underlying_group",
    "verify_presentation",
]
