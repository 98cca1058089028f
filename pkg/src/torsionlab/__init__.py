"""
Bounded verification of the torsion-class characterizations
"""
from .closure import PROPERTIES, ClosureCounterexample, ClosureReport, ClosureTrial, build_trial, closure_check, verify_closure
from .membership import (
    CLASSES,
    FLAT,
    IN,
    IN_UP_TO_BOUND,
    INJECTIVE,
    OUT,
    MembershipVerdict,
    Witness,
    class_value,
    is_semisimple,
    membership,
    verify_verdict,
)
from .reports import ConsistencyReport, PdSearchReport, hereditary_consistency_report, pd_fpn_search

__all__ = [
    "CLASSES",
    "FLAT",
    "IN",
    "IN_UP_TO_BOUND",
    "INJECTIVE",
    "OUT",
    "PROPERTIES",
    "ClosureCounterexample",
    "ClosureReport",
    "ClosureTrial",
    "ConsistencyReport",
    "MembershipVerdict",
    "PdSearchReport",
    "Witness",
    "build_trial",
    "class_value",
    "closure_check",
    "hereditary_consistency_report",
    "is_semisimple",
    "membership",
    "pd_fpn_search",
    "verify_closure",
    "verify_verdict",
]
