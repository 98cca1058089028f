"""
Matrix category of a ring: pseudo n-cokernels and hereditary certificates
"""
from .certificates import (
    FAILURE,
    SUCCESS,
    HereditaryCertificate,
    Refutation,
    alpha_from_section,
    alpha_solve,
    n_hereditary_witness,
    semi_hereditary_witness,
    split_cokernel_test,
    verify_certificate,
)
from .chains import PseudoCokChain, is_n_cokernel, pseudo_cokernel, pseudo_n_cokernel
from .report import RingHereditaryReport, ring_hereditary_report

__all__ = [
    "FAILURE",
    "SUCCESS",
    "HereditaryCertificate",
    "PseudoCokChain",
    "Refutation",
    "RingHereditaryReport",
    "alpha_from_section",
    "alpha_solve",
    "is_n_cokernel",
    "n_hereditary_witness",
    "pseudo_cokernel",
    "pseudo_n_cokernel",
    "ring_hereditary_report",
    "semi_hereditary_witness",
    "split_cokernel_test",
    "verify_certificate",
]
