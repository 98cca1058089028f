"""
hereditas: exact homological algebra over small rings
"""
__version__ = "0.1.0"
__description__ = "Certificates and bounded searches for hereditary rings and torsion classes"

from .config import config

__all__ = ["config", "__version__"]
