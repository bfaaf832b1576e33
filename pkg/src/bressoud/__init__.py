"""Overpartition classes, Gordon markings, weight-preserving bijections and
q-series verification for Bressoud-type partition theorems."""

from .core import (
    BressoudParams,
    Part,
    format_overpartition,
    parse_overpartition,
    sort_parts,
    weight,
)
from .marking import gordon_marking, reverse_gordon_marking
from .bijections import phi, phi0, psi, psi0
from .classes import (
    count_family,
    enumerate_family,
    is_A,
    is_Abar,
    is_B,
    is_Bbar,
)
from .qseries import QSeries, verify_identity

__all__ = [
    "BressoudParams",
    "Part",
    "QSeries",
    "count_family",
    "enumerate_family",
    "format_overpartition",
    "gordon_marking",
    "is_A",
    "is_Abar",
    "is_B",
    "is_Bbar",
    "parse_overpartition",
    "phi",
    "phi0",
    "psi",
    "psi0",
    "reverse_gordon_marking",
    "sort_parts",
    "verify_identity",
    "weight",
]
__version__ = "0.1.0"
