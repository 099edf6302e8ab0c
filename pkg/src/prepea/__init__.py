"""Finite models of weak pre pseudo effect algebras and their generalized versions.

Structures are small operation tables over ``0..n-1``.  The package checks
axioms, rebuilds operations from one another, enumerates models up to
isomorphism, and studies decomposition properties and congruences.
"""

__version__ = "0.1.0"

from .checks import (
    CheckReport,
    Verdict,
    check_gppea,
    check_pea,
    check_ppea,
    check_wppea,
    verify_derived_props,
)
from .congruence import Partition, check_congruence, enumerate_congruences, quotient
from .constructions import (
    restrict_wppea_to_gppea,
    trivial_gppea_from_poset,
    unitize,
    wppea_from_docposet,
)
from .derive import (
    derive_gppea_from_lminus,
    derive_gppea_from_rminus,
    explicit_minus,
    minus_from_plus,
    plus_from_lminus,
    plus_from_rminus,
)
from .kernels import BACKEND
from .serialize import dumps_json, dumps_text, loads
from .structures import Carrier, DocPoset, GppeaModel, PartialBinTable, Poset, UnaryMap, WppeaModel

__all__ = [
    "BACKEND", "Carrier", "CheckReport", "DocPoset", "GppeaModel", "PartialBinTable",
    "Partition", "Poset", "UnaryMap", "Verdict", "WppeaModel",
    "check_congruence", "check_gppea", "check_pea", "check_ppea", "check_wppea",
    "derive_gppea_from_lminus", "derive_gppea_from_rminus", "dumps_json", "dumps_text",
    "enumerate_congruences", "explicit_minus", "loads", "minus_from_plus",
    "plus_from_lminus", "plus_from_rminus", "quotient", "restrict_wppea_to_gppea",
    "trivial_gppea_from_poset", "unitize", "verify_derived_props", "wppea_from_docposet",
]
