"""Constructive proofs of binomial unimodality, checked by machine.

Submodules: :mod:`binomial`, :mod:`injections`, :mod:`chains`,
:mod:`sperner`, :mod:`zpoly`, :mod:`operators`, :mod:`chebyshev`; the
command line lives in :mod:`cli`.
"""

from .binomial import BinomialTable, binomial_factorial, binomial_pascal
from .chains import Chain, ChainDecomposition, aigner_scd, gk_scd, recursive_scd, validate_scd
from .export import export_dot
from .injections import gk_predecessor, gk_successor, prefix_swap
from .records import CheckRecord
from .report import VerificationReport
from .sperner import Antichain, lubell_sum
from .subsets import Subset
from .zpoly import ZPolynomial, darga, is_z

__version__ = "0.1.0"

__all__ = [
    "Antichain", "BinomialTable", "Chain", "ChainDecomposition", "CheckRecord", "Subset",
    "VerificationReport", "ZPolynomial", "aigner_scd", "binomial_factorial", "binomial_pascal",
    "darga", "export_dot", "gk_predecessor", "gk_scd", "gk_successor", "is_z", "lubell_sum",
    "prefix_swap", "recursive_scd", "validate_scd",
]
