"""Finite groupoids over Z_n: Cayley tables, identities, substructures,
Smarandache detectors, groupoid-built automata and a census driver."""

from .errors import MagmaError
from .magma import FiniteMagma, SubsetMask, Witness, basic_report, build_table
from .zn import ZnSpec, build_loop, build_zn, predicted_flags, zn
from .identities import LawId, check_law
from .smarandache import SmarandacheProfile, s_law, smarandache_witness
from .automata import from_groupoids
from .census import CensusRecord, census
from .theorems import VerificationReport, verify_theorem
from .fixtures import fixture_check_all, load_fixture

__version__ = "0.1.0"

__all__ = [
    "CensusRecord", "FiniteMagma", "LawId", "MagmaError", "SmarandacheProfile", "SubsetMask",
    "VerificationReport", "Witness", "ZnSpec", "basic_report", "build_loop", "build_table", "build_zn",
    "census", "check_law", "fixture_check_all", "from_groupoids", "load_fixture", "predicted_flags",
    "s_law", "smarandache_witness", "verify_theorem", "zn",
]
