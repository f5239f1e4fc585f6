"""Size limits shared by the enumeration routines."""

from __future__ import annotations

import os

# Hard ceiling for exhaustive closed-subset enumeration.
ENUMERATION_CAP = 24

# Largest carrier accepted by are_isomorphic (n! bijections).
ISOMORPHISM_CAP = 6

# Largest order direct_product will build.
PRODUCT_CAP = 4096

# Brute-force automaton division works on machines this small.
AUTOMATON_CAP = 6

# Semigroup homomorphism search: |A| ** |A| maps at most.
HOMOMORPHISM_CAP = 8

DEFAULT_CENSUS_BOUND = 16


def census_bound() -> int:
    """Largest magma order for which census rows get subset-complete columns.

    ``MAGMA_MAX_ORDER`` overrides the default of 16.
    """
    raw = os.environ.get("MAGMA_MAX_ORDER")
    if raw is None or raw.strip() == "":
        return DEFAULT_CENSUS_BOUND
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_CENSUS_BOUND
    return max(1, value)


def enumeration_bound() -> int:
    """Order limit for one-off enumerations; ``MAGMA_MAX_ORDER`` overrides ENUMERATION_CAP."""
    if os.environ.get("MAGMA_MAX_ORDER", "").strip():
        return census_bound()
    return ENUMERATION_CAP
