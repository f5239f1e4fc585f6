"""Single exception type carrying a stable machine-readable code."""

from __future__ import annotations

ENTRY_OUT_OF_RANGE = "ENTRY_OUT_OF_RANGE"
LENGTH_MISMATCH = "LENGTH_MISMATCH"
INDEX_OUT_OF_RANGE = "INDEX_OUT_OF_RANGE"
PRODUCT_ORDER_OVERFLOW = "PRODUCT_ORDER_OVERFLOW"
ORDER_TOO_LARGE = "ORDER_TOO_LARGE"
ORDER_MISMATCH = "ORDER_MISMATCH"
INVALID_SPEC = "INVALID_SPEC"
INVALID_LOOP_PARAMS = "INVALID_LOOP_PARAMS"
SUBSET_OUT_OF_RANGE = "SUBSET_OUT_OF_RANGE"
NOT_CLOSED = "NOT_CLOSED"
NOT_DISJOINT = "NOT_DISJOINT"
NOT_S_SUBGROUPOID = "NOT_S_SUBGROUPOID"
NOT_SMARANDACHE = "NOT_SMARANDACHE"
NOT_SEMIGROUP = "NOT_SEMIGROUP"
ALPHABET_MISMATCH = "ALPHABET_MISMATCH"
BOUND_EXCEEDED = "BOUND_EXCEEDED"
UNKNOWN_THEOREM = "UNKNOWN_THEOREM"
UNKNOWN_FIXTURE = "UNKNOWN_FIXTURE"
PARSE_ERROR = "PARSE_ERROR"


class MagmaError(Exception):
    """Raised for every precondition failure; ``code`` is one of the constants above."""

    def __init__(self, code: str, message: str = "") -> None:
        self.code = code
        self.message = message
        super().__init__(f"{code}: {message}" if message else code)
