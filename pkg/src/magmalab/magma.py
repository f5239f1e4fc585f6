"""Finite magmas stored as Cayley tables, plus the elementary predicates.

Elements are always the indices ``0 .. order-1``; labels are cosmetic.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from . import config
from .errors import (
    ENTRY_OUT_OF_RANGE,
    INDEX_OUT_OF_RANGE,
    LENGTH_MISMATCH,
    NOT_CLOSED,
    ORDER_MISMATCH,
    ORDER_TOO_LARGE,
    PARSE_ERROR,
    PRODUCT_ORDER_OVERFLOW,
    MagmaError,
)


@dataclass(frozen=True)
class FiniteMagma:
    order: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    designated_zero: int | None = None

    def __post_init__(self) -> None:
        if self.order < 1:
            raise MagmaError(LENGTH_MISMATCH, "order must be positive")
        if len(self.table) != self.order or any(len(r) != self.order for r in self.table):
            raise MagmaError(LENGTH_MISMATCH, f"table is not {self.order}x{self.order}")
        for r, row in enumerate(self.table):
            for c, v in enumerate(row):
                if not 0 <= v < self.order:
                    raise MagmaError(ENTRY_OUT_OF_RANGE, f"entry ({r},{c}) = {v}")
        if self.labels is not None:
            if len(self.labels) != self.order:
                raise MagmaError(LENGTH_MISMATCH, "labels must match order")
            if len(set(self.labels)) != self.order:
                raise MagmaError(LENGTH_MISMATCH, "labels must be distinct")
        if self.designated_zero is not None and not 0 <= self.designated_zero < self.order:
            raise MagmaError(INDEX_OUT_OF_RANGE, "designated_zero outside carrier")

    @cached_property
    def arr(self) -> np.ndarray:
        """Read-only integer array view of the table."""
        a = np.array(self.table, dtype=np.int64).reshape(self.order, self.order)
        a.flags.writeable = False
        return a

    def __call__(self, a: int, b: int) -> int:
        return self.table[a][b]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def elements(self) -> range:
        return range(self.order)


class SubsetMask:
    """A subset of ``range(width)`` packed into an integer bitmask."""

    __slots__ = ("width", "bits")

    def __init__(self, width: int, bits: int = 0) -> None:
        if bits < 0 or bits >> width:
            raise MagmaError(INDEX_OUT_OF_RANGE, f"bits {bits:#x} exceed width {width}")
        self.width = width
        self.bits = bits

    @classmethod
    def of(cls, width: int, elems: Iterable[int]) -> "SubsetMask":
        bits = 0
        for e in elems:
            if not 0 <= e < width:
                raise MagmaError(INDEX_OUT_OF_RANGE, f"element {e} not in [0,{width})")
            bits |= 1 << e
        return cls(width, bits)

    @classmethod
    def full(cls, width: int) -> "SubsetMask":
        return cls(width, (1 << width) - 1)

    @classmethod
    def parse(cls, width: int, text: str) -> "SubsetMask":
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        parts = [p for p in body.replace(" ", "").split(",") if p]
        try:
            return cls.of(width, (int(p) for p in parts))
        except ValueError as exc:
            raise MagmaError(PARSE_ERROR, f"bad subset {text!r}") from exc

    def elements(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.width) if self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements())

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and 0 <= i < self.width and bool(self.bits >> i & 1)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SubsetMask) and (self.width, self.bits) == (other.width, other.bits)

    def __hash__(self) -> int:
        return hash((self.width, self.bits))

    def __and__(self, other: "SubsetMask") -> "SubsetMask":
        return SubsetMask(self.width, self.bits & other.bits)

    def __or__(self, other: "SubsetMask") -> "SubsetMask":
        return SubsetMask(self.width, self.bits | other.bits)

    def issubset(self, other: "SubsetMask") -> bool:
        return self.bits & ~other.bits == 0

    def is_proper(self) -> bool:
        return 0 < self.bits != (1 << self.width) - 1

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self), self.elements())

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements()) + "}"

    def __repr__(self) -> str:
        return f"SubsetMask({self.width}, {self})"


class WitnessKind(enum.Enum):
    PAIR = "pair"
    TRIPLE = "triple"


@dataclass(frozen=True)
class Witness:
    """A concrete failing instance: the two sides evaluated at ``elems``.

    ``note`` names the sub-law when a witness comes from a compound check.
    """

    kind: WitnessKind
    elems: tuple[int, ...]
    lhs: int
    rhs: int
    note: str = ""


@dataclass(frozen=True)
class BasicReport:
    commutative: bool
    commutative_witness: Witness | None
    associative: bool
    associative_witness: Witness | None
    left_identities: frozenset[int]
    right_identities: frozenset[int]
    two_sided_identities: frozenset[int]
    idempotents: frozenset[int]
    strictly_noncommutative: bool


def build_table(
    order: int,
    entries: Sequence[int] | Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
    designated_zero: int | None = None,
) -> FiniteMagma:
    """Build a magma from a flat row-major list (or a list of rows)."""
    flat: list[int] = []
    for item in entries:
        if isinstance(item, (list, tuple)):
            flat.extend(int(x) for x in item)
        else:
            flat.append(int(item))
    if len(flat) != order * order:
        raise MagmaError(LENGTH_MISMATCH, f"expected {order * order} entries, got {len(flat)}")
    rows = tuple(tuple(flat[r * order:(r + 1) * order]) for r in range(order))
    return FiniteMagma(order, rows, tuple(labels) if labels is not None else None, designated_zero)


def _check_index(m: FiniteMagma, *xs: int) -> None:
    for x in xs:
        if not 0 <= x < m.order:
            raise MagmaError(INDEX_OUT_OF_RANGE, f"element {x} not in [0,{m.order})")


def product(m: FiniteMagma, a: int, b: int) -> int:
    _check_index(m, a, b)
    return m.table[a][b]


def first_nonassociative(m: FiniteMagma, elems: Sequence[int] | None = None) -> Witness | None:
    """Lexicographically first (a,b,c) with (ab)c != a(bc), optionally inside ``elems``.

    ``elems`` must be closed for the restricted check to make sense; values
    are looked up in the full table either way.
    """
    A = m.arr
    idx = np.arange(m.order) if elems is None else np.asarray(sorted(elems), dtype=np.int64)
    if idx.size == 0:
        return None
    T = A[np.ix_(idx, idx)]
    left = A[T][:, :, idx]
    right = A[idx][:, T]
    bad = np.argwhere(left != right)
    if bad.size == 0:
        return None
    i, j, k = (int(v) for v in bad[0])
    return Witness(WitnessKind.TRIPLE, (int(idx[i]), int(idx[j]), int(idx[k])),
                   int(left[i, j, k]), int(right[i, j, k]))


def first_noncommuting(m: FiniteMagma, elems: Sequence[int] | None = None) -> Witness | None:
    A = m.arr
    idx = np.arange(m.order) if elems is None else np.asarray(sorted(elems), dtype=np.int64)
    T = A[np.ix_(idx, idx)]
    bad = np.argwhere(T != T.T)
    if bad.size == 0:
        return None
    i, j = (int(v) for v in bad[0])
    return Witness(WitnessKind.PAIR, (int(idx[i]), int(idx[j])), int(T[i, j]), int(T[j, i]))


def basic_report(m: FiniteMagma) -> BasicReport:
    A = m.arr
    n = m.order
    cw = first_noncommuting(m)
    aw = first_nonassociative(m)
    ar = np.arange(n)
    # e is a left identity when row e is the identity permutation.
    left = frozenset(int(e) for e in range(n) if np.array_equal(A[e], ar))
    right = frozenset(int(e) for e in range(n) if np.array_equal(A[:, e], ar))
    idem = frozenset(int(x) for x in range(n) if A[x, x] == x)
    off = ~np.eye(n, dtype=bool)
    strict = bool(np.all((A != A.T)[off])) if n > 1 else False
    return BasicReport(
        commutative=cw is None,
        commutative_witness=cw,
        associative=aw is None,
        associative_witness=aw,
        left_identities=left,
        right_identities=right,
        two_sided_identities=left & right,
        idempotents=idem,
        strictly_noncommutative=strict,
    )


def identity_element(m: FiniteMagma) -> int | None:
    """The two-sided identity, if the magma has one."""
    A = m.arr
    ar = np.arange(m.order)
    for e in range(m.order):
        if np.array_equal(A[e], ar) and np.array_equal(A[:, e], ar):
            return e
    return None


def is_associative(m: FiniteMagma) -> bool:
    return first_nonassociative(m) is None


def is_commutative(m: FiniteMagma) -> bool:
    return first_noncommuting(m) is None


def is_idempotent_groupoid(m: FiniteMagma) -> bool:
    return all(m.table[x][x] == x for x in range(m.order))


def center(m: FiniteMagma) -> SubsetMask:
    A = m.arr
    cols = np.all(A == A.T, axis=0)
    return SubsetMask.of(m.order, (int(x) for x in np.flatnonzero(cols)))


def zero_divisor_report(m: FiniteMagma, zero: int) -> tuple[frozenset[int], frozenset[int]]:
    """Return ``(left, right)`` zero divisors relative to ``zero``.

    ``a`` is a right zero divisor when ``a*b == zero`` for some ``b != zero``,
    and a left zero divisor when ``b*a == zero`` for such a ``b``.
    """
    _check_index(m, zero)
    left: set[int] = set()
    right: set[int] = set()
    for a in range(m.order):
        if a == zero:
            continue
        for b in range(m.order):
            if b == zero:
                continue
            if m.table[a][b] == zero:
                right.add(a)
            if m.table[b][a] == zero:
                left.add(a)
    return frozenset(left), frozenset(right)


class Reach(NamedTuple):
    """``target = source * x`` (side "right") or ``target = x * source`` (side "left")."""

    multiplier: int
    side: str


class ConjugatePair(NamedTuple):
    a: int
    b: int
    a_from_b: Reach
    b_from_a: Reach


def _reach(m: FiniteMagma, target: int, source: int) -> Reach | None:
    for x in range(m.order):
        if m.table[source][x] == target:
            return Reach(x, "right")
    for x in range(m.order):
        if m.table[x][source] == target:
            return Reach(x, "left")
    return None


def conjugate_pairs(m: FiniteMagma) -> list[ConjugatePair]:
    out = []
    for a, b in itertools.combinations(range(m.order), 2):
        ab = _reach(m, a, b)
        if ab is None:
            continue
        ba = _reach(m, b, a)
        if ba is not None:
            out.append(ConjugatePair(a, b, ab, ba))
    return out


class LoopCheck(NamedTuple):
    holds: bool
    identity: int | None
    reason: str


def is_loop(m: FiniteMagma) -> LoopCheck:
    e = identity_element(m)
    if e is None:
        return LoopCheck(False, None, "no two-sided identity")
    A = m.arr
    for r in range(m.order):
        if len(set(A[r].tolist())) != m.order:
            return LoopCheck(False, e, f"row {r} repeats an entry")
    for c in range(m.order):
        if len(set(A[:, c].tolist())) != m.order:
            return LoopCheck(False, e, f"column {c} repeats an entry")
    return LoopCheck(True, e, "")


def direct_product(ms: Sequence[FiniteMagma], cap: int | None = None) -> FiniteMagma:
    """Componentwise product; the first factor is the most significant digit."""
    if len(ms) < 2:
        raise MagmaError(LENGTH_MISMATCH, "direct_product needs at least two factors")
    limit = config.PRODUCT_CAP if cap is None else cap
    orders = [m.order for m in ms]
    total = 1
    for o in orders:
        total *= o
        if total > limit:
            raise MagmaError(PRODUCT_ORDER_OVERFLOW, f"product order exceeds {limit}")
    tuples = list(itertools.product(*(range(o) for o in orders)))
    strides = [1] * len(orders)
    for i in range(len(orders) - 2, -1, -1):
        strides[i] = strides[i + 1] * orders[i + 1]

    def encode(tup: Sequence[int]) -> int:
        return sum(g * s for g, s in zip(tup, strides))

    rows = []
    for x in tuples:
        rows.append(tuple(encode([f.table[a][b] for f, a, b in zip(ms, x, y)]) for y in tuples))
    labels = tuple("(" + ",".join(f.label(g) for f, g in zip(ms, x)) + ")" for x in tuples)
    zero = None
    if all(f.designated_zero is not None for f in ms):
        zero = encode([f.designated_zero for f in ms])  # type: ignore[misc]
    return FiniteMagma(total, tuple(rows), labels, zero)


def product_index(ms: Sequence[FiniteMagma], coords: Sequence[int]) -> int:
    """Index of the tuple ``coords`` in ``direct_product(ms)``."""
    idx = 0
    for f, g in zip(ms, coords):
        idx = idx * f.order + g
    return idx


def are_isomorphic(m1: FiniteMagma, m2: FiniteMagma, max_order: int | None = None) -> tuple[bool, tuple[int, ...] | None]:
    """Brute-force isomorphism test; returns the first bijection found."""
    limit = config.ISOMORPHISM_CAP if max_order is None else max_order
    if m1.order != m2.order:
        raise MagmaError(ORDER_MISMATCH, f"{m1.order} != {m2.order}")
    if m1.order > limit:
        raise MagmaError(ORDER_TOO_LARGE, f"order {m1.order} above isomorphism cap {limit}")
    n = m1.order
    t1, t2 = m1.table, m2.table
    for perm in itertools.permutations(range(n)):
        if all(perm[t1[a][b]] == t2[perm[a]][perm[b]] for a in range(n) for b in range(n)):
            return True, perm
    return False, None


def dumps(m: FiniteMagma) -> str:
    """Serialize to the plain Cayley-table text format."""
    lines = [str(m.order)]
    lines.extend(" ".join(str(v) for v in row) for row in m.table)
    if m.labels is not None:
        lines.append("# labels: " + " ".join(m.labels))
    return "\n".join(lines) + "\n"


def loads(text: str, designated_zero: int | None = None) -> FiniteMagma:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MagmaError(PARSE_ERROR, "empty table text")
    try:
        order = int(lines[0])
    except ValueError as exc:
        raise MagmaError(PARSE_ERROR, f"bad order line {lines[0]!r}") from exc
    labels = None
    body = []
    for ln in lines[1:]:
        if ln.startswith("#"):
            tag = "# labels:"
            if ln.startswith(tag):
                labels = ln[len(tag):].split()
            continue
        body.append(ln)
    if len(body) != order:
        raise MagmaError(PARSE_ERROR, f"expected {order} rows, found {len(body)}")
    try:
        entries = [int(tok) for row in body for tok in row.split()]
    except ValueError as exc:
        raise MagmaError(PARSE_ERROR, "non-integer table entry") from exc
    return build_table(order, entries, labels, designated_zero)


def restrict(m: FiniteMagma, subset: SubsetMask) -> FiniteMagma:
    """The sub-magma on a closed subset, re-indexed in increasing element order."""
    elems = subset.elements()
    pos = {e: i for i, e in enumerate(elems)}
    rows = []
    for a in elems:
        row = []
        for b in elems:
            v = m.table[a][b]
            if v not in pos:
                raise MagmaError(NOT_CLOSED, f"{subset} is not closed")
            row.append(pos[v])
        rows.append(tuple(row))
    labels = tuple(m.label(e) for e in elems)
    zero = pos.get(m.designated_zero) if m.designated_zero is not None else None
    return FiniteMagma(len(elems), tuple(rows), labels, zero)
