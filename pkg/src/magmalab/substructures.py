"""Subgroupoids, subsemigroups, ideals, normality and conjugacy.

Closed subsets form a closure system (intersections of closed sets are
closed), so they are enumerated with a Close-by-One sweep: every closed set
is reached exactly once, from its canonical parent, via the usual
"no new element below the added index" test.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple

from . import config
from .errors import NOT_CLOSED, NOT_DISJOINT, ORDER_TOO_LARGE, MagmaError
from .magma import FiniteMagma, SubsetMask, first_nonassociative, identity_element, is_associative


class IdealSide(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"


class NormalityScope(enum.Enum):
    LITERAL_V = "literal_v"
    OVER_G = "over_g"


class MultiplierScope(enum.Enum):
    IN_H = "in_h"
    IN_G = "in_g"


@dataclass(frozen=True)
class ClosedSetFamily:
    magma: FiniteMagma
    members: tuple[SubsetMask, ...]
    complete: bool = True
    bound_hit: str | None = None

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, s: object) -> bool:
        return s in self.members

    def bits(self) -> set[int]:
        return {s.bits for s in self.members}


# ---------------------------------------------------------------- closures


def _close(table: tuple[tuple[int, ...], ...], closed_bits: int, closed_elems: list[int],
           extra: Iterable[int]) -> tuple[int, list[int]]:
    """Close ``closed ∪ extra`` where ``closed`` is already closed.

    Only products involving at least one new element are computed.
    """
    mask = closed_bits
    done = list(closed_elems)
    queue = []
    for x in extra:
        if not mask >> x & 1:
            mask |= 1 << x
            queue.append(x)
    while queue:
        x = queue.pop()
        row = table[x]
        for y in done:
            for v in (row[y], table[y][x]):
                if not mask >> v & 1:
                    mask |= 1 << v
                    queue.append(v)
        v = row[x]
        if not mask >> v & 1:
            mask |= 1 << v
            queue.append(v)
        done.append(x)
    return mask, done


def _bits_elems(bits: int) -> list[int]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def generated_closure(m: FiniteMagma, seed: SubsetMask) -> SubsetMask:
    bits, _ = _close(m.table, 0, [], seed.elements())
    return SubsetMask(m.order, bits)


def is_closed(m: FiniteMagma, s: SubsetMask) -> bool:
    elems = s.elements()
    bits = s.bits
    t = m.table
    return all(bits >> t[a][b] & 1 for a in elems for b in elems)


def _cbo(n: int, universe: int, close_from: Callable[[int, list[int], int], tuple[int, list[int]]],
         limit: int | None) -> tuple[list[int], bool]:
    """Close-by-One over the elements of ``universe``.

    ``close_from(bits, elems, x)`` closes ``bits ∪ {x}`` given closed ``bits``.
    Returns (nonempty closed bitmasks, complete flag).
    """
    found: list[int] = []
    order = _bits_elems(universe)
    # stack items: (closed bits, their element list, position of last generator)
    stack: list[tuple[int, list[int], int]] = [(0, [], -1)]
    while stack:
        bits, elems, last = stack.pop()
        for pos in range(len(order) - 1, last, -1):
            x = order[pos]
            if bits >> x & 1:
                continue
            new_bits, new_elems = close_from(bits, elems, x)
            below = (1 << x) - 1
            if new_bits & below != bits & below:
                continue
            found.append(new_bits)
            if limit is not None and len(found) >= limit:
                return found, False
            stack.append((new_bits, new_elems, pos))
    return found, True


def _check_order(m: FiniteMagma, max_order: int | None) -> None:
    cap = config.ENUMERATION_CAP if max_order is None else max_order
    if m.order > cap:
        raise MagmaError(ORDER_TOO_LARGE, f"order {m.order} above enumeration cap {cap}")


def _family(m: FiniteMagma, bit_list: Iterable[int], complete: bool, include_improper: bool,
            note: str | None = None) -> ClosedSetFamily:
    full = (1 << m.order) - 1
    masks = [SubsetMask(m.order, b) for b in set(bit_list) if b and (include_improper or b != full)]
    masks.sort(key=SubsetMask.sort_key)
    return ClosedSetFamily(m, tuple(masks), complete, None if complete else note)


def closed_bits(m: FiniteMagma, universe: SubsetMask | None = None, limit: int | None = None,
                max_order: int | None = None) -> tuple[list[int], bool]:
    """Raw bitmasks of every nonempty closed subset of ``universe`` (itself closed)."""
    _check_order(m, max_order)
    table = m.table
    uni = (1 << m.order) - 1 if universe is None else universe.bits

    def close_from(bits: int, elems: list[int], x: int) -> tuple[int, list[int]]:
        return _close(table, bits, elems, (x,))

    return _cbo(m.order, uni, close_from, limit)


def enumerate_closed(m: FiniteMagma, include_improper: bool = False, limit: int | None = None,
                     max_order: int | None = None) -> ClosedSetFamily:
    """All nonempty closed subsets (proper ones unless ``include_improper``)."""
    found, complete = closed_bits(m, None, limit, max_order)
    return _family(m, found, complete, include_improper, f"stopped after {limit} closed sets")


def _associative_bits(m: FiniteMagma, bits: int) -> bool:
    return first_nonassociative(m, _bits_elems(bits)) is None


def trivial_bits(m: FiniteMagma, exclude_zero: bool = True, exclude_identity: bool = False) -> set[int]:
    """Singleton masks regarded as trivial semigroups under the given policy."""
    out = set()
    if exclude_zero and m.designated_zero is not None:
        out.add(1 << m.designated_zero)
    if exclude_identity:
        e = identity_element(m)
        if e is not None:
            out.add(1 << e)
    return out


def semigroup_bits(m: FiniteMagma, closed: Iterable[int]) -> list[int]:
    if is_associative(m):
        return list(closed)
    return [b for b in closed if _associative_bits(m, b)]


def enumerate_subsemigroups(m: FiniteMagma, min_size: int = 1, exclude_trivial: bool = True,
                            include_improper: bool = False, limit: int | None = None,
                            max_order: int | None = None) -> ClosedSetFamily:
    """Closed subsets whose restricted operation is associative.

    ``exclude_trivial`` drops the singleton of the designated zero.
    """
    found, complete = closed_bits(m, None, limit, max_order)
    triv = trivial_bits(m, exclude_trivial)
    keep = [b for b in semigroup_bits(m, found) if b not in triv and b.bit_count() >= min_size]
    return _family(m, keep, complete, include_improper, f"stopped after {limit} closed sets")


# ------------------------------------------------------------------ ideals


class Escape(NamedTuple):
    """``x * a`` (LEFT) or ``a * x`` (RIGHT) landed outside the subset."""

    x: int
    a: int
    product: int
    side: IdealSide


def _require_closed(m: FiniteMagma, s: SubsetMask) -> None:
    if s.width != m.order or not s.is_proper() or not is_closed(m, s):
        raise MagmaError(NOT_CLOSED, f"{s} is not a nonempty proper closed subset")


def _ideal_escape(m: FiniteMagma, s: SubsetMask, side: IdealSide) -> Escape | None:
    t = m.table
    bits = s.bits
    for a in s.elements():
        for x in range(m.order):
            if side is not IdealSide.RIGHT and not bits >> t[x][a] & 1:
                return Escape(x, a, t[x][a], IdealSide.LEFT)
            if side is not IdealSide.LEFT and not bits >> t[a][x] & 1:
                return Escape(x, a, t[a][x], IdealSide.RIGHT)
    return None


def is_ideal(m: FiniteMagma, s: SubsetMask, side: IdealSide) -> tuple[bool, Escape | None]:
    """LEFT means G*S ⊆ S, RIGHT means S*G ⊆ S."""
    _require_closed(m, s)
    esc = _ideal_escape(m, s, side)
    return esc is None, esc


def enumerate_ideals(m: FiniteMagma, side: IdealSide, limit: int | None = None,
                     max_order: int | None = None) -> ClosedSetFamily:
    """Proper ideals, enumerated directly over the ideal closure operator.

    A set absorbing products from the chosen side(s) is automatically closed,
    so ideals form their own closure system.
    """
    _check_order(m, max_order)
    t = m.table
    n = m.order
    cols = [tuple(t[x][a] for x in range(n)) for a in range(n)]

    def close_from(bits: int, elems: list[int], start: int) -> tuple[int, list[int]]:
        mask = bits
        queue = [start] if not bits >> start & 1 else []
        mask |= 1 << start
        out = list(elems)
        while queue:
            a = queue.pop()
            out.append(a)
            cand = []
            if side is not IdealSide.RIGHT:
                cand.extend(cols[a])
            if side is not IdealSide.LEFT:
                cand.extend(t[a])
            for v in cand:
                if not mask >> v & 1:
                    mask |= 1 << v
                    queue.append(v)
        return mask, out

    found, complete = _cbo(n, (1 << n) - 1, close_from, limit)
    return _family(m, found, complete, False, f"stopped after {limit} ideals")


# --------------------------------------------------------------- normality


def left_coset(m: FiniteMagma, a: int, s: SubsetMask) -> SubsetMask:
    """The set a*S."""
    row = m.table[a]
    return SubsetMask.of(m.order, {row[v] for v in s.elements()})


def right_coset(m: FiniteMagma, s: SubsetMask, a: int) -> SubsetMask:
    """The set S*a."""
    return SubsetMask.of(m.order, {m.table[v][a] for v in s.elements()})


def is_normal_subgroupoid(m: FiniteMagma, v: SubsetMask,
                          scope: NormalityScope = NormalityScope.LITERAL_V) -> tuple[bool, str | None]:
    """Setwise tests aV = Va, (Vx)y = V(xy), y(xV) = (yx)V.

    Under LITERAL_V the quantified a, x, y range over V; under OVER_G over
    the whole carrier.  On failure the second item names the broken test.
    """
    _require_closed(m, v)
    t = m.table
    rng = v.elements() if scope is NormalityScope.LITERAL_V else range(m.order)
    velems = v.elements()
    for a in rng:
        if left_coset(m, a, v) != right_coset(m, v, a):
            return False, f"aV != Va at a={a}"
    for x in rng:
        for y in rng:
            vx_y = {t[t[w][x]][y] for w in velems}
            v_xy = {t[w][t[x][y]] for w in velems}
            if vx_y != v_xy:
                return False, f"(Vx)y != V(xy) at x={x}, y={y}"
            y_xv = {t[y][t[x][w]] for w in velems}
            yx_v = {t[t[y][x]][w] for w in velems}
            if y_xv != yx_v:
                return False, f"y(xV) != (yx)V at x={x}, y={y}"
    return True, None


def is_normal_groupoid(m: FiniteMagma) -> tuple[bool, str | None]:
    """xG = Gx, G(xy) = (Gx)y and y(xG) = (yx)G for all x, y."""
    g = SubsetMask.full(m.order)
    t = m.table
    for x in range(m.order):
        if left_coset(m, x, g) != right_coset(m, g, x):
            return False, f"xG != Gx at x={x}"
    for x in range(m.order):
        for y in range(m.order):
            if {t[w][t[x][y]] for w in g} != {t[t[w][x]][y] for w in g}:
                return False, f"G(xy) != (Gx)y at x={x}, y={y}"
            if {t[y][t[x][w]] for w in g} != {t[t[y][x]][w] for w in g}:
                return False, f"y(xG) != (yx)G at x={x}, y={y}"
    return True, None


def normal_subgroupoids(m: FiniteMagma, scope: NormalityScope = NormalityScope.LITERAL_V,
                        max_order: int | None = None) -> list[SubsetMask]:
    triv = trivial_bits(m, True)
    return [s for s in enumerate_closed(m, max_order=max_order)
            if s.bits not in triv and is_normal_subgroupoid(m, s, scope)[0]]


def is_simple(m: FiniteMagma, max_order: int | None = None) -> bool:
    """No nontrivial normal subgroupoid (LITERAL_V reading)."""
    return not normal_subgroupoids(m, NormalityScope.LITERAL_V, max_order)


# ---------------------------------------------------------------- conjugacy


class Mapping(NamedTuple):
    """``target = x * source`` (side "left") or ``source * x`` (side "right")."""

    x: int
    side: str


def all_multipliers(m: FiniteMagma, target: SubsetMask, source: SubsetMask,
                    candidates: Iterable[int]) -> list[Mapping]:
    """Every x with target = xS, then every x with target = Sx."""
    cands = list(candidates)
    out = [Mapping(x, "left") for x in cands if left_coset(m, x, source) == target]
    out += [Mapping(x, "right") for x in cands if right_coset(m, source, x) == target]
    return out


def find_multiplier(m: FiniteMagma, target: SubsetMask, source: SubsetMask,
                    candidates: Iterable[int]) -> Mapping | None:
    found = all_multipliers(m, target, source, candidates)
    return found[0] if found else None


def are_conjugate_subgroupoids(m: FiniteMagma, h: SubsetMask, k: SubsetMask,
                               multiplier_scope: MultiplierScope = MultiplierScope.IN_G
                               ) -> tuple[bool, Mapping | None]:
    """Disjoint closed H, K with H = xK or Kx for some x (in H, or anywhere in G)."""
    _require_closed(m, h)
    _require_closed(m, k)
    if h.bits & k.bits:
        raise MagmaError(NOT_DISJOINT, f"{h} and {k} intersect")
    cands = h.elements() if multiplier_scope is MultiplierScope.IN_H else range(m.order)
    ev = find_multiplier(m, h, k, cands)
    return ev is not None, ev


# ----------------------------------------------------- inner commutativity


def is_inner_commutative(m: FiniteMagma, max_order: int | None = None) -> tuple[bool, SubsetMask | None]:
    t = m.table
    for s in enumerate_closed(m, max_order=max_order):
        el = s.elements()
        for i, a in enumerate(el):
            for b in el[i + 1:]:
                if t[a][b] != t[b][a]:
                    return False, s
    return True, None
