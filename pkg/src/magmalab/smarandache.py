"""Smarandache detectors: a groupoid qualifies when a proper subset is a semigroup.

Vocabulary used below:

* a *qualifying semigroup* is a proper, closed, associative subset that is
  not trivial under the policy and has at least ``min_subset_size`` elements;
* an *S-subgroupoid* is a proper closed H containing a qualifying semigroup
  K with K != H.

Everything hangs off :class:`SmarandacheProfile`, which enumerates the
closed subsets once and derives the rest.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Sequence

from . import config
from .errors import (
    NOT_CLOSED,
    NOT_S_SUBGROUPOID,
    NOT_SEMIGROUP,
    NOT_SMARANDACHE,
    ORDER_TOO_LARGE,
    PRODUCT_ORDER_OVERFLOW,
    MagmaError,
)
from .identities import LawId, check_law
from .magma import (
    FiniteMagma,
    SubsetMask,
    direct_product,
    first_nonassociative,
    first_noncommuting,
    identity_element,
    is_associative,
)
from .substructures import (
    ClosedSetFamily,
    IdealSide,
    Mapping,
    _bits_elems,
    _family,
    closed_bits,
    all_multipliers,
    is_closed,
    is_ideal,
    left_coset,
    right_coset,
)


@dataclass(frozen=True)
class SPolicy:
    exclude_trivial_zero: bool = True
    min_subset_size: int = 1
    # A lone identity element is as uninformative as a lone zero.
    exclude_trivial_identity: bool = True

    def __post_init__(self) -> None:
        if self.min_subset_size < 1:
            raise ValueError("min_subset_size must be at least 1")


DEFAULT_POLICY = SPolicy()


class SLawStrength(enum.Enum):
    WEAK = "weak"
    STRONG = "strong"


class CosetReading(enum.Enum):
    """How the X = aV, Y = Va sets of S-(semi)normality are formed.

    UNION takes X = G*V and Y = V*G; PER_ELEMENT tests aV and Va for every a.
    """

    UNION = "union"
    PER_ELEMENT = "per_element"


@dataclass(frozen=True)
class SgWitness:
    subset: SubsetMask
    is_trivial: bool
    commutative: bool
    degenerate_sg: bool = False


def _trivial(m: FiniteMagma, policy: SPolicy) -> set[int]:
    out = set()
    if policy.exclude_trivial_zero and m.designated_zero is not None:
        out.add(1 << m.designated_zero)
    if policy.exclude_trivial_identity:
        e = identity_element(m)
        if e is not None:
            out.add(1 << e)
    return out


def _assoc(m: FiniteMagma, bits: int) -> bool:
    return first_nonassociative(m, _bits_elems(bits)) is None


def _comm(m: FiniteMagma, bits: int) -> bool:
    return first_noncommuting(m, _bits_elems(bits)) is None


class SmarandacheProfile:
    """Lazily computed Smarandache data for one magma under one policy."""

    def __init__(self, m: FiniteMagma, policy: SPolicy = DEFAULT_POLICY, max_order: int | None = None,
                 limit: int | None = None) -> None:
        cap = config.ENUMERATION_CAP if max_order is None else max_order
        if m.order > cap:
            raise MagmaError(ORDER_TOO_LARGE, f"order {m.order} above enumeration cap {cap}")
        self.m = m
        self.policy = policy
        self.limit = limit
        self.full = (1 << m.order) - 1
        self.trivial = _trivial(m, policy)

    @cached_property
    def _closed(self) -> tuple[list[int], bool]:
        found, complete = closed_bits(self.m, limit=self.limit, max_order=self.m.order)
        return sorted(b for b in found if b != self.full), complete

    @property
    def complete(self) -> bool:
        return self._closed[1]

    @property
    def closed(self) -> list[int]:
        return self._closed[0]

    @cached_property
    def globally_associative(self) -> bool:
        return is_associative(self.m)

    @cached_property
    def semigroups(self) -> list[int]:
        """Qualifying semigroups, as bitmasks."""
        out = []
        for b in self.closed:
            if b in self.trivial or b.bit_count() < self.policy.min_subset_size:
                continue
            if self.globally_associative or _assoc(self.m, b):
                out.append(b)
        return out

    @cached_property
    def minimal_semigroups(self) -> list[int]:
        sg = sorted(self.semigroups, key=int.bit_count)
        mins: list[int] = []
        for b in sg:
            if not any(k & b == k for k in mins):
                mins.append(b)
        return mins

    def contains_proper_semigroup(self, h: int) -> bool:
        # A qualifying K ⊊ H exists iff some minimal one sits strictly inside H.
        return any(k & h == k and k != h for k in self.minimal_semigroups)

    @cached_property
    def s_subgroupoids(self) -> list[int]:
        return [h for h in self.closed if self.contains_proper_semigroup(h)]

    @cached_property
    def witness(self) -> SgWitness | None:
        return _staged_witness(self.m, self.policy, self)


def _sort_key(bits: int) -> tuple[int, list[int]]:
    return bits.bit_count(), _bits_elems(bits)


def _make_witness(m: FiniteMagma, bits: int) -> SgWitness:
    s = SubsetMask(m.order, bits)
    triv = m.designated_zero is not None and bits == 1 << m.designated_zero
    return SgWitness(s, triv, _comm(m, bits), is_associative(m))


def _staged_witness(m: FiniteMagma, policy: SPolicy, profile: SmarandacheProfile | None) -> SgWitness | None:
    """Smallest qualifying semigroup, ties broken by sorted element list."""
    n = m.order
    if n < 2:
        return None
    triv = _trivial(m, policy)
    t = m.table
    if policy.min_subset_size <= 1:
        for a in range(n):
            if t[a][a] == a and (1 << a) not in triv:
                return _make_witness(m, 1 << a)
    if policy.min_subset_size <= 2 and n > 2:
        for a, b in itertools.combinations(range(n), 2):
            bits = 1 << a | 1 << b
            s = SubsetMask(n, bits)
            if is_closed(m, s) and _assoc(m, bits):
                return _make_witness(m, bits)
    if profile is None:
        profile = SmarandacheProfile(m, policy, max_order=n)
    rest = [b for b in profile.semigroups if b.bit_count() >= max(3, policy.min_subset_size)]
    if not rest:
        return None
    return _make_witness(m, min(rest, key=_sort_key))


def smarandache_witness(m: FiniteMagma, policy: SPolicy = DEFAULT_POLICY,
                        max_order: int | None = None) -> SgWitness | None:
    """A minimal-size proper subset that is a semigroup, or None."""
    cap = config.ENUMERATION_CAP if max_order is None else max_order
    if m.order > cap:
        raise MagmaError(ORDER_TOO_LARGE, f"order {m.order} above enumeration cap {cap}")
    return _staged_witness(m, policy, None)


def is_smarandache(m: FiniteMagma, policy: SPolicy = DEFAULT_POLICY) -> bool:
    return smarandache_witness(m, policy) is not None


def is_semigroup_subset(m: FiniteMagma, s: SubsetMask) -> bool:
    return len(s) > 0 and is_closed(m, s) and _assoc(m, s.bits)


def s_subgroupoids(m: FiniteMagma, policy: SPolicy = DEFAULT_POLICY,
                   max_order: int | None = None) -> ClosedSetFamily:
    p = SmarandacheProfile(m, policy, max_order)
    return _family(m, p.s_subgroupoids, p.complete, False, "closed-set limit reached")


def is_s_subgroupoid(m: FiniteMagma, h: SubsetMask, policy: SPolicy = DEFAULT_POLICY) -> bool:
    """Proper closed H holding a qualifying semigroup other than H itself."""
    if not h.is_proper() or not is_closed(m, h):
        return False
    triv = _trivial(m, policy)
    inner, _ = closed_bits(m, universe=h, max_order=m.order)
    for k in inner:
        if k == h.bits or k in triv or k.bit_count() < policy.min_subset_size:
            continue
        if _assoc(m, k):
            return True
    return False


def _require_s_sub(m: FiniteMagma, h: SubsetMask, policy: SPolicy) -> None:
    if not is_closed(m, h):
        raise MagmaError(NOT_CLOSED, f"{h} is not closed")
    if not is_s_subgroupoid(m, h, policy):
        raise MagmaError(NOT_S_SUBGROUPOID, f"{h} is not a Smarandache subgroupoid")


def s_ideal(m: FiniteMagma, a: SubsetMask, side: IdealSide, policy: SPolicy = DEFAULT_POLICY) -> bool:
    ok, _ = is_ideal(m, a, side)  # raises NOT_CLOSED for bad input
    return ok and is_s_subgroupoid(m, a, policy)


def _xy_sets(m: FiniteMagma, v: SubsetMask, reading: CosetReading) -> list[tuple[SubsetMask, SubsetMask]]:
    if reading is CosetReading.PER_ELEMENT:
        return [(left_coset(m, a, v), right_coset(m, v, a)) for a in range(m.order)]
    x = SubsetMask(m.order, 0)
    y = SubsetMask(m.order, 0)
    for a in range(m.order):
        x = x | left_coset(m, a, v)
        y = y | right_coset(m, v, a)
    return [(x, y)]


def _normality(m: FiniteMagma, v: SubsetMask, policy: SPolicy, reading: CosetReading, need_both: bool) -> bool:
    _require_s_sub(m, v, policy)
    cache: dict[int, bool] = {}

    def s_sub(s: SubsetMask) -> bool:
        if s.bits not in cache:
            cache[s.bits] = is_s_subgroupoid(m, s, policy)
        return cache[s.bits]

    for x, y in _xy_sets(m, v, reading):
        if not (is_closed(m, x) and is_closed(m, y)):
            return False
        if need_both and not (s_sub(x) and s_sub(y)):
            return False
        if not need_both and not (s_sub(x) or s_sub(y)):
            return False
    return True


def s_seminormal(m: FiniteMagma, v: SubsetMask, policy: SPolicy = DEFAULT_POLICY,
                 reading: CosetReading = CosetReading.UNION) -> bool:
    """X and Y are subgroupoids and at least one is an S-subgroupoid."""
    return _normality(m, v, policy, reading, need_both=False)


def s_normal(m: FiniteMagma, v: SubsetMask, policy: SPolicy = DEFAULT_POLICY,
             reading: CosetReading = CosetReading.UNION) -> bool:
    """X and Y are both S-subgroupoids."""
    return _normality(m, v, policy, reading, need_both=True)


@dataclass(frozen=True)
class ConjugacyEvidence:
    h_from_p: list[Mapping]  # H = xP or Px
    p_from_h: list[Mapping]  # P = xH or Hx


def _conj(m: FiniteMagma, h: SubsetMask, p: SubsetMask, policy: SPolicy) -> ConjugacyEvidence:
    _require_s_sub(m, h, policy)
    _require_s_sub(m, p, policy)
    return ConjugacyEvidence(all_multipliers(m, h, p, range(m.order)),
                             all_multipliers(m, p, h, range(m.order)))


def s_semiconjugate(m: FiniteMagma, h: SubsetMask, p: SubsetMask,
                    policy: SPolicy = DEFAULT_POLICY) -> tuple[bool, ConjugacyEvidence]:
    ev = _conj(m, h, p, policy)
    return bool(ev.h_from_p or ev.p_from_h), ev


def s_conjugate(m: FiniteMagma, h: SubsetMask, p: SubsetMask,
                policy: SPolicy = DEFAULT_POLICY) -> tuple[bool, ConjugacyEvidence]:
    ev = _conj(m, h, p, policy)
    return bool(ev.h_from_p and ev.p_from_h), ev


def s_commutative(m: FiniteMagma, policy: SPolicy = DEFAULT_POLICY,
                  profile: SmarandacheProfile | None = None) -> bool:
    p = profile or SmarandacheProfile(m, policy)
    return any(_comm(m, b) for b in p.semigroups)


def s_inner_commutative(m: FiniteMagma, policy: SPolicy = DEFAULT_POLICY,
                        profile: SmarandacheProfile | None = None) -> tuple[bool, SubsetMask | None]:
    """Every qualifying semigroup lying inside some S-subgroupoid is commutative.

    The second item is an offending semigroup when the answer is no.
    """
    p = profile or SmarandacheProfile(m, policy)
    subs = p.s_subgroupoids
    for k in p.semigroups:
        if _comm(m, k):
            continue
        if any(k & h == k for h in subs):
            return False, SubsetMask(m.order, k)
    return True, None


@dataclass(frozen=True)
class SLawResult:
    law: LawId
    strength: SLawStrength
    holds: bool
    detail: list[tuple[SubsetMask, bool]] = field(default_factory=list)


def s_law(m: FiniteMagma, law: LawId, strength: SLawStrength, policy: SPolicy = DEFAULT_POLICY,
          skip_degenerate: bool = False, profile: SmarandacheProfile | None = None) -> SLawResult:
    """Weak: some S-subgroupoid satisfies the law.  Strong: all of them do."""
    p = profile or SmarandacheProfile(m, policy)
    if p.witness is None:
        raise MagmaError(NOT_SMARANDACHE, "magma has no qualifying semigroup")
    subs = p.s_subgroupoids
    # A law valid on the whole carrier is valid on every subset.
    if check_law(m, law, None, skip_degenerate).holds:
        detail = [(SubsetMask(m.order, h), True) for h in subs]
    else:
        detail = [(SubsetMask(m.order, h), check_law(m, law, SubsetMask(m.order, h), skip_degenerate).holds)
                  for h in subs]
    verdicts = [ok for _, ok in detail]
    holds = all(verdicts) if strength is SLawStrength.STRONG else any(verdicts)
    return SLawResult(law, strength, holds, detail)


def s_idempotent(m: FiniteMagma, policy: SPolicy = DEFAULT_POLICY) -> bool:
    """SG whose every element is idempotent (reconstructed notion)."""
    if any(m.table[x][x] != x for x in range(m.order)):
        return False
    return smarandache_witness(m, policy) is not None


# ------------------------------------------------------------ homomorphisms


def _require_semigroup(m: FiniteMagma, s: SubsetMask) -> None:
    if not is_semigroup_subset(m, s):
        raise MagmaError(NOT_SEMIGROUP, f"{s} is not a semigroup")


def _homs(m1: FiniteMagma, a: Sequence[int], m2: FiniteMagma, b: Sequence[int],
          surjective: bool = False, injective: bool = False) -> list[dict[int, int]]:
    """Backtracking search over maps a -> b preserving the operation."""
    out: list[dict[int, int]] = []
    t1, t2 = m1.table, m2.table
    a = list(a)
    phi: dict[int, int] = {}

    def consistent() -> bool:
        for x in phi:
            for y in phi:
                xy = t1[x][y]
                if xy in phi and phi[xy] != t2[phi[x]][phi[y]]:
                    return False
        return True

    def rec(i: int) -> None:
        if i == len(a):
            if surjective and set(phi.values()) != set(b):
                return
            out.append(dict(phi))
            return
        for v in b:
            if injective and v in phi.values():
                continue
            phi[a[i]] = v
            if consistent():
                rec(i + 1)
            del phi[a[i]]

    rec(0)
    return out


def s_homomorphisms(g: FiniteMagma, a: SubsetMask, g2: FiniteMagma, a2: SubsetMask) -> list[dict[int, int]]:
    _require_semigroup(g, a)
    _require_semigroup(g2, a2)
    if len(a) > config.HOMOMORPHISM_CAP:
        raise MagmaError(ORDER_TOO_LARGE, f"|A| = {len(a)} above {config.HOMOMORPHISM_CAP}")
    return _homs(g, a.elements(), g2, a2.elements())


def s_isomorphic(g: FiniteMagma, a: SubsetMask, g2: FiniteMagma, a2: SubsetMask) -> bool:
    _require_semigroup(g, a)
    _require_semigroup(g2, a2)
    if len(a) != len(a2):
        return False
    return bool(_homs(g, a.elements(), g2, a2.elements(), injective=True))


def sg_divides(g1: FiniteMagma, s1: SubsetMask, g2: FiniteMagma, s2: SubsetMask) -> bool:
    """Some subsemigroup of S2 maps homomorphically onto S1."""
    _require_semigroup(g1, s1)
    _require_semigroup(g2, s2)
    if len(s2) > config.HOMOMORPHISM_CAP:
        raise MagmaError(ORDER_TOO_LARGE, f"|S2| = {len(s2)} above {config.HOMOMORPHISM_CAP}")
    subs, _ = closed_bits(g2, universe=s2, max_order=g2.order)
    for t in sorted(subs, key=_sort_key):
        if t.bit_count() < len(s1):
            continue
        if _homs(g2, _bits_elems(t), g1, s1.elements(), surjective=True):
            return True
    return False


# ---------------------------------------------------------- direct products


def s_direct_product(ms: Sequence[FiniteMagma], policy: SPolicy = DEFAULT_POLICY,
                     cap: int | None = None) -> tuple[FiniteMagma, SgWitness | None]:
    if len(ms) < 2:
        raise MagmaError(PRODUCT_ORDER_OVERFLOW, "need at least two factors")
    prod = direct_product(ms, cap)
    return prod, smarandache_witness(prod, policy)


@dataclass(frozen=True)
class BoundCheck:
    found: int
    bound: int
    ok: bool


def subgroupoid_bound(k: int) -> int:
    """Sum of C(k, i) for 1 <= i <= k-1."""
    return sum(comb(k, i) for i in range(1, k))


def s_subgroupoid_bound_check(ms: Sequence[FiniteMagma], policy: SPolicy = DEFAULT_POLICY) -> BoundCheck:
    prod, _ = s_direct_product(ms, policy, cap=config.ENUMERATION_CAP)
    found = len(SmarandacheProfile(prod, policy).s_subgroupoids)
    bound = subgroupoid_bound(len(ms))
    return BoundCheck(found, bound, found >= bound)
