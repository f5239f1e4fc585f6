"""Theorem-by-theorem verification of the Z_n classification results.

Each registry entry pairs a predicted condition (usually a congruence on
n, t, u) with a brute-force observation over a range of moduli.  A
disagreement is a failure unless it matches one of the explicit erratum
patterns attached to that entry, in which case it is recorded against the
erratum id and the report status becomes PASS_WITH_ERRATA.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, gcd
from typing import Callable, Iterator

from .errors import UNKNOWN_THEOREM, MagmaError
from .identities import LawId, check_law
from .magma import (
    SubsetMask,
    direct_product,
    identity_element,
    is_associative,
    is_commutative,
    is_idempotent_groupoid,
    is_loop,
)
from .smarandache import (
    SLawStrength,
    SmarandacheProfile,
    is_semigroup_subset,
    s_commutative,
    s_conjugate,
    s_ideal,
    s_idempotent,
    s_inner_commutative,
    s_law,
    s_normal,
    s_semiconjugate,
    s_seminormal,
    s_subgroupoid_bound_check,
    subgroupoid_bound,
)
from .substructures import (
    IdealSide,
    NormalityScope,
    enumerate_closed,
    enumerate_ideals,
    is_closed,
    is_ideal,
    is_normal_groupoid,
    is_normal_subgroupoid,
    is_simple,
    left_coset,
)
from .zn import (
    ClassTag,
    ZnSpec,
    build_loop,
    build_zn,
    class_size,
    classify_pair,
    enumerate_class,
    loop_params_ok,
    predicted_flags,
)

WEAK, STRONG = SLawStrength.WEAK, SLawStrength.STRONG


class Status(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    PASS_WITH_ERRATA = "PASS_WITH_ERRATA"


@dataclass(frozen=True)
class Observation:
    spec: str
    ok: bool
    detail: str = ""
    erratum: str | None = None


@dataclass
class VerificationReport:
    theorem: str
    n_range: tuple[int, int]
    checked: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)
    errata: list[tuple[str, str, str]] = field(default_factory=list)  # (spec, erratum id, detail)

    @property
    def status(self) -> Status:
        if self.failures:
            return Status.FAIL
        return Status.PASS_WITH_ERRATA if self.errata else Status.PASS

    def summary(self) -> str:
        lo, hi = self.n_range
        return (f"{self.theorem}: {self.status.value} n={lo}..{hi} checked={self.checked} "
                f"failures={len(self.failures)} errata={len(self.errata)}")


@dataclass(frozen=True)
class Theorem:
    id: str
    statement: str
    default_range: tuple[int, int]
    run: Callable[[int, int], Iterator[Observation]]
    errata: tuple[str, ...] = ()


# ----------------------------------------------------------------- helpers

def _is_prime(p: int) -> bool:
    return p > 1 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _squarefree(n: int) -> bool:
    return all(n % (p * p) for p in _prime_factors(n))


def _idem(x: int, n: int) -> bool:
    return (x * x - x) % n == 0


@lru_cache(maxsize=None)
def _magma(spec: ZnSpec):
    return build_zn(spec)


@lru_cache(maxsize=None)
def _profile(spec: ZnSpec) -> SmarandacheProfile:
    return SmarandacheProfile(_magma(spec))


def _sg(spec: ZnSpec) -> bool:
    return _profile(spec).witness is not None


def _pairs(n: int, tag: ClassTag):
    return enumerate_class(n, tag)


def _match(spec, predicted: bool, observed: bool, what: str, tag: str | None = None) -> Observation:
    ok = predicted == observed
    detail = "" if ok else f"{what}: predicted {predicted}, observed {observed}"
    return Observation(str(spec), ok, detail, None if ok else tag)


def _expect(spec, cond: bool, detail: str, tag: str | None = None) -> Observation:
    return Observation(str(spec), cond, "" if cond else detail, None if cond else tag)


def _sub(n: int, elems) -> SubsetMask:
    return SubsetMask.of(n, elems)


# ------------------------------------------------------------- chapter 3

def _t311(lo, hi):
    for n in range(lo, hi + 1):
        for t, u in _pairs(n, ClassTag.Z):
            s = ZnSpec(n, t, u)
            yield _match(s, predicted_flags(n, t, u).semigroup, is_associative(_magma(s)), "associative")


def _t312(lo, hi):
    for n in range(lo, hi + 1):
        if not _is_prime(n):
            continue
        for t, u in _pairs(n, ClassTag.Z):
            s = ZnSpec(n, t, u)
            yield _expect(s, not is_associative(_magma(s)), "associative member of Z(p)")


def _t313(lo, hi):
    for n in range(lo, hi + 1):
        for t, u in _pairs(n, ClassTag.ZSTARSTARSTAR):
            s = ZnSpec(n, t, u)
            yield _match(s, predicted_flags(n, t, u).idempotent_groupoid,
                         is_idempotent_groupoid(_magma(s)), "idempotent")


def _t314(lo, hi):
    for n in range(lo, hi + 1):
        for t, u in _pairs(n, ClassTag.Z):
            s = ZnSpec(n, t, u)
            m = _magma(s)
            z = _sub(n, [0])
            bad = is_ideal(m, z, IdealSide.LEFT)[0] or is_ideal(m, z, IdealSide.RIGHT)[0]
            yield _expect(s, not bad, "{0} is a one-sided ideal")


def _t315(lo, hi):
    for n in range(lo, hi + 1):
        for t, u in _pairs(n, ClassTag.Z):
            s, d = ZnSpec(n, t, u), ZnSpec(n, u, t)
            left = enumerate_ideals(_magma(s), IdealSide.LEFT).bits()
            right = enumerate_ideals(_magma(d), IdealSide.RIGHT).bits()
            yield _expect(s, left == right, f"left ideals of {s} differ from right ideals of {d}")


def _t316(lo, hi):
    for n in range(lo, hi + 1):
        for t, u in _pairs(n, ClassTag.Z):
            if t + u != n or not (_is_prime(t) and _is_prime(u)):
                continue
            s = ZnSpec(n, t, u)
            # Composite moduli admit normal subgroupoids such as n/2 * Z_n.
            tag = None if _is_prime(n) else "3.1.6-composite"
            yield _expect(s, is_simple(_magma(s)), "has a nontrivial normal subgroupoid", tag)


def _t317(lo, hi):
    for p in range(lo, hi + 1):
        if not _is_prime(p):
            continue
        for t, u in _pairs(p, ClassTag.Z):
            if t + u == p:
                s = ZnSpec(p, t, u)
                yield _expect(s, is_simple(_magma(s)), "not simple")


def _t321(lo, hi):
    for n in range(lo, hi + 1):
        yield _expect(f"Z*({n})", class_size(n, ClassTag.ZSTAR) == (n - 1) * (n - 2),
                      f"|Z*({n})| = {class_size(n, ClassTag.ZSTAR)}")


def _t322(lo, hi):
    for n in range(lo, hi + 1):
        yield _expect(f"Z({n})", class_size(n, ClassTag.Z) <= (n - 1) * (n - 2),
                      f"|Z({n})| = {class_size(n, ClassTag.Z)}")


def _even_split(lo, hi):
    for n in range(max(lo, 4), hi + 1, 1):
        if n % 2:
            continue
        for t in range(2, n):
            u = n - t
            if t != u and gcd(t, u) == t and n % t == 0:
                yield n, t, u


def _t323(lo, hi):
    for n, t, u in _even_split(lo, hi):
        s = ZnSpec(n, t, u)
        tz = _sub(n, {t * k % n for k in range(n)})
        yield _expect(s, is_closed(_magma(s), tz) and len(tz) == n // t, f"{tz} is not a closed set of order {n // t}")


def _t324(lo, hi):
    for n, t, u in _even_split(lo, hi):
        s = ZnSpec(n, t, u)
        m = _magma(s)
        fam = [h for h in enumerate_closed(m) if len(h) == n // t]
        unique = len(fam) == 1
        normal = all(is_normal_subgroupoid(m, h, NormalityScope.LITERAL_V)[0] for h in fam)
        yield _expect(s, unique and normal,
                      f"{len(fam)} closed sets of order {n // t}, all normal: {normal}", "3.2.4-unique-normal")


def _t331(lo, hi):
    for n in range(lo, hi + 1):
        for t in range(1, n):
            s = ZnSpec(n, t, t)
            yield _expect(s, is_commutative(_magma(s)), "not commutative")


def _t332(lo, hi):
    for p in range(lo, hi + 1):
        if _is_prime(p):
            for t in range(1, p):
                s = ZnSpec(p, t, t)
                yield _expect(s, is_normal_groupoid(_magma(s))[0], "not a normal groupoid")


def _t333(lo, hi):
    for n in range(lo, hi + 1):
        for t in range(1, n):
            s = ZnSpec(n, t, t)
            yield _expect(s, check_law(_magma(s), LawId.P).holds, "P fails")


def _t334(lo, hi):
    for p in range(lo, hi + 1):
        if _is_prime(p):
            for t in range(2, p):
                s = ZnSpec(p, t, t)
                yield _expect(s, not check_law(_magma(s), LawId.ALTERNATIVE).holds, "alternative")


def _t335(lo, hi):
    for n in range(lo, hi + 1):
        if n < 4 or _is_prime(n):
            continue
        for t in range(1, n):
            s = ZnSpec(n, t, t)
            yield _match(s, _idem(t, n), check_law(_magma(s), LawId.ALTERNATIVE).holds, "alternative")


def _t34_count(lo, hi):
    for n in range(lo, hi + 1):
        size = class_size(n, ClassTag.ZSTARSTARSTAR)
        yield _expect(f"Z***({n})", size == n * n - 1, f"|Z***({n})| = {size}")
        yield _expect(f"Z***({n})", size == n * (n - 1), f"printed count {n * (n - 1)} vs {size}", "zsss-count")


def _t341(lo, hi):
    for n in range(lo, hi + 1):
        for t in range(1, n):
            s = ZnSpec(n, 0, t)
            m = _magma(s)
            obs = check_law(m, LawId.P).holds and check_law(m, LawId.ALTERNATIVE).holds
            yield _match(s, _idem(t, n), obs, "P and alternative")


def _t351(lo, hi):
    for n in range(lo, hi + 1):
        for t, u in _pairs(n, ClassTag.ZSTARSTARSTAR):
            s = ZnSpec(n, t, u, True)
            m = _magma(s)
            e = n
            groups = [a for a in range(n) if is_semigroup_subset(m, _sub(n + 1, [a, e]))]
            yield _expect(s, len(groups) == n, f"only {len(groups)} of the sets {{a,e}} are subgroups")


def _t352(lo, hi):
    for n in range(lo, hi + 1):
        for k in range(1, n):
            if loop_params_ok(n, k):
                yield _expect(f"loop({n},{k})", is_loop(build_loop(n, k)).holds, "not a loop")


# ------------------------------------------------------------- chapter 4

def _sgs(lo, hi, tag=ClassTag.ZSTARSTARSTAR):
    for n in range(lo, hi + 1):
        for t, u in _pairs(n, tag):
            s = ZnSpec(n, t, u)
            if _sg(s):
                yield s


def _t411(lo, hi):
    witness = False
    for s in _sgs(lo, hi):
        m, p = _magma(s), _profile(s)
        sc = s_commutative(m, profile=p)
        if is_commutative(m):
            yield _expect(s, sc, "commutative SG without commutative semigroup")
        elif sc:
            witness = True
    yield _expect("converse", witness, "no non-commutative Smarandache commutative groupoid in range")


def _t421(lo, hi):
    found = None
    for s in _sgs(lo, hi):
        p = _profile(s)
        extra = [b for b in p.closed if b not in p.s_subgroupoids]
        if extra:
            found = s
            break
    yield _expect(str(found or "range"), found is not None, "every closed set is an S-subgroupoid")


def _t422(lo, hi):
    for n in range(lo, hi + 1):
        for t, u in _pairs(n, ClassTag.ZSTARSTARSTAR):
            s = ZnSpec(n, t, u)
            p = _profile(s)
            if p.s_subgroupoids:
                yield _expect(s, p.witness is not None, "S-subgroupoid without SG witness")


def _t423(lo, hi):
    for s in _sgs(lo, hi):
        m, p = _magma(s), _profile(s)
        for h in p.s_subgroupoids:
            hs = SubsetMask(s.n, h)
            for side in IdealSide:
                if s_ideal(m, hs, side):
                    yield _expect(f"{s} {hs}", is_ideal(m, hs, side)[0], f"S-{side.name} ideal is not an ideal")
    m = _magma(ZnSpec(6, 2, 4))
    q = _sub(6, [0, 2, 4])
    yield _expect("6:2:4 {0,2,4}", is_ideal(m, q, IdealSide.TWO_SIDED)[0]
                  and not s_ideal(m, q, IdealSide.TWO_SIDED), "converse example")


def _t424(lo, hi):
    semi_only = False
    for s in _sgs(lo, hi):
        m, p = _magma(s), _profile(s)
        for h in p.s_subgroupoids:
            v = SubsetMask(s.n, h)
            nrm, semi = s_normal(m, v), s_seminormal(m, v)
            yield _expect(f"{s} {v}", semi or not nrm, "S-normal but not S-seminormal")
            semi_only |= semi and not nrm
    yield _expect("converse", semi_only, "no seminormal non-normal S-subgroupoid in range")


def _t425(lo, hi):
    for s in _sgs(lo, hi):
        m, p = _magma(s), _profile(s)
        subs = [SubsetMask(s.n, h) for h in p.s_subgroupoids]
        for h, k in itertools.combinations(subs, 2):
            if s_conjugate(m, h, k)[0]:
                yield _expect(f"{s} {h} {k}", s_semiconjugate(m, h, k)[0], "conjugate but not semiconjugate")
    m = _magma(ZnSpec(8, 2, 6))
    seven_p = left_coset(m, 7, _sub(8, [0, 2, 3, 4, 6]))
    yield _expect("8:2:6 7P", seven_p == _sub(8, [0, 2, 4, 6]), f"7P = {seven_p}", "4.2.5-7P")


def _t426(lo, hi):
    for s in _sgs(lo, hi):
        m, p = _magma(s), _profile(s)
        sc = s_commutative(m, profile=p)
        si = s_inner_commutative(m, profile=p)[0]
        # The converse implication is the one that survives the scan.
        yield _expect(s, si or not sc, "S-commutative but not S-inner commutative", "4.2.6-direction")
        yield _expect(f"{s} converse", sc or not si, "S-inner commutative but not S-commutative")


def _strong_weak(law: LawId, lo, hi, example: ZnSpec | None):
    for s in _sgs(lo, hi):
        m, p = _magma(s), _profile(s)
        if not p.s_subgroupoids:
            continue
        st = s_law(m, law, STRONG, profile=p).holds
        wk = s_law(m, law, WEAK, profile=p).holds
        yield _expect(s, wk or not st, f"strong {law.value} without weak")
    if example is not None:
        m, p = _magma(example), _profile(example)
        yield _expect(example, s_law(m, law, WEAK, profile=p).holds and not s_law(m, law, STRONG, profile=p).holds,
                      "converse example")


def _full_to_strong(law: LawId, lo, hi):
    for s in _sgs(lo, hi):
        m, p = _magma(s), _profile(s)
        if check_law(m, law).holds:
            yield _expect(s, s_law(m, law, STRONG, profile=p).holds, f"{law.value} on G but not strong")


def _t431(lo, hi):
    yield from _full_to_strong(LawId.MOUFANG, lo, hi)


def _t432(lo, hi):
    yield from _strong_weak(LawId.MOUFANG, lo, hi, ZnSpec(12, 3, 9))


def _t433(lo, hi):
    yield from _full_to_strong(LawId.BOL, lo, hi)


def _t434(lo, hi):
    found = None
    for s in _sgs(lo, hi):
        m, p = _magma(s), _profile(s)
        if s_law(m, LawId.BOL, WEAK, profile=p).holds and not s_law(m, LawId.BOL, STRONG, profile=p).holds:
            found = s
            break
    yield from _strong_weak(LawId.BOL, lo, hi, found)
    yield _expect("converse", found is not None, "no weak-not-strong Bol SG in range")


def _t435(lo, hi):
    found = None
    for s in _sgs(lo, hi):
        m, p = _magma(s), _profile(s)
        if p.s_subgroupoids and s_law(m, LawId.P, STRONG, profile=p).holds and not check_law(m, LawId.P).holds:
            found = s
            break
    yield _expect(str(found or "range"), found is not None, "no strong P SG failing P on G")


def _t436(lo, hi):
    found = None
    for s in _sgs(lo, hi):
        m, p = _magma(s), _profile(s)
        if s_law(m, LawId.P, WEAK, profile=p).holds and not s_law(m, LawId.P, STRONG, profile=p).holds:
            found = s
            break
    yield from _strong_weak(LawId.P, lo, hi, found)
    yield _expect("converse", found is not None, "no weak-not-strong P SG in range")


def _t437(lo, hi):
    yield from _strong_weak(LawId.ALTERNATIVE, lo, hi, ZnSpec(12, 1, 6))


# ------------------------------------------------------------- chapter 5

def _one_mod(lo, hi, tag=ClassTag.Z, exact=False):
    for n in range(lo, hi + 1):
        for t, u in _pairs(n, tag):
            if (t + u) % n != 1:
                continue
            if exact and classify_pair(n, t, u) is not tag:
                continue
            yield ZnSpec(n, t, u)


def _t511(lo, hi):
    for s in _one_mod(max(lo, 6), hi):
        yield _expect(s, _sg(s), "not an SG")


def _t512(lo, hi):
    for p in range(3, hi // 2 + 1):
        if _is_prime(p) and 2 * p >= lo:
            s = ZnSpec(2 * p, 1, 2)
            yield _expect(s, is_semigroup_subset(_magma(s), _sub(2 * p, [p])), f"{{{p}}} is not a semigroup")


def _one_p(n: int, p: int):
    s = ZnSpec(n, 1, p)
    return _expect(s, is_semigroup_subset(_magma(s), _sub(n, [n // p])), f"{{{n // p}}} is not a semigroup")


def _t513(lo, hi):
    for p in range(2, hi // 3 + 1):
        if _is_prime(p) and p != 3 and 3 * p >= lo:
            yield _one_p(3 * p, 3)


def _t514(lo, hi):
    for n in range(max(lo, 6), hi + 1):
        ps = _prime_factors(n)
        if len(ps) == 2 and ps[0] * ps[1] == n:
            for p in ps:
                yield _one_p(n, p)


def _t515(lo, hi):
    for n in range(max(lo, 4), hi + 1):
        for p in _prime_factors(n):
            if p < n:
                yield _one_p(n, p)


def _t516(lo, hi):
    for n in range(lo, hi + 1):
        any_sg = any(_sg(ZnSpec(n, t, u)) for t, u in _pairs(n, ClassTag.Z))
        if n > 3 and n != 5:
            yield _expect(f"Z({n})", any_sg, "no SG in Z(n)")
        else:
            yield _expect(f"Z({n})", not any_sg, "unexpected SG")


def _t517(lo, hi):
    for s in _one_mod(lo, hi):
        yield _expect(s, s_idempotent(_magma(s)), "not Smarandache idempotent")


def _law_iff(law: LawId, cond, lo, hi, tag=ClassTag.Z, exact=False, iff_tag=None):
    """Full-domain law on t+u=1 SGs against a congruence.

    Mismatches go to ``iff_tag`` only when the law holds while the congruence fails.
    """
    for s in _one_mod(lo, hi, tag, exact):
        if not _sg(s):
            continue
        obs, pred = check_law(_magma(s), law).holds, cond(s)
        yield Observation(str(s), obs == pred,
                          "" if obs == pred else f"{law.value}: predicted {pred}, observed {obs}",
                          iff_tag if obs and not pred else None)


def _c2(s: ZnSpec) -> bool:
    return _idem(s.t, s.n) and _idem(s.u, s.n)


def _c3(s: ZnSpec) -> bool:
    return (s.t ** 3 - s.t) % s.n == 0 and _idem(s.u, s.n)


def _t518(lo, hi):
    yield from _law_iff(LawId.P, _c2, lo, hi, iff_tag="5.1.8-iff")


def _t519(lo, hi):
    yield from _law_iff(LawId.ALTERNATIVE, _c2, lo, hi)


def _t5110(lo, hi):
    yield from _law_iff(LawId.BOL, _c3, lo, hi)


def _t5111(lo, hi):
    yield from _law_iff(LawId.MOUFANG, _c2, lo, hi)


def _t521(lo, hi):
    for s in _one_mod(lo, hi, ClassTag.ZSTAR, exact=True):
        yield _expect(s, _sg(s), "not an SG")


def _t522(lo, hi):
    for law in (LawId.MOUFANG, LawId.P, LawId.BOL, LawId.ALTERNATIVE):
        cond = _c3 if law is LawId.BOL else _c2
        yield from _law_iff(law, cond, lo, hi, ClassTag.ZSTAR, exact=True, iff_tag="5.2.2-iff")
    for s in _one_mod(lo, hi, ClassTag.ZSTAR, exact=True):
        if _sg(s):
            obs, pred = s_idempotent(_magma(s)), _c2(s)
            yield Observation(str(s), obs == pred, "" if obs == pred else f"idempotent: predicted {pred}, observed {obs}",
                              "5.2.2-iff" if obs and not pred else None)


def _t531(lo, hi):
    for p in range(max(lo, 3), hi + 1):
        if _is_prime(p):
            s = ZnSpec(p, (p + 1) // 2, (p + 1) // 2)
            yield _expect(s, _sg(s), "not an SG")


def _t532(lo, hi):
    for p in range(max(lo, 3), hi + 1):
        if _is_prime(p):
            s = ZnSpec(p, (p + 1) // 2, (p + 1) // 2)
            yield _expect(s, s_idempotent(_magma(s)), "not Smarandache idempotent")


def _t533(lo, hi):
    for n in range(max(lo, 3), hi + 1):
        if n % 2:
            s = ZnSpec(n, (n + 1) // 2, (n + 1) // 2)
            yield _expect(s, _sg(s), "not an SG")


def _t534(lo, hi):
    for n in range(max(lo, 4), hi + 1):
        if n % 2 == 0 and (n // 2) ** 2 % n == 0:
            # The printed (n+1)/2 is not an integer here; n/2 is the working reading.
            s = ZnSpec(n, n // 2, n // 2)
            yield _expect(s, _sg(s), "not an SG")
            yield _expect(s, False, "(n+1)/2 is not an integer for even n", "5.3.4-half")


def _t535(lo, hi):
    for n in range(max(lo, 4), hi + 1, 1):
        if n % 2:
            continue
        for m_ in range(1, n):
            if _idem(m_, n) and (2 * m_) % n == 0:
                s = ZnSpec(n, m_, m_)
                yield _expect(s, is_semigroup_subset(_magma(s), _sub(n, [0, m_])), "{0,m} is not a semigroup")


def _t536(lo, hi):
    for n in range(lo, hi + 1):
        for m_ in range(1, n):
            s = ZnSpec(n, m_, m_)
            if _sg(s):
                yield _expect(s, (2 * m_) % n == 1 % n, "SG with 2m != 1", "5.3.6-only-if")


def _t537(lo, hi):
    # Hypotheses force m = 2m^2 = 2m, so m = 0: no member qualifies.
    for n in range(lo, hi + 1):
        for m_ in range(1, n):
            if (2 * m_) % n == 1 and _idem(m_, n):
                s = ZnSpec(n, m_, m_)
                m = _magma(s)
                yield _expect(s, s_idempotent(m) and s_law(m, LawId.P, STRONG).holds, "conclusion fails")
        yield _expect(f"n={n}", True, "")


def _two_elem(spec: ZnSpec, elems) -> Observation:
    return _expect(spec, is_semigroup_subset(_magma(spec), _sub(spec.n, elems)),
                   f"{{{','.join(map(str, elems))}}} is not a semigroup")


def _t541(lo, hi):
    for n in range(max(lo, 4), hi + 1):
        if n % 2 == 0:
            yield _two_elem(ZnSpec(n, 2, 0), [0, n // 2])
            yield _two_elem(ZnSpec(n, 0, 2), [0, n // 2])


def _t543(lo, hi):
    for n in range(max(lo, 4), hi + 1):
        if n % 2 == 0:
            yield _two_elem(ZnSpec(n, n // 2, 0), [0, 2])
            yield _two_elem(ZnSpec(n, 0, n // 2), [0, 2])


def _t545(lo, hi):
    for n in range(max(lo, 3), hi + 1):
        for p in range(2, n):
            if not _is_prime(p):
                continue
            for s in (ZnSpec(n, p, 0), ZnSpec(n, 0, p)):
                if n % p == 0:
                    yield _two_elem(s, [0, n // p])
                else:
                    yield _expect(s, _sg(s), "p does not divide n and no SG", "5.4.5-divides")


def _t547(lo, hi):
    for n in range(max(lo, 4), hi + 1):
        for p in _prime_factors(n):
            if p < n:
                yield _two_elem(ZnSpec(n, n // p, 0), [0, p])


def _divisor_sgs(n: int, both_sides: bool) -> tuple[int, list[str]]:
    found, missing = 0, []
    for d in range(2, n):
        if n % d:
            continue
        specs = [ZnSpec(n, d, 0)] + ([ZnSpec(n, 0, d)] if both_sides else [])
        for s in specs:
            # A proper two-element semigroup other than the zero is itself an SG witness.
            if is_semigroup_subset(_magma(s), _sub(n, [0, n // d])):
                found += 1
            else:
                missing.append(str(s))
    return found, missing


def _t548(lo, hi, both=False):
    for n in range(max(lo, 4), hi + 1):
        if not _squarefree(n) or _is_prime(n):
            continue
        k = len(_prime_factors(n))
        bound = subgroupoid_bound(k) * (2 if both else 1)
        found, missing = _divisor_sgs(n, both)
        yield _expect(f"Z***({n})", found >= bound and not missing,
                      f"found {found} one-sided-zero SGs, bound {bound}, missing {missing}")


def _t549(lo, hi):
    yield from _t548(lo, hi, both=True)


def _t5410(lo, hi):
    for n in range(max(lo, 3), hi + 1):
        yield _expect(f"Z***({n})", any(_sg(ZnSpec(n, t, u)) for t, u in _pairs(n, ClassTag.ZSTARSTARSTAR)),
                      "no SG")


def _t5411(lo, hi):
    for n in range(max(lo, 3), hi + 1):
        for m_ in range(1, n):
            if not _idem(m_, n):
                continue
            s = ZnSpec(n, m_, 0)
            m, p = _magma(s), _profile(s)
            if p.witness is None:
                yield _expect(s, False, "not an SG")
                continue
            laws = [s_law(m, law, STRONG, profile=p).holds for law in
                    (LawId.BOL, LawId.MOUFANG, LawId.P, LawId.ALTERNATIVE)]
            yield _expect(s, p.witness is not None and all(laws), f"SG={p.witness is not None} strong laws={laws}")


def _t5412(lo, hi):
    for n in range(max(lo, 4), hi + 1):
        for m_ in range(2, n):
            if _idem(m_, n):
                for s in (ZnSpec(n, m_, 0), ZnSpec(n, 0, m_)):
                    yield _two_elem(s, [m_])


def _t551(lo, hi):
    factors = [ZnSpec(n, t, u) for n in range(max(lo, 3), hi + 1)
               for t, u in _pairs(n, ClassTag.Z) if _sg(ZnSpec(n, t, u))]
    for a, b in itertools.combinations_with_replacement(factors, 2):
        if a.n * b.n > 24:
            continue
        bc = s_subgroupoid_bound_check([_magma(a), _magma(b)])
        yield _expect(f"{a} x {b}", bc.ok, f"found {bc.found} S-subgroupoids, bound {bc.bound}")


def _adjoined(lo, hi):
    for n in range(max(lo, 3), hi + 1):
        for t, u in _pairs(n, ClassTag.ZSTARSTARSTAR):
            yield ZnSpec(n, t, u, True)


def _t561(lo, hi):
    for s in _adjoined(lo, hi):
        m = _magma(s)
        ok = _sg(s) and any(is_semigroup_subset(m, _sub(s.n + 1, [a, s.n])) for a in range(s.n))
        yield _expect(s, ok, "no {a,e} semigroup")


def _t562(lo, hi):
    for s in _adjoined(lo, hi):
        yield _expect(s, not s_idempotent(_magma(s)), "Smarandache idempotent")


def _adjoined_alt(law: LawId, flag: str, tag: str, lo, hi):
    """Strong one-sided alternative law on adjoined groupoids vs the congruences.

    The verdict ignores degenerate tuples; when the prediction holds but the
    full-domain check fails the degenerate witness is filed under the
    erratum, and when the law holds although the congruence fails the
    mismatch is filed under the matching only-if entry.
    """
    for s in _adjoined(lo, hi):
        m, p = _magma(s), _profile(s)
        pred = getattr(predicted_flags(s.n, s.t, s.u, True), flag)
        nd = s_law(m, law, STRONG, skip_degenerate=True, profile=p).holds
        if pred != nd:
            yield Observation(str(s), False, f"non-degenerate strong {law.value}: predicted {pred}, observed {nd}",
                              f"{tag}-only-if" if nd else None)
            continue
        if pred:
            full = check_law(m, law, skip_degenerate=True)
            if full.degenerate_witnesses:
                w = full.degenerate_witnesses[0]
                yield Observation(str(s), False,
                                  f"degenerate failure at {w.elems}: {m.label(w.lhs)} != {m.label(w.rhs)}",
                                  f"{tag}-degenerate")
                continue
        yield Observation(str(s), True)


def _t563(lo, hi):
    yield from _adjoined_alt(LawId.RIGHT_ALT, "adjoined_right_alt", "5.6.3", lo, hi)


def _t564(lo, hi):
    yield from _adjoined_alt(LawId.LEFT_ALT, "adjoined_left_alt", "5.6.4", lo, hi)


def _t565(lo, hi):
    for s in _adjoined(lo, hi):
        if _is_prime(s.n):
            continue
        m, p = _magma(s), _profile(s)
        laws = all(s_law(m, law, STRONG, skip_degenerate=True, profile=p).holds
                   for law in (LawId.BOL, LawId.MOUFANG, LawId.P))
        if laws:
            yield _expect(s, _c2(s), "strong Bol, Moufang and P without t^2=t, u^2=u", "5.6.5-only-when")


def _t625(lo, hi):
    from .automata import from_groupoids
    from .fixtures import load_fixture

    printed = load_fixture("ex_6_2_5")
    stated = from_groupoids(ZnSpec(5, 3, 2), ZnSpec(3, 0, 2), ZnSpec(4, 2, 3))
    alt = from_groupoids(ZnSpec(5, 3, 3), ZnSpec(3, 0, 2), ZnSpec(4, 2, 3))
    yield _expect("6.2.5 lambda", printed.lam == stated.lam, "printed lambda differs")
    yield _expect("6.2.5 delta (3,3)", printed.delta == alt.delta, "printed delta is not the (3,3) table")
    yield _expect("6.2.5 delta", printed.delta == stated.delta, "printed delta is the (3,3) table", "6.2.5-table")


# ---------------------------------------------------------------- registry

def _t(id_, statement, rng, run, errata=()):
    return Theorem(id_, statement, rng, run, tuple(errata))


_SMALL = (3, 7)

REGISTRY: dict[str, Theorem] = {t.id: t for t in [
    _t("3.1.1", "Z(n) member associative <=> t^2=t and u^2=u (mod n)", (3, 12), _t311),
    _t("3.1.2", "prime n: no associative member of Z(n)", (3, 12), _t312),
    _t("3.1.3", "idempotent groupoid <=> t+u=1 (mod n), over Z***(n)", (3, 12), _t313),
    _t("3.1.4", "{0} is never a one-sided ideal in Z(n)", (3, 12), _t314),
    _t("3.1.5", "left ideals of Z_n(t,u) = right ideals of Z_n(u,t)", (3, 10), _t315),
    _t("3.1.6", "t+u=n with t,u prime => Z_n(t,u) simple", (3, 12), _t316, ["3.1.6-composite"]),
    _t("3.1.7", "prime p, t+u=p => Z_p(t,u) simple", (3, 13), _t317),
    _t("3.2.1", "|Z*(n)| = (n-1)(n-2)", (3, 12), _t321),
    _t("3.2.2", "|Z(n)| <= (n-1)(n-2)", (3, 12), _t322),
    _t("3.2.3", "n even, t+u=n, gcd(t,u)=t => t*Z_n closed of order n/t", (4, 16), _t323),
    _t("3.2.4", "same hypotheses => unique closed set of order n/t, normal", (4, 12), _t324,
       ["3.2.4-unique-normal"]),
    _t("3.3.1", "Z_n(t,t) commutative", (3, 12), _t331),
    _t("3.3.2", "prime p: Z_p(t,t) normal groupoid", (3, 11), _t332),
    _t("3.3.3", "Z_n(t,t) satisfies P", (3, 12), _t333),
    _t("3.3.4", "prime p, 1<t<p: Z_p(t,t) not alternative", (3, 11), _t334),
    _t("3.3.5", "composite n: Z_n(t,t) alternative <=> t^2=t", (4, 12), _t335),
    _t("3.4", "|Z***(n)| = n^2-1 (printed n(n-1))", (3, 12), _t34_count, ["zsss-count"]),
    _t("3.4.1", "Z_n(0,t) P and alternative <=> t^2=t", (3, 12), _t341),
    _t("3.5.1", "adjoined Z_n(t,u): every {a,e} is a subgroup", (3, 10), _t351),
    _t("3.5.2", "admissible (n,m) => build_loop is a loop", (5, 11), _t352),
    _t("4.1.1", "commutative SG => S-commutative; converse fails", _SMALL, _t411),
    _t("4.2.1", "some closed subset of an SG is not an S-subgroupoid", _SMALL, _t421),
    _t("4.2.2", "an S-subgroupoid forces an SG witness", _SMALL, _t422),
    _t("4.2.3", "S-ideal => ideal; converse fails", _SMALL, _t423),
    _t("4.2.4", "S-normal => S-seminormal; converse fails", _SMALL, _t424),
    _t("4.2.5", "S-conjugate => S-semiconjugate", (3, 6), _t425, ["4.2.5-7P"]),
    _t("4.2.6", "S-commutative => S-inner commutative", _SMALL, _t426, ["4.2.6-direction"]),
    _t("4.3.1", "Moufang on G => strong Moufang", _SMALL, _t431),
    _t("4.3.2", "strong Moufang => weak; converse fails", (3, 12), _t432),
    _t("4.3.3", "Bol on G => strong Bol", _SMALL, _t433),
    _t("4.3.4", "strong Bol => weak; converse fails", (3, 8), _t434),
    _t("4.3.5", "strong P does not force P on G", (3, 8), _t435),
    _t("4.3.6", "strong P => weak; converse fails", (3, 8), _t436),
    _t("4.3.7", "strong alternative => weak; converse fails", (3, 12), _t437),
    _t("5.1.1", "Z(n), n>5, t+u=1 => SG", (6, 12), _t511),
    _t("5.1.2", "Z_2p(1,2) has semigroup {p}", (6, 30), _t512),
    _t("5.1.3", "Z_3p(1,3) has semigroup {p}", (6, 30), _t513),
    _t("5.1.4", "Z_pq(1,p) has semigroup {q}", (6, 30), _t514),
    _t("5.1.5", "p | n => Z_n(1,p) has semigroup {n/p}", (4, 30), _t515),
    _t("5.1.6", "Z(n) has an SG <=> n>3 and n!=5", (3, 12), _t516),
    _t("5.1.7", "t+u=1 in Z(n) => Smarandache idempotent", (3, 12), _t517),
    _t("5.1.8", "t+u=1 SG: P <=> t^2=t and u^2=u", (3, 12), _t518, ["5.1.8-iff"]),
    _t("5.1.9", "t+u=1 SG: alternative <=> t^2=t and u^2=u", (3, 12), _t519),
    _t("5.1.10", "t+u=1 SG: Bol <=> t^3=t and u^2=u", (3, 12), _t5110),
    _t("5.1.11", "t+u=1 SG: Moufang <=> t^2=t and u^2=u", (3, 12), _t5111),
    _t("5.2.1", "Z*(n)\\Z(n), t+u=1 => SG", (3, 12), _t521),
    _t("5.2.2", "Z*(n)\\Z(n), t+u=1: laws and idempotent <=> t^2=t, u^2=u", (3, 12), _t522, ["5.2.2-iff"]),
    _t("5.3.1", "prime p: Z_p((p+1)/2,(p+1)/2) SG", (3, 13), _t531),
    _t("5.3.2", "prime p: Z_p((p+1)/2,(p+1)/2) Smarandache idempotent", (3, 13), _t532),
    _t("5.3.3", "odd n: Z_n((n+1)/2,(n+1)/2) SG", (3, 15), _t533),
    _t("5.3.4", "4 | n: Z_n(n/2,n/2) SG", (4, 16), _t534, ["5.3.4-half"]),
    _t("5.3.5", "n even, m^2=m, 2m=0 => {0,m} semigroup in Z_n(m,m)", (4, 30), _t535),
    _t("5.3.6", "Z_n(m,m) SG only if 2m=1", (3, 12), _t536, ["5.3.6-only-if"]),
    _t("5.3.7", "2m=1 and m^2=m => idempotent and strong P (vacuous)", (3, 30), _t537),
    _t("5.4.1", "n=2m: {0,m} semigroup in Z_n(2,0) and Z_n(0,2)", (4, 30), _t541),
    _t("5.4.3", "n=2m: {0,2} semigroup in Z_n(m,0) and Z_n(0,m)", (4, 30), _t543),
    _t("5.4.5", "prime p | n: {0,n/p} semigroup in Z_n(p,0), Z_n(0,p)", (3, 24), _t545, ["5.4.5-divides"]),
    _t("5.4.7", "prime p | n: {0,p} semigroup in Z_n(n/p,0)", (4, 30), _t547),
    _t("5.4.8", "squarefree n: >= sum C(k,j) SGs among Z_n(d,0)", (4, 30), _t548),
    _t("5.4.9", "squarefree n: twice that among Z_n(d,0), Z_n(0,d)", (4, 30), _t549),
    _t("5.4.10", "Z***(n) contains an SG", (3, 16), _t5410),
    _t("5.4.11", "m^2=m => Z_n(m,0) SG with all strong laws", (3, 12), _t5411),
    _t("5.4.12", "m^2=m => Z_n(m,0), Z_n(0,m) SG", (4, 30), _t5412),
    _t("5.5.1", "product of k SGs has >= sum C(k,j) S-subgroupoids", (3, 6), _t551),
    _t("5.6.1", "adjoined groupoids are SGs via {a,e}", (3, 10), _t561),
    _t("5.6.2", "no adjoined groupoid is Smarandache idempotent", (3, 10), _t562),
    _t("5.6.3", "adjoined: strong right alternative <=> t^2=1, tu+u=0", (4, 10), _t563,
       ["5.6.3-degenerate", "5.6.3-only-if"]),
    _t("5.6.4", "adjoined: strong left alternative <=> u^2=1, t+tu=0", (4, 10), _t564,
       ["5.6.4-degenerate", "5.6.4-only-if"]),
    _t("5.6.5", "adjoined, composite n: strong Bol, Moufang, P only when t^2=t, u^2=u", (4, 10), _t565,
       ["5.6.5-only-when"]),
    _t("6.2.5", "printed machine tables vs the stated groupoids", (5, 5), _t625, ["6.2.5-table"]),
]}


def theorem_ids() -> list[str]:
    def key(i: str):
        return tuple(int(x) for x in i.split("."))
    return sorted(REGISTRY, key=key)


def verify_theorem(theorem_id: str, n_range: tuple[int, int] | None = None) -> VerificationReport:
    try:
        th = REGISTRY[theorem_id]
    except KeyError:
        raise MagmaError(UNKNOWN_THEOREM, f"no registry entry {theorem_id!r}") from None
    lo, hi = n_range or th.default_range
    rep = VerificationReport(theorem_id, (lo, hi))
    for ob in th.run(lo, hi):
        rep.checked += 1
        if ob.ok:
            continue
        if ob.erratum is not None and ob.erratum in th.errata:
            rep.errata.append((ob.spec, ob.erratum, ob.detail))
        else:
            rep.failures.append((ob.spec, ob.detail))
    return rep
