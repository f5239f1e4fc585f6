"""Groupoids on residues mod n with a*b = t*a + u*b, their classes and variants."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from math import gcd

from .errors import INVALID_LOOP_PARAMS, INVALID_SPEC, MagmaError
from .magma import FiniteMagma

_SPEC_RE = re.compile(r"^\s*(\d+):(\d+):(\d+)(\+e)?\s*$")


@dataclass(frozen=True, order=True)
class ZnSpec:
    n: int
    t: int
    u: int
    adjoin_identity: bool = False

    def __post_init__(self) -> None:
        if self.n < 3:
            raise MagmaError(INVALID_SPEC, f"modulus {self.n} < 3")
        if not (0 <= self.t < self.n and 0 <= self.u < self.n):
            raise MagmaError(INVALID_SPEC, f"coefficients must lie in [0,{self.n})")
        if self.t == 0 and self.u == 0:
            raise MagmaError(INVALID_SPEC, "(t,u) = (0,0) is excluded")

    @classmethod
    def parse(cls, text: str) -> "ZnSpec":
        """Parse ``n:t:u`` or ``n:t:u+e``."""
        m = _SPEC_RE.match(text)
        if not m:
            raise MagmaError(INVALID_SPEC, f"cannot parse {text!r}; expected n:t:u[+e]")
        return cls(int(m.group(1)), int(m.group(2)), int(m.group(3)), m.group(4) is not None)

    def __str__(self) -> str:
        return f"{self.n}:{self.t}:{self.u}" + ("+e" if self.adjoin_identity else "")

    @property
    def order(self) -> int:
        return self.n + 1 if self.adjoin_identity else self.n


class ClassTag(enum.Enum):
    Z = "z"
    ZSTAR = "zs"
    ZSTARSTAR = "zss"
    ZSTARSTARSTAR = "zsss"
    NONE = "none"


# Position in the chain Z < Z* < Z** < Z***.
_RANK = {ClassTag.Z: 0, ClassTag.ZSTAR: 1, ClassTag.ZSTARSTAR: 2, ClassTag.ZSTARSTARSTAR: 3}


def in_class(tag: ClassTag, pair_tag: ClassTag) -> bool:
    """Is a pair whose tightest class is ``pair_tag`` a member of ``tag``?"""
    if pair_tag is ClassTag.NONE or tag is ClassTag.NONE:
        return False
    return _RANK[pair_tag] <= _RANK[tag]


def classify_pair(n: int, t: int, u: int) -> ClassTag:
    """Tightest class containing Z_n(t,u)."""
    if n < 3:
        raise MagmaError(INVALID_SPEC, f"modulus {n} < 3")
    t %= n
    u %= n
    if t == 0 and u == 0:
        return ClassTag.NONE
    if t == 0 or u == 0:
        return ClassTag.ZSTARSTARSTAR
    if t == u:
        return ClassTag.ZSTARSTAR
    if gcd(t, u) != 1:
        return ClassTag.ZSTAR
    return ClassTag.Z


def enumerate_class(n: int, tag: ClassTag) -> list[tuple[int, int]]:
    return [(t, u) for t in range(n) for u in range(n) if in_class(tag, classify_pair(n, t, u))]


def class_size(n: int, tag: ClassTag) -> int:
    return len(enumerate_class(n, tag))


def build_zn(spec: ZnSpec) -> FiniteMagma:
    n, t, u = spec.n, spec.t, spec.u
    if not spec.adjoin_identity:
        rows = tuple(tuple((t * a + u * b) % n for b in range(n)) for a in range(n))
        return FiniteMagma(n, rows, None, 0)
    e = n
    rows_l = []
    for a in range(n + 1):
        row = []
        for b in range(n + 1):
            if a == e:
                row.append(b)
            elif b == e:
                row.append(a)
            elif a == b:
                row.append(e)
            else:
                row.append((t * a + u * b) % n)
        rows_l.append(tuple(row))
    labels = tuple(str(i) for i in range(n)) + ("e",)
    return FiniteMagma(n + 1, tuple(rows_l), labels, 0)


def zn(n: int, t: int, u: int, adjoin: bool = False) -> FiniteMagma:
    """Shorthand for ``build_zn(ZnSpec(n, t, u, adjoin))``."""
    return build_zn(ZnSpec(n, t, u, adjoin))


def loop_params_ok(n: int, m: int) -> bool:
    return n > 3 and n % 2 == 1 and 0 < m < n and gcd(m, n) == 1 and gcd(m - 1, n) == 1


def build_loop(n: int, m: int) -> FiniteMagma:
    """Loop on Z_n plus identity e: i*j = m*j - (m-1)*i for i != j, i*i = e."""
    if not loop_params_ok(n, m):
        raise MagmaError(INVALID_LOOP_PARAMS, f"(n,m)=({n},{m}) needs n>3 odd, m<n, gcd(m,n)=gcd(m-1,n)=1")
    e = n
    rows = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            if i == e:
                row.append(j)
            elif j == e:
                row.append(i)
            elif i == j:
                row.append(e)
            else:
                row.append((m * j - (m - 1) * i) % n)
        rows.append(tuple(row))
    labels = tuple(str(i) for i in range(n)) + ("e",)
    return FiniteMagma(n + 1, tuple(rows), labels, None)


@dataclass(frozen=True)
class PredictedFlags:
    semigroup: bool
    idempotent_groupoid: bool
    strong_p: bool
    strong_alternative: bool
    strong_bol: bool
    strong_moufang: bool
    adjoined_right_alt: bool
    adjoined_left_alt: bool
    residues: dict[str, int]


def predicted_flags(n: int, t: int, u: int, adjoined: bool = False) -> PredictedFlags:
    """Flags derived from congruences on (n, t, u) alone, no table involved.

    For adjoined builds the idempotent flag is always false (every x*x is the
    identity).  No congruence predicts associativity there, so ``semigroup``
    is reported false without being a prediction; adjoined Z_3(2,2) is in
    fact the Klein four-group.  The two adjoined_* flags only make sense there.
    """
    r = {
        "t^2": t * t % n,
        "u^2": u * u % n,
        "t^3": t ** 3 % n,
        "t+u": (t + u) % n,
        "tu+u": (t * u + u) % n,
        "t+tu": (t + t * u) % n,
    }
    idem_t = r["t^2"] == t % n
    idem_u = r["u^2"] == u % n
    both = idem_t and idem_u
    return PredictedFlags(
        semigroup=both and not adjoined,
        idempotent_groupoid=r["t+u"] == 1 % n and not adjoined,
        strong_p=both,
        strong_alternative=both,
        strong_bol=r["t^3"] == t % n and idem_u,
        strong_moufang=both,
        adjoined_right_alt=adjoined and r["t^2"] == 1 and r["tu+u"] == 0,
        adjoined_left_alt=adjoined and r["u^2"] == 1 and r["t+tu"] == 0,
        residues=r,
    )
