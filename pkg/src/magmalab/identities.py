"""Exhaustive checking of Moufang, Bol, P and alternative identities.

Each law is a pair of product terms over variables 0 (x), 1 (y), 2 (z).
A term is either a variable index or a 2-tuple ``(left, right)``.  Terms are
evaluated for every assignment at once with numpy broadcasting, one axis per
variable, so the first failing assignment in C order is the
lexicographically least one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import SUBSET_OUT_OF_RANGE, MagmaError
from .magma import FiniteMagma, SubsetMask, Witness, WitnessKind, identity_element

Term = Union[int, tuple]

X, Y, Z = 0, 1, 2


class LawId(enum.Enum):
    MOUFANG = "moufang"
    BOL = "bol"
    P = "p"
    LEFT_ALT = "lalt"
    RIGHT_ALT = "ralt"
    ALTERNATIVE = "alt"

    @classmethod
    def parse(cls, name: str) -> "LawId":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise MagmaError("UNKNOWN_LAW", f"unknown law {name!r}") from None


LAWS: dict[LawId, tuple[Term, Term, int]] = {
    LawId.MOUFANG: (((X, Y), (Z, X)), ((X, (Y, Z)), X), 3),
    LawId.BOL: ((((X, Y), Z), Y), (X, ((Y, Z), Y)), 3),
    LawId.P: (((X, Y), X), (X, (Y, X)), 2),
    LawId.RIGHT_ALT: (((X, Y), Y), (X, (Y, Y)), 2),
    LawId.LEFT_ALT: (((X, X), Y), (X, (X, Y)), 2),
}


@dataclass(frozen=True)
class LawReport:
    law: LawId
    domain: SubsetMask | None  # None means the full carrier
    holds: bool
    witness: Witness | None
    checked: int
    degenerate_witnesses: list[Witness] = field(default_factory=list)
    skipped: int = 0
    full_holds: bool | None = None

    @property
    def domain_text(self) -> str:
        return "FULL" if self.domain is None else str(self.domain)


def _evaluate(A: np.ndarray, idx: np.ndarray, term: Term, arity: int, ident: int | None,
              degenerate: list[np.ndarray]) -> np.ndarray:
    """Value array of ``term``; appends accidental-square masks to ``degenerate``."""
    if isinstance(term, int):
        shape = [1] * arity
        shape[term] = idx.size
        return idx.reshape(shape)
    left_t, right_t = term
    lv = _evaluate(A, idx, left_t, arity, ident, degenerate)
    rv = _evaluate(A, idx, right_t, arity, ident, degenerate)
    if ident is not None and left_t != right_t:
        # Syntactically different operands that happen to coincide take the
        # a*a = e branch, which the congruence algebra never sees.
        degenerate.append((lv == rv) & (lv != ident))
    return A[lv, rv]


def _scan(m: FiniteMagma, law: LawId, idx: np.ndarray, ident: int | None):
    lhs_t, rhs_t, arity = LAWS[law]
    A = m.arr
    deg: list[np.ndarray] = []
    shape = (idx.size,) * arity
    lhs = np.broadcast_to(_evaluate(A, idx, lhs_t, arity, ident, deg), shape)
    rhs = np.broadcast_to(_evaluate(A, idx, rhs_t, arity, ident, deg), shape)
    if ident is not None:
        mask = np.zeros(shape, dtype=bool)
        for d in deg:
            mask |= np.broadcast_to(d, shape)
        for v in range(arity):
            s = [1] * arity
            s[v] = idx.size
            mask |= np.broadcast_to((idx == ident).reshape(s), shape)
    else:
        mask = np.zeros(shape, dtype=bool)
    return lhs, rhs, mask


def _witness(law: LawId, idx: np.ndarray, pos: np.ndarray, lhs: np.ndarray, rhs: np.ndarray,
             note: str) -> Witness:
    p = tuple(int(v) for v in pos)
    kind = WitnessKind.TRIPLE if len(p) == 3 else WitnessKind.PAIR
    return Witness(kind, tuple(int(idx[i]) for i in p), int(lhs[p]), int(rhs[p]), note)


def _domain_indices(m: FiniteMagma, domain: SubsetMask | None) -> np.ndarray:
    if domain is None:
        return np.arange(m.order, dtype=np.int64)
    if domain.width != m.order:
        raise MagmaError(SUBSET_OUT_OF_RANGE, f"subset width {domain.width} != order {m.order}")
    return np.asarray(domain.elements(), dtype=np.int64)


def _check_simple(m: FiniteMagma, law: LawId, idx: np.ndarray, ident: int | None):
    lhs, rhs, deg = _scan(m, law, idx, ident)
    fail = lhs != rhs
    nondeg_fail = np.argwhere(fail & ~deg)
    deg_fail = np.argwhere(fail & deg)
    note = law.value
    w = _witness(law, idx, nondeg_fail[0], lhs, rhs, note) if nondeg_fail.size else None
    full_w = _witness(law, idx, np.argwhere(fail)[0], lhs, rhs, note) if fail.any() else None
    dws = [_witness(law, idx, p, lhs, rhs, note) for p in deg_fail]
    return w, full_w, dws, int(fail.size - deg.sum()), int(deg.sum())


def check_law(m: FiniteMagma, law: LawId, domain: SubsetMask | None = None,
              skip_degenerate: bool = False) -> LawReport:
    """Scan every pair/triple of ``domain`` (default: whole carrier).

    With ``skip_degenerate`` on a magma with a two-sided identity e, tuples
    that assign e to a variable, or that multiply two distinct subterms with
    the same non-e value, are left out of ``holds``; failures among them are
    listed in ``degenerate_witnesses`` and ``full_holds`` reports the plain
    verdict.  Without an identity the flag changes nothing.
    """
    idx = _domain_indices(m, domain)
    ident = identity_element(m) if skip_degenerate else None
    parts = [LawId.LEFT_ALT, LawId.RIGHT_ALT] if law is LawId.ALTERNATIVE else [law]
    if idx.size == 0:
        return LawReport(law, domain, True, None, 0, [], 0, True)
    best: Witness | None = None
    best_full: Witness | None = None
    degs: list[Witness] = []
    checked = skipped = 0
    for part in parts:
        w, fw, dws, c, s = _check_simple(m, part, idx, ident)
        checked += c
        skipped += s
        degs.extend(dws)
        if w is not None and (best is None or w.elems < best.elems):
            best = w
        if fw is not None and (best_full is None or fw.elems < best_full.elems):
            best_full = fw
    if ident is None:
        return LawReport(law, domain, best is None, best, checked, [], 0, best is None)
    degs.sort(key=lambda w: (w.elems, w.note))
    return LawReport(law, domain, best is None, best, checked, degs, skipped, best_full is None)


def law_holds(m: FiniteMagma, law: LawId, domain: SubsetMask | None = None) -> bool:
    return check_law(m, law, domain).holds


def _eval_py(m: FiniteMagma, term: Term, env: tuple[int, ...]) -> int:
    if isinstance(term, int):
        return env[term]
    return m.table[_eval_py(m, term[0], env)][_eval_py(m, term[1], env)]


def replay(m: FiniteMagma, law: LawId, witness: Witness) -> tuple[int, int]:
    """Re-evaluate both sides of the law at the witness with plain table lookups."""
    part = LawId(witness.note) if witness.note else law
    if part is LawId.ALTERNATIVE:
        raise ValueError("alternative witnesses carry the failing half in .note")
    lhs_t, rhs_t, _ = LAWS[part]
    return _eval_py(m, lhs_t, witness.elems), _eval_py(m, rhs_t, witness.elems)
