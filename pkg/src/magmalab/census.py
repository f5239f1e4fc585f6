"""Batch classification of Z-class members into CSV or JSON-lines rows.

Each row holds observed flags (laws, Smarandache detectors, subset counts)
next to the congruence predictions, plus agreement columns where a
predictor exists.  Rows come out in (n, t, u) order whatever the worker
count, so identical inputs give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from typing import Iterable, Iterator, Sequence, TextIO

from . import config
from .errors import BOUND_EXCEEDED, INVALID_SPEC, MagmaError
from .identities import LawId, check_law
from .magma import identity_element, is_associative, is_commutative, is_idempotent_groupoid
from .smarandache import (
    SLawStrength,
    SmarandacheProfile,
    s_commutative,
    s_idempotent,
    s_inner_commutative,
    s_law,
)
from .substructures import IdealSide, NormalityScope, enumerate_ideals, normal_subgroupoids
from .zn import ClassTag, ZnSpec, build_zn, classify_pair, enumerate_class, predicted_flags

NOT_COMPUTED = "not computed"

# Rows are built for orders up to this size; the subset-complete columns
# additionally need the order to be within census_bound().
ROW_CAP = 64

CLASS_NAMES = {"z": ClassTag.Z, "zs": ClassTag.ZSTAR, "zss": ClassTag.ZSTARSTAR, "zsss": ClassTag.ZSTARSTARSTAR,
               "adj": ClassTag.ZSTARSTARSTAR}

Cell = bool | int | str | None


@dataclass(frozen=True)
class CensusRecord:
    spec: str
    n: int
    t: int
    u: int
    adjoined: bool
    class_tag: str
    commutative: bool
    associative: bool
    idempotent: bool
    has_identity: bool
    moufang: bool
    bol: bool
    p: bool
    lalt: bool
    ralt: bool
    alt: bool
    pred_semigroup: bool
    pred_idempotent: bool
    pred_strong_p: bool
    pred_strong_bol: bool
    pred_strong_moufang: bool
    pred_strong_alt: bool
    pred_adj_ralt: bool
    pred_adj_lalt: bool
    agree_semigroup: Cell  # None on adjoined rows: no predictor exists there
    agree_idempotent: bool
    closed: Cell
    subsemigroups: Cell
    left_ideals: Cell
    right_ideals: Cell
    normal_literal: Cell
    normal_over_g: Cell
    s_subgroupoids: Cell
    sg: Cell
    sg_witness: Cell
    s_commutative: Cell
    s_inner_comm: Cell
    s_moufang_weak: Cell
    s_moufang_strong: Cell
    s_bol_weak: Cell
    s_bol_strong: Cell
    s_p_weak: Cell
    s_p_strong: Cell
    s_alt_weak: Cell
    s_alt_strong: Cell
    s_idempotent: Cell

    @classmethod
    def columns(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def cells(self) -> list[str]:
        return [_fmt(v) for v in asdict(self).values()]


_SUBSET_COLUMNS = ["closed", "subsemigroups", "left_ideals", "right_ideals", "normal_literal", "normal_over_g",
                   "s_subgroupoids", "sg", "sg_witness", "s_commutative", "s_inner_comm", "s_moufang_weak",
                   "s_moufang_strong", "s_bol_weak", "s_bol_strong", "s_p_weak", "s_p_strong", "s_alt_weak",
                   "s_alt_strong", "s_idempotent"]

_S_LAWS = [("moufang", LawId.MOUFANG), ("bol", LawId.BOL), ("p", LawId.P), ("alt", LawId.ALTERNATIVE)]


def _fmt(v: Cell) -> str:
    if v is None:
        return NOT_COMPUTED
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _subset_columns(spec: ZnSpec, bound: int) -> dict[str, Cell]:
    m = build_zn(spec)
    if m.order > bound:
        return {c: None for c in _SUBSET_COLUMNS}
    prof = SmarandacheProfile(m, max_order=bound)
    out: dict[str, Cell] = {
        "closed": len(prof.closed),
        "subsemigroups": len(prof.semigroups),
        "left_ideals": len(enumerate_ideals(m, IdealSide.LEFT, max_order=bound)),
        "right_ideals": len(enumerate_ideals(m, IdealSide.RIGHT, max_order=bound)),
        "normal_literal": len(normal_subgroupoids(m, NormalityScope.LITERAL_V, bound)),
        "normal_over_g": len(normal_subgroupoids(m, NormalityScope.OVER_G, bound)),
        "s_subgroupoids": len(prof.s_subgroupoids),
    }
    w = prof.witness
    out["sg"] = w is not None
    out["sg_witness"] = str(w.subset) if w is not None else ""
    if w is None:
        for c in _SUBSET_COLUMNS[9:]:
            out[c] = False
        return out
    out["s_commutative"] = s_commutative(m, profile=prof)
    out["s_inner_comm"] = s_inner_commutative(m, profile=prof)[0]
    for name, law in _S_LAWS:
        res = s_law(m, law, SLawStrength.STRONG, profile=prof)
        out[f"s_{name}_weak"] = any(ok for _, ok in res.detail)
        out[f"s_{name}_strong"] = res.holds
    out["s_idempotent"] = s_idempotent(m)
    return out


def census_record(spec: ZnSpec, bound: int | None = None) -> CensusRecord:
    """One row; subset-complete columns are NOT_COMPUTED above ``bound``."""
    bound = config.census_bound() if bound is None else bound
    m = build_zn(spec)
    pf = predicted_flags(spec.n, spec.t, spec.u, spec.adjoin_identity)
    assoc, idem = is_associative(m), is_idempotent_groupoid(m)
    laws = {law: check_law(m, law).holds for law in LawId}
    return CensusRecord(
        spec=str(spec), n=spec.n, t=spec.t, u=spec.u, adjoined=spec.adjoin_identity,
        class_tag=classify_pair(spec.n, spec.t, spec.u).value,
        commutative=is_commutative(m), associative=assoc, idempotent=idem,
        has_identity=identity_element(m) is not None,
        moufang=laws[LawId.MOUFANG], bol=laws[LawId.BOL], p=laws[LawId.P],
        lalt=laws[LawId.LEFT_ALT], ralt=laws[LawId.RIGHT_ALT], alt=laws[LawId.ALTERNATIVE],
        pred_semigroup=pf.semigroup, pred_idempotent=pf.idempotent_groupoid,
        pred_strong_p=pf.strong_p, pred_strong_bol=pf.strong_bol, pred_strong_moufang=pf.strong_moufang,
        pred_strong_alt=pf.strong_alternative, pred_adj_ralt=pf.adjoined_right_alt,
        pred_adj_lalt=pf.adjoined_left_alt,
        agree_semigroup=None if spec.adjoin_identity else pf.semigroup == assoc, agree_idempotent=pf.idempotent_groupoid == idem,
        **_subset_columns(spec, bound),
    )


def parse_range(text: str) -> tuple[int, int]:
    """``A..B`` or a single ``A``."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise MagmaError(INVALID_SPEC, f"bad range {text!r}; expected A..B") from None
    if lo > hi:
        raise MagmaError(INVALID_SPEC, f"empty range {text!r}")
    return lo, hi


def census_specs(n_range: tuple[int, int], classes: Sequence[str]) -> list[ZnSpec]:
    """Specs in (n, t, u) order; a pair listed by several classes appears once per adjoined flag."""
    lo, hi = n_range
    out: list[ZnSpec] = []
    for n in range(max(lo, 3), hi + 1):
        seen: set[tuple[int, int, bool]] = set()
        for name in classes:
            if name not in CLASS_NAMES:
                raise MagmaError(INVALID_SPEC, f"unknown class {name!r}")
            adj = name == "adj"
            for t, u in enumerate_class(n, CLASS_NAMES[name]):
                seen.add((t, u, adj))
        out += [ZnSpec(n, t, u, adj) for t, u, adj in sorted(seen, key=lambda k: (k[0], k[1], k[2]))]
    return out


def _row(args: tuple[ZnSpec, int]) -> CensusRecord:
    return census_record(*args)


def census(n_range: tuple[int, int], classes: Sequence[str], workers: int = 1,
           bound: int | None = None) -> Iterator[CensusRecord]:
    bound = config.census_bound() if bound is None else bound
    specs = census_specs(n_range, classes)
    too_big = [s for s in specs if s.order > ROW_CAP]
    if too_big:
        raise MagmaError(BOUND_EXCEEDED, f"{too_big[0]} has order {too_big[0].order} > {ROW_CAP}")
    jobs = [(s, bound) for s in specs]
    if workers <= 1 or len(jobs) < 2:
        yield from map(_row, jobs)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves input order, so output stays deterministic.
        yield from pool.map(_row, jobs, chunksize=8)


def write_csv(records: Iterable[CensusRecord], out: TextIO) -> int:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CensusRecord.columns())
    count = 0
    for r in records:
        w.writerow(r.cells())
        count += 1
    return count


def write_jsonl(records: Iterable[CensusRecord], out: TextIO) -> int:
    count = 0
    for r in records:
        row = {k: (NOT_COMPUTED if v is None else v) for k, v in asdict(r).items()}
        out.write(json.dumps(row, separators=(",", ":")) + "\n")
        count += 1
    return count


def census_csv(n_range: tuple[int, int], classes: Sequence[str], **kw) -> str:
    buf = io.StringIO()
    write_csv(census(n_range, classes, **kw), buf)
    return buf.getvalue()
