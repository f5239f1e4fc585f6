"""The printed example tables as a fixture corpus.

Tables live in ``fixtures/*.tbl`` (Cayley text format) and machines in
``fixtures/*.fsm``.  Each fixture carries a recipe (the Z_n member or
construction the table is supposed to be) and a list of claims made about
it; ``fixture_check_all`` recomputes every claim.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Union

from .automata import (
    Automaton,
    Machine,
    closed_state_sets,
    dumps_machine,
    from_groupoids,
    loads_machine,
    run_auto,
)
from .errors import PARSE_ERROR, UNKNOWN_FIXTURE, MagmaError
from .identities import LawId, check_law
from .magma import (
    FiniteMagma,
    SubsetMask,
    are_isomorphic,
    center,
    direct_product,
    identity_element,
    is_associative,
    is_commutative,
    is_idempotent_groupoid,
    is_loop,
    loads,
)
from .smarandache import (
    SLawStrength,
    SmarandacheProfile,
    is_s_subgroupoid,
    is_semigroup_subset,
    s_commutative,
    s_conjugate,
    s_ideal,
    s_inner_commutative,
    s_law,
    s_normal,
    s_seminormal,
    smarandache_witness,
)
from .substructures import (
    IdealSide,
    enumerate_closed,
    enumerate_ideals,
    is_closed,
    is_ideal,
    is_inner_commutative,
    is_normal_groupoid,
    is_simple,
    left_coset,
)
from .zn import ZnSpec, build_loop, build_zn

Loaded = Union[FiniteMagma, Machine]


@dataclass(frozen=True)
class Claim:
    text: str
    check: Callable[[Loaded], bool]
    erratum: str | None = None


@dataclass(frozen=True)
class FixtureMeta:
    name: str
    zero: int | None = None
    expected: Callable[[], Loaded] | None = None
    isomorphic_only: bool = False
    table_erratum: str | None = None
    claims: tuple[Claim, ...] = ()


@dataclass
class FixtureResult:
    name: str
    passed: list[str] = field(default_factory=list)
    failed: list[str] = field(default_factory=list)
    errata: list[tuple[str, str]] = field(default_factory=list)  # (claim, erratum id)

    @property
    def ok(self) -> bool:
        return not self.failed


@dataclass
class FixtureReport:
    results: list[FixtureResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            status = "FAIL" if r.failed else ("PASS_WITH_ERRATA" if r.errata else "PASS")
            out.append(f"{r.name}: {status} claims={len(r.passed) + len(r.failed) + len(r.errata)}")
            out += [f"  failed: {c}" for c in r.failed]
            out += [f"  erratum {e}: {c}" for c, e in r.errata]
        return out


# ------------------------------------------------------------- predicates

def _s(m: FiniteMagma, *elems: int) -> SubsetMask:
    return SubsetMask.of(m.order, elems)


def _sg(m) -> bool:
    return smarandache_witness(m) is not None


def _not_sg(m) -> bool:
    return smarandache_witness(m) is None


def _semigroup(*elems: int):
    return lambda m: is_semigroup_subset(m, _s(m, *elems))


def _closed_family(*sets: tuple[int, ...]):
    """Closed proper subsets, leaving out the zero singleton, are exactly ``sets``."""
    def check(m):
        found = {tuple(s.elements()) for s in enumerate_closed(m)}
        found.discard((m.designated_zero,))
        return found == {tuple(sorted(x)) for x in sets}
    return check


def _has_closed(*elems: int):
    return lambda m: is_closed(m, _s(m, *elems))


def _law(law: LawId, holds: bool = True, *elems: int):
    def check(m):
        dom = _s(m, *elems) if elems else None
        return check_law(m, law, dom).holds == holds
    return check


def _strong(law: LawId, holds: bool = True):
    return lambda m: s_law(m, law, SLawStrength.STRONG).holds == holds


def _weak(law: LawId, holds: bool = True):
    return lambda m: s_law(m, law, SLawStrength.WEAK).holds == holds


def _ideals(side: IdealSide, *sets: tuple[int, ...]):
    def check(m):
        return {tuple(s.elements()) for s in enumerate_ideals(m, side)} == {tuple(sorted(x)) for x in sets}
    return check


def _all_pairs_with_identity(m) -> bool:
    e = identity_element(m)
    return e is not None and all(is_semigroup_subset(m, _s(m, a, e)) for a in range(m.order) if a != e)


def _semigroup_singletons(m) -> set[int]:
    return {a for a in range(m.order) if m.table[a][a] == a}


def _sg_via_singletons(*elems: int):
    return lambda m: _sg(m) and set(elems) <= _semigroup_singletons(m)


def _zn(n, t, u, adjoin=False):
    return lambda: build_zn(ZnSpec(n, t, u, adjoin))


def _loop(n, k):
    return lambda: build_loop(n, k)


def _product():
    return direct_product([build_zn(ZnSpec(3, 2, 1)), build_zn(ZnSpec(4, 1, 3))])


C = Claim
comm, assoc = C("commutative", is_commutative), C("associative", is_associative)
non_comm = C("not commutative", lambda m: not is_commutative(m))
non_assoc = C("not associative", lambda m: not is_associative(m))
is_sg, not_sg = C("is an SG", _sg), C("is not an SG", _not_sg)


def _loop_claims(order: int, commutative: bool) -> tuple[Claim, ...]:
    return (C("is a loop", lambda m: is_loop(m).holds), C(f"order {order}", lambda m: m.order == order),
            comm if commutative else non_comm)


_Z = {
    # name: (n, t, u, adjoined, zero index used for the Smarandache trivial set)
    "ex_1_2_1": (5, 1, 4), "ex_1_2_7": (12, 1, 3), "ex_1_2_7_b": (8, 2, 6), "ex_1_4_1": (6, 1, 3),
    "ex_2_1_1": (4, 1, 2), "ex_2_1_2": (6, 2, 3), "ex_2_1_3": (12, 4, 9), "ex_2_1_4": (10, 5, 6),
    "ex_2_2_1": (9, 5, 3), "ex_2_2_2": (5, 2, 4), "ex_2_2_3": (4, 3, 2), "ex_2_2_4": (6, 2, 4),
    "ex_2_2_5": (4, 2, 3), "ex_2_2_7": (7, 3, 4), "ex_2_2_8": (7, 3, 4), "ex_2_2_9": (10, 1, 2),
    "ex_2_2_10": (12, 1, 3), "ex_2_2_11": (3, 1, 2), "ex_2_3_1": (12, 1, 4), "ex_2_3_4": (3, 1, 2),
    "ex_2_3_5": (3, 2, 1),
    "ex_3_1_1": (3, 1, 2), "ex_3_1_2": (3, 2, 1), "ex_3_1_3": (7, 3, 4), "ex_3_1_4": (4, 2, 3),
    "ex_3_1_4_b": (4, 3, 2), "ex_3_1_5": (10, 3, 7), "ex_3_2_1": (5, 2, 4), "ex_3_2_2": (6, 2, 4),
    "ex_3_2_3": (8, 2, 6), "ex_3_2_4": (12, 2, 10), "ex_3_2_8": (10, 8, 4), "ex_3_3_1": (5, 2, 2),
    "ex_3_3_2": (7, 3, 3), "ex_3_3_3": (6, 2, 2), "ex_3_3_4": (6, 5, 5), "ex_3_4_1": (6, 3, 0),
    "ex_3_4_2": (6, 0, 2),
    "ex_4_1_1": (6, 1, 3), "ex_4_1_2": (10, 1, 5), "ex_4_1_5": (4, 2, 3), "ex_4_1_6": (5, 2, 4),
    "ex_4_1_7": (4, 2, 2), "ex_4_1_7_b": (6, 4, 5), "ex_4_2_1": (6, 4, 5), "ex_4_2_2": (6, 2, 4),
    "ex_4_2_4": (8, 2, 6), "ex_4_2_6": (12, 1, 3), "ex_4_2_7": (4, 2, 3), "ex_4_2_8": (5, 3, 3),
    "ex_4_3_1": (10, 5, 6), "ex_4_3_2": (12, 3, 9), "ex_4_3_3": (12, 3, 4), "ex_4_3_4": (4, 2, 3),
    "ex_4_3_5": (6, 4, 3), "ex_4_3_6": (4, 2, 3), "ex_4_3_7": (6, 3, 5), "ex_4_3_7_b": (12, 5, 10),
    "ex_4_3_8": (14, 7, 8), "ex_4_3_9": (12, 1, 6), "ex_4_4_3": (4, 2, 3), "ex_4_4_3_b": (6, 4, 5),
    "ex_5_1_1": (7, 5, 3), "ex_5_1_2": (4, 3, 2), "ex_5_1_3": (5, 1, 3), "ex_5_1_4": (5, 2, 1),
    "ex_5_1_5": (9, 5, 3), "ex_5_1_6": (8, 1, 6), "ex_5_1_7": (10, 1, 2), "ex_5_1_9": (6, 3, 4),
    "ex_5_2_1": (5, 2, 4), "ex_5_2_2": (6, 2, 4), "ex_5_2_3": (8, 2, 6), "ex_5_3_1": (6, 2, 2),
    "ex_5_3_2": (9, 4, 4), "ex_5_3_3": (3, 1, 1), "ex_5_3_3_b": (3, 2, 2), "ex_5_4_1": (5, 3, 0),
    "ex_5_4_2": (6, 2, 0), "ex_5_4_4": (6, 3, 0), "prob_z8_3_3": (8, 3, 3),
}

_ADJ = {"ex_3_5_1": (3, 2, 2), "ex_5_6_1": (4, 2, 3), "ex_5_6_2": (6, 5, 3), "ex_5_6_3": (6, 4, 5)}

_TABLE_ERRATA = {"ex_4_3_9": "4.3.9-table", "ex_5_1_5": "5.1.5-table", "ex_5_3_3_b": "5.3.3-table",
                 "ex_5_6_3": "5.6.3-table", "prob_z8_3_3": "z8-3-3-table"}

_A = IdealSide

_CLAIMS: dict[str, tuple[Claim, ...]] = {
    "ex_1_2_2": (C("order 3", lambda m: m.order == 3),),
    "ex_1_5_1": _loop_claims(6, False),
    "ex_1_5_2": _loop_claims(8, True),
    "ex_1_5_4": _loop_claims(6, False),
    "ex_2_1_1": (C("not Moufang", _law(LawId.MOUFANG, False)),),
    "ex_2_1_2": (C("Bol", _law(LawId.BOL)),),
    "ex_2_1_3": (C("P-groupoid", _law(LawId.P)),),
    "ex_2_1_4": (C("right alternative", _law(LawId.RIGHT_ALT)),),
    "ex_2_2_2": (C("idempotent groupoid", is_idempotent_groupoid),),
    "ex_2_2_3": (C("right ideals {0,2}, {1,3}", _ideals(_A.RIGHT, (0, 2), (1, 3))),
                 C("no left ideals", _ideals(_A.LEFT))),
    "ex_2_2_4": (C("{0,2,4} is a two-sided ideal", lambda m: is_ideal(m, _s(m, 0, 2, 4), _A.TWO_SIDED)[0]),),
    "ex_2_2_5": (C("left ideals {0,2}, {1,3}", _ideals(_A.LEFT, (0, 2), (1, 3))),
                 C("no right ideals", _ideals(_A.RIGHT))),
    "ex_2_2_7": (C("simple", is_simple),),
    "ex_2_2_8": (C("normal groupoid", lambda m: is_normal_groupoid(m)[0]), C("simple", is_simple)),
    "ex_2_2_9": (C("not a normal groupoid", lambda m: not is_normal_groupoid(m)[0]),),
    "ex_2_3_1": (C("closed sets are the four residue classes mod 4", _closed_family(
        (0, 4, 8), (1, 5, 9), (2, 6, 10), (3, 7, 11)), "2.3.1-subgroupoids"),
                 C("inner commutative", lambda m: is_inner_commutative(m)[0], "2.3.1-subgroupoids")),
    "ex_2_3_4": (C("empty center", lambda m: len(center(m)) == 0),),
    "ex_3_1_1": (non_assoc, non_comm),
    "ex_3_1_2": (non_assoc, non_comm),
    "ex_3_1_3": (non_comm,),
    "ex_3_1_4": (C("left ideals {0,2}, {1,3}", _ideals(_A.LEFT, (0, 2), (1, 3))),
                 C("no right ideals", _ideals(_A.RIGHT))),
    "ex_3_1_4_b": (C("right ideals {0,2}, {1,3}", _ideals(_A.RIGHT, (0, 2), (1, 3))),
                   C("no left ideals", _ideals(_A.LEFT))),
    "ex_3_1_5": (C("no one-sided ideals", lambda m: not enumerate_ideals(m, _A.LEFT).members
                   and not enumerate_ideals(m, _A.RIGHT).members),),
    "ex_3_2_1": (C("closed sets are the singletons {1},{2},{3},{4}", _closed_family((1,), (2,), (3,), (4,))),),
    "ex_3_2_2": (C("{0,2,4} closed", _has_closed(0, 2, 4)),),
    "ex_3_2_3": (C("{0,2,4,6} closed", _has_closed(0, 2, 4, 6)),),
    "ex_3_2_4": (C("{0,2,4,6,8,10} closed", _has_closed(0, 2, 4, 6, 8, 10)),),
    "ex_3_2_8": (C("{0,2,4,6,8} closed", _has_closed(0, 2, 4, 6, 8)),
                 C("only closed set is {0,2,4,6,8}", _closed_family((0, 2, 4, 6, 8)), "3.2.8-only"),),
    "ex_3_3_1": (comm, non_assoc, C("no closed sets", _closed_family())),
    "ex_3_3_2": (comm, non_assoc, C("no closed sets", _closed_family())),
    "ex_3_3_3": (comm, C("{0,2,4} closed", _has_closed(0, 2, 4))),
    "ex_3_3_4": (C("{2} and {4} closed", lambda m: _has_closed(2)(m) and _has_closed(4)(m)),),
    "ex_3_4_1": (non_comm, C("{0,3} closed", _has_closed(0, 3))),
    "ex_3_4_2": (non_comm, C("{0,2,4} closed", _has_closed(0, 2, 4))),
    "ex_3_5_1": (comm, C("has an identity", lambda m: identity_element(m) is not None)),
    "ex_4_1_1": (is_sg, C("{0,3}, {1,4}, {2,5} semigroups", lambda m: all(
        is_semigroup_subset(m, _s(m, *p)) for p in ((0, 3), (1, 4), (2, 5))))),
    "ex_4_1_2": (is_sg, C("{0,5} semigroup", _semigroup(0, 5))),
    "ex_4_1_4": (non_comm, C("Smarandache commutative via {a1}", lambda m: s_commutative(m)
                             and is_semigroup_subset(m, _s(m, 0)))),
    "ex_4_1_5": (non_comm, C("Smarandache commutative", s_commutative)),
    "ex_4_1_6": (non_comm, C("Smarandache commutative", s_commutative)),
    "ex_4_1_7": (comm, is_sg, C("{0,2} semigroup", _semigroup(0, 2))),
    "ex_4_2_1": (C("{1,3,5} S-left ideal, not S-right", lambda m: s_ideal(m, _s(m, 1, 3, 5), _A.LEFT)
                   and not s_ideal(m, _s(m, 1, 3, 5), _A.RIGHT)),
                 C("{1,3,5} S-seminormal, not S-normal", lambda m: s_seminormal(m, _s(m, 1, 3, 5))
                   and not s_normal(m, _s(m, 1, 3, 5)))),
    "ex_4_2_2": (is_sg, C("{0,3} semigroup", _semigroup(0, 3)),
                 C("{0,2,4} ideal but not an S-subgroupoid", lambda m: not is_s_subgroupoid(m, _s(m, 0, 2, 4)))),
    "ex_4_2_4": (is_sg, C("{0,4} semigroup", _semigroup(0, 4)),
                 C("{0,2,4,6} S-normal", lambda m: s_normal(m, _s(m, 0, 2, 4, 6))),
                 C("aA = A for every a", lambda m: all(left_coset(m, a, _s(m, 0, 2, 4, 6)) == _s(m, 0, 2, 4, 6)
                                                      for a in range(m.order)), "4.2.4-aA")),
    "ex_4_2_6": (is_sg, C("{0,3,6,9}, {2,5,8,11} S-conjugate", lambda m: s_conjugate(
        m, _s(m, 0, 3, 6, 9), _s(m, 2, 5, 8, 11))[0])),
    "ex_4_2_7": (is_sg, C("Smarandache inner commutative", lambda m: s_inner_commutative(m)[0], "4.2.7-inner")),
    "ex_4_2_8": (comm, C("Smarandache inner commutative", lambda m: s_inner_commutative(m)[0])),
    "ex_4_2_9": (non_comm, non_assoc, C("{a,c} semigroup", _semigroup(0, 2))),
    "ex_4_3_1": (is_sg, C("Moufang on every triple", _law(LawId.MOUFANG))),
    "ex_4_3_2": (is_sg, C("weak but not strong Moufang", lambda m: _weak(LawId.MOUFANG)(m)
                          and _strong(LawId.MOUFANG, False)(m))),
    "ex_4_3_3": (is_sg, C("Bol on every triple", _law(LawId.BOL))),
    "ex_4_3_4": (C("Bol fails globally", _law(LawId.BOL, False)), C("Bol on {0,2}", _law(LawId.BOL, True, 0, 2))),
    "ex_4_3_5": (C("P on every pair", _law(LawId.P)),),
    "ex_4_3_6": (C("strong P", _strong(LawId.P)), C("P on every pair", _law(LawId.P))),
    "ex_4_3_7": (C("strong P", _strong(LawId.P)), C("P fails globally", _law(LawId.P, False))),
    "ex_4_3_8": (is_sg, C("both alternative laws", _law(LawId.ALTERNATIVE)), C("strong alternative", _strong(LawId.ALTERNATIVE))),
    "ex_4_4_3": (is_sg,),
    "ex_4_4_3_b": (is_sg,),
    "ex_4_5_1": (is_sg, C("every {e,a} is a semigroup", _all_pairs_with_identity)),
    "ex_4_5_3": (is_sg, C("not a loop", lambda m: not is_loop(m).holds)),
    "ex_5_1_1": (C("SG via singletons {1..6}", _sg_via_singletons(1, 2, 3, 4, 5, 6)),),
    "ex_5_1_2": (C("SG via singletons {1,2,3}", _sg_via_singletons(1, 2, 3)),),
    "ex_5_1_3": (not_sg,),
    "ex_5_1_4": (not_sg,),
    "ex_5_1_5": (not_sg, C("closed sets {0,3,6} and {1,2,4,5,7,8}", _closed_family((0, 3, 6), (1, 2, 4, 5, 7, 8)),
                           "5.1.5-closed-sets")),
    "ex_5_1_6": (is_sg, C("{4} semigroup", _semigroup(4))),
    "ex_5_1_7": (is_sg, C("{5} semigroup", _semigroup(5))),
    "ex_5_1_9": (C("strong Bol", _strong(LawId.BOL)),),
    "ex_5_2_1": (C("SG via singletons {1,2,3,4}", _sg_via_singletons(1, 2, 3, 4)),),
    "ex_5_2_2": (is_sg, C("{0,3} semigroup", _semigroup(0, 3))),
    "ex_5_2_3": (is_sg, C("{0,4} semigroup", _semigroup(0, 4))),
    "ex_5_3_1": (is_sg, C("{4} semigroup", _semigroup(4))),
    "ex_5_3_2": (comm, C("is not an SG", _not_sg, "5.3.2-witness")),
    "ex_5_3_3": (assoc,),
    "ex_5_3_3_b": (C("is an SG", _sg, "5.3.3-table"),),
    "ex_5_4_1": (not_sg, non_assoc, non_comm),
    "ex_5_4_2": (is_sg, C("{0,3} semigroup", _semigroup(0, 3))),
    "ex_5_4_4": (is_sg, C("{3} semigroup", _semigroup(3))),
    "ex_5_5_3": (is_sg, C("{(0,0),(0,1),(0,2),(0,3)} S-subgroupoid", lambda m: is_s_subgroupoid(m, _s(m, 0, 1, 2, 3)))),
    "ex_5_6_1": (is_sg, C("{e,m} semigroups for m = 1,2,3", lambda m: all(
        is_semigroup_subset(m, _s(m, a, 4)) for a in (1, 2, 3)))),
    "ex_5_6_2": (C("strong right alternative (non-degenerate)", lambda m: s_law(
        m, LawId.RIGHT_ALT, SLawStrength.STRONG, skip_degenerate=True).holds),
                 C("not Smarandache left alternative", lambda m: not s_law(
                     m, LawId.LEFT_ALT, SLawStrength.WEAK, skip_degenerate=True).holds, "5.6.2-left")),
    "ex_5_6_3": (C("strong left alternative (non-degenerate)", lambda m: s_law(
        m, LawId.LEFT_ALT, SLawStrength.STRONG, skip_degenerate=True).holds),
                 C("left alternative on every pair", _law(LawId.LEFT_ALT), "5.6.4-degenerate")),
    "prob_z8_3_3": (C("commutative", is_commutative, "z8-3-3-table"), C("no closed sets", _closed_family())),
}


def _with_zero(name: str) -> int | None:
    return 0 if name in _Z else None


def _machine_claims() -> dict[str, tuple]:
    def same_as(z, a, b=None):
        return lambda k: dumps_machine(k) == dumps_machine(from_groupoids(z, a, b))

    def cols_match(z, a, cols):
        def check(k):
            gen = from_groupoids(z, a)
            return all(k.delta[s][c] == gen.delta[s][c] for s in range(k.state_count) for c in cols)
        return check

    def closed_sets(*sets, letters=None):
        return lambda k: {tuple(s.elements()) for s in closed_state_sets(k, letters)} == set(sets)

    return {
        "ex_6_1_1": (C("3 states, 2 letters", lambda k: (k.state_count, k.input_count) == (3, 2)),),
        "ex_6_1_2": (C("parity output on 11", lambda k: run_auto(k, 0, [1, 1]) == ([1, 1], 0)),),
        "ex_6_2_1": (C("columns 0-3 equal Z_4(2,1) x Z_6(2,1)", cols_match(ZnSpec(4, 2, 1), ZnSpec(6, 2, 1), range(4))),
                     C("{0,2} closed under every letter", closed_sets((0, 2)), "6.2.1-columns")),
        "ex_6_2_2": (C("delta is 2z+2a mod 3", lambda k: all(
            k.delta[z][a] == (2 * z + 2 * a) % 3 for z in range(3) for a in range(4))),
                     C("delta equals Z_3(1,2) x Z_4(2,2)", same_as(ZnSpec(3, 1, 2), ZnSpec(4, 2, 2)), "6.2.2-operation")),
        "ex_6_2_3": (C("delta equals Z_4(2,2) x Z_3(1,2)", same_as(ZnSpec(4, 2, 2), ZnSpec(3, 1, 2))),),
        "ex_6_2_4": (C("byte-identical to the generated machine",
                       same_as(ZnSpec(4, 3, 2), ZnSpec(5, 2, 3), ZnSpec(5, 2, 3))),
                     C("closed state sets {0,2} and {1,3}", closed_sets((0, 2), (1, 3)))),
        "ex_6_2_5": (C("no proper closed state set", closed_sets()),
                     C("delta equals Z_5(3,2) x Z_3(0,2)", lambda k: k.delta == from_groupoids(
                         ZnSpec(5, 3, 2), ZnSpec(3, 0, 2)).delta, "6.2.5-table")),
    }


def _build_meta() -> dict[str, FixtureMeta]:
    meta: dict[str, FixtureMeta] = {}
    for name, (n, t, u) in _Z.items():
        meta[name] = FixtureMeta(name, 0, _zn(n, t, u), False, _TABLE_ERRATA.get(name), _CLAIMS.get(name, ()))
    for name, (n, t, u) in _ADJ.items():
        meta[name] = FixtureMeta(name, None, _zn(n, t, u, True), False, _TABLE_ERRATA.get(name), _CLAIMS.get(name, ()))
    iso = {"ex_1_5_1": _loop(5, 2), "ex_1_5_2": _loop(7, 4), "ex_1_5_4": _loop(5, 4), "ex_1_5_4_b": _loop(5, 2),
           "ex_4_5_1": _zn(5, 2, 2, True), "ex_4_5_3": _zn(5, 2, 1, True)}
    for name, build in iso.items():
        meta[name] = FixtureMeta(name, None, build, True, None, _CLAIMS.get(name, ()))
    meta["ex_5_5_3"] = FixtureMeta("ex_5_5_3", 0, _product, False, None, _CLAIMS["ex_5_5_3"])
    bespoke = ["ex_1_2_2", "ex_1_2_6", "ex_1_4_3", "ex_2_2_1_b", "ex_2_2_1_c", "ex_4_1_4", "ex_4_2_9"]
    for name in bespoke:
        meta[name] = FixtureMeta(name, None, None, False, None, _CLAIMS.get(name, ()))
    for name, claims in _machine_claims().items():
        meta[name] = FixtureMeta(name, None, None, False, None, claims)
    return meta


META = _build_meta()


def _path(name: str):
    base = resources.files(__package__) / "fixtures"
    for ext in (".tbl", ".fsm"):
        p = base / (name + ext)
        if p.is_file():
            return p
    return None


def fixture_names() -> list[str]:
    base = resources.files(__package__) / "fixtures"
    return sorted(p.name.rsplit(".", 1)[0] for p in base.iterdir() if p.name.endswith((".tbl", ".fsm")))


def fixture_text(name: str) -> str:
    p = _path(name)
    if p is None:
        raise MagmaError(UNKNOWN_FIXTURE, f"no fixture named {name!r}")
    return p.read_text()


def load_fixture(name: str) -> Loaded:
    p = _path(name)
    if p is None:
        raise MagmaError(UNKNOWN_FIXTURE, f"no fixture named {name!r}")
    text = p.read_text()
    if p.name.endswith(".fsm"):
        return loads_machine(text)
    m = META.get(name)
    try:
        return loads(text, m.zero if m else None)
    except MagmaError:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        raise MagmaError(PARSE_ERROR, f"{name}: {exc}") from exc


def _same_table(a: FiniteMagma, b: FiniteMagma) -> bool:
    return a.order == b.order and a.table == b.table


def check_fixture(name: str) -> FixtureResult:
    meta = META.get(name, FixtureMeta(name))
    obj = load_fixture(name)
    res = FixtureResult(name)

    def record(text: str, ok: bool, erratum: str | None) -> None:
        if ok:
            res.passed.append(text)
        elif erratum:
            res.errata.append((text, erratum))
        else:
            res.failed.append(text)

    if meta.expected is not None:
        exp = meta.expected()
        if meta.isomorphic_only:
            record("isomorphic to its recipe", are_isomorphic(obj, exp, max_order=obj.order)[0], None)
        else:
            record("table equals its recipe", _same_table(obj, exp), meta.table_erratum)
    for claim in meta.claims:
        try:
            ok = bool(claim.check(obj))
        except MagmaError as exc:
            ok = False
            claim = Claim(f"{claim.text} ({exc.code})", claim.check, claim.erratum)
        record(claim.text, ok, claim.erratum)
    return res


def fixture_check_all() -> FixtureReport:
    return FixtureReport([check_fixture(n) for n in fixture_names()])
