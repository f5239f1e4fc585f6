"""One test per acceptance criterion; each prints a PASS/FAIL line."""

from __future__ import annotations

import random

import pytest

from magmalab import SubsetMask, check_law, from_groupoids, verify_theorem, zn
from magmalab.automata import FreeWord, closed_state_sets, run_free, run_semi
from magmalab.fixtures import load_fixture
from magmalab.identities import LawId, replay
from magmalab.magma import is_associative, is_idempotent_groupoid, is_loop
from magmalab.smarandache import (
    is_semigroup_subset,
    s_conjugate,
    s_ideal,
    s_normal,
    s_seminormal,
    s_subgroupoid_bound_check,
    smarandache_witness,
)
from magmalab.substructures import IdealSide, enumerate_closed
from magmalab.theorems import Status
from magmalab.zn import ClassTag, ZnSpec, build_loop, enumerate_class, loop_params_ok

import oracle


@pytest.fixture
def report(capsys):
    def emit(number: int, label: str, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number:>2}: {label}" + (f" ({detail})" if detail else ""))
        assert ok, detail or label
    return emit


def _s(width, *elems):
    return SubsetMask.of(width, elems)


def test_criterion_01_associativity_congruence(report):
    bad = []
    count = 0
    for n in range(3, 13):
        for t, u in enumerate_class(n, ClassTag.Z):
            count += 1
            pred = (t * t - t) % n == 0 and (u * u - u) % n == 0
            if is_associative(zn(n, t, u)) != pred:
                bad.append((n, t, u))
    report(1, f"associativity == congruence over {count} members of Z(n), 3<=n<=12", not bad, f"mismatches {bad[:5]}")


def test_criterion_02_prime_and_idempotent(report):
    assoc_primes = [(n, t, u) for n in (3, 5, 7, 11) for t, u in enumerate_class(n, ClassTag.Z)
                    if is_associative(zn(n, t, u))]
    idem_bad = [(n, t, u) for n in range(3, 13) for t, u in enumerate_class(n, ClassTag.ZSTARSTARSTAR)
                if is_idempotent_groupoid(zn(n, t, u)) != ((t + u) % n == 1)]
    report(2, "no associative Z(p), p<=11; idempotent <=> t+u=1 over Z***(n<=12)",
           not assoc_primes and not idem_bad, f"assoc {assoc_primes[:3]} idem {idem_bad[:3]}")


def test_criterion_03_zstar_row_count(report):
    from magmalab.census import census_specs
    counts = {n: len(census_specs((n, n), ["zs"])) for n in range(3, 13)}
    bad = {n: c for n, c in counts.items() if c != (n - 1) * (n - 2)}
    report(3, "census over Z*(n) has (n-1)(n-2) rows for n in 3..12", not bad, f"{bad}")


def test_criterion_04_closed_subsets(report):
    cases = [((2, 10), (0, 2, 4, 6, 8, 10)), ((3, 9), (0, 3, 6, 9)), ((4, 8), (0, 4, 8))]
    missing = []
    for (t, u), elems in cases:
        fam = enumerate_closed(zn(12, t, u))
        if _s(12, *elems) not in fam.members:
            missing.append((t, u))
    report(4, "Z_12(2,10), Z_12(3,9), Z_12(4,8) hold the closed subsets of orders 6, 4, 3", not missing, f"{missing}")


def test_criterion_05_global_laws(report):
    moufang = check_law(zn(10, 5, 6), LawId.MOUFANG)
    bol = check_law(zn(12, 3, 4), LawId.BOL)
    p = check_law(zn(6, 4, 3), LawId.P)
    alt = check_law(zn(14, 7, 8), LawId.ALTERNATIVE)
    ok = (moufang.holds and moufang.checked == 1000 and bol.holds and bol.checked == 1728
          and p.holds and p.checked == 36 and alt.holds)
    report(5, "Moufang Z_10(5,6), Bol Z_12(3,4), P Z_6(4,3), alternative Z_14(7,8)", ok,
           f"checked {moufang.checked}/{bol.checked}/{p.checked}")


def test_criterion_06_bol_local_vs_global(report):
    m = zn(4, 2, 3)
    full = check_law(m, LawId.BOL)
    local = check_law(m, LawId.BOL, _s(4, 0, 2))
    replay_ok = full.witness is not None and replay(m, LawId.BOL, full.witness) == (full.witness.lhs, full.witness.rhs) \
        and full.witness.lhs != full.witness.rhs
    report(6, "Z_4(2,3) fails Bol globally with a replayable witness, holds on {0,2}",
           not full.holds and replay_ok and local.holds, f"witness {full.witness}")


def test_criterion_07_smarandache_presence(report):
    present = {n: any(smarandache_witness(zn(n, t, u)) is not None for t, u in enumerate_class(n, ClassTag.Z))
               for n in (4, 6, 7, 8, 9, 10, 11, 12)}
    absent = {n: all(smarandache_witness(zn(n, t, u)) is None for t, u in enumerate_class(n, ClassTag.Z))
              for n in (3, 5)}
    report(7, "an SG exists in Z(n) for n in {4,6,...,12}, none in Z(3) or Z(5)",
           all(present.values()) and all(absent.values()), f"present {present} absent {absent}")


def test_criterion_08_s_ideal_and_normal_pattern(report):
    m = zn(6, 4, 5)
    a = _s(6, 1, 3, 5)
    pattern = (s_ideal(m, a, IdealSide.LEFT), s_ideal(m, a, IdealSide.RIGHT), s_seminormal(m, a), s_normal(m, a))
    z8 = s_normal(zn(8, 2, 6), _s(8, 0, 2, 4, 6))
    report(8, "Z_6(4,5) {1,3,5}: S-left, not S-right, S-seminormal, not S-normal; Z_8(2,6) {0,2,4,6} S-normal",
           pattern == (True, False, True, False) and z8, f"pattern {pattern} z8 {z8}")


def test_criterion_09_s_conjugacy(report):
    m = zn(12, 1, 3)
    ok, ev = s_conjugate(m, _s(12, 0, 3, 6, 9), _s(12, 2, 5, 8, 11))
    h = {(x.x, x.side) for x in ev.h_from_p}
    p = {(x.x, x.side) for x in ev.p_from_h}
    report(9, "{0,3,6,9} and {2,5,8,11} S-conjugate in Z_12(1,3) via (3,left) and (2,left)",
           ok and (3, "left") in h and (2, "left") in p, f"{sorted(h)} / {sorted(p)}")


def test_criterion_10_z30_one_sided_zero(report):
    flagged = []
    for d in (2, 3, 5, 6, 10, 15):
        for t, u in ((d, 0), (0, d)):
            m = zn(30, t, u)
            if is_semigroup_subset(m, _s(30, 0, 30 // d)):
                flagged.append((t, u))
    report(10, "all 12 machines Z_30(d,0), Z_30(0,d) are SGs via {0, 30/d}", len(flagged) == 12,
           f"{len(flagged)} flagged")


def test_criterion_11_loops_and_adjoined_sg(report):
    loops_bad = [(n, k) for n in (5, 7, 9, 11) for k in range(1, n)
                 if loop_params_ok(n, k) and not is_loop(build_loop(n, k)).holds]
    adj_bad = []
    for n in range(3, 11):
        for t, u in enumerate_class(n, ClassTag.ZSTARSTARSTAR):
            m = zn(n, t, u, True)
            if not any(is_semigroup_subset(m, _s(n + 1, a, n)) for a in range(n)):
                adj_bad.append((n, t, u))
    report(11, "build_loop passes is_loop for n in {5,7,9,11}; adjoined groupoids n<=10 are SGs via {e,a}",
           not loops_bad and not adj_bad, f"loops {loops_bad} adjoined {adj_bad[:3]}")


def test_criterion_12_adjoined_alternative(report):
    ralt = check_law(zn(6, 5, 3, True), LawId.RIGHT_ALT, skip_degenerate=True)
    m = zn(6, 4, 5, True)
    full = check_law(m, LawId.LEFT_ALT)
    nondeg = check_law(m, LawId.LEFT_ALT, skip_degenerate=True)
    status = verify_theorem("5.6.3", (4, 12)).status
    ok = (ralt.holds and not full.holds and full.witness is not None and full.witness.elems == (1, 3)
          and any(w.elems == (1, 3) for w in nondeg.degenerate_witnesses)
          and status is Status.PASS_WITH_ERRATA)
    report(12, "adjoined Z_6(5,3) right alternative off degenerate triples; adjoined Z_6(4,5) degenerate (1,3)",
           ok, f"status {status.value}")


def test_criterion_13_automata_fidelity(report):
    k624 = load_fixture("ex_6_2_4")
    gen = from_groupoids(ZnSpec(4, 3, 2), ZnSpec(5, 2, 3), ZnSpec(5, 2, 3))
    exact = k624.delta == gen.delta and k624.lam == gen.lam
    sets = {s.elements() for s in closed_state_sets(gen) if s.is_proper()}
    k621 = load_fixture("ex_6_2_1")
    g621 = from_groupoids(ZnSpec(4, 2, 1), ZnSpec(6, 2, 1))
    cols = all(k621.delta[z][a] == g621.delta[z][a] for z in range(k621.state_count) for a in range(4))
    k625 = load_fixture("ex_6_2_5")
    no_closed = not [s for s in closed_state_sets(k625) if s.is_proper()]
    report(13, "6.2.4 delta/lambda exact with closed sets {0,2},{1,3}; 6.2.1 columns 0-3; 6.2.5 no proper closed set",
           exact and {(0, 2), (1, 3)} <= sets and cols and no_closed,
           f"exact {exact} sets {sorted(sets)} cols {cols} none {no_closed}")


def _random_tree(rng: random.Random, letters: list[int]) -> FreeWord:
    if len(letters) == 1:
        return FreeWord.leaf(letters[0])
    cut = rng.randint(1, len(letters) - 1)
    return FreeWord.join(_random_tree(rng, letters[:cut]), _random_tree(rng, letters[cut:]))


def test_criterion_14_property_suites(report):
    rng = random.Random(20261018)
    machines = [from_groupoids(ZnSpec.parse(z), ZnSpec.parse(a)) for z, a in
                (("4:1:2", "4:2:1"), ("5:3:2", "5:2:3"), ("6:4:5", "3:1:2"), ("8:2:6", "8:3:5"))]
    tree_ok = concat_ok = True
    for k in machines:
        for _ in range(1000):
            word = [rng.randrange(k.input_count) for _ in range(rng.randint(1, 12))]
            z0 = rng.randrange(k.state_count)
            tree_ok &= run_free(k, z0, _random_tree(rng, word)) == run_semi(k, z0, word)
            cut = rng.randint(0, len(word))
            concat_ok &= run_semi(k, z0, word) == run_semi(k, run_semi(k, z0, word[:cut]), word[cut:])

    replay_ok = True
    family_ok = True
    for n in range(3, 9):
        for t, u in enumerate_class(n, ClassTag.ZSTARSTARSTAR):
            for adj in (False, True):
                m = zn(n, t, u, adj)
                for law in (LawId.MOUFANG, LawId.BOL, LawId.P, LawId.LEFT_ALT, LawId.RIGHT_ALT):
                    w = check_law(m, law).witness
                    if w is not None:
                        lhs, rhs = replay(m, law, w)
                        replay_ok &= lhs != rhs and (lhs, rhs) == (w.lhs, w.rhs)
                fam = enumerate_closed(m, include_improper=True)
                bits = fam.bits()
                family_ok &= all((a & b) == 0 or (a & b) in bits for a in bits for b in bits)

    transpose_ok = all(
        [list(r) for r in zip(*zn(n, t, u).table)] == [list(r) for r in zn(n, u, t).table]
        for n in range(3, 11) for t, u in enumerate_class(n, ClassTag.ZSTARSTARSTAR))
    flags = dict(tree=tree_ok, concat=concat_ok, replay=replay_ok, family=family_ok, transpose=transpose_ok)
    report(14, "tree shape, concatenation, witness replay, intersection closure, transpose duality",
           all(flags.values()), f"{flags}")


def test_criterion_15_product_bound(report):
    check = s_subgroupoid_bound_check([zn(6, 1, 3), zn(4, 2, 3)])
    report(15, "Z_6(1,3) x Z_4(2,3) has at least 2 S-subgroupoids", check.ok and check.found >= 2,
           f"found {check.found}, bound {check.bound}")


def test_oracle_agrees_on_criterion_one_sample():
    # The naive oracle gives the same verdicts on a slice of criterion 1.
    for t, u in enumerate_class(6, ClassTag.Z):
        assert is_associative(zn(6, t, u)) == oracle.associative(oracle.zn_table(6, t, u))
