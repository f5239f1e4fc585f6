import pytest

from magmalab import MagmaError, SubsetMask, zn
from magmalab.identities import LawId
from magmalab.smarandache import (
    SLawStrength,
    SmarandacheProfile,
    SPolicy,
    is_s_subgroupoid,
    is_semigroup_subset,
    s_commutative,
    s_idempotent,
    s_inner_commutative,
    s_law,
    s_semiconjugate,
    s_subgroupoid_bound_check,
    smarandache_witness,
    subgroupoid_bound,
)
from magmalab.zn import ClassTag, enumerate_class

import oracle

# Members of Z(n) with a proper semigroup other than {0}, counted by the oracle.
FROZEN_SG_COUNTS = {3: 0, 4: 6, 5: 0, 6: 18, 7: 2, 8: 34, 9: 20, 10: 54, 11: 2, 12: 82}


def test_sg_counts_frozen():
    got = {n: sum(smarandache_witness(zn(n, t, u)) is not None for t, u in enumerate_class(n, ClassTag.Z))
           for n in range(3, 13)}
    assert got == FROZEN_SG_COUNTS


@pytest.mark.parametrize("n", range(3, 8))
def test_sg_matches_oracle_over_zsss(n):
    for t, u in oracle.class_pairs(n, "zsss"):
        assert (smarandache_witness(zn(n, t, u)) is not None) == oracle.has_proper_semigroup(oracle.zn_table(n, t, u))


def test_policy_keeps_zero_singleton_when_asked():
    m = zn(5, 1, 2)
    assert smarandache_witness(m) is None
    w = smarandache_witness(m, SPolicy(exclude_trivial_zero=False))
    assert w is not None and w.subset.elements() == (0,) and w.is_trivial


def test_profile_bookkeeping():
    prof = SmarandacheProfile(zn(6, 4, 5))
    assert prof.complete
    assert len(prof.closed) == 5
    assert prof.witness is not None
    for h in prof.s_subgroupoids:
        assert is_s_subgroupoid(prof.m, SubsetMask(6, h))


def test_s_subgroupoid_examples():
    m = zn(6, 4, 5)
    assert is_s_subgroupoid(m, SubsetMask.of(6, [0, 3]))
    assert not is_s_subgroupoid(m, SubsetMask.of(6, [3]))
    assert is_semigroup_subset(m, SubsetMask.of(6, [3]))


def test_s_law_weak_strong():
    m = zn(4, 2, 3)
    weak = s_law(m, LawId.BOL, SLawStrength.WEAK)
    strong = s_law(m, LawId.BOL, SLawStrength.STRONG)
    assert weak.holds
    assert strong.holds == all(ok for _, ok in strong.detail)
    assert weak.holds == any(ok for _, ok in weak.detail)


def test_s_law_needs_witness():
    with pytest.raises(MagmaError) as exc:
        s_law(zn(5, 1, 2), LawId.BOL, SLawStrength.WEAK)
    assert exc.value.code == "NOT_SMARANDACHE"


def test_commutative_and_idempotent_detectors():
    assert s_commutative(zn(6, 4, 5))
    ok, _ = s_inner_commutative(zn(6, 4, 5))
    assert isinstance(ok, bool)
    assert not s_idempotent(zn(6, 4, 5, True))


def test_semiconjugate_rejects_non_s_subgroupoid():
    m = zn(12, 1, 3)
    with pytest.raises(MagmaError) as exc:
        s_semiconjugate(m, SubsetMask.of(12, [1, 2]), SubsetMask.of(12, [0, 3, 6, 9]))
    assert exc.value.code == "NOT_CLOSED"


@pytest.mark.parametrize("k,bound", [(1, 0), (2, 2), (3, 6), (4, 14)])
def test_subgroupoid_bound(k, bound):
    assert subgroupoid_bound(k) == bound


def test_bound_check_small_product():
    check = s_subgroupoid_bound_check([zn(4, 2, 3), zn(4, 2, 3)])
    assert check.ok and check.bound == 2
