import pytest

from magmalab import MagmaError, SubsetMask, zn
from magmalab.substructures import (
    IdealSide,
    NormalityScope,
    enumerate_closed,
    enumerate_ideals,
    enumerate_subsemigroups,
    generated_closure,
    is_closed,
    is_ideal,
    normal_subgroupoids,
)

import oracle

# Proper closed subsets found by the oracle.
FROZEN_CLOSED = {
    (6, 4, 5): [(0,), (3,), (0, 3), (0, 2, 4), (1, 3, 5)],
    (4, 2, 3): [(0,), (1,), (2,), (3,), (0, 2), (1, 3)],
}
FROZEN_COUNTS = {  # closed, subsemigroups incl. {0}, left ideals, right ideals
    (12, 2, 10): (75, 2, 63, 63),
    (12, 3, 9): (275, 20, 255, 255),
    (6, 4, 5): (5, 3, 2, 0),
    (8, 2, 6): (19, 2, 15, 15),
    (6, 1, 3): (13, 13, 0, 6),
    (10, 5, 6): (92, 92, 30, 2),
}


@pytest.mark.parametrize("spec", sorted(FROZEN_CLOSED))
def test_closed_family_exact(spec):
    assert [s.elements() for s in enumerate_closed(zn(*spec)).members] == FROZEN_CLOSED[spec]


@pytest.mark.parametrize("spec", sorted(FROZEN_COUNTS))
def test_counts_frozen(spec):
    m = zn(*spec)
    closed, semis, left, right = FROZEN_COUNTS[spec]
    assert len(enumerate_closed(m).members) == closed
    with_zero = enumerate_subsemigroups(m, exclude_trivial=False).members
    assert len(with_zero) == semis
    assert len(enumerate_ideals(m, IdealSide.LEFT).members) == left
    assert len(enumerate_ideals(m, IdealSide.RIGHT).members) == right


@pytest.mark.parametrize("n", range(3, 8))
def test_enumerations_match_oracle(n):
    for t, u in oracle.class_pairs(n, "zsss"):
        m, tab = zn(n, t, u), oracle.zn_table(n, t, u)
        assert sorted(s.elements() for s in enumerate_closed(m).members) == sorted(oracle.closed_subsets(tab))


def test_generated_closure():
    m = zn(12, 3, 9)
    assert generated_closure(m, SubsetMask.of(12, [3])).elements() == (0, 3, 6, 9)
    assert is_closed(m, SubsetMask.of(12, [0, 3, 6, 9]))


def test_is_ideal_requires_closed():
    m = zn(6, 4, 5)
    with pytest.raises(MagmaError) as exc:
        is_ideal(m, SubsetMask.of(6, [1, 2]), IdealSide.LEFT)
    assert exc.value.code == "NOT_CLOSED"
    ok, esc = is_ideal(m, SubsetMask.of(6, [1, 3, 5]), IdealSide.RIGHT)
    assert not ok and esc is not None


def test_enumeration_cap():
    with pytest.raises(MagmaError) as exc:
        enumerate_closed(zn(30, 2, 0))
    assert exc.value.code == "ORDER_TOO_LARGE"


@pytest.mark.parametrize("spec,literal,over_g", [
    ((8, 2, 6), [(0, 4)], []),
    ((6, 4, 5), [(3,), (0, 2, 4), (1, 3, 5)], []),
])
def test_normal_subgroupoids_frozen(spec, literal, over_g):
    m = zn(*spec)
    assert [s.elements() for s in normal_subgroupoids(m, NormalityScope.LITERAL_V)] == literal
    assert [s.elements() for s in normal_subgroupoids(m, NormalityScope.OVER_G)] == over_g
