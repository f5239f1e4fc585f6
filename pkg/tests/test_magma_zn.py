import pytest

from magmalab import FiniteMagma, MagmaError, SubsetMask, ZnSpec, build_table, zn
from magmalab.magma import (
    are_isomorphic,
    basic_report,
    direct_product,
    dumps,
    identity_element,
    is_associative,
    is_loop,
    loads,
    product_index,
    restrict,
)
from magmalab.zn import ClassTag, build_loop, class_size, classify_pair, enumerate_class, predicted_flags

import oracle


@pytest.mark.parametrize("n", range(3, 10))
def test_tables_match_oracle(n):
    for t, u in oracle.class_pairs(n, "zsss"):
        for adj in (False, True):
            assert [list(r) for r in zn(n, t, u, adj).table] == oracle.zn_table(n, t, u, adj)


def test_class_sizes_frozen():
    # Counted by the oracle's independent class filter.
    assert {n: class_size(n, ClassTag.Z) for n in range(3, 13)} == {
        3: 2, 4: 6, 5: 10, 6: 18, 7: 22, 8: 34, 9: 42, 10: 54, 11: 62, 12: 82}
    for n in range(3, 13):
        assert class_size(n, ClassTag.ZSTAR) == (n - 1) * (n - 2)
        assert class_size(n, ClassTag.ZSTARSTAR) == (n - 1) ** 2
        assert class_size(n, ClassTag.ZSTARSTARSTAR) == n * n - 1


def test_classify_pair_is_most_specific():
    assert classify_pair(6, 1, 5) is ClassTag.Z
    assert classify_pair(6, 2, 4) is ClassTag.ZSTAR
    assert classify_pair(6, 3, 3) is ClassTag.ZSTARSTAR
    assert classify_pair(6, 0, 3) is ClassTag.ZSTARSTARSTAR
    assert (1, 5) in enumerate_class(6, ClassTag.ZSTARSTARSTAR)


@pytest.mark.parametrize("text,expected", [
    ("12:3:9", ZnSpec(12, 3, 9)),
    ("6:5:3+e", ZnSpec(6, 5, 3, True)),
])
def test_spec_round_trip(text, expected):
    assert ZnSpec.parse(text) == expected
    assert str(expected) == text


@pytest.mark.parametrize("bad", ["", "6:0:0", "2:1:1", "6:7:1", "6-1-2", "6:1:2+x"])
def test_spec_rejects(bad):
    with pytest.raises(MagmaError) as exc:
        ZnSpec.parse(bad)
    assert exc.value.code == "INVALID_SPEC"


def test_build_table_validation():
    with pytest.raises(MagmaError) as exc:
        build_table(2, [0, 1, 2, 0])
    assert exc.value.code == "ENTRY_OUT_OF_RANGE"
    with pytest.raises(MagmaError) as exc:
        build_table(2, [0, 1, 1])
    assert exc.value.code == "LENGTH_MISMATCH"


def test_dumps_loads_round_trip():
    m = zn(5, 2, 3)
    assert loads(dumps(m), designated_zero=0) == m
    assert loads(dumps(m)).table == m.table
    with pytest.raises(MagmaError) as exc:
        loads("3\n0 1 2\n")
    assert exc.value.code == "PARSE_ERROR"


def test_basic_report_on_z4_2_3():
    rep = basic_report(zn(4, 2, 3))
    assert not rep.commutative and not rep.associative
    assert rep.idempotents == frozenset(range(4))  # t + u = 1 mod 4
    assert rep.two_sided_identities == frozenset()


def test_adjoined_identity_is_last_element():
    m = zn(5, 1, 2, True)
    assert identity_element(m) == 5
    assert all(m(a, a) == 5 for a in range(5))


def test_adjoined_z3_2_2_is_klein_four():
    # The one adjoined member that turns out associative.
    m = zn(3, 2, 2, True)
    assert is_associative(m)
    assert not predicted_flags(3, 2, 2, True).semigroup


def test_restrict_and_product():
    m = zn(12, 3, 9)
    sub = restrict(m, SubsetMask.of(12, [0, 3, 6, 9]))
    assert sub.order == 4 and is_associative(sub) == oracle.associative(oracle.zn_table(12, 3, 9), [0, 3, 6, 9])
    p = direct_product([zn(3, 1, 2), zn(4, 2, 3)])
    assert p.order == 12
    a, b = product_index([zn(3, 1, 2), zn(4, 2, 3)], (1, 2)), product_index([zn(3, 1, 2), zn(4, 2, 3)], (2, 3))
    assert p(a, b) == product_index([zn(3, 1, 2), zn(4, 2, 3)], ((1 + 4) % 3, (4 + 9) % 4))


def test_isomorphism_transpose_example():
    ok, perm = are_isomorphic(zn(5, 1, 2), zn(5, 1, 2))
    assert ok and perm is not None
    assert not are_isomorphic(zn(4, 2, 3), zn(4, 3, 2))[0]


@pytest.mark.parametrize("n,m", [(5, 2), (5, 3), (7, 2), (9, 2), (11, 5)])
def test_build_loop(n, m):
    lp = build_loop(n, m)
    assert lp.order == n + 1
    assert is_loop(lp).holds


def test_build_loop_rejects_bad_params():
    with pytest.raises(MagmaError) as exc:
        build_loop(6, 5)
    assert exc.value.code == "INVALID_LOOP_PARAMS"


def test_finite_magma_is_frozen():
    m = zn(4, 1, 2)
    with pytest.raises(AttributeError):
        m.order = 3  # type: ignore[misc]
    assert isinstance(m, FiniteMagma)
