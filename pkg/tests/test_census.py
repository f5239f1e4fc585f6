import csv
import io
import json

import pytest

from magmalab import MagmaError, ZnSpec
from magmalab.census import (
    NOT_COMPUTED,
    CensusRecord,
    census,
    census_csv,
    census_record,
    census_specs,
    parse_range,
    write_jsonl,
)

import oracle


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_z5_rows_and_no_sg():
    rows = list(census((5, 5), ["z"]))
    # Ten coprime pairs with t != u; the count is the oracle's.
    assert len(rows) == len(oracle.class_pairs(5, "z")) == 10
    assert not any(r.sg for r in rows)


def test_z3_two_rows():
    assert [r.spec for r in census((3, 3), ["z"])] == ["3:1:2", "3:2:1"]


def test_zss6_diagonal_commutative():
    diag = [r for r in census((6, 6), ["zss"]) if r.t == r.u]
    assert len(diag) == 5 and all(r.commutative for r in diag)


@pytest.mark.parametrize("n", range(3, 9))
def test_zstar_row_count(n):
    assert len(census_specs((n, n), ["zs"])) == (n - 1) * (n - 2)


def test_row_order_and_dedup():
    specs = census_specs((4, 5), ["z", "zs", "adj"])
    keys = [(s.n, s.t, s.u, s.adjoin_identity) for s in specs]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


def test_observed_columns_recomputable():
    r = census_record(ZnSpec(6, 4, 5))
    tab = oracle.zn_table(6, 4, 5)
    assert r.associative == oracle.associative(tab)
    assert r.commutative == oracle.commutative(tab)
    assert r.closed == len(oracle.closed_subsets(tab))
    assert r.bol == oracle.law_holds(tab, "bol")


def test_agreement_columns_hold():
    for r in census((3, 8), ["zsss"]):
        assert r.agree_semigroup and r.agree_idempotent, r.spec
    for r in census((3, 6), ["adj"]):
        assert r.agree_semigroup is None


def test_csv_deterministic_across_workers():
    a = census_csv((4, 6), ["z", "adj"])
    b = census_csv((4, 6), ["z", "adj"])
    c = census_csv((4, 6), ["z", "adj"], workers=2)
    assert a == b == c
    assert a.splitlines()[0].split(",") == CensusRecord.columns()


def test_not_computed_above_bound():
    rows = _rows(census_csv((5, 5), ["z"], bound=4))
    assert rows and all(r["closed"] == NOT_COMPUTED for r in rows)
    assert rows[0]["associative"] in ("true", "false")


def test_bound_env(monkeypatch):
    monkeypatch.setenv("MAGMA_MAX_ORDER", "4")
    r = census_record(ZnSpec(5, 1, 2))
    assert r.closed is None and r.sg is None


def test_jsonl():
    buf = io.StringIO()
    assert write_jsonl(census((3, 3), ["z"]), buf) == 2
    first = json.loads(buf.getvalue().splitlines()[0])
    assert first["spec"] == "3:1:2" and first["adjoined"] is False


def test_parse_range_errors():
    assert parse_range("3..12") == (3, 12)
    assert parse_range("7") == (7, 7)
    for bad in ("x..3", "9..3"):
        with pytest.raises(MagmaError):
            parse_range(bad)


def test_row_cap():
    with pytest.raises(MagmaError) as exc:
        list(census((65, 65), ["z"]))
    assert exc.value.code == "BOUND_EXCEEDED"
