import pytest

from magmalab import MagmaError, load_fixture, verify_theorem, zn
from magmalab.errata import REGISTRY as ERRATA
from magmalab.errata import lookup
from magmalab.fixtures import META, check_fixture, fixture_check_all, fixture_names, fixture_text
from magmalab.magma import FiniteMagma
from magmalab.theorems import REGISTRY as THEOREMS
from magmalab.theorems import Status, theorem_ids


@pytest.mark.parametrize("tid", theorem_ids())
def test_every_theorem_verifies(tid):
    rep = verify_theorem(tid)
    assert rep.status is not Status.FAIL, rep.failures[:3]
    assert rep.checked > 0
    assert all(eid in THEOREMS[tid].errata for _, eid, _ in rep.errata)


def test_status_rules():
    rep = verify_theorem("3.1.1", (3, 12))
    assert rep.status is Status.PASS and not rep.failures
    assert rep.summary().startswith("3.1.1: PASS n=3..12")


def test_z30_one_sided_zero_count():
    rep = verify_theorem("5.4.9", (30, 30))
    assert rep.status is Status.PASS and rep.checked == 1


def test_unknown_theorem():
    with pytest.raises(MagmaError) as exc:
        verify_theorem("9.9.9")
    assert exc.value.code == "UNKNOWN_THEOREM"


def test_ids_sorted_numerically():
    ids = theorem_ids()
    assert ids.index("3.2.4") < ids.index("3.3.1") < ids.index("5.4.10") and ids.index("5.4.9") < ids.index("5.4.10")


def test_every_referenced_erratum_is_registered():
    referenced = {e for t in THEOREMS.values() for e in t.errata}
    for meta in META.values():
        if meta.table_erratum:
            referenced.add(meta.table_erratum)
        referenced |= {c.erratum for c in meta.claims if c.erratum}
    assert referenced <= set(ERRATA), referenced - set(ERRATA)
    for eid in referenced:
        assert lookup(eid).id == eid


def test_erratum_entries_are_complete():
    for e in ERRATA.values():
        assert e.claim and e.fact and e.affects


def test_fixture_corpus_checks_out():
    rep = fixture_check_all()
    assert rep.ok, [r.name for r in rep.results if not r.ok]
    assert len(rep.results) == len(fixture_names()) >= 40


def test_fixture_s_normal_example():
    res = check_fixture("ex_4_2_4")
    assert res.ok and "{0,2,4,6} S-normal" in res.passed
    assert [e for _, e in res.errata] == ["4.2.4-aA"]
    m = load_fixture("ex_4_2_4")
    assert isinstance(m, FiniteMagma) and m.table == zn(8, 2, 6).table


def test_fixture_loop_example():
    res = check_fixture("ex_1_5_2")
    assert res.ok
    assert load_fixture("ex_1_5_2").order == 8


def test_fixture_machine_byte_identical():
    res = check_fixture("ex_6_2_4")
    assert res.ok and not res.errata and "byte-identical to the generated machine" in res.passed


def test_unknown_fixture():
    with pytest.raises(MagmaError) as exc:
        load_fixture("ex_0_0_0")
    assert exc.value.code == "UNKNOWN_FIXTURE"
    assert fixture_text("ex_4_2_4").startswith("8")
