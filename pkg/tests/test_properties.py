"""Invariants checked over generated inputs."""

from hypothesis import given, settings
from hypothesis import strategies as st

from magmalab import SubsetMask, ZnSpec, check_law, from_groupoids, zn
from magmalab.automata import FreeWord, closed_state_sets, run_free, run_semi
from magmalab.identities import LawId, replay
from magmalab.magma import is_associative, is_commutative, is_idempotent_groupoid
from magmalab.substructures import enumerate_closed, generated_closure, is_closed
from magmalab.zn import predicted_flags

import oracle


@st.composite
def specs(draw, max_n=10, adjoin=None):
    n = draw(st.integers(3, max_n))
    t = draw(st.integers(0, n - 1))
    u = draw(st.integers(0 if t else 1, n - 1))
    adj = draw(st.booleans()) if adjoin is None else adjoin
    return ZnSpec(n, t, u, adj)


@st.composite
def free_words(draw, letters: int, depth: int = 5):
    if depth == 0 or draw(st.booleans()):
        return FreeWord.leaf(draw(st.integers(0, letters - 1)))
    return FreeWord.join(draw(free_words(letters, depth - 1)), draw(free_words(letters, depth - 1)))


@given(specs(adjoin=False))
def test_transpose_duality(s):
    a, b = zn(s.n, s.t, s.u), zn(s.n, s.u, s.t)
    assert all(a(x, y) == b(y, x) for x in range(s.n) for y in range(s.n))


@given(specs(adjoin=False))
def test_congruence_predictions(s):
    m = zn(s.n, s.t, s.u)
    pf = predicted_flags(s.n, s.t, s.u)
    assert is_associative(m) == pf.semigroup
    assert is_idempotent_groupoid(m) == pf.idempotent_groupoid
    assert is_commutative(m) == (s.t == s.u)


@given(specs(max_n=8), st.sampled_from([LawId.MOUFANG, LawId.BOL, LawId.P, LawId.LEFT_ALT, LawId.RIGHT_ALT]))
def test_witness_replays(s, law):
    m = zn(s.n, s.t, s.u, s.adjoin_identity)
    rep = check_law(m, law)
    assert rep.holds == oracle.law_holds(oracle.zn_table(s.n, s.t, s.u, s.adjoin_identity), law.value)
    if rep.witness is not None:
        lhs, rhs = replay(m, law, rep.witness)
        assert lhs != rhs and (lhs, rhs) == (rep.witness.lhs, rep.witness.rhs)


@settings(max_examples=50)
@given(specs(max_n=9))
def test_closed_family_intersection_closed(s):
    m = zn(s.n, s.t, s.u, s.adjoin_identity)
    bits = enumerate_closed(m, include_improper=True).bits()
    assert all((a & b) == 0 or (a & b) in bits for a in bits for b in bits)


@given(specs(max_n=12, adjoin=False), st.sets(st.integers(0, 11), min_size=1, max_size=4))
def test_generated_closure_is_smallest(s, seed):
    seed = {x % s.n for x in seed}
    m = zn(s.n, s.t, s.u)
    c = generated_closure(m, SubsetMask.of(s.n, seed))
    assert is_closed(m, c) and set(seed) <= set(c.elements())
    for fam in enumerate_closed(m).members:
        if set(seed) <= set(fam.elements()):
            assert c.issubset(fam)


_MACHINES = [from_groupoids(ZnSpec(4, 3, 2), ZnSpec(5, 2, 3)), from_groupoids(ZnSpec(6, 4, 5), ZnSpec(3, 1, 2)),
             from_groupoids(ZnSpec(8, 2, 6), ZnSpec(8, 3, 5))]


@given(st.sampled_from(_MACHINES), st.data())
def test_run_free_ignores_tree_shape(k, data):
    fw = data.draw(free_words(k.input_count))
    z0 = data.draw(st.integers(0, k.state_count - 1))
    assert run_free(k, z0, fw) == run_semi(k, z0, fw.leaves())


@given(st.sampled_from(_MACHINES), st.data())
def test_run_semi_concatenation(k, data):
    letters = st.integers(0, k.input_count - 1)
    w1, w2 = data.draw(st.lists(letters, max_size=10)), data.draw(st.lists(letters, max_size=10))
    z0 = data.draw(st.integers(0, k.state_count - 1))
    assert run_semi(k, z0, w1 + w2) == run_semi(k, run_semi(k, z0, w1), w2)


@given(st.sampled_from(_MACHINES))
def test_closed_state_sets_match_oracle(k):
    proper = sorted(s.elements() for s in closed_state_sets(k))
    assert proper == sorted(s for s in oracle.closed_state_sets([list(r) for r in k.delta]) if len(s) < k.state_count)
