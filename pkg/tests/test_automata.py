import pytest

from magmalab import MagmaError, ZnSpec
from magmalab.automata import (
    Automaton,
    FreeWord,
    SemiAutomaton,
    all_words,
    automaton_equivalent,
    closed_state_sets,
    dumps_machine,
    from_groupoids,
    loads_machine,
    make_automaton,
    parallel_compose,
    run_auto,
    run_free,
    run_semi,
    series_compose,
    to_dot,
)

import oracle


def _k624():
    return from_groupoids(ZnSpec(4, 3, 2), ZnSpec(5, 2, 3), ZnSpec(5, 2, 3))


def test_from_groupoids_rule():
    k = _k624()
    assert isinstance(k, Automaton)
    assert k.delta == tuple(tuple((3 * z + 2 * (a % 4)) % 4 for a in range(5)) for z in range(4))
    assert k.lam == tuple(tuple((2 * (z % 5) + 3 * a) % 5 for a in range(5)) for z in range(4))


def test_closed_state_sets_match_oracle():
    k = _k624()
    proper = sorted(s.elements() for s in closed_state_sets(k))
    assert proper == [s for s in oracle.closed_state_sets([list(r) for r in k.delta]) if len(s) < 4]
    assert proper == [(0, 2), (1, 3)]


def test_adjoined_spec_rejected():
    with pytest.raises(MagmaError) as exc:
        from_groupoids(ZnSpec(4, 1, 2, True), ZnSpec(4, 2, 1))
    assert exc.value.code == "INVALID_SPEC"


def test_runs():
    k = _k624()
    word = [0, 1, 4, 2]
    outs, final = run_auto(k, 1, word)
    assert final == run_semi(k, 1, word)
    assert len(outs) == 4 and outs[0] == k.lam[1][0]
    assert run_semi(k, 2, []) == 2
    with pytest.raises(MagmaError):
        run_semi(k, 9, [0])


def test_free_word_evaluation():
    w = FreeWord.join(FreeWord.join(FreeWord.leaf(1), FreeWord.leaf(2)), FreeWord.leaf(3))
    k = _k624()
    assert w.leaves() == [1, 2, 3]
    assert run_free(k, 0, w) == run_semi(k, 0, [1, 2, 3])
    assert str(w) == "((1.2).3)"
    with pytest.raises(MagmaError):
        FreeWord()


def test_text_round_trip():
    k = _k624()
    assert loads_machine(dumps_machine(k)) == k
    semi = from_groupoids(ZnSpec(4, 2, 2), ZnSpec(3, 1, 2))
    assert isinstance(loads_machine(dumps_machine(semi)), SemiAutomaton)
    with pytest.raises(MagmaError) as exc:
        loads_machine("2 2\n0 1\n")
    assert exc.value.code == "PARSE_ERROR"


def test_dot_is_deterministic():
    k = _k624()
    dot = to_dot(k)
    assert dot == to_dot(_k624())
    assert dot.count("->") == 4 * 5
    assert dot.startswith("digraph machine {")


def test_series_and_parallel():
    k1 = make_automaton([[0, 1], [1, 0]], [[0, 1], [1, 0]])
    k2 = make_automaton([[1, 0], [0, 1]], [[0, 0], [1, 1]])
    s = series_compose(k1, k2)
    p = parallel_compose(k1, k2)
    assert s.state_count == 4 and p.state_count == 4
    for word in all_words(2, 4):
        o1, _ = run_auto(k1, 0, word)
        o2, _ = run_auto(k2, 0, o1)
        assert run_auto(s, 0, word)[0] == o2
    assert automaton_equivalent(k1, k1)
