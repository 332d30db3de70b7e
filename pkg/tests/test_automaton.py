import pytest

from conftest import automaton_for_bound, words_up_to
from sqfcount import words as W
from sqfcount.antidict import antidictionary_total_length
from sqfcount.automaton import build_pattern_automaton


def repeats_automaton():
    return build_pattern_automaton(
        [W.parse_word(t) for t in ("aa", "bb", "cc")])


def test_repeated_letter_patterns():
    auto = repeats_automaton()
    assert auto.state_count <= 7
    for word in words_up_to(7):
        expect = any(word[i] == word[i + 1] for i in range(len(word) - 1))
        assert auto.accepts(word) == expect


def test_empty_pattern_set():
    auto = build_pattern_automaton([])
    assert auto.state_count == 1
    assert auto.accept_sink is None
    for word in words_up_to(4):
        assert not auto.accepts(word)


def test_empty_pattern_rejected():
    with pytest.raises(ValueError):
        build_pattern_automaton([W.parse_word("ab"), b""])


def test_run_basics():
    auto = repeats_automaton()
    assert auto.run(auto.start_state, b"") == auto.start_state
    assert auto.is_accepting(auto.run(0, W.parse_word("aa")))
    auto2 = automaton_for_bound(2)
    assert not auto2.is_accepting(auto2.run(0, W.parse_word("abc")))
    with pytest.raises(ValueError):
        auto.run(auto.state_count, b"")


def test_predecessors_view():
    single = build_pattern_automaton([])
    assert single.predecessors_view() == [[(0, 0), (0, 1), (0, 2)]]

    auto = repeats_automaton()
    preds = auto.predecessors_view()
    assert sum(len(entry) for entry in preds) == 3 * auto.state_count
    state_a = auto.run(0, W.parse_word("a"))
    state_ab = auto.run(0, W.parse_word("ab"))
    assert (state_a, 1) in preds[state_ab]


def test_accepting_states_absorbing():
    for bound in (1, 2, 3):
        auto = automaton_for_bound(bound)
        sink = auto.accept_sink
        assert sink is not None
        for d in range(3):
            assert auto.step(sink, d) == sink


def test_state_count_bound():
    for bound in range(1, 7):
        auto = automaton_for_bound(bound)
        assert auto.state_count <= 1 + antidictionary_total_length(bound)


def test_acceptance_matches_substring_scan():
    # Exhaustive equivalence at small scale; the acceptance suite pushes
    # this to bounds 1..3 over all words of length <= 10.
    for bound in (1, 2):
        auto = automaton_for_bound(bound)
        for word in words_up_to(8):
            expect = (len(word) >= 2
                      and W.has_square_with_half_at_most(word, bound))
            assert auto.accepts(word) == expect


def test_build_is_deterministic():
    pats = [W.parse_word(t) for t in ("abab", "aa", "bcbc", "cc", "bb")]
    first = build_pattern_automaton(pats)
    second = build_pattern_automaton(list(pats))
    assert first.transitions == second.transitions
    assert first.accept_sink == second.accept_sink
    assert first.debug_dump() == second.debug_dump()


def test_redundant_superstring_patterns_are_harmless():
    # abab contains ab, so it never changes the accepted language; the
    # build must stay correct anyway.
    auto = build_pattern_automaton([W.parse_word("ab"), W.parse_word("abab")])
    assert auto.state_count <= 1 + 6
    for word in words_up_to(6):
        expect = W.parse_word("ab") in word
        assert auto.accepts(word) == expect


def test_debug_dump_shape():
    auto = repeats_automaton()
    lines = auto.debug_dump()
    assert len(lines) == auto.state_count
    assert lines[0].startswith("0: a->")
    assert sum(line.endswith("accept") for line in lines) == 1
