import pytest

from conftest import all_words
from sqfcount import lemmas as L
from sqfcount import words as W
from sqfcount.forced import build_forced_components, find_forced_square


def test_forced_labeling_worked_example():
    # Length 13 with a prefix square of half 4 and a suffix square of
    # half 6; the forced components and the short square they contain.
    graph = build_forced_components(13, 4, 6)
    assert graph.label_string() == "1232123232123"
    witness = find_forced_square(graph, 1, 13, 5)
    assert witness == (5, 2)
    a, h = witness
    assert "".join(str(x) for x in graph.labels[a:a + 2 * h]) == "2323"


def test_forced_labeling_tiny_cases():
    assert build_forced_components(5, 1, 1).label_string() == "11233"
    graph = build_forced_components(5, 2, 2)
    assert graph.label_string() == "12121"
    assert find_forced_square(graph, 0, 5, 1) is None


def test_forced_components_validation():
    with pytest.raises(ValueError):
        build_forced_components(4, 2, 1)  # prefix square not proper
    with pytest.raises(ValueError):
        build_forced_components(4, 0, 1)


def test_find_forced_square_validation_and_miss():
    graph = build_forced_components(9, 1, 1)
    assert find_forced_square(graph, 2, 7, 2) is None
    with pytest.raises(ValueError):
        find_forced_square(graph, 0, 10, 2)
    with pytest.raises(ValueError):
        find_forced_square(graph, 0, 9, 0)


def test_mirror_symmetry():
    # Reversing the graph of (len, hu, hv) gives the graph of (len, hv, hu).
    def canonical(labels):
        relabel = {}
        out = []
        for x in labels:
            if x not in relabel:
                relabel[x] = len(relabel) + 1
            out.append(relabel[x])
        return out

    for length in range(3, 26):
        top = (length - 1) // 2
        for hu in range(1, top + 1):
            for hv in range(1, top + 1):
                fwd = build_forced_components(length, hu, hv)
                rev = build_forced_components(length, hv, hu)
                assert canonical(fwd.labels[::-1]) == list(rev.labels)


def brute_forced_square(graph, lo, hi, max_half):
    hits = []
    for h in range(1, max_half + 1):
        for a in range(lo, hi - 2 * h + 1):
            if all(graph.labels[a + i] == graph.labels[a + i + h]
                   for i in range(h)):
                hits.append((a, h))
    return hits


def test_find_forced_square_matches_brute_force():
    for length in range(5, 31, 5):
        top = (length - 1) // 2
        for hu in range(1, top + 1):
            for hv in range(1, top + 1):
                graph = build_forced_components(length, hu, hv)
                hits = brute_forced_square(graph, 0, length, 3)
                found = find_forced_square(graph, 0, length, 3)
                assert (found is not None) == bool(hits)
                if found:
                    a, h = found
                    assert h == min(x[1] for x in hits)
                    assert found in hits


def test_overlap_lemma_small_scale():
    verdicts = L.verify_overlap_lemma(20)
    assert all(v.status != L.VIOLATION for v in verdicts)
    assert any(v.status == L.EXCLUDED_BY_FORCED_SQUARE for v in verdicts)
    for v in verdicts:
        # Default run only reports cases inside the violating window.
        assert v.s_length <= 3 * min(v.prefix_half, v.suffix_half)
        if v.status == L.EXCLUDED_BY_FORCED_SQUARE:
            pos, half = v.witness
            assert half < max(v.prefix_half, v.suffix_half)


def test_overlap_equal_halves_case():
    verdicts = L.verify_overlap_lemma(8)
    match = [v for v in verdicts
             if (v.s_length, v.prefix_half, v.suffix_half) == (8, 3, 3)]
    assert len(match) == 1
    assert match[0].status == L.EXCEPTIONAL_FORM_CONFIRMED


def test_overlap_vacuous_cases_only_when_exhaustive():
    plain = L.verify_overlap_lemma(13)
    keys = {(v.s_length, v.prefix_half, v.suffix_half) for v in plain}
    assert (13, 4, 6) not in keys  # 13 >= 3*4 + 1: outside the window
    full = L.verify_overlap_lemma(13, exhaustive=True)
    wanted = [v for v in full
              if (v.s_length, v.prefix_half, v.suffix_half) == (13, 4, 6)]
    assert len(wanted) == 1
    assert wanted[0].status == L.LEMMA_SATISFIED_VACUOUSLY


def test_overlap_workers_agree():
    assert L.verify_overlap_lemma(25, workers=2) == L.verify_overlap_lemma(25)


def test_overlap_validates_max_len():
    with pytest.raises(ValueError):
        L.verify_overlap_lemma(2)


def test_verdict_record_line():
    verdicts = L.verify_overlap_lemma(12)
    line = verdicts[0].record_line()
    assert line.startswith("s=") and "status=" in line


def test_run_analysis_worked_example():
    rep = L.analyze_word_run(W.parse_word("abcabcab"))
    assert rep.squares == [(0, 3), (1, 3), (2, 3)]
    assert rep.run_start == 0
    assert W.render_word(rep.run_word) == "abc"
    assert W.render_word(rep.run_prefix) == "ab"
    assert rep.expected_count == 3
    assert rep.observed_count == 3
    assert rep.ok


def test_run_analysis_vacuous_for_square_free():
    rep = L.analyze_word_run(W.parse_word("abcacb"))
    assert rep.ok and rep.observed_count == 0 and rep.squares == []


def test_run_analysis_prefix_can_fill_whole_half():
    # www contains exactly |w|+1 minimal squares: the run prefix is all
    # of w.  These are the boundary cases of the run shape.
    for text in ("aaa", "ababab", "abcabcabc"):
        rep = L.analyze_word_run(W.parse_word(text))
        assert rep.ok
        assert rep.run_prefix == rep.run_word
        assert rep.observed_count == len(rep.run_word) + 1


def test_key_lemma_small_scale():
    violations, summary = L.verify_key_lemma(12)
    assert violations == []
    assert summary.violations == 0
    assert summary.max_len == 12
    assert summary.words_checked > summary.runs_checked > 0


def test_key_lemma_validates_max_len():
    with pytest.raises(ValueError):
        L.verify_key_lemma(2)


def test_key_lemma_enumeration_count_is_exact():
    # The pruned enumeration must see exactly the words whose squares
    # all have half-length >= length/3.
    _, summary = L.verify_key_lemma(7)
    brute = 0
    for length in range(1, 8):
        bound = (length - 1) // 3
        for word in all_words(length):
            if bound == 0 or not W.has_square_with_half_at_most(word, bound):
                brute += 1
    assert summary.words_checked == brute


def test_confirmed_runs_consist_of_minimal_squares():
    # Every window of length 2|w| inside a confirmed run is a cyclic
    # shift of ww and must itself be a minimal square.
    checked = 0
    for length in range(6, 10):
        bound = (length - 1) // 3
        for word in all_words(length):
            if bound and W.has_square_with_half_at_most(word, bound):
                continue
            rep = L.analyze_word_run(word)
            assert rep.ok, word
            if rep.observed_count == 0:
                continue
            h = len(rep.run_word)
            run = word[rep.run_start:
                       rep.run_start + 2 * h + len(rep.run_prefix)]
            for a in range(len(run) - 2 * h + 1):
                assert W.is_minimal_square(run[a:a + 2 * h])
                checked += 1
    assert checked > 100
