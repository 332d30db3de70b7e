import pytest

from conftest import all_words, scan_for_square
from sqfcount import words as W

# Frozen output of count_square_free_naive, cross-checked against the
# published values of OEIS A006156.
SQUARE_FREE_COUNTS = [
    1, 3, 6, 12, 18, 30, 42, 60, 78, 108, 144, 204, 264, 342, 456, 618,
    798, 1044, 1392, 1830, 2388, 3180, 4146, 5418, 7032, 9198, 11892,
    15486, 20220, 26424, 34422,
]


def w(text):
    return W.parse_word(text)


def test_parse_render_round_trip():
    assert W.parse_word("abc") == bytes([0, 1, 2])
    assert W.render_word(bytes([0, 1, 2])) == "abc"
    assert W.parse_word("") == b""
    assert W.render_word(b"") == ""
    for word in all_words(4):
        assert W.parse_word(W.render_word(word)) == word


def test_parse_rejects_bad_symbols():
    with pytest.raises(ValueError):
        W.parse_word("abd")


@pytest.mark.parametrize("text,expect", [
    ("abab", True),
    ("aba", False),
    ("abcabc", True),
    ("", False),
    ("a", False),
])
def test_is_square(text, expect):
    assert W.is_square(w(text)) == expect


@pytest.mark.parametrize("text,half,expect", [
    ("aa", 1, True),
    ("abcabc", 2, False),
    ("abcabcab", 3, True),
])
def test_has_square_with_half_at_most(text, half, expect):
    assert W.has_square_with_half_at_most(w(text), half) == expect


@pytest.mark.parametrize("text,expect", [
    ("", True),
    ("abcacb", True),
    ("abcabc", False),
])
def test_is_square_free(text, expect):
    assert W.is_square_free(w(text)) == expect


@pytest.mark.parametrize("text,expect", [
    ("abaaba", False),
    ("abcabc", True),
    ("aa", True),
])
def test_is_minimal_square(text, expect):
    assert W.is_minimal_square(w(text)) == expect
    assert W.is_minimal_square_by_scan(w(text)) == expect


@pytest.mark.parametrize("text,expect", [
    ("abc", "cba"),
    ("", ""),
    ("abab", "baba"),
])
def test_reverse(text, expect):
    assert W.render_word(W.reverse(w(text))) == expect


def test_reverse_involution():
    for word in all_words(6):
        assert W.reverse(W.reverse(word)) == word


def test_enumerate_small_lengths():
    seen = []
    assert W.enumerate_square_free(1, seen.append) == 3
    assert seen == [b"\x00", b"\x01", b"\x02"]
    assert W.enumerate_square_free(2) == 6
    assert W.enumerate_square_free(4) == 18
    assert W.enumerate_square_free(0) == 1


def test_enumerate_lexicographic_order():
    seen = []
    W.enumerate_square_free(5, seen.append)
    assert seen == sorted(seen)
    assert len(seen) == len(set(seen))


def test_square_free_predicates_consistent_exhaustively():
    # For every word up to length 12: the public predicate, the direct
    # window scan, the bounded-half scan, and reversal all agree, and
    # the streaming enumeration visits exactly the square-free words.
    for length in range(13):
        enumerated = W.enumerate_square_free(length)
        brute = 0
        deep_checks = length <= 10
        for word in all_words(length):
            free = W.is_square_free(word)
            if free:
                brute += 1
            if deep_checks:
                assert free == (not scan_for_square(word))
                if length >= 2:
                    assert free == (
                        not W.has_square_with_half_at_most(word, length // 2))
                assert free == W.is_square_free(W.reverse(word))
        assert enumerated == brute == SQUARE_FREE_COUNTS[length]


def test_reversal_preserves_square_freeness_longer():
    for length in (11, 12):
        for word in W.iter_square_free(length):
            assert W.is_square_free(W.reverse(word))


def test_minimal_square_fast_path_matches_scan():
    for length in range(1, 11):
        for half in W.iter_square_free(length):
            doubled = half + half
            assert (W.is_minimal_square(doubled)
                    == W.is_minimal_square_by_scan(doubled))


def test_prefixes_of_square_free_words_are_square_free():
    for word in W.iter_square_free(12):
        for k in range(len(word)):
            assert W.is_square_free(word[:k])


def test_square_half_ending_at():
    word = w("abcabc")
    assert W.square_half_ending_at(word, 6, 3) == 3
    assert W.square_half_ending_at(word, 6, 2) is None
    assert W.square_half_ending_at(w("aa"), 2, 1) == 1
    assert W.square_half_ending_at(w("ab"), 2, 1) is None


def test_count_square_free_naive_anchors():
    assert W.count_square_free_naive(0) == 1
    assert W.count_square_free_naive(3) == 12
    assert W.count_square_free_naive(9) == 108
    for n, expect in enumerate(SQUARE_FREE_COUNTS[:16]):
        assert W.count_square_free_naive(n) == expect
