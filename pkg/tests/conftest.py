import itertools

from sqfcount.antidict import minimal_squares_up_to
from sqfcount.automaton import build_pattern_automaton


def all_words(length):
    """Every ternary word of the given length, lexicographically."""
    for tup in itertools.product(range(3), repeat=length):
        yield bytes(tup)


def words_up_to(max_length):
    for k in range(max_length + 1):
        yield from all_words(k)


def automaton_for_bound(bound):
    """Pattern automaton for all minimal squares of half-length <= bound."""
    patterns = []
    minimal_squares_up_to(bound, lambda sq: patterns.append(sq.doubled))
    return build_pattern_automaton(patterns)


def scan_for_square(word):
    """Reference square detector: check every (start, half) window."""
    n = len(word)
    for a in range(n):
        for h in range(1, (n - a) // 2 + 1):
            if word[a:a + h] == word[a + h:a + 2 * h]:
                return True
    return False


def count_avoiding_short_squares(length, max_half):
    """Words of the given length with no square of half <= max_half, by
    pruned backtracking (independent of the automaton machinery).
    """
    if length == 0:
        return 1
    count = 0
    buf = bytearray(length)

    def step(depth):
        nonlocal count
        for d in range(3):
            buf[depth] = d
            m = depth + 1
            bad = any(
                buf[m - 2 * h:m - h] == buf[m - h:m]
                for h in range(1, min(max_half, m // 2) + 1)
            )
            if bad:
                continue
            if m == length:
                count += 1
            else:
                step(m)

    step(0)
    return count
