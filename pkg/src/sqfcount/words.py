"""Ternary alphabet primitives and square predicates.

Words are immutable ``bytes`` whose values are the symbols 0, 1, 2
(rendered as a, b, c only at I/O boundaries).  All counts returned by
this module are plain Python integers, so they never overflow.
"""

ALPHABET_SIZE = 3
SYMBOL_CHARS = "abc"

_CHAR_TO_SYMBOL = {c: i for i, c in enumerate(SYMBOL_CHARS)}


def parse_word(text):
    """Parse a lowercase string over {a,b,c} into a word (bytes of 0..2)."""
    try:
        return bytes(_CHAR_TO_SYMBOL[c] for c in text)
    except KeyError as exc:
        raise ValueError(f"invalid symbol {exc.args[0]!r}, expected one of 'abc'")


def render_word(word):
    """Render a word as a lowercase string; the empty word renders as ''."""
    return "".join(SYMBOL_CHARS[d] for d in word)


def is_square(word):
    """True iff the word is ww for some non-empty w."""
    n = len(word)
    if n < 2 or n % 2:
        return False
    h = n // 2
    return word[:h] == word[h:]


def has_square_with_half_at_most(word, max_half):
    """True iff some substring is a square of half-length <= max_half."""
    if max_half < 1:
        raise ValueError("max_half must be >= 1")
    n = len(word)
    for h in range(1, min(max_half, n // 2) + 1):
        for a in range(n - 2 * h + 1):
            if word[a:a + h] == word[a + h:a + 2 * h]:
                return True
    return False


def is_square_free(word):
    """True iff the word contains no square substring."""
    if len(word) < 2:
        return True
    return not has_square_with_half_at_most(word, len(word) // 2)


def square_half_ending_at(word, end, max_half):
    """Smallest half-length h <= max_half with a square ending at ``end``.

    Checks only squares whose last position is end-1; returns None when
    there is no such square.  This is the incremental check used by the
    enumeration: a word built symbol by symbol stays square-free exactly
    when no appended symbol completes a square.
    """
    top = min(max_half, end // 2)
    for h in range(1, top + 1):
        if word[end - 2 * h:end - h] == word[end - h:end]:
            return h
    return None


def is_cyclically_square_free(word):
    """True iff the word read as a cyclic string has no square substring.

    Cyclic substrings of length <= |word| are exactly the substrings of
    word + word[:-1], so it suffices to scan that string for squares of
    half-length <= |word| // 2.
    """
    n = len(word)
    if n < 2:
        return True
    doubled = word + word[:-1]
    m = len(doubled)
    for h in range(1, n // 2 + 1):
        for a in range(m - 2 * h + 1):
            if doubled[a:a + h] == doubled[a + h:a + 2 * h]:
                return False
    return True


def is_minimal_square(word):
    """True iff word is a square containing no smaller square.

    Fast path: a square ww is minimal exactly when its half w is
    square-free as a cyclic string.  Must agree with
    is_minimal_square_by_scan everywhere (tested exhaustively at small
    lengths).
    """
    if not is_square(word):
        return False
    return is_cyclically_square_free(word[:len(word) // 2])


def is_minimal_square_by_scan(word):
    """Reference implementation of minimality: direct substring scan."""
    if not is_square(word):
        return False
    h = len(word) // 2
    if h == 1:
        return True
    return not has_square_with_half_at_most(word, h - 1)


def reverse(word):
    """The word with its symbols in reverse order."""
    return word[::-1]


def iter_square_free(length):
    """Yield every square-free word of the given length in lexicographic
    order (a < b < c).

    Depth-first backtracking over prefixes; a prefix is abandoned as soon
    as the appended symbol completes a square, which is the only way a
    square-free prefix can stop being square-free.  Memory stays linear
    in ``length``.
    """
    if length < 0:
        raise ValueError("length must be >= 0")
    if length == 0:
        yield b""
        return
    buf = bytearray(length)
    next_symbol = [0] * length
    depth = 0
    while depth >= 0:
        d = next_symbol[depth]
        if d == ALPHABET_SIZE:
            depth -= 1
            continue
        next_symbol[depth] = d + 1
        buf[depth] = d
        if square_half_ending_at(buf, depth + 1, (depth + 1) // 2) is not None:
            continue
        if depth + 1 == length:
            yield bytes(buf)
        else:
            depth += 1
            next_symbol[depth] = 0


def enumerate_square_free(length, visit=None):
    """Visit every square-free word of the given length in lexicographic
    order and return how many there are.
    """
    count = 0
    for w in iter_square_free(length):
        count += 1
        if visit is not None:
            visit(w)
    return count


def count_square_free_naive(n):
    """Number of square-free ternary words of length n, by enumeration.

    This is the brute-force oracle every counting algorithm is checked
    against.
    """
    return enumerate_square_free(n)
