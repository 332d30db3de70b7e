"""Streaming generation of the antidictionary: minimal squares by half-length.

The antidictionary for a half-length bound L is the set of all minimal
squares ww with |w| <= L.  A word is square-free exactly when it avoids
every entry, which is what makes these sets the pattern input for the
automaton.  Entries are streamed, never stored: generation is a
backtracking walk over square-free halves with a cyclic square-freeness
filter, so memory stays polynomial in the half-length bound.
"""

from dataclasses import dataclass

from .words import is_cyclically_square_free, iter_square_free


@dataclass(frozen=True)
class MinimalSquare:
    """A minimal square ww, kept together with its half w."""

    half: bytes
    doubled: bytes
    half_length: int

    @classmethod
    def from_half(cls, half):
        if not half:
            raise ValueError("minimal squares have non-empty halves")
        return cls(half=half, doubled=half + half, half_length=len(half))


def iter_minimal_halves(lo, hi):
    """Yield halves of minimal squares with half-length in [lo, hi].

    Ordered by half-length, then lexicographically.  A square-free w
    doubles to a minimal square exactly when w is square-free as a
    cyclic string, so the square-free enumeration only needs the cyclic
    filter on top.
    """
    if lo < 1 or lo > hi:
        raise ValueError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    for k in range(lo, hi + 1):
        for w in iter_square_free(k):
            if is_cyclically_square_free(w):
                yield w


def minimal_squares_in_range(lo, hi, visit=None):
    """Stream minimal squares with half-length in [lo, hi]; return the count."""
    count = 0
    for half in iter_minimal_halves(lo, hi):
        count += 1
        if visit is not None:
            visit(MinimalSquare.from_half(half))
    return count


def minimal_squares_up_to(max_half, visit=None):
    """Stream minimal squares with half-length in [1, max_half]; return |M|."""
    return minimal_squares_in_range(1, max_half, visit)


def antidictionary_total_length(max_half):
    """Sum of |ww| over all minimal squares with half-length <= max_half.

    This is the quantity bounding the pattern automaton's state count.
    """
    total = 0
    for half in iter_minimal_halves(1, max_half):
        total += 2 * len(half)
    return total
