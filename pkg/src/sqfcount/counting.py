"""Exact counting of square-free words by dynamic programming over the
pattern automaton.

Two algorithms produce |L_n|, the number of ternary square-free words of
length n:

* count_simple: build the automaton for all minimal squares with
  half-length up to n//2 and run a forward DP; the rejected mass of the
  final row is the answer.  Memory is dominated by that automaton.

* count_improved: build the much smaller automaton for half-lengths up
  to n//3 only.  Its rejection table counts "promising" words (words
  with no short square); every promising word that is not square-free
  contains minimal squares of half-length above n//3 arranged in a
  single run ww extended by a prefix p of w, with exactly |p|+1 minimal
  squares.  Enumerating those long minimal squares and subtracting each
  placement, then adding back placements of ww followed by w's first
  symbol (there are exactly |p| of those per word), cancels the
  overcount to exactly one subtraction per non-square-free word:

      |L_n| = f(n, q0) - (sum g(i, ww) - sum g(i, w w w0))

  where g splits over the table by running the automaton over the fixed
  substring and its reversal.  The long squares are streamed, never
  stored, so memory stays proportional to the small automaton.

All values are exact Python integers.
"""

import sys
import time
from dataclasses import dataclass

from ._backend import kernels
from .antidict import iter_minimal_halves
from .automaton import build_pattern_automaton
from .words import count_square_free_naive, reverse

FORWARD = "forward"
REJECTED = "rejected"
METHODS = ("naive", "simple", "improved")

HEARTBEAT_EVERY = 10 ** 6


@dataclass
class CountStats:
    automaton_states: int = 0
    antidictionary_size: int = 0
    squares_iterated: int = 0
    elapsed_s: float = 0.0


@dataclass
class CountResult:
    n: int
    method: str
    value: int
    stats: CountStats


class CountTable:
    """DP rows indexed by word length, over automaton state ids.

    semantics is FORWARD (row[l][q] = words of length l reaching q from
    the start) or REJECTED (row[l][q] = words of length l rejected when
    started at q).  A table may retain only its final row; asking for a
    dropped row raises.
    """

    def __init__(self, semantics, max_len, rows, first_kept=0):
        if len(rows) != max_len - first_kept + 1:
            raise ValueError("row count does not match the kept range")
        self.semantics = semantics
        self.max_len = max_len
        self._rows = rows
        self._first_kept = first_kept

    def kept_lengths(self):
        return range(self._first_kept, self.max_len + 1)

    def row(self, length):
        if not self._first_kept <= length <= self.max_len:
            raise KeyError(f"row {length} not retained "
                           f"(kept {self._first_kept}..{self.max_len})")
        return self._rows[length - self._first_kept]


def _sink_id(automaton):
    return automaton.accept_sink if automaton.accept_sink is not None else -1


def forward_table(automaton, max_len, final_row_only=False):
    """FORWARD CountTable to row max_len; with final_row_only, only the
    last row is retained and only two rows are ever in memory.
    """
    rows = kernels.forward_rows(
        automaton.transitions, automaton.state_count, max_len,
        not final_row_only,
    )
    first = max_len if final_row_only else 0
    return CountTable(FORWARD, max_len, rows, first)


def rejected_table(automaton, max_len):
    """REJECTED CountTable with every row 0..max_len retained."""
    sink = automaton.accept_sink
    if sink is not None:
        if any(automaton.step(sink, d) != sink for d in range(3)):
            raise ValueError("accepting state is not absorbing")
    rows = kernels.rejected_rows(
        automaton.transitions, automaton.state_count, _sink_id(automaton),
        max_len,
    )
    return CountTable(REJECTED, max_len, rows, 0)


def g_count(table, automaton, n, t, ell):
    """Number of rejected length-n words containing t at position ell.

    Valid for t spanning more than two thirds of the word
    (|t| >= 2*(n//3) + 1), so that any short square lies entirely left
    or entirely right of t's interior; the two sides then count
    independently via the rejection table, with the left side counted
    on the reversed word.
    """
    if table.semantics != REJECTED:
        raise ValueError("g_count needs a rejection table")
    if len(t) < 2 * (n // 3) + 1:
        raise ValueError(f"substring too short: |t|={len(t)} < {2 * (n // 3) + 1}")
    if not 0 <= ell <= n - len(t):
        raise ValueError(f"position {ell} out of range 0..{n - len(t)}")
    left = table.row(ell)[automaton.run(0, reverse(t))]
    right = table.row(n - len(t) - ell)[automaton.run(0, t)]
    return left * right


def _build_automaton_for(max_half):
    """Pattern automaton for all minimal squares with half <= max_half,
    plus the number of patterns fed into it.
    """
    pattern_count = 0

    def doubled():
        nonlocal pattern_count
        for half in iter_minimal_halves(1, max_half):
            pattern_count += 1
            yield half + half

    automaton = build_pattern_automaton(doubled())
    return automaton, pattern_count


def count_simple(n):
    """|L_n| via the forward DP over the automaton for half-lengths <= n//2."""
    t0 = time.perf_counter()
    if n < 0:
        raise ValueError("n must be >= 0")
    if n <= 1:
        value = 1 if n == 0 else 3
        return CountResult(n, "simple", value,
                           CountStats(elapsed_s=time.perf_counter() - t0))
    automaton, n_patterns = _build_automaton_for(n // 2)
    masses = kernels.forward_masses(
        automaton.transitions, automaton.state_count, _sink_id(automaton), n,
    )
    stats = CountStats(automaton.state_count, n_patterns, 0,
                       time.perf_counter() - t0)
    return CountResult(n, "simple", masses[n], stats)


def _heartbeat(n):
    def emit(squares, g_square, g_extended):
        print(f"count_improved n={n}: {squares} minimal squares enumerated, "
              f"partial sums {g_square} / {g_extended}",
              file=sys.stderr, flush=True)
    return emit


@dataclass
class ImprovedParts:
    """Breakdown of the reduced-memory count, for diagnostics and tests."""

    n: int
    promising_total: int   # f(n, q0): no square of half <= n//3
    g_square_sum: int      # placements of long minimal squares ww
    g_extended_sum: int    # placements of w w w0 (the overcount refund)
    value: int
    stats: CountStats


def improved_parts(n):
    """Run the reduced-memory algorithm for n >= 6 and return all terms."""
    if n < 6:
        raise ValueError("breakdown defined for n >= 6")
    t0 = time.perf_counter()
    short_bound = n // 3
    automaton, n_patterns = _build_automaton_for(short_bound)
    trans = automaton.transitions
    sink = _sink_id(automaton)
    rows = kernels.rejected_rows(trans, automaton.state_count, sink, n)
    g_square, g_extended, squares = kernels.correction_sums(
        trans, automaton.state_count, sink, n,
        short_bound + 1, n // 2, rows,
        _heartbeat(n), HEARTBEAT_EVERY,
    )
    promising = rows[n][0]
    value = promising - (g_square - g_extended)
    stats = CountStats(automaton.state_count, n_patterns, squares,
                       time.perf_counter() - t0)
    return ImprovedParts(n, promising, g_square, g_extended, value, stats)


def count_improved(n):
    """|L_n| with memory bounded by the half-length <= n//3 automaton.

    Lengths below 6 fall back to count_simple: there the short/long
    split degenerates (no long half-lengths remain to enumerate).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n < 6:
        base = count_simple(n)
        return CountResult(n, "improved", base.value, base.stats)
    parts = improved_parts(n)
    return CountResult(n, "improved", parts.value, parts.stats)


def count_range(n_lo, n_hi, method):
    """CountResults for every n in [n_lo, n_hi].

    method "simple" builds one automaton for half-lengths <= n_hi//2 and
    reads every answer off a single forward DP (patterns longer than a
    given n are never matched by words of that length, so small-n rows
    are unaffected).  "improved" and "naive" run per n.
    """
    if not 0 <= n_lo <= n_hi:
        raise ValueError(f"need 0 <= n_lo <= n_hi, got [{n_lo}, {n_hi}]")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == "naive":
        out = []
        for n in range(n_lo, n_hi + 1):
            t0 = time.perf_counter()
            value = count_square_free_naive(n)
            out.append(CountResult(n, "naive", value,
                                   CountStats(elapsed_s=time.perf_counter() - t0)))
        return out
    if method == "improved":
        return [count_improved(n) for n in range(n_lo, n_hi + 1)]
    t0 = time.perf_counter()
    automaton, n_patterns = _build_automaton_for(max(1, n_hi // 2))
    masses = kernels.forward_masses(
        automaton.transitions, automaton.state_count, _sink_id(automaton), n_hi,
    )
    elapsed = time.perf_counter() - t0
    return [
        CountResult(n, "simple", masses[n],
                    CountStats(automaton.state_count, n_patterns, 0, elapsed))
        for n in range(n_lo, n_hi + 1)
    ]
