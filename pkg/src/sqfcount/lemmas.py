"""Machine verification of the structural facts the reduced-memory
counter rests on.

Two facts are checked mechanically:

* Overlap exclusion: if a string has a minimal square uu as a proper
  prefix and a minimal square vv as a proper suffix, then either the
  string is long (at least 3*min(|u|,|v|) + 1), or |u| = |v| and the
  string is uu followed by a non-empty prefix of u.  The check builds
  the forced-equality graph of each (length, |u|, |v|) case and either
  finds a forced smaller square inside one of the assumed occurrences
  (contradicting its minimality) or confirms the periodic exceptional
  form.

* Run structure: a word whose squares all have half-length at least a
  third of the word contains its minimal squares as one run of
  consecutive equal-length shifts ww, ww shifted by one, ..., whose
  union is ww followed by a prefix p of w, with exactly |p|+1 minimal
  squares.  The check enumerates every such word up to a length bound
  and verifies the run shape directly.

Both checks are exhaustive for the sizes they are invoked at, so a clean
pass is a proof for those sizes.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from ._backend import kernels
from .forced import (  # re-exported: part of this module's surface
    ForcedEqualityGraph,
    build_forced_components,
    find_forced_square,
)

EXCLUDED_BY_FORCED_SQUARE = "EXCLUDED_BY_FORCED_SQUARE"
EXCEPTIONAL_FORM_CONFIRMED = "EXCEPTIONAL_FORM_CONFIRMED"
LEMMA_SATISFIED_VACUOUSLY = "LEMMA_SATISFIED_VACUOUSLY"
VIOLATION = "VIOLATION"

_CODE_TO_STATUS = {
    0: EXCLUDED_BY_FORCED_SQUARE,
    1: EXCEPTIONAL_FORM_CONFIRMED,
    2: LEMMA_SATISFIED_VACUOUSLY,
    3: VIOLATION,
}


@dataclass(frozen=True)
class OverlapVerdict:
    s_length: int
    prefix_half: int
    suffix_half: int
    status: str
    witness: Optional[tuple]  # (position, half_length) of the forced square

    def record_line(self):
        wit = "-" if self.witness is None else f"{self.witness[0]},{self.witness[1]}"
        return (f"s={self.s_length} hu={self.prefix_half} hv={self.suffix_half} "
                f"status={self.status} witness={wit}")


def _overlap_chunk(args):
    lo, hi, exhaustive = args
    return kernels.overlap_scan(lo, hi, exhaustive)


def verify_overlap_lemma(max_s_len, exhaustive=False, workers=1):
    """Overlap verdicts for every case with 3 <= |s| <= max_s_len.

    By default only cases inside the violating window
    |s| <= 3*min(hu, hv) are reported (the others satisfy the statement
    outright); ``exhaustive`` adds those as vacuous verdicts.  Lengths
    may be scanned by several worker processes; verdict order is
    independent of the worker count.
    """
    if max_s_len < 3:
        raise ValueError("max_s_len must be >= 3")
    if workers > 1 and max_s_len > 20:
        chunks = [(s, s, exhaustive) for s in range(3, max_s_len + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_overlap_chunk, chunks))
        raw = [case for part in parts for case in part]
    else:
        raw = kernels.overlap_scan(3, max_s_len, exhaustive)
    return [
        OverlapVerdict(s, hu, hv, _CODE_TO_STATUS[code],
                       None if wit_pos < 0 else (wit_pos, wit_half))
        for (s, hu, hv, code, wit_pos, wit_half) in raw
    ]


@dataclass
class KeyLemmaReport:
    """Run analysis of one word: its minimal squares and their shape."""

    word: bytes
    squares: list                 # (start, half) of minimal-square occurrences
    run_start: Optional[int]
    run_word: Optional[bytes]     # w of the run ww + p
    run_prefix: Optional[bytes]   # p
    expected_count: Optional[int]  # |p| + 1
    observed_count: int
    ok: bool


@dataclass
class KeyLemmaSummary:
    max_len: int
    words_checked: int
    runs_checked: int
    violations: int


def analyze_word_run(word, short_bound=None):
    """Locate all minimal squares of half-length > short_bound in ``word``
    and check they form a single run ww + (prefix of w).

    short_bound defaults to the largest half-length below |word|/3,
    matching the hypothesis under which the run structure is asserted.
    Words without such squares report vacuously ok.
    """
    n = len(word)
    if short_bound is None:
        short_bound = (n - 1) // 3
    occs = []
    for h in range(short_bound + 1, n // 2 + 1):
        for a in range(n - 2 * h + 1):
            if word[a:a + h] == word[a + h:a + 2 * h]:
                occs.append((a, h))
    minimal = [
        (a, h)
        for (a, h) in occs
        if not any(h2 < h and a <= a2 and a2 + 2 * h2 <= a + 2 * h
                   for (a2, h2) in occs)
    ]
    if not minimal:
        return KeyLemmaReport(word, [], None, None, None, None, 0, True)
    halves = {h for _, h in minimal}
    starts = sorted(a for a, _ in minimal)
    first, last = starts[0], starts[-1]
    p_len = last - first
    ok = (
        len(halves) == 1
        and starts == list(range(first, last + 1))
        and len(minimal) == p_len + 1
    )
    if ok:
        h = minimal[0][1]
        ok = (p_len <= h
              and word[first + 2 * h:first + 2 * h + p_len]
              == word[first:first + p_len])
    if not ok:
        return KeyLemmaReport(word, sorted(minimal), None, None, None, None,
                              len(minimal), False)
    h = minimal[0][1]
    run_word = word[first:first + h]
    run_prefix = run_word[:p_len]
    return KeyLemmaReport(word, sorted(minimal), first, run_word, run_prefix,
                          p_len + 1, len(minimal), True)


def verify_key_lemma(max_len):
    """Exhaustively check the run structure for every word of length up
    to max_len whose squares all have half-length >= length/3.

    Returns (violations, summary): violations as full reports (expected
    empty), summary with enumeration counts.
    """
    if max_len < 3:
        raise ValueError("max_len must be >= 3")
    violations = []
    words_checked = 0
    runs_checked = 0
    for length in range(1, max_len + 1):
        wc, rc, bad = kernels.key_lemma_scan(length)
        words_checked += wc
        runs_checked += rc
        violations.extend(analyze_word_run(w) for w in bad)
    summary = KeyLemmaSummary(max_len, words_checked, runs_checked,
                              len(violations))
    return violations, summary
