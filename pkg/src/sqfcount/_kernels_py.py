"""Pure-Python kernels: the fallback twin of the compiled extension.

Every function here has an identical signature and identical output in
sqfcount._kernels (the Cython build).  Which one the package uses is
decided once at import time in sqfcount._backend; the test suite runs
both against each other.

Transition tables arrive as flat buffers with three entries per state
(an array('i')); counts are plain Python integers throughout, so results
are exact at any size.
"""

from .forced import build_forced_components, find_forced_square
from .words import is_cyclically_square_free

BACKEND_NAME = "pure-python"

# Overlap verdict codes shared with the compiled kernels:
# 0 excluded by forced square, 1 exceptional form confirmed,
# 2 satisfied vacuously, 3 violation.
OVERLAP_EXCLUDED = 0
OVERLAP_EXCEPTIONAL = 1
OVERLAP_VACUOUS = 2
OVERLAP_VIOLATION = 3


def forward_rows(trans, state_count, max_len, keep_all):
    """Forward DP rows: row[l][q] = number of length-l words driving the
    automaton from the start state to q.

    Returns all rows 0..max_len when keep_all, else just [row max_len]
    (only two rows are ever resident in that mode).
    """
    trans = list(trans)
    cur = [0] * state_count
    cur[0] = 1
    rows = [list(cur)] if keep_all else None
    for _ in range(max_len):
        new = [0] * state_count
        for p in range(state_count):
            v = cur[p]
            if v:
                base = 3 * p
                new[trans[base]] += v
                new[trans[base + 1]] += v
                new[trans[base + 2]] += v
        cur = new
        if keep_all:
            rows.append(list(cur))
    return rows if keep_all else [cur]


def forward_masses(trans, state_count, sink, max_len):
    """Non-accepting mass of each forward row: masses[l] is the number of
    length-l words the automaton rejects.  Keeps two rows resident.
    """
    trans = list(trans)
    cur = [0] * state_count
    cur[0] = 1
    masses = [1]
    for _ in range(max_len):
        new = [0] * state_count
        for p in range(state_count):
            v = cur[p]
            if v:
                base = 3 * p
                new[trans[base]] += v
                new[trans[base + 1]] += v
                new[trans[base + 2]] += v
        cur = new
        total = sum(cur)
        if sink >= 0:
            total -= cur[sink]
        masses.append(total)
    return masses


def rejected_rows(trans, state_count, sink, max_len):
    """Rejection DP: row[l][q] = number of length-l words s for which the
    automaton, started at q, never reaches the accept sink.

    All rows 0..max_len are retained; the sink column is identically 0.
    """
    trans = list(trans)
    row = [1] * state_count
    if sink >= 0:
        row[sink] = 0
    rows = [row]
    for _ in range(max_len):
        prev = rows[-1]
        new = [0] * state_count
        for q in range(state_count):
            if q != sink:
                base = 3 * q
                new[q] = prev[trans[base]] + prev[trans[base + 1]] + prev[trans[base + 2]]
        rows.append(new)
    return rows


def correction_sums(trans, state_count, sink, n, half_lo, half_hi, rows,
                    progress=None, progress_every=1000000):
    """Overcount correction for the reduced-memory counter.

    Enumerates every minimal square ww with half-length in
    [half_lo, half_hi] by a single backtracking walk over square-free
    halves, and accumulates, over all placements i,

        g_square   += f(i, d(q0, (ww)^R))   * f(n - |ww| - i,   d(q0, ww))
        g_extended += f(i, d(q0, (www0)^R)) * f(n - |ww| - 1 - i, d(q0, www0))

    where f is the rejection table ``rows`` and w0 is the first symbol
    of w.  Returns (g_square, g_extended, squares_enumerated).
    """
    trans = list(trans)
    g_square = 0
    g_extended = 0
    squares = 0
    if half_lo > half_hi:
        return g_square, g_extended, squares

    buf = bytearray(half_hi)
    next_symbol = [0] * half_hi
    depth = 0
    while depth >= 0:
        d = next_symbol[depth]
        if d == 3:
            depth -= 1
            continue
        next_symbol[depth] = d + 1
        buf[depth] = d
        m = depth + 1
        completed_square = False
        for h in range(1, m // 2 + 1):
            if buf[m - 2 * h:m - h] == buf[m - h:m]:
                completed_square = True
                break
        if completed_square:
            continue
        if m >= half_lo:
            w = bytes(buf[:m])
            if is_cyclically_square_free(w):
                squares += 1
                # Automaton states after ww, www0 and their reversals.
                q = 0
                for d2 in w:
                    q = trans[3 * q + d2]
                for d2 in w:
                    q = trans[3 * q + d2]
                qf = q
                qf1 = trans[3 * qf + w[0]]
                rw = w[::-1]
                q = 0
                q2 = trans[w[0]]
                for d2 in rw:
                    q = trans[3 * q + d2]
                    q2 = trans[3 * q2 + d2]
                for d2 in rw:
                    q = trans[3 * q + d2]
                    q2 = trans[3 * q2 + d2]
                qr = q
                qr1 = q2
                rem = n - 2 * m
                for i in range(rem + 1):
                    a = rows[i][qr]
                    if a:
                        b = rows[rem - i][qf]
                        if b:
                            g_square += a * b
                for i in range(rem):
                    a = rows[i][qr1]
                    if a:
                        b = rows[rem - 1 - i][qf1]
                        if b:
                            g_extended += a * b
                if progress is not None and squares % progress_every == 0:
                    progress(squares, g_square, g_extended)
        if m < half_hi:
            depth += 1
            next_symbol[depth] = 0
    return g_square, g_extended, squares


def overlap_scan(s_lo, s_hi, exhaustive=False):
    """Overlap-lemma verdicts for all (|s|, hu, hv) cases with
    s_lo <= |s| <= s_hi, as tuples (s, hu, hv, code, wit_pos, wit_half).

    Cases outside the violating window |s| <= 3*min(hu, hv) are emitted
    (as vacuous) only when ``exhaustive``.  Witness fields are -1 when
    there is no witness.
    """
    out = []
    for s in range(s_lo, s_hi + 1):
        half_max = (s - 1) // 2
        for hu in range(1, half_max + 1):
            for hv in range(1, half_max + 1):
                if s > 3 * min(hu, hv):
                    if exhaustive:
                        out.append((s, hu, hv, OVERLAP_VACUOUS, -1, -1))
                    continue
                graph = build_forced_components(s, hu, hv)
                if hu == hv:
                    labels = graph.labels
                    periodic = all(labels[i] == labels[i + hu]
                                   for i in range(s - hu))
                    code = OVERLAP_EXCEPTIONAL if periodic else OVERLAP_VIOLATION
                    out.append((s, hu, hv, code, -1, -1))
                    continue
                wit = None
                if hu > 1:
                    wit = find_forced_square(graph, 0, 2 * hu, hu - 1)
                if wit is None and hv > 1:
                    wit = find_forced_square(graph, s - 2 * hv, s, hv - 1)
                if wit is None:
                    out.append((s, hu, hv, OVERLAP_VIOLATION, -1, -1))
                else:
                    out.append((s, hu, hv, OVERLAP_EXCLUDED, wit[0], wit[1]))
    return out


def key_lemma_scan(length):
    """Check the run structure of every length-``length`` word whose
    squares all have half-length >= length/3 (exact rational bound).

    Enumerates candidates by backtracking (pruning any prefix that
    completes a forbidden short square), finds all minimal-square
    occurrences of each candidate, and checks the single-run shape:
    equal half-lengths, consecutive starts, union ww + prefix-of-w.

    Returns (words_checked, runs_checked, violating_words).
    """
    short_bound = (length - 1) // 3  # forbidden: half h with 3h < length
    words_checked = 0
    runs_checked = 0
    violating = []

    buf = bytearray(length)
    next_symbol = [0] * length
    depth = 0
    while depth >= 0:
        d = next_symbol[depth]
        if d == 3:
            depth -= 1
            continue
        next_symbol[depth] = d + 1
        buf[depth] = d
        m = depth + 1
        pruned = False
        for h in range(1, min(short_bound, m // 2) + 1):
            if buf[m - 2 * h:m - h] == buf[m - h:m]:
                pruned = True
                break
        if pruned:
            continue
        if m < length:
            depth += 1
            next_symbol[depth] = 0
            continue

        words_checked += 1
        occs = []
        for h in range(short_bound + 1, length // 2 + 1):
            for a in range(length - 2 * h + 1):
                if buf[a:a + h] == buf[a + h:a + 2 * h]:
                    occs.append((a, h))
        if not occs:
            continue
        runs_checked += 1
        minimal = [
            (a, h)
            for (a, h) in occs
            if not any(h2 < h and a <= a2 and a2 + 2 * h2 <= a + 2 * h
                       for (a2, h2) in occs)
        ]
        ok = len({h for _, h in minimal}) == 1
        if ok:
            h = minimal[0][1]
            starts = sorted(a for a, _ in minimal)
            first, last = starts[0], starts[-1]
            p_len = last - first
            ok = (starts == list(range(first, last + 1))
                  and len(minimal) == p_len + 1
                  and p_len <= h
                  and buf[first + 2 * h:first + 2 * h + p_len]
                  == buf[first:first + p_len])
        if not ok:
            violating.append(bytes(buf))
    return words_checked, runs_checked, violating
