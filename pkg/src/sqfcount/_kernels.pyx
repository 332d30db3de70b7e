# cython: language_level=3
"""Compiled kernels: C inner loops behind the counting and verification
hot paths.

Function-for-function twin of sqfcount._kernels_py; signatures and
outputs are identical, only the control flow runs at C speed.  Counts
stay Python integers (they outgrow machine words), so the DP arithmetic
itself is object arithmetic; the wins come from enumeration, automaton
walks, and label scanning.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.string cimport memcmp, memcpy

BACKEND_NAME = "cython"

OVERLAP_EXCLUDED = 0
OVERLAP_EXCEPTIONAL = 1
OVERLAP_VACUOUS = 2
OVERLAP_VIOLATION = 3

DEF MAX_HALF = 255        # longest enumerated half (word length 2*MAX_HALF)
DEF MAX_WORD = 511
DEF MAX_KEY_WORD = 127    # longest word in the run-structure scan
DEF MAX_KEY_OCC = 2048    # > (MAX_KEY_WORD/3 + 2) * (MAX_KEY_WORD/6 + 1)


def forward_rows(trans, Py_ssize_t state_count, Py_ssize_t max_len, bint keep_all):
    """Forward DP rows; all rows when keep_all, else just the final row."""
    cdef const int[::1] tv = trans
    cdef Py_ssize_t p, base, step
    cur = [0] * state_count
    cur[0] = 1
    rows = [list(cur)] if keep_all else None
    cdef list cur_l = cur
    cdef list new_l
    for step in range(max_len):
        new_l = [0] * state_count
        for p in range(state_count):
            v = cur_l[p]
            if v:
                base = 3 * p
                new_l[tv[base]] += v
                new_l[tv[base + 1]] += v
                new_l[tv[base + 2]] += v
        cur_l = new_l
        if keep_all:
            rows.append(list(cur_l))
    return rows if keep_all else [cur_l]


def forward_masses(trans, Py_ssize_t state_count, Py_ssize_t sink, Py_ssize_t max_len):
    """Non-accepting mass of each forward row, rows 0..max_len."""
    cdef const int[::1] tv = trans
    cdef Py_ssize_t p, base, step
    cdef list cur_l = [0] * state_count
    cdef list new_l
    cur_l[0] = 1
    masses = [1]
    for step in range(max_len):
        new_l = [0] * state_count
        for p in range(state_count):
            v = cur_l[p]
            if v:
                base = 3 * p
                new_l[tv[base]] += v
                new_l[tv[base + 1]] += v
                new_l[tv[base + 2]] += v
        cur_l = new_l
        total = sum(cur_l)
        if sink >= 0:
            total -= cur_l[sink]
        masses.append(total)
    return masses


def rejected_rows(trans, Py_ssize_t state_count, Py_ssize_t sink, Py_ssize_t max_len):
    """Rejection DP rows 0..max_len; the sink column is identically 0."""
    cdef const int[::1] tv = trans
    cdef Py_ssize_t q, base, step
    cdef list row = [1] * state_count
    cdef list prev
    if sink >= 0:
        row[sink] = 0
    rows = [row]
    for step in range(max_len):
        prev = rows[len(rows) - 1]
        row = [0] * state_count
        for q in range(state_count):
            if q != sink:
                base = 3 * q
                row[q] = prev[tv[base]] + prev[tv[base + 1]] + prev[tv[base + 2]]
        rows.append(row)
    return rows


cdef inline bint _has_square_suffix(const unsigned char *buf, Py_ssize_t m,
                                    Py_ssize_t max_half) noexcept:
    # Square of half-length <= max_half ending at position m-1?
    cdef Py_ssize_t h, top
    top = m // 2
    if max_half < top:
        top = max_half
    for h in range(1, top + 1):
        if memcmp(buf + m - 2 * h, buf + m - h, h) == 0:
            return True
    return False


cdef inline bint _is_cyclically_square_free(const unsigned char *w, Py_ssize_t m) noexcept:
    # Squares among cyclic substrings = squares in w + w[:-1].
    cdef unsigned char dd[MAX_WORD]
    cdef Py_ssize_t h, a, dlen
    if m < 2:
        return True
    memcpy(dd, w, m)
    memcpy(dd + m, w, m - 1)
    dlen = 2 * m - 1
    for h in range(1, m // 2 + 1):
        for a in range(dlen - 2 * h + 1):
            if memcmp(dd + a, dd + a + h, h) == 0:
                return False
    return True


def correction_sums(trans, Py_ssize_t state_count, Py_ssize_t sink, Py_ssize_t n,
                    Py_ssize_t half_lo, Py_ssize_t half_hi, list rows,
                    progress=None, Py_ssize_t progress_every=1000000):
    """Overcount correction sums over streamed long minimal squares.

    See the pure twin for the exact contract.
    """
    cdef const int[::1] tv = trans
    cdef unsigned char buf[MAX_HALF]
    cdef int next_symbol[MAX_HALF]
    cdef Py_ssize_t depth, m, i, rem, d, d2
    cdef Py_ssize_t q, q2, qf, qf1, qr, qr1
    cdef unsigned long long squares = 0
    cdef list row_a, row_b

    if half_hi > MAX_HALF:
        raise ValueError(f"half-length bound {half_hi} exceeds kernel limit {MAX_HALF}")
    g_square = 0
    g_extended = 0
    if half_lo > half_hi:
        return g_square, g_extended, 0

    depth = 0
    next_symbol[0] = 0
    while depth >= 0:
        d = next_symbol[depth]
        if d == 3:
            depth -= 1
            continue
        next_symbol[depth] = d + 1
        buf[depth] = <unsigned char> d
        m = depth + 1
        if _has_square_suffix(buf, m, m // 2):
            continue
        if m >= half_lo and _is_cyclically_square_free(buf, m):
            squares += 1
            # Automaton states after ww, www0 and their reversals.
            q = 0
            for d2 in range(m):
                q = tv[3 * q + buf[d2]]
            for d2 in range(m):
                q = tv[3 * q + buf[d2]]
            qf = q
            qf1 = tv[3 * qf + buf[0]]
            q = 0
            q2 = tv[buf[0]]
            for d2 in range(m - 1, -1, -1):
                q = tv[3 * q + buf[d2]]
                q2 = tv[3 * q2 + buf[d2]]
            for d2 in range(m - 1, -1, -1):
                q = tv[3 * q + buf[d2]]
                q2 = tv[3 * q2 + buf[d2]]
            qr = q
            qr1 = q2
            rem = n - 2 * m
            for i in range(rem + 1):
                row_a = rows[i]
                a = row_a[qr]
                if a:
                    row_b = rows[rem - i]
                    b = row_b[qf]
                    if b:
                        g_square += a * b
            for i in range(rem):
                row_a = rows[i]
                a = row_a[qr1]
                if a:
                    row_b = rows[rem - 1 - i]
                    b = row_b[qf1]
                    if b:
                        g_extended += a * b
            if progress is not None and squares % <unsigned long long> progress_every == 0:
                progress(squares, g_square, g_extended)
        if m < half_hi:
            depth += 1
            next_symbol[depth] = 0
    return g_square, g_extended, squares


cdef Py_ssize_t _uf_find(int *parent, Py_ssize_t x) noexcept:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef void _uf_union(int *parent, int *size, Py_ssize_t a, Py_ssize_t b) noexcept:
    cdef Py_ssize_t ra = _uf_find(parent, a)
    cdef Py_ssize_t rb = _uf_find(parent, b)
    if ra == rb:
        return
    if size[ra] < size[rb]:
        ra, rb = rb, ra
    parent[rb] = <int> ra
    size[ra] += size[rb]


DEF MAX_OVERLAP = 2047


cdef void _forced_labels(Py_ssize_t s, Py_ssize_t hu, Py_ssize_t hv,
                         int *labels) noexcept:
    # Canonical first-occurrence labels of the forced-equality components.
    cdef int parent[MAX_OVERLAP]
    cdef int size[MAX_OVERLAP]
    cdef Py_ssize_t i, root
    cdef int next_label = 1
    for i in range(s):
        parent[i] = <int> i
        size[i] = 1
    for i in range(hu):
        _uf_union(parent, size, i, i + hu)
    for i in range(s - 2 * hv, s - hv):
        _uf_union(parent, size, i, i + hv)
    for i in range(s):
        labels[i] = 0
    for i in range(s):
        root = _uf_find(parent, i)
        if labels[root] == 0:
            labels[root] = next_label
            next_label += 1
        labels[i] = labels[root]


cdef bint _labels_square(const int *labels, Py_ssize_t a, Py_ssize_t h) noexcept:
    cdef Py_ssize_t i
    for i in range(h):
        if labels[a + i] != labels[a + i + h]:
            return False
    return True


def overlap_scan(Py_ssize_t s_lo, Py_ssize_t s_hi, bint exhaustive=False):
    """Overlap verdict tuples (s, hu, hv, code, wit_pos, wit_half)."""
    cdef int labels[MAX_OVERLAP]
    cdef Py_ssize_t s, hu, hv, half_max, h, a, i, lim
    cdef Py_ssize_t wit_a, wit_h
    cdef bint periodic
    if s_hi > MAX_OVERLAP:
        raise ValueError(f"length bound {s_hi} exceeds kernel limit {MAX_OVERLAP}")
    out = []
    for s in range(s_lo, s_hi + 1):
        half_max = (s - 1) // 2
        for hu in range(1, half_max + 1):
            for hv in range(1, half_max + 1):
                lim = hu if hu < hv else hv
                if s > 3 * lim:
                    if exhaustive:
                        out.append((s, hu, hv, OVERLAP_VACUOUS, -1, -1))
                    continue
                _forced_labels(s, hu, hv, labels)
                if hu == hv:
                    periodic = True
                    for i in range(s - hu):
                        if labels[i] != labels[i + hu]:
                            periodic = False
                            break
                    out.append((s, hu, hv,
                                OVERLAP_EXCEPTIONAL if periodic else OVERLAP_VIOLATION,
                                -1, -1))
                    continue
                # Forced square inside the prefix occurrence [0, 2*hu) ...
                wit_a = -1
                wit_h = -1
                for h in range(1, hu):
                    for a in range(2 * hu - 2 * h + 1):
                        if _labels_square(labels, a, h):
                            wit_a = a
                            wit_h = h
                            break
                    if wit_a >= 0:
                        break
                # ... or inside the suffix occurrence [s - 2*hv, s).
                if wit_a < 0:
                    for h in range(1, hv):
                        for a in range(s - 2 * hv, s - 2 * h + 1):
                            if _labels_square(labels, a, h):
                                wit_a = a
                                wit_h = h
                                break
                        if wit_a >= 0:
                            break
                if wit_a < 0:
                    out.append((s, hu, hv, OVERLAP_VIOLATION, -1, -1))
                else:
                    out.append((s, hu, hv, OVERLAP_EXCLUDED, wit_a, wit_h))
    return out


def key_lemma_scan(Py_ssize_t length):
    """Run-structure check of every hypothesis-satisfying word of one length.

    Returns (words_checked, runs_checked, violating_words); see the pure
    twin for the full contract.
    """
    cdef unsigned char buf[MAX_KEY_WORD]
    cdef int next_symbol[MAX_KEY_WORD]
    cdef Py_ssize_t occ_a[MAX_KEY_OCC]
    cdef Py_ssize_t occ_h[MAX_KEY_OCC]
    cdef Py_ssize_t min_a[MAX_KEY_OCC]
    cdef Py_ssize_t min_h[MAX_KEY_OCC]
    cdef Py_ssize_t short_bound, depth, m, d, h, a, i, j
    cdef Py_ssize_t n_occ, n_min, first, last, p_len
    cdef unsigned long long words_checked = 0, runs_checked = 0
    cdef bint ok, is_minimal

    if length > MAX_KEY_WORD:
        raise ValueError(f"length {length} exceeds kernel limit {MAX_KEY_WORD}")
    violating = []
    short_bound = (length - 1) // 3
    depth = 0
    next_symbol[0] = 0
    while depth >= 0:
        d = next_symbol[depth]
        if d == 3:
            depth -= 1
            continue
        next_symbol[depth] = d + 1
        buf[depth] = <unsigned char> d
        m = depth + 1
        if _has_square_suffix(buf, m, short_bound):
            continue
        if m < length:
            depth += 1
            next_symbol[depth] = 0
            continue

        words_checked += 1
        n_occ = 0
        for h in range(short_bound + 1, length // 2 + 1):
            for a in range(length - 2 * h + 1):
                if memcmp(buf + a, buf + a + h, h) == 0:
                    occ_a[n_occ] = a
                    occ_h[n_occ] = h
                    n_occ += 1
        if n_occ == 0:
            continue
        runs_checked += 1
        # Occurrences containing no strictly smaller occurrence are the
        # minimal squares (smaller ones were generated too: their halves
        # also exceed short_bound or the word would have been pruned).
        n_min = 0
        for i in range(n_occ):
            is_minimal = True
            for j in range(n_occ):
                if (occ_h[j] < occ_h[i] and occ_a[i] <= occ_a[j]
                        and occ_a[j] + 2 * occ_h[j] <= occ_a[i] + 2 * occ_h[i]):
                    is_minimal = False
                    break
            if is_minimal:
                min_a[n_min] = occ_a[i]
                min_h[n_min] = occ_h[i]
                n_min += 1
        ok = True
        h = min_h[0]
        first = min_a[0]
        last = min_a[0]
        for i in range(1, n_min):
            if min_h[i] != h:
                ok = False
            if min_a[i] < first:
                first = min_a[i]
            if min_a[i] > last:
                last = min_a[i]
        if ok:
            p_len = last - first
            ok = n_min == p_len + 1
            # Starts are distinct by construction, so matching count
            # plus matching span means they are consecutive.
            if ok:
                ok = (p_len <= h
                      and memcmp(buf + first + 2 * h, buf + first, p_len) == 0)
        if not ok:
            violating.append(PyBytes_FromStringAndSize(<char *> buf, length))
    return words_checked, runs_checked, violating
