# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: fixed-width counterparts of the pure-Python reference.

Same contracts, traversal orders and results as
``eulerhall._kernels._pyref``; the dispatcher routes here only when the
input fits the width limits recorded there (column counts, row counts,
int64 coefficient bounds).
"""

from libc.stdlib cimport calloc, free, malloc

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctz(unsigned int) nogil
    int __builtin_ctzll(unsigned long long) nogil


# ---------------------------------------------------------------------------
# Euler product expansion


def euler_terms(rows, int ncols):
    """{column bitmask -> coefficient} of prod_j (sum of row-j columns)."""
    cdef int m = len(rows)
    if ncols > 16 or m > 20:
        raise ValueError("euler_terms fast path limited to ncols <= 16, rows <= 20")
    cdef Py_ssize_t size = 1 << ncols
    cdef int total = 0
    for row in rows:
        total += len(row)
    cdef long long *cur = <long long *> calloc(size, sizeof(long long))
    cdef long long *nxt = <long long *> calloc(size, sizeof(long long))
    cdef int *cur_t = <int *> malloc(size * sizeof(int))
    cdef int *nxt_t = <int *> malloc(size * sizeof(int))
    cdef int *cols = <int *> malloc((total if total else 1) * sizeof(int))
    cdef int *off = <int *> malloc((m + 1) * sizeof(int))
    if not (cur and nxt and cur_t and nxt_t and cols and off):
        free(cur); free(nxt); free(cur_t); free(nxt_t); free(cols); free(off)
        raise MemoryError()

    cdef int k = 0, j
    off[0] = 0
    for j in range(m):
        for c in rows[j]:
            cols[k] = c
            k += 1
        off[j + 1] = k

    cdef int cur_count = 1, nxt_count, i, mask, nm, ci, col
    cdef long long coeffv
    cdef long long *tmp
    cdef int *tmpt
    cur[0] = 1
    cur_t[0] = 0
    for j in range(m):
        nxt_count = 0
        for i in range(cur_count):
            mask = cur_t[i]
            coeffv = cur[mask]
            cur[mask] = 0
            for ci in range(off[j], off[j + 1]):
                col = cols[ci]
                if mask & (1 << col):
                    continue
                nm = mask | (1 << col)
                if nxt[nm] == 0:
                    nxt_t[nxt_count] = nm
                    nxt_count += 1
                nxt[nm] += coeffv
        tmp = cur; cur = nxt; nxt = tmp
        tmpt = cur_t; cur_t = nxt_t; nxt_t = tmpt
        cur_count = nxt_count
        if cur_count == 0:
            break

    result = {}
    for i in range(cur_count):
        mask = cur_t[i]
        result[mask] = cur[mask]
        cur[mask] = 0
    free(cur); free(nxt); free(cur_t); free(nxt_t); free(cols); free(off)
    return result


# ---------------------------------------------------------------------------
# Hall subset scan


def hall_violation(rows, int ncols):
    """First violating row subset as a bitmask (ascending scan), else -1."""
    cdef int m = len(rows)
    if ncols > 64 or m > 16:
        raise ValueError("hall_violation fast path limited to ncols <= 64, rows <= 16")
    if m == 0:
        return -1
    cdef unsigned long long *masks = <unsigned long long *> calloc(m, sizeof(unsigned long long))
    cdef unsigned long long *union_of = <unsigned long long *> malloc(
        (<Py_ssize_t> 1 << m) * sizeof(unsigned long long))
    if not (masks and union_of):
        free(masks); free(union_of)
        raise MemoryError()
    cdef int j
    for j in range(m):
        for c in rows[j]:
            masks[j] |= (<unsigned long long> 1) << <int> c
    cdef unsigned int sub
    cdef unsigned long long u
    union_of[0] = 0
    for sub in range(1, <unsigned int> (1 << m)):
        u = union_of[sub & (sub - 1)] | masks[__builtin_ctz(sub)]
        union_of[sub] = u
        if __builtin_popcountll(u) < __builtin_popcount(sub):
            free(masks); free(union_of)
            return <int> sub
    free(masks); free(union_of)
    return -1


# ---------------------------------------------------------------------------
# Maximum matching


cdef bint _augment(int start, int *cols, int *off, int *row_of, int *col_of,
                   unsigned char *seen, int *frame_row, int *frame_idx,
                   int *path_col) nogil:
    # Iterative alternating DFS; identical traversal to _pyref._augment.
    cdef int top = 0
    cdef int j, c, r, i
    cdef bint advanced
    frame_row[0] = start
    frame_idx[0] = off[start]
    while top >= 0:
        j = frame_row[top]
        advanced = False
        while frame_idx[top] < off[j + 1]:
            c = cols[frame_idx[top]]
            frame_idx[top] += 1
            if seen[c]:
                continue
            seen[c] = 1
            r = row_of[c]
            if r < 0:
                path_col[top] = c
                for i in range(top + 1):
                    row_of[path_col[i]] = frame_row[i]
                    col_of[frame_row[i]] = path_col[i]
                return True
            top += 1
            frame_row[top] = r
            frame_idx[top] = off[r]
            path_col[top - 1] = c
            advanced = True
            break
        if not advanced:
            top -= 1
    return False


def max_matching(rows, int ncols):
    """Per-row matched column (or -1); greedy seeding plus augmentation."""
    cdef int m = len(rows)
    cdef int total = 0
    for row in rows:
        total += len(row)
    cdef int *cols = <int *> malloc((total if total else 1) * sizeof(int))
    cdef int *off = <int *> malloc((m + 1) * sizeof(int))
    cdef int *row_of = <int *> malloc((ncols if ncols else 1) * sizeof(int))
    cdef int *col_of = <int *> malloc((m if m else 1) * sizeof(int))
    cdef unsigned char *seen = <unsigned char *> malloc(ncols if ncols else 1)
    cdef int *frame_row = <int *> malloc((m + 1) * sizeof(int))
    cdef int *frame_idx = <int *> malloc((m + 1) * sizeof(int))
    cdef int *path_col = <int *> malloc((m + 1) * sizeof(int))
    if not (cols and off and row_of and col_of and seen and frame_row and frame_idx and path_col):
        free(cols); free(off); free(row_of); free(col_of); free(seen)
        free(frame_row); free(frame_idx); free(path_col)
        raise MemoryError()

    cdef int k = 0, j, c
    off[0] = 0
    for j in range(m):
        for c_obj in rows[j]:
            cols[k] = c_obj
            k += 1
        off[j + 1] = k
    for c in range(ncols):
        row_of[c] = -1
    for j in range(m):
        col_of[j] = -1
        for k in range(off[j], off[j + 1]):
            c = cols[k]
            if row_of[c] < 0:
                row_of[c] = j
                col_of[j] = c
                break
    for j in range(m):
        if col_of[j] < 0:
            for c in range(ncols):
                seen[c] = 0
            _augment(j, cols, off, row_of, col_of, seen, frame_row, frame_idx, path_col)

    result = [col_of[j] for j in range(m)]
    free(cols); free(off); free(row_of); free(col_of); free(seen)
    free(frame_row); free(frame_idx); free(path_col)
    return result


# ---------------------------------------------------------------------------
# Permanent (Ryser, Gray code)


def permanent(rows, int m):
    """Permanent of the m x m 0/1 incidence matrix; int64-safe for m <= 14."""
    if m > 14:
        raise ValueError("permanent fast path limited to m <= 14")
    if m == 0:
        return 1
    cdef unsigned int *col_rows = <unsigned int *> calloc(m, sizeof(unsigned int))
    cdef long long *rowsum = <long long *> calloc(m, sizeof(long long))
    if not (col_rows and rowsum):
        free(col_rows); free(rowsum)
        raise MemoryError()
    cdef int j
    for j in range(m):
        for c in rows[j]:
            col_rows[<int> c] |= (<unsigned int> 1) << j
    cdef long long total = 0, prod
    cdef unsigned int gray = 0, k, rr
    cdef int bit, r, delta
    for k in range(1, <unsigned int> (1 << m)):
        bit = __builtin_ctz(k)
        gray ^= (<unsigned int> 1) << bit
        delta = 1 if (gray >> bit) & 1 else -1
        rr = col_rows[bit]
        while rr:
            r = __builtin_ctz(rr)
            rr &= rr - 1
            rowsum[r] += delta
        prod = 1
        for r in range(m):
            if rowsum[r] == 0:
                prod = 0
                break
            prod *= rowsum[r]
        if prod:
            if (m - __builtin_popcount(gray)) & 1:
                total -= prod
            else:
                total += prod
    free(col_rows); free(rowsum)
    return total


# ---------------------------------------------------------------------------
# Exhaustive family sweep


cdef bint _dp_nonzero(int *fam, int m, long long *cur, long long *nxt,
                      int *cur_t, int *nxt_t) nogil:
    cdef int cur_count = 1, nxt_count, i, mask, nm, rem, bit, si
    cdef long long coeffv
    cdef long long *tmp
    cdef int *tmpt
    cur[0] = 1
    cur_t[0] = 0
    for si in range(m):
        nxt_count = 0
        for i in range(cur_count):
            mask = cur_t[i]
            coeffv = cur[mask]
            cur[mask] = 0
            rem = fam[si] & ~mask
            while rem:
                bit = rem & (-rem)
                rem ^= bit
                nm = mask | bit
                if nxt[nm] == 0:
                    nxt_t[nxt_count] = nm
                    nxt_count += 1
                nxt[nm] += coeffv
        tmp = cur; cur = nxt; nxt = tmp
        tmpt = cur_t; cur_t = nxt_t; nxt_t = tmpt
        cur_count = nxt_count
        if cur_count == 0:
            return False
    for i in range(cur_count):
        cur[cur_t[i]] = 0
    return True


cdef bint _hall_ok(int *fam, int m) nogil:
    cdef unsigned int sub, rr
    cdef unsigned int u
    for sub in range(1, <unsigned int> (1 << m)):
        u = 0
        rr = sub
        while rr:
            u |= <unsigned int> fam[__builtin_ctz(rr)]
            rr &= rr - 1
        if __builtin_popcount(u) < __builtin_popcount(sub):
            return False
    return True


cdef bint _augment_mask(int start, int *fam, int *row_of, int *col_of,
                        unsigned char *seen, int *frame_row, int *frame_mask,
                        int *path_col) nogil:
    cdef int top = 0, j, c, r, i, bit
    cdef bint advanced
    frame_row[0] = start
    frame_mask[0] = fam[start]
    while top >= 0:
        j = frame_row[top]
        advanced = False
        while frame_mask[top]:
            bit = frame_mask[top] & (-frame_mask[top])
            frame_mask[top] ^= bit
            c = __builtin_ctz(<unsigned int> bit)
            if seen[c]:
                continue
            seen[c] = 1
            r = row_of[c]
            if r < 0:
                path_col[top] = c
                for i in range(top + 1):
                    row_of[path_col[i]] = frame_row[i]
                    col_of[frame_row[i]] = path_col[i]
                return True
            top += 1
            frame_row[top] = r
            frame_mask[top] = fam[r]
            path_col[top - 1] = c
            advanced = True
            break
        if not advanced:
            top -= 1
    return False


cdef bint _matching_saturates(int *fam, int m, int ncols, int *row_of, int *col_of,
                              unsigned char *seen, int *frame_row, int *frame_mask,
                              int *path_col) nogil:
    cdef int j, c, rem, bit
    for c in range(ncols):
        row_of[c] = -1
    for j in range(m):
        col_of[j] = -1
        rem = fam[j]
        while rem:
            bit = rem & (-rem)
            rem ^= bit
            c = __builtin_ctz(<unsigned int> bit)
            if row_of[c] < 0:
                row_of[c] = j
                col_of[j] = c
                break
    for j in range(m):
        if col_of[j] < 0:
            for c in range(ncols):
                seen[c] = 0
            if not _augment_mask(j, fam, row_of, col_of, seen, frame_row,
                                 frame_mask, path_col):
                return False
    return True


def sweep_equivalence_range(int max_m, int max_atom, long lo, long hi):
    """(families checked, disagreements) over the bitmask-odometer range."""
    if max_m < 1 or max_m > 8 or max_atom < 1 or max_atom > 16:
        raise ValueError("sweep fast path limited to max_m <= 8, max_atom <= 16")
    if lo < 1 or hi > (1 << max_atom):
        raise ValueError("first-subset range out of bounds")
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << max_atom
    cdef int full = (1 << max_atom) - 1
    cdef long long *cur = <long long *> calloc(size, sizeof(long long))
    cdef long long *nxt = <long long *> calloc(size, sizeof(long long))
    cdef int *cur_t = <int *> malloc(size * sizeof(int))
    cdef int *nxt_t = <int *> malloc(size * sizeof(int))
    if not (cur and nxt and cur_t and nxt_t):
        free(cur); free(nxt); free(cur_t); free(nxt_t)
        raise MemoryError()

    cdef int fam[8]
    cdef int col_of[8]
    cdef int row_of[16]
    cdef unsigned char seen[16]
    cdef int frame_row[9]
    cdef int frame_mask[9]
    cdef int path_col[9]

    cdef long long checked = 0, mismatches = 0
    cdef int m, k
    cdef bint nonzero, hall, saturated, done
    for m in range(1, max_m + 1):
        if lo >= hi:
            break
        fam[0] = <int> lo
        for k in range(1, m):
            fam[k] = 1
        done = False
        while not done:
            nonzero = _dp_nonzero(fam, m, cur, nxt, cur_t, nxt_t)
            hall = _hall_ok(fam, m)
            saturated = _matching_saturates(fam, m, max_atom, row_of, col_of,
                                            seen, frame_row, frame_mask, path_col)
            checked += 1
            if not (nonzero == hall and hall == saturated):
                mismatches += 1
            k = m - 1
            while k >= 1:
                if fam[k] < full:
                    fam[k] += 1
                    break
                fam[k] = 1
                k -= 1
            else:
                fam[0] += 1
                if fam[0] >= hi:
                    done = True

    free(cur); free(nxt); free(cur_t); free(nxt_t)
    return (checked, mismatches)
