"""Pure-Python reference kernels.

These mirror the compiled extension ``eulerhall._kernels._fast`` function
for function: identical algorithms, identical traversal orders, identical
outputs.  Integers are Python ints throughout, so there are no width
limits here; the dispatcher falls back to this module whenever an input
does not fit the extension's fixed-width fast paths.

Conventions shared by both backends:

* ``rows`` is a sequence of tuples of column indices, each tuple strictly
  ascending, columns numbered ``0 .. ncols-1``.  Row ``j`` lists the
  columns incident to set ``j``.
* Matchings are reported as ``col_of``: for each row the matched column,
  or -1 when the row is unmatched.
"""

from itertools import product


def euler_terms(rows, ncols):
    """Expand prod_j (sum of column variables in row j) with v*v = 0.

    Returns {column bitmask -> coefficient}.  Coefficients are positive
    counts (no cancellation can occur), and the empty product is {0: 1}.
    """
    terms = {0: 1}
    for cols in rows:
        nxt = {}
        for mask, coeff in terms.items():
            for c in cols:
                bit = 1 << c
                if mask & bit:
                    continue
                key = mask | bit
                nxt[key] = nxt.get(key, 0) + coeff
        if not nxt:
            return {}
        terms = nxt
    return terms


def hall_violation(rows, ncols):
    """First subset of rows whose column union is too small, else -1.

    Subsets are scanned as bitmasks in ascending order; the return value
    is the bitmask over row indices of the first violating subset.
    """
    m = len(rows)
    masks = [0] * m
    for j, cols in enumerate(rows):
        acc = 0
        for c in cols:
            acc |= 1 << c
        masks[j] = acc
    union = [0] * (1 << m)
    for sub in range(1, 1 << m):
        low = (sub & -sub).bit_length() - 1
        u = union[sub & (sub - 1)] | masks[low]
        union[sub] = u
        if u.bit_count() < sub.bit_count():
            return sub
    return -1


def max_matching(rows, ncols):
    """Maximum bipartite matching (rows vs columns), deterministic.

    Greedy seeding in row order followed by augmenting-path search for
    each unmatched row; adjacency is always scanned in stored (ascending)
    order, so the result depends only on the input.
    """
    m = len(rows)
    row_of = [-1] * ncols
    col_of = [-1] * m
    for j, cols in enumerate(rows):
        for c in cols:
            if row_of[c] < 0:
                row_of[c] = j
                col_of[j] = c
                break
    for j in range(m):
        if col_of[j] < 0:
            _augment(j, rows, row_of, col_of, bytearray(ncols))
    return col_of


def _augment(start, rows, row_of, col_of, seen):
    # Iterative alternating DFS; mirrors the compiled kernel exactly.
    # frames[i] = [row, next adjacency index]; path_cols[i] = column taken
    # out of frames[i] towards frames[i+1].
    frames = [[start, 0]]
    path_cols = []
    while frames:
        frame = frames[-1]
        cols = rows[frame[0]]
        advanced = False
        while frame[1] < len(cols):
            c = cols[frame[1]]
            frame[1] += 1
            if seen[c]:
                continue
            seen[c] = 1
            r = row_of[c]
            if r < 0:
                path_cols.append(c)
                for (row, _), col in zip(frames, path_cols):
                    row_of[col] = row
                    col_of[row] = col
                return True
            frames.append([r, 0])
            path_cols.append(c)
            advanced = True
            break
        if not advanced:
            frames.pop()
            if path_cols:
                path_cols.pop()
    return False


def permanent(rows, m):
    """Permanent of the m x m 0/1 matrix with given incidence rows.

    Ryser's inclusion-exclusion over column subsets in Gray-code order;
    exact integer arithmetic.
    """
    if m == 0:
        return 1
    col_rows = [0] * m
    for j, cols in enumerate(rows):
        for c in cols:
            col_rows[c] |= 1 << j
    rowsum = [0] * m
    total = 0
    gray = 0
    for k in range(1, 1 << m):
        bit = (k & -k).bit_length() - 1
        gray ^= 1 << bit
        delta = 1 if gray >> bit & 1 else -1
        rr = col_rows[bit]
        while rr:
            rr_low = rr & -rr
            rowsum[rr_low.bit_length() - 1] += delta
            rr ^= rr_low
        prod = 1
        for s in rowsum:
            if s == 0:
                prod = 0
                break
            prod *= s
        if prod:
            if (m - gray.bit_count()) & 1:
                total -= prod
            else:
                total += prod
    return total


def sweep_equivalence_range(max_m, max_atom, lo, hi):
    """Three-way equivalence scan over ordered families of atom subsets.

    Enumerates every family of m in 1..max_m nonempty subsets of
    {1..max_atom} whose first subset, read as a bitmask, lies in
    [lo, hi), and checks that nonzero-Euler-product, the Hall condition
    and matching saturation agree.  Returns (families checked,
    disagreements).
    """
    full = (1 << max_atom) - 1
    cols_of = [tuple(c for c in range(max_atom) if mask >> c & 1) for mask in range(full + 1)]
    checked = 0
    mismatches = 0
    for m in range(1, max_m + 1):
        for first in range(lo, hi):
            for rest in product(range(1, full + 1), repeat=m - 1):
                rows = [cols_of[first]]
                rows.extend(cols_of[mask] for mask in rest)
                nonzero = bool(euler_terms(rows, max_atom))
                hall = hall_violation(rows, max_atom) < 0
                saturated = all(c >= 0 for c in max_matching(rows, max_atom))
                checked += 1
                if not (nonzero == hall == saturated):
                    mismatches += 1
    return checked, mismatches
