"""Hot loops behind counting and enumeration.

Everything here is written in flat scalar/array style so the same source
compiles under numba's nopython mode and still runs (slowly) as plain
Python when numba is unavailable or disabled via CISGRAPH_PURE_PYTHON=1.

Graph encoding inside kernels: adjacency rows as int64 bitmasks. Canonical
codes pack the upper triangle column-major, pair (j, k) with j < k at bit
k*(k-1)/2 + (k-1-j), which keeps the code layout aligned with graph6's bit
stream. Codes fit one int64 for n <= 11; larger orders take the pure
Python path in enumeration.py.
"""

from __future__ import annotations

import os

import numpy as np

CANON_KERNEL_MAX = 11  # n*(n-1)/2 <= 55 bits, one int64 code


def _identity_jit(*args, **kwargs):
    if args and callable(args[0]):
        return args[0]

    def wrap(f):
        return f

    return wrap


if os.environ.get("CISGRAPH_PURE_PYTHON"):
    HAVE_NUMBA = False
    njit = _identity_jit
else:
    try:
        from numba import njit  # type: ignore

        HAVE_NUMBA = True
    except ImportError:  # pragma: no cover
        HAVE_NUMBA = False
        njit = _identity_jit


@njit(cache=True, nogil=True)
def count_connected_subsets(adj, n, required):
    """Number of nonempty vertex subsets that contain `required` and induce
    a connected subgraph. Plain 2^free sweep with a bitset closure test."""
    full = (1 << n) - 1
    free = full & ~required
    total = 0
    sub = free
    while True:
        s = sub | required
        if s:
            comp = s & (-s)
            while True:
                grow = comp
                for i in range(n):
                    if (comp >> i) & 1:
                        grow |= adj[i]
                grow &= s
                if grow == comp:
                    break
                comp = grow
            if comp == s:
                total += 1
        if sub == 0:
            break
        sub = (sub - 1) & free
    return total


@njit(cache=True, nogil=True)
def _is_connected_rows(adj, n):
    full = (1 << n) - 1
    comp = 1
    while True:
        grow = comp
        for i in range(n):
            if (comp >> i) & 1:
                grow |= adj[i]
        if grow == comp:
            break
        comp = grow
    return comp == full


@njit(cache=True, nogil=True)
def _lowest_bit_index(m):
    w = 0
    while not ((m >> w) & 1):
        w += 1
    return w


@njit(cache=True, nogil=True)
def _rank_ascending(vals, n, out):
    """out[v] = rank of vals[v] among the distinct values, ascending.

    Safe when out is vals: each slot is read before it is overwritten.
    """
    tmp = np.empty(n, np.int64)
    for i in range(n):
        tmp[i] = vals[i]
    for i in range(1, n):  # insertion sort
        x = tmp[i]
        j = i - 1
        while j >= 0 and tmp[j] > x:
            tmp[j + 1] = tmp[j]
            j -= 1
        tmp[j + 1] = x
    nuniq = 0
    for i in range(n):
        if i == 0 or tmp[i] != tmp[nuniq - 1]:
            tmp[nuniq] = tmp[i]
            nuniq += 1
    for v in range(n):
        lo = 0
        hi = nuniq - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if tmp[mid] < vals[v]:
                lo = mid + 1
            else:
                hi = mid
        out[v] = lo
    return nuniq


@njit(cache=True, nogil=True)
def _refine_colors(adj, n, color):
    """Iterated neighbour-colour refinement; colours become invariant ranks.

    Signature packing: old colour in the top bits keeps cell order stable
    across rounds; per-colour neighbour counts sit in 4-bit fields (n <= 11
    keeps counts and colour ids inside their fields).
    """
    sig = np.empty(n, np.int64)
    ncol = _rank_ascending(color, n, color)
    while True:
        for v in range(n):
            s = color[v] << 48
            row = adj[v]
            for w in range(n):
                if (row >> w) & 1:
                    s += 1 << (4 * color[w])
            sig[v] = s
        nnew = _rank_ascending(sig, n, color)
        if nnew == ncol:
            return ncol
        ncol = nnew


@njit(cache=True, nogil=True)
def canon_code(adj, n):
    """Canonical upper-triangle code: the maximum packed bit string over
    vertex orderings compatible with the refined colour partition.

    Cells that are internally complete/empty and uniform toward every other
    cell cannot affect the string, so their internal order is pinned. The
    remaining orderings are searched depth first, pruning any branch whose
    column drops below the best known value at its depth; a column that
    beats the best value resets everything deeper, which doubles as the
    greedy first descent.
    """
    if n == 1:
        return np.int64(0)
    color = np.empty(n, np.int64)
    for v in range(n):
        d = 0
        row = adj[v]
        for w in range(n):
            if (row >> w) & 1:
                d += 1
        color[v] = -d  # rank ascending == degree descending
    ncol = _refine_colors(adj, n, color)

    cell_mask = np.zeros(ncol, np.int64)
    for v in range(n):
        cell_mask[color[v]] |= 1 << v
    pos_cell = np.empty(n, np.int64)
    k = 0
    for c in range(ncol):
        m = cell_mask[c]
        while m:
            pos_cell[k] = c
            k += 1
            m &= m - 1

    homog = np.empty(ncol, np.int64)
    for c in range(ncol):
        cm = cell_mask[c]
        if cm & (cm - 1) == 0:
            homog[c] = 1
            continue
        ok = 1
        internal = -1
        for v in range(n):
            if (cm >> v) & 1:
                inside = adj[v] & cm
                rest = cm & ~(1 << v)
                kind = 1 if inside == rest else (0 if inside == 0 else -2)
                if kind == -2 or (internal != -1 and kind != internal):
                    ok = 0
                    break
                internal = kind
        if ok == 1:
            for c2 in range(ncol):
                if c2 == c:
                    continue
                dm = cell_mask[c2]
                kind0 = -1
                for v in range(n):
                    if (cm >> v) & 1:
                        cross = adj[v] & dm
                        k2 = 1 if cross == dm else (0 if cross == 0 else -2)
                        if k2 == -2 or (kind0 != -1 and k2 != kind0):
                            ok = 0
                            break
                        kind0 = k2
                if ok == 0:
                    break
        homog[c] = ok

    placed = np.full(n, -1, np.int64)
    best_col = np.full(n, -1, np.int64)
    cand_v = np.empty((n, n), np.int64)
    cand_c = np.empty((n, n), np.int64)
    cnt = np.zeros(n, np.int64)
    ptr = np.zeros(n, np.int64)
    used = 0
    best_code = np.int64(-1)

    c0 = pos_cell[0]
    m0 = cell_mask[c0]
    if homog[c0] == 1:
        cand_v[0, 0] = _lowest_bit_index(m0)
        cand_c[0, 0] = 0
        cnt[0] = 1
    else:
        i = 0
        for v in range(n):
            if (m0 >> v) & 1:
                cand_v[0, i] = v
                cand_c[0, i] = 0
                i += 1
        cnt[0] = i
    ptr[0] = 0

    k = 0
    while k >= 0:
        if placed[k] >= 0:
            used &= ~(1 << placed[k])
            placed[k] = -1
        descended = False
        while ptr[k] < cnt[k]:
            i = ptr[k]
            ptr[k] += 1
            v = cand_v[k, i]
            col = cand_c[k, i]
            if col < best_col[k]:
                ptr[k] = cnt[k]
                break
            if col > best_col[k]:
                best_col[k] = col
                for j in range(k + 1, n):
                    best_col[j] = -1
            placed[k] = v
            used |= 1 << v
            if k == n - 1:
                code = np.int64(0)
                for j in range(1, n):
                    code |= best_col[j] << (j * (j - 1) // 2)
                best_code = code
                used &= ~(1 << v)
                placed[k] = -1
                continue
            k += 1
            c = pos_cell[k]
            m = cell_mask[c] & ~used
            nc = 0
            if homog[c] == 1:
                w = _lowest_bit_index(m)
                col = 0
                for j in range(k):
                    col = (col << 1) | ((adj[w] >> placed[j]) & 1)
                cand_v[k, 0] = w
                cand_c[k, 0] = col
                nc = 1
            else:
                for w in range(n):
                    if (m >> w) & 1:
                        col = 0
                        for j in range(k):
                            col = (col << 1) | ((adj[w] >> placed[j]) & 1)
                        j2 = nc
                        while j2 > 0 and cand_c[k, j2 - 1] < col:
                            cand_c[k, j2] = cand_c[k, j2 - 1]
                            cand_v[k, j2] = cand_v[k, j2 - 1]
                            j2 -= 1
                        cand_c[k, j2] = col
                        cand_v[k, j2] = w
                        nc += 1
            cnt[k] = nc
            ptr[k] = 0
            placed[k] = -1
            descended = True
            break
        if not descended:
            k -= 1
    return best_code


@njit(cache=True, nogil=True)
def _is_connected_within(adj, n, mask):
    if mask == 0:
        return True
    comp = mask & (-mask)
    while True:
        grow = comp
        for i in range(n):
            if (comp >> i) & 1:
                grow |= adj[i]
        grow &= mask
        if grow == comp:
            break
        comp = grow
    return comp == mask


@njit(cache=True, nogil=True)
def bulk_profiles(codes, n, counts, cuts, pends, edges, min2):
    """Per-graph profile for an array of packed codes (graphs assumed
    connected): CIS count, cut vertex count, pendant count, edge count,
    and a minimally-2-connected flag. All checks are definitional: a cut
    vertex disconnects the rest on removal, minimality retests
    2-connectivity after each single edge removal."""
    rows = np.empty(n, np.int64)
    full = (1 << n) - 1
    for t in range(codes.shape[0]):
        code = codes[t]
        for i in range(n):
            rows[i] = 0
        for k in range(1, n):
            base = k * (k - 1) // 2
            for j in range(k):
                if (code >> (base + k - 1 - j)) & 1:
                    rows[j] |= 1 << k
                    rows[k] |= 1 << j
        counts[t] = count_connected_subsets(rows, n, 0)
        ncut = 0
        npend = 0
        degsum = 0
        for v in range(n):
            if not _is_connected_within(rows, n, full & ~(1 << v)):
                ncut += 1
            d = 0
            row = rows[v]
            for w in range(n):
                if (row >> w) & 1:
                    d += 1
            degsum += d
            if d == 1:
                npend += 1
        cuts[t] = ncut
        pends[t] = npend
        edges[t] = degsum // 2
        flag = 1 if (n >= 3 and ncut == 0) else 0
        if flag == 1:
            for u in range(n):
                if flag == 0:
                    break
                for v in range(u + 1, n):
                    if not (rows[u] >> v) & 1:
                        continue
                    rows[u] &= ~(1 << v)
                    rows[v] &= ~(1 << u)
                    still = 1
                    if not _is_connected_within(rows, n, full):
                        still = 0
                    else:
                        for w in range(n):
                            if not _is_connected_within(rows, n, full & ~(1 << w)):
                                still = 0
                                break
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                    if still == 1:
                        flag = 0
                        break
        min2[t] = flag


@njit(cache=True, nogil=True)
def augment_codes(parents, np_, out):
    """Canonical codes of every one-vertex extension of every parent.

    parents: (P, np_) int64 adjacency rows; each child attaches vertex np_
    to one nonempty subset of the parent. out must hold P * (2^np_ - 1)
    codes; returns the number written.
    """
    p_count = parents.shape[0]
    nn = np_ + 1
    rows = np.empty(nn, np.int64)
    idx = 0
    for p in range(p_count):
        for s in range(1, 1 << np_):
            for i in range(np_):
                r = parents[p, i]
                if (s >> i) & 1:
                    r |= 1 << np_
                rows[i] = r
            rows[np_] = s
            out[idx] = canon_code(rows, nn)
            idx += 1
    return idx


@njit(cache=True, nogil=True)
def sweep_codes(n, out):
    """Oracle path: canonical codes of every connected labelled graph on n
    vertices, one entry per labelled graph (duplicates included)."""
    nbits = n * (n - 1) // 2
    rows = np.empty(n, np.int64)
    filled = 0
    for mask in range(1 << nbits):
        for i in range(n):
            rows[i] = 0
        for k in range(1, n):
            base = k * (k - 1) // 2
            for j in range(k):
                if (mask >> (base + k - 1 - j)) & 1:
                    rows[j] |= 1 << k
                    rows[k] |= 1 << j
        if _is_connected_rows(rows, n):
            out[filled] = canon_code(rows, n)
            filled += 1
    return filled


def decode_code(n: int, code: int) -> tuple[int, ...]:
    """Adjacency rows for a packed upper-triangle code (plain Python; used
    when materialising enumerated graphs)."""
    adj = [0] * n
    for k in range(1, n):
        base = k * (k - 1) // 2
        for j in range(k):
            if (code >> (base + k - 1 - j)) & 1:
                adj[j] |= 1 << k
                adj[k] |= 1 << j
    return tuple(adj)


def encode_rows(adj: tuple[int, ...]) -> int:
    """Packed upper-triangle code of adjacency rows as labelled (no
    canonicalisation)."""
    n = len(adj)
    code = 0
    for k in range(1, n):
        base = k * (k - 1) // 2
        for j in range(k):
            if (adj[j] >> k) & 1:
                code |= 1 << (base + k - 1 - j)
    return code
