"""Compiled graph kernels over CSR adjacency (``indptr``, ``indices``).

Pair graphs reach n(n-1) nodes and O(n^3) edges, so SCC and BFS run as
iterative numba loops rather than Python recursion.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def tarjan_scc(indptr, indices):
    """Iterative Tarjan. Component ids are assigned in completion order,
    which is a reverse topological order of the condensation."""
    n = indptr.shape[0] - 1
    index = np.full(n, -1, np.int64)
    low = np.zeros(n, np.int64)
    comp = np.full(n, -1, np.int64)
    onstack = np.zeros(n, np.bool_)
    stack = np.empty(n, np.int64)
    call_v = np.empty(n, np.int64)
    call_e = np.empty(n, np.int64)
    sp = 0
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = counter
        low[root] = counter
        counter += 1
        stack[sp] = root
        sp += 1
        onstack[root] = True
        call_v[0] = root
        call_e[0] = indptr[root]
        cp = 1
        while cp > 0:
            v = call_v[cp - 1]
            e = call_e[cp - 1]
            if e < indptr[v + 1]:
                call_e[cp - 1] = e + 1
                w = indices[e]
                if index[w] == -1:
                    index[w] = counter
                    low[w] = counter
                    counter += 1
                    stack[sp] = w
                    sp += 1
                    onstack[w] = True
                    call_v[cp] = w
                    call_e[cp] = indptr[w]
                    cp += 1
                elif onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
            else:
                cp -= 1
                if low[v] == index[v]:
                    while True:
                        sp -= 1
                        x = stack[sp]
                        onstack[x] = False
                        comp[x] = ncomp
                        if x == v:
                            break
                    ncomp += 1
                if cp > 0:
                    parent = call_v[cp - 1]
                    if low[v] < low[parent]:
                        low[parent] = low[v]
    return comp, ncomp


@njit(cache=True)
def bfs_path(indptr, indices, start, goal):
    """Shortest path start -> goal as a node array; empty if unreachable."""
    n = indptr.shape[0] - 1
    pred = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    pred[start] = start
    queue[0] = start
    head = 0
    tail = 1
    found = start == goal
    while head < tail and not found:
        v = queue[head]
        head += 1
        for e in range(indptr[v], indptr[v + 1]):
            w = indices[e]
            if pred[w] == -1:
                pred[w] = v
                if w == goal:
                    found = True
                    break
                queue[tail] = w
                tail += 1
    if not found:
        return np.empty(0, np.int64)
    length = 1
    x = goal
    while x != start:
        x = pred[x]
        length += 1
    path = np.empty(length, np.int64)
    x = goal
    for i in range(length - 1, -1, -1):
        path[i] = x
        x = pred[x]
    return path


@njit(cache=True)
def clause_graph_csr(clauses, n_nodes):
    """CSR of the 2-SAT implication graph: each clause (a, b) yields
    ~a -> b and ~b -> a, with literal negation ``lit ^ 1``.
    Tautologies (a, ~a) contribute nothing.

    Edges are first scattered into ~1024 buckets of consecutive source
    nodes, then placed bucket by bucket, which keeps the writes cache-local.
    """
    deg = np.zeros(n_nodes + 1, np.int64)
    for i in range(clauses.shape[0]):
        a = clauses[i, 0]
        b = clauses[i, 1]
        if a == (b ^ 1):
            continue
        deg[(a ^ 1) + 1] += 1
        deg[(b ^ 1) + 1] += 1
    indptr = np.cumsum(deg)
    total = indptr[-1]

    shift = 0
    while (n_nodes >> shift) > 1024:
        shift += 1
    n_buckets = (n_nodes >> shift) + 1
    bucket_fill = np.empty(n_buckets, np.int64)
    for k in range(n_buckets):
        bucket_fill[k] = indptr[min(k << shift, n_nodes)]
    tmp_src = np.empty(total, np.int32)
    tmp_dst = np.empty(total, np.int32)
    for i in range(clauses.shape[0]):
        a = clauses[i, 0]
        b = clauses[i, 1]
        if a == (b ^ 1):
            continue
        k = (a ^ 1) >> shift
        tmp_src[bucket_fill[k]] = a ^ 1
        tmp_dst[bucket_fill[k]] = b
        bucket_fill[k] += 1
        k = (b ^ 1) >> shift
        tmp_src[bucket_fill[k]] = b ^ 1
        tmp_dst[bucket_fill[k]] = a
        bucket_fill[k] += 1

    fill = indptr[:-1].copy()
    indices = np.empty(total, np.int32)
    for e in range(total):
        x = tmp_src[e]
        indices[fill[x]] = tmp_dst[e]
        fill[x] += 1
    return indptr, indices


def pack_rows(A):
    """Bit-pack a boolean matrix row-wise into little-endian uint64 words."""
    n, m = A.shape
    words = (m + 63) // 64
    padded = np.zeros((n, words * 64), dtype=bool)
    padded[:, :m] = A
    return np.packbits(padded, axis=1, bitorder="little").view(np.uint64).copy()


@njit(cache=True)
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(cache=True)
def _lowest_bit(x):
    """Index of the lowest set bit of a nonzero word."""
    return _popcount((x & (~x + np.uint64(1))) - np.uint64(1))


@njit(cache=True)
def _pid(u, v, n):
    return u * (n - 1) + v - (1 if v > u else 0)


@njit(cache=True)
def _clear(word, k, x):
    if k == x >> 6:
        return word & ~(np.uint64(1) << np.uint64(x & 63))
    return word


@njit(cache=True)
def _first_word(R, RT, r, take_row, take_col, k, x, y):
    """Word k of the set {w : (take_row and R[r,w]) or (take_col and R[w,r])} minus {x, y}."""
    word = np.uint64(0)
    if take_row:
        word |= R[r, k]
    if take_col:
        word |= RT[r, k]
    return _clear(_clear(word, k, x), k, y)


@njit(cache=True)
def implication_csr(R, RT, n):
    """H* as CSR from bit-packed adjacency ``R`` and its transpose ``RT``.

    Out-edges of (a, b): (w, b) for triples (a, b, w) in increasing w, then
    (a, u) for triples (u, a, b) in increasing u.
    """
    W = R.shape[1]
    N = n * (n - 1)
    indptr = np.zeros(N + 1, np.int64)
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            nab = not (R[a, b >> 6] >> np.uint64(b & 63)) & np.uint64(1)
            nba = not (RT[a, b >> 6] >> np.uint64(b & 63)) & np.uint64(1)
            c = 0
            for k in range(W):
                c += _popcount(_first_word(R, RT, a, nab, nba, k, a, b))
                second = (RT[b, k] & ~RT[a, k]) | (R[b, k] & ~R[a, k])
                c += _popcount(_clear(_clear(second, k, a), k, b))
            indptr[_pid(a, b, n) + 1] = c
    for p in range(N):
        indptr[p + 1] += indptr[p]
    indices = np.empty(indptr[N], np.int32)
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            nab = not (R[a, b >> 6] >> np.uint64(b & 63)) & np.uint64(1)
            nba = not (RT[a, b >> 6] >> np.uint64(b & 63)) & np.uint64(1)
            pos = indptr[_pid(a, b, n)]
            for k in range(W):
                word = _first_word(R, RT, a, nab, nba, k, a, b)
                while word:
                    w = k * 64 + _lowest_bit(word)
                    indices[pos] = _pid(w, b, n)
                    pos += 1
                    word &= word - np.uint64(1)
            for k in range(W):
                word = _clear(_clear((RT[b, k] & ~RT[a, k]) | (R[b, k] & ~R[a, k]), k, a), k, b)
                while word:
                    u = k * 64 + _lowest_bit(word)
                    indices[pos] = _pid(a, u, n)
                    pos += 1
                    word &= word - np.uint64(1)
    return indptr, indices


@njit(cache=True)
def _literal(u, v, n):
    lo = min(u, v)
    hi = max(u, v)
    k = lo * n - lo * (lo + 1) // 2 + (hi - lo - 1)
    return 2 * k + (1 if u > v else 0)


@njit(cache=True)
def formula_clauses(R, RT, n):
    """Clauses (x(u,v) or x(v,w)) for firing triples, in lexicographic order."""
    W = R.shape[1]
    total = 0
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            nuv = not (R[u, v >> 6] >> np.uint64(v & 63)) & np.uint64(1)
            nvu = not (RT[u, v >> 6] >> np.uint64(v & 63)) & np.uint64(1)
            if nuv or nvu:
                for k in range(W):
                    total += _popcount(_first_word(R, RT, u, nuv, nvu, k, u, v))
    out = np.empty((total, 2), np.int32)
    c = 0
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            nuv = not (R[u, v >> 6] >> np.uint64(v & 63)) & np.uint64(1)
            nvu = not (RT[u, v >> 6] >> np.uint64(v & 63)) & np.uint64(1)
            if not (nuv or nvu):
                continue
            lit_uv = _literal(u, v, n)
            for k in range(W):
                word = _first_word(R, RT, u, nuv, nvu, k, u, v)
                while word:
                    w = k * 64 + _lowest_bit(word)
                    out[c, 0] = lit_uv
                    out[c, 1] = _literal(v, w, n)
                    c += 1
                    word &= word - np.uint64(1)
    return out
