"""Certificate checkers written directly against the definitions.

Nothing here imports the producing modules: orderings and certificates are
read by attribute, and pair ids are decoded locally.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from minorder.digraph import Digraph


def _as_permutation(ordering, n: int) -> np.ndarray:
    order = np.asarray(getattr(ordering, "order", ordering), dtype=np.int64)
    if order.shape != (n,) or not np.array_equal(np.sort(order), np.arange(n)):
        raise ValueError(f"ordering is not a permutation of 0..{n - 1}")
    return order


def forbidden_pattern(H: Digraph, ordering) -> tuple[int, int, int] | None:
    """First triple ``u < v < w`` (in ordering positions) with
    ``(u,w) in E, (u,v) not in E`` or ``(w,u) in E, (v,u) not in E``."""
    order = _as_permutation(ordering, H.n)
    if H.m == 0:
        return None
    B = H.adj[np.ix_(order, order)]
    n = H.n
    for j in range(1, n - 1):
        # rows i < j, columns k > j
        bad = (B[:j, j + 1:] & ~B[:j, j][:, None]) | (B[j + 1:, :j].T & ~B[j, :j][:, None])
        hits = np.argwhere(bad)
        if hits.size:
            i, k = hits[0]
            return int(order[i]), int(order[j]), int(order[j + 1 + k])
    return None


def verify_min_ordering(H: Digraph, ordering) -> bool:
    return forbidden_pattern(H, ordering) is None


def verify_full_min_ordering(H: Digraph, ordering) -> bool:
    """Edges ``(u,v), (u',v')`` with ``u < u'`` and ``v' < v`` force ``(u,v')``.

    Loops count as edges. For each candidate ``(u, v')`` the two existential
    conditions are suffix-ORs over positions.
    """
    order = _as_permutation(ordering, H.n)
    B = H.adj[np.ix_(order, order)]
    # some later u' has an edge into v'
    later_source = np.zeros_like(B)
    later_source[:-1] = np.logical_or.accumulate(B[::-1], axis=0)[::-1][1:]
    # u has an edge to some later v
    later_target = np.zeros_like(B)
    later_target[:, :-1] = np.logical_or.accumulate(B[:, ::-1], axis=1)[:, ::-1][:, 1:]
    return not bool((later_source & later_target & ~B).any())


def _decode(pid: int, n: int) -> tuple[int, int] | None:
    if n < 2 or not 0 <= pid < n * (n - 1):
        return None
    a, r = divmod(pid, n - 1)
    b = r if r < a else r + 1
    return a, b


def _fires(A: np.ndarray, u: int, v: int, w: int) -> bool:
    if len({u, v, w}) < 3:
        return False
    return bool((A[u, w] and not A[u, v]) or (A[w, u] and not A[v, u]))


def implication_step_ok(A: np.ndarray, src: tuple[int, int], dst: tuple[int, int]) -> bool:
    """Is ``src -> dst`` an edge of the implication graph of ``A``?"""
    (a, b), (c, d) = src, dst
    if b == d and a != c:
        # (u,v) -> (w,v) with u=a, v=b, w=c
        return _fires(A, a, b, c)
    if a == c and b != d:
        # (v,w) -> (v,u) with v=a, w=b, u=d
        return _fires(A, d, a, b)
    return False


def _walk_problem(A: np.ndarray, n: int, walk: Sequence[int], start, end, name: str) -> str | None:
    pairs = [_decode(int(p), n) for p in walk]
    if not pairs or any(p is None for p in pairs):
        return f"{name} walk is empty or has an invalid pair id"
    if pairs[0] != start or pairs[-1] != end:
        return f"{name} walk must run from {start} to {end}"
    for i in range(len(pairs) - 1):
        if not implication_step_ok(A, pairs[i], pairs[i + 1]):
            return f"{name} step {i}: {pairs[i]} -> {pairs[i + 1]} is not an implication edge"
    return None


def invertible_pair_problem(H: Digraph, cert) -> str | None:
    """Reason the certificate fails, or None if it is valid."""
    n = H.n
    if getattr(cert, "n", n) != n:
        return f"certificate is for n={cert.n}, digraph has n={n}"
    u, v = int(cert.u), int(cert.v)
    if u == v or not (0 <= u < n and 0 <= v < n):
        return f"({u}, {v}) is not a pair of distinct vertices"
    return (
        _walk_problem(H.adj, n, cert.walk_forward, (u, v), (v, u), "forward")
        or _walk_problem(H.adj, n, cert.walk_back, (v, u), (u, v), "back")
    )


def verify_invertible_pair(H: Digraph, cert) -> bool:
    return invertible_pair_problem(H, cert) is None
