"""Pair graphs over ordered vertex pairs: the implication graph H* and the
pair digraph H+, strong components, and invertible-pair certificates.

Node ``(u, v)`` (``u != v``) stands for the statement "u precedes v". Nodes
are numbered canonically by ``pair_id(u, v, n) = u*(n-1) + v - [v > u]``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Literal

import numpy as np

from minorder._kernels import bfs_path, implication_csr, pack_rows, tarjan_scc
from minorder.digraph import Digraph


def pair_id(u, v, n: int):
    """Canonical id of the ordered pair ``(u, v)``; works elementwise on arrays."""
    return u * (n - 1) + v - (v > u)


def pair_of(pid: int, n: int) -> tuple[int, int]:
    u, r = divmod(int(pid), n - 1)
    return u, r if r < u else r + 1


@dataclass(frozen=True)
class VertexPair:
    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError(f"pair needs distinct vertices, got ({self.u}, {self.v})")

    def __iter__(self):
        yield self.u
        yield self.v

    def reversed(self) -> "VertexPair":
        return VertexPair(self.v, self.u)


@dataclass(frozen=True, eq=False)
class PairGraph:
    """Digraph on all n(n-1) ordered pairs, stored as CSR over pair ids."""

    n: int
    kind: Literal["implication", "pair-digraph"]
    indptr: np.ndarray
    indices: np.ndarray

    @property
    def num_nodes(self) -> int:
        return self.n * (self.n - 1)

    @property
    def num_edges(self) -> int:
        return int(self.indptr[-1])

    def pid(self, u: int, v: int) -> int:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"({u}, {v}) is not a node")
        return int(pair_id(u, v, self.n))

    def pair(self, pid: int) -> tuple[int, int]:
        return pair_of(pid, self.n)

    def successors(self, pid: int) -> np.ndarray:
        return self.indices[self.indptr[pid]:self.indptr[pid + 1]]

    def has_edge(self, a: tuple[int, int], b: tuple[int, int]) -> bool:
        return self.pid(*b) in self.successors(self.pid(*a))

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        src = np.repeat(np.arange(self.num_nodes, dtype=np.int64), np.diff(self.indptr))
        return src, self.indices.astype(np.int64)

    def edge_set(self) -> set[tuple[tuple[int, int], tuple[int, int]]]:
        """All edges as pairs of vertex pairs. Intended for small graphs."""
        src, dst = self.edge_arrays()
        return {(self.pair(s), self.pair(d)) for s, d in zip(src.tolist(), dst.tolist())}

    def non_isolated(self) -> np.ndarray:
        """Boolean mask of nodes with at least one incident edge."""
        mask = np.diff(self.indptr) > 0
        mask[self.indices] = True
        return mask


def _empty_pair_graph(n: int, kind) -> PairGraph:
    return PairGraph(n, kind, np.zeros(n * (n - 1) + 1, np.int64), np.empty(0, np.int32))


def build_implication_graph(H: Digraph) -> PairGraph:
    """H*: for distinct u, v, w, add ``(u,v) -> (w,v)`` and ``(v,w) -> (v,u)``
    whenever ``(u,w) in E, (u,v) not in E`` or ``(w,u) in E, (v,u) not in E``.

    Out-edges of ``(a, b)`` are ``(w, b)`` for triples ``(a, b, w)`` followed
    by ``(a, u)`` for triples ``(u, a, b)``, in increasing w and u.
    """
    n = H.n
    if n < 3:
        return _empty_pair_graph(n, "implication")
    indptr, indices = implication_csr(pack_rows(H.adj), pack_rows(H.adj.T), n)
    return PairGraph(n, "implication", indptr, indices)


def build_pair_digraph(H: Digraph) -> PairGraph:
    """H+: ``(u,u') -> (v,v')`` and ``(v',v) -> (u',u)`` whenever
    ``(u,v), (u',v') in E`` and ``(u,v') not in E``.

    Enumerates edge pairs, so it is quadratic in m; meant for cross-checks.
    Generated edges touching a diagonal pair are dropped.
    """
    n = H.n
    if n < 2:
        return _empty_pair_graph(n, "pair-digraph")
    A = H.adj
    N = n * (n - 1)
    codes = []
    for u in range(n):
        vs = np.flatnonzero(A[u])
        for vp in np.flatnonzero(~A[u]):
            ups = np.flatnonzero(A[:, vp])
            up, v = np.meshgrid(ups, vs, indexing="ij")
            up, v = up.ravel(), v.ravel()
            keep = (up != u) & (v != vp)
            up, v = up[keep], v[keep]
            codes.append(pair_id(u, up, n) * N + pair_id(v, vp, n))
            codes.append(pair_id(vp, v, n) * N + pair_id(up, u, n))
    if not codes:
        return _empty_pair_graph(n, "pair-digraph")
    codes = np.unique(np.concatenate(codes).astype(np.int64))
    src, dst = np.divmod(codes, N)
    indptr = np.zeros(N + 1, np.int64)
    np.cumsum(np.bincount(src, minlength=N), out=indptr[1:])
    return PairGraph(n, "pair-digraph", indptr, dst.astype(np.int32))


@dataclass(frozen=True, eq=False)
class SccLabeling:
    """``comp[x]`` is the component of node ``x``; ids run in reverse
    topological order of the condensation (sinks get small ids)."""

    comp: np.ndarray
    count: int


def strong_components(G: PairGraph) -> SccLabeling:
    comp, count = tarjan_scc(G.indptr, G.indices)
    return SccLabeling(comp, int(count))


def invertible_mask(G: PairGraph, scc: SccLabeling | None = None) -> np.ndarray:
    """n x n boolean matrix, true at (u, v) iff (u,v) and (v,u) share a component."""
    n = G.n
    if scc is None:
        scc = strong_components(G)
    out = np.zeros((n, n), dtype=bool)
    if n < 2:
        return out
    us, vs = np.nonzero(~np.eye(n, dtype=bool))
    out[us, vs] = scc.comp[pair_id(us, vs, n)] == scc.comp[pair_id(vs, us, n)]
    return out


def find_invertible_pair(H: Digraph, hstar: PairGraph | None = None) -> VertexPair | None:
    """Lexicographically smallest invertible pair ``(u, v)`` with ``u < v``, if any."""
    if hstar is None:
        hstar = build_implication_graph(H)
    hits = np.argwhere(np.triu(invertible_mask(hstar), 1))
    if hits.size == 0:
        return None
    u, v = hits[0]
    return VertexPair(int(u), int(v))


@dataclass(frozen=True)
class InvertiblePairCertificate:
    """Closed walk through ``(u,v)`` and ``(v,u)`` in H*, as pair ids."""

    n: int
    u: int
    v: int
    walk_forward: tuple[int, ...]
    walk_back: tuple[int, ...]

    def to_text(self) -> str:
        def fmt(walk):
            return " ".join("({},{})".format(*pair_of(p, self.n)) for p in walk)

        return (
            f"INVERTIBLE-PAIR {self.u} {self.v}\n"
            f"FORWARD {fmt(self.walk_forward)}\n"
            f"BACK {fmt(self.walk_back)}"
        )

    @classmethod
    def from_text(cls, text: str, n: int) -> "InvertiblePairCertificate":
        """Parse the three-line format; the colon after the tag is optional.
        Blank, ``#`` comment and ``STATS`` lines are skipped."""
        lines = [
            ln.strip() for ln in text.splitlines()
            if ln.strip() and not ln.lstrip().startswith(("#", "STATS"))
        ]
        if len(lines) != 3:
            raise ValueError(f"expected 3 certificate lines, got {len(lines)}")
        head = re.fullmatch(r"INVERTIBLE-PAIR:?\s+(\d+)\s+(\d+)", lines[0])
        if head is None:
            raise ValueError(f"bad certificate header {lines[0]!r}")

        def walk(line: str, tag: str) -> tuple[int, ...]:
            if not line.startswith(tag):
                raise ValueError(f"expected line starting with {tag}")
            body = line[len(tag):].strip()
            pairs = re.findall(r"\((\d+),\s*(\d+)\)", body)
            if re.sub(r"\(\d+,\s*\d+\)", "", body).strip():
                raise ValueError(f"unparseable walk {body!r}")
            ids = []
            for a, b in pairs:
                a, b = int(a), int(b)
                if a == b or a >= n or b >= n:
                    raise ValueError(f"({a},{b}) is not a vertex pair for n={n}")
                ids.append(int(pair_id(a, b, n)))
            return tuple(ids)

        return cls(n, int(head[1]), int(head[2]), walk(lines[1], "FORWARD"), walk(lines[2], "BACK"))


def extract_certificate(
    H: Digraph, p: VertexPair, hstar: PairGraph | None = None
) -> InvertiblePairCertificate:
    """BFS-shortest walks ``(u,v) ~> (v,u)`` and back inside H*."""
    if hstar is None:
        hstar = build_implication_graph(H)
    u, v = p
    a, b = hstar.pid(u, v), hstar.pid(v, u)
    forward = bfs_path(hstar.indptr, hstar.indices, a, b)
    back = bfs_path(hstar.indptr, hstar.indices, b, a)
    if forward.size == 0 or back.size == 0:
        raise ValueError(f"({u}, {v}) is not an invertible pair")
    return InvertiblePairCertificate(
        H.n, u, v, tuple(forward.tolist()), tuple(back.tolist())
    )
