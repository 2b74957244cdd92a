"""Reflexive digraphs: data model, edge-list I/O and random instances.

Edge-list format::

    # comments start with '#'
    n m
    u v        (m lines, 0-based, loops "v v" allowed)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np


class DigraphError(ValueError):
    """Malformed or invalid digraph input."""


class NotReflexiveError(DigraphError):
    def __init__(self, vertex: int):
        super().__init__(f"not reflexive: vertex {vertex} has no loop")
        self.vertex = vertex


@dataclass(frozen=True, eq=False)
class Digraph:
    """Reflexive digraph on vertices ``0..n-1`` backed by a dense boolean matrix.

    ``adj[u, v]`` is true iff ``(u, v)`` is an edge. The matrix is copied and
    made read-only, so instances are immutable and safe to share.
    """

    adj: np.ndarray

    def __post_init__(self):
        adj = np.array(self.adj, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise DigraphError(f"adjacency must be square, got shape {adj.shape}")
        if adj.shape[0] < 1:
            raise DigraphError("digraph needs at least one vertex")
        missing = np.flatnonzero(~adj.diagonal())
        if missing.size:
            raise NotReflexiveError(int(missing[0]))
        adj.setflags(write=False)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_m", int(np.count_nonzero(adj)) - adj.shape[0])

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], add_loops: bool = False) -> "Digraph":
        if n < 1:
            raise DigraphError("digraph needs at least one vertex")
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DigraphError(f"vertex index out of range in edge ({u}, {v})")
            adj[u, v] = True
        if add_loops:
            np.fill_diagonal(adj, True)
        return cls(adj)

    @classmethod
    def complete(cls, n: int) -> "Digraph":
        return cls(np.ones((n, n), dtype=bool))

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    @property
    def m(self) -> int:
        """Number of non-loop edges."""
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def edges(self, include_loops: bool = True) -> Iterator[tuple[int, int]]:
        """Edges in lexicographic order."""
        for u, v in zip(*np.nonzero(self.adj)):
            if include_loops or u != v:
                yield int(u), int(v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.adj.shape == other.adj.shape and bool(np.array_equal(self.adj, other.adj))

    def __hash__(self) -> int:
        return hash((self.n, np.packbits(self.adj).tobytes()))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


def parse_digraph(text: str, add_loops: bool = False) -> Digraph:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append((lineno, line))
    if not lines:
        raise DigraphError("empty input: expected header 'n m'")

    def ints(lineno: int, line: str) -> tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise DigraphError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise DigraphError(f"line {lineno}: expected two integers, got {line!r}") from None

    n, m = ints(*lines[0])
    if n < 1 or m < 0:
        raise DigraphError(f"line {lines[0][0]}: invalid header n={n} m={m}")
    body = lines[1:]
    if len(body) != m:
        raise DigraphError(f"header announces {m} edges but {len(body)} edge lines follow")

    adj = np.zeros((n, n), dtype=bool)
    for lineno, line in body:
        u, v = ints(lineno, line)
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphError(f"line {lineno}: vertex index out of range in edge ({u}, {v})")
        if adj[u, v]:
            raise DigraphError(f"line {lineno}: duplicate edge ({u}, {v})")
        adj[u, v] = True
    if add_loops:
        np.fill_diagonal(adj, True)
    return Digraph(adj)


def serialize_digraph(H: Digraph, include_loops: bool = True) -> str:
    edges = list(H.edges(include_loops=include_loops))
    lines = [f"{H.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines)


def random_reflexive(n: int, p: float, seed: int) -> Digraph:
    """Each ordered non-loop pair is an edge independently with probability ``p``.

    Uses numpy's PCG64 generator, which is reproducible across platforms.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = np.random.default_rng(seed)
    adj = rng.random((n, n)) < p
    np.fill_diagonal(adj, True)
    return Digraph(adj)


def digraph_from_mask(n: int, mask: int) -> Digraph:
    """Decode bit ``i`` of ``mask`` as the i-th non-loop position in row-major order."""
    adj = np.eye(n, dtype=bool)
    i = 0
    for u in range(n):
        for v in range(n):
            if u != v:
                adj[u, v] = bool(mask >> i & 1)
                i += 1
    return Digraph(adj)


def all_reflexive(n: int) -> Iterator[Digraph]:
    """Every reflexive digraph on ``n`` vertices, ordered by bitmask."""
    for mask in range(1 << (n * (n - 1))):
        yield digraph_from_mask(n, mask)


_REFERENCE_EDGES = {
    "G1": (2, []),
    "G2": (3, [(0, 1), (1, 2), (2, 0)]),
    "G3": (3, [(0, 1), (0, 2), (1, 2)]),
    "G4": (4, [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (0, 3)]),
}


def reference_instance(name: str) -> Digraph:
    """The small named instances used across the test suite.

    G1: two isolated looped vertices. G2: reflexive directed 3-cycle.
    G3: reflexive transitive tournament. G4: reflexive symmetric 4-cycle.
    """
    n, edges = _REFERENCE_EDGES[name]
    return Digraph.from_edges(n, edges, add_loops=True)
