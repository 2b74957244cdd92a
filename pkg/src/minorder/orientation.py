"""Tournaments on V(H): building them from assignments, checking consistency
with H, and repairing directed triangles until the tournament is acyclic."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from minorder.digraph import Digraph
from minorder.twosat import Assignment, var_index


class ConsistencyError(RuntimeError):
    """A tournament violates the forcing relation of H."""


@dataclass(frozen=True, eq=False)
class Tournament:
    """``beats[u, v]`` is true iff the pair ``{u, v}`` is oriented ``u -> v``."""

    beats: np.ndarray

    def __post_init__(self):
        beats = np.array(self.beats, dtype=bool, copy=True)
        if beats.ndim != 2 or beats.shape[0] != beats.shape[1]:
            raise ValueError("tournament matrix must be square")
        if beats.diagonal().any():
            raise ValueError("tournament has a self-pair")
        off = ~np.eye(beats.shape[0], dtype=bool)
        if not np.array_equal((beats ^ beats.T)[off], np.ones(off.sum(), dtype=bool)):
            raise ValueError("every pair needs exactly one direction")
        beats.setflags(write=False)
        object.__setattr__(self, "beats", beats)

    @classmethod
    def from_order(cls, order) -> "Tournament":
        """Transitive tournament where earlier vertices beat later ones."""
        order = np.asarray(order)
        rank = np.empty(order.size, np.int64)
        rank[order] = np.arange(order.size)
        return cls(rank[:, None] < rank[None, :])

    @property
    def n(self) -> int:
        return self.beats.shape[0]

    def __eq__(self, other):
        if not isinstance(other, Tournament):
            return NotImplemented
        return bool(np.array_equal(self.beats, other.beats))

    def __hash__(self):
        return hash(np.packbits(self.beats).tobytes())


@dataclass(frozen=True)
class MinOrdering:
    """``order[i]`` is the i-th vertex in the ordering."""

    order: tuple[int, ...]

    def to_text(self) -> str:
        return "MIN-ORDERING: " + " ".join(map(str, self.order))


def orientation_from_assignment(tau: Assignment, n: int) -> Tournament:
    """``u -> v`` iff ``x(u, v) = 0``. For ``lo < hi`` that means ``lo -> hi``
    exactly when the variable of ``{lo, hi}`` is false."""
    beats = np.zeros((n, n), dtype=bool)
    lo, hi = np.triu_indices(n, 1)
    false = np.asarray(tau.values)[var_index(lo, hi, n)] == 0
    beats[lo, hi] = false
    beats[hi, lo] = ~false
    return Tournament(beats)


def _violations(beats: np.ndarray, A: np.ndarray, v: int) -> np.ndarray:
    """Mask over (u, w) of triples with u -> v -> w although H* forces
    ``u -> v`` to imply ``w -> v``."""
    notA = ~A
    forced = (A & notA[:, v][:, None]) | (A.T & notA[v, :][:, None])
    return forced & beats[:, v][:, None] & beats[v, :][None, :]


def find_inconsistency(T: Tournament, H: Digraph) -> tuple[int, int, int] | None:
    """A triple ``(u, v, w)`` with ``u -> v -> w`` in T and ``(u,v) -> (w,v)``
    in H*, or None if T is consistent with H."""
    A, beats = H.adj, T.beats
    for v in range(T.n):
        hits = np.argwhere(_violations(beats, A, v))
        if hits.size:
            u, w = hits[0]
            return int(u), v, int(w)
    return None


def is_consistent(T: Tournament, H: Digraph) -> bool:
    return find_inconsistency(T, H) is None


def find_directed_triangle(T: Tournament) -> tuple[int, int, int] | None:
    """Some ``x -> y -> z -> x``, scanning x, then y, then z in index order."""
    beats = T.beats
    for x in range(T.n):
        cyc = beats[x][:, None] & beats & beats[:, x][None, :]
        hits = np.argwhere(cyc)
        if hits.size:
            y, z = hits[0]
            return x, int(y), int(z)
    return None


def directed_triangles(T: Tournament) -> set[frozenset[int]]:
    """Vertex sets of all directed triangles (each 3-set carries at most one)."""
    beats = T.beats
    found = set()
    for x in range(T.n):
        for y, z in np.argwhere(beats[x][:, None] & beats & beats[:, x][None, :]).tolist():
            found.add(frozenset((x, y, z)))
    return found


def count_triangles(T: Tournament) -> int:
    b = T.beats.astype(np.int64)
    return int(np.trace(b @ b @ b)) // 3


def reversal_set(T: Tournament, u: int) -> np.ndarray:
    """Mask of E_u: edges ``v -> w`` with ``u -> v`` and ``w -> u``."""
    beats = T.beats
    return beats[u][:, None] & beats & beats[:, u][None, :]


def repair_vertex(T: Tournament, u: int, H: Digraph | None = None, debug: bool = False) -> Tournament:
    """Reverse every edge of E_u at once. Afterwards no directed triangle
    passes through u and no new triangle appears."""
    flip = reversal_set(T, u)
    if not flip.any():
        return T
    out = Tournament(T.beats ^ flip ^ flip.T)
    if debug:
        _check_repair(T, out, u, H)
    return out


def _check_repair(before: Tournament, after: Tournament, u: int, H: Digraph | None) -> None:
    if any(u in tri for tri in directed_triangles(after)):
        raise AssertionError(f"triangle through {u} survived repair")
    if not directed_triangles(after) <= directed_triangles(before):
        raise AssertionError(f"repair at {u} created a triangle")
    if H is not None and not is_consistent(after, H):
        raise ConsistencyError(f"repair at {u} broke consistency")


def make_acyclic(T: Tournament, H: Digraph, debug: bool = False) -> Tournament:
    """One pass of ``repair_vertex`` over ``u = 0..n-1``."""
    if debug and not is_consistent(T, H):
        raise ConsistencyError("input tournament is not consistent with H")
    beats = np.array(T.beats)
    for u in range(T.n):
        flip = beats[u][:, None] & beats & beats[:, u][None, :]
        if flip.any():
            if debug:
                before = Tournament(beats)
            beats ^= flip | flip.T
            if debug:
                _check_repair(before, Tournament(beats), u, H)
    return Tournament(beats)


def topological_order(T: Tournament) -> MinOrdering:
    """Vertices by decreasing out-degree; an acyclic tournament has out-degrees
    exactly ``n-1, ..., 1, 0``."""
    outdeg = T.beats.sum(axis=1)
    order = np.argsort(-outdeg, kind="stable")
    if not np.array_equal(outdeg[order], np.arange(T.n - 1, -1, -1)):
        raise ValueError("tournament has a directed cycle")
    return MinOrdering(tuple(int(x) for x in order))
