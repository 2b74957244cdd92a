"""The 2-CNF formula over vertex-pair variables and its SCC-based solver.

Variables are unordered pairs ``lo < hi`` numbered lexicographically. The
literal ``x(u, v)`` is the positive literal of ``{u, v}`` when ``u < v`` and
its negation when ``u > v``, so ``x(v, u)`` is always ``not x(u, v)``.
Literal codes are ``2*k`` (positive) and ``2*k + 1`` (negative); negation
is ``code ^ 1``.

An assignment fixes a tournament by ``u -> v iff x(u, v) = 0``; a clause
``x(u, v) or x(v, w)`` therefore forbids ``u -> v -> w``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from minorder._kernels import clause_graph_csr, formula_clauses, pack_rows, tarjan_scc
from minorder.digraph import Digraph
from minorder.implication import build_implication_graph, pair_id


def var_index(lo, hi, n: int):
    """Index of the unordered pair ``lo < hi``; elementwise on arrays."""
    return lo * n - lo * (lo + 1) // 2 + (hi - lo - 1)


def literal(u, v, n: int):
    """Literal code of ``x(u, v)`` for ``u != v``; elementwise on arrays."""
    lo = np.minimum(u, v)
    hi = np.maximum(u, v)
    return 2 * var_index(lo, hi, n) + (np.asarray(u) > np.asarray(v))


def variable_pairs(n: int) -> np.ndarray:
    """``(n_vars, 2)`` array of ``(lo, hi)`` indexed by variable."""
    return np.argwhere(np.triu(np.ones((n, n), dtype=bool), 1))


@dataclass(frozen=True, eq=False)
class TwoCnf:
    """Conjunction of two-literal clauses; ``clauses`` is an ``(c, 2)`` array
    of literal codes. ``n`` is the vertex count when the variables are
    vertex pairs, 0 for a generic formula."""

    n_vars: int
    clauses: np.ndarray
    n: int = 0

    @classmethod
    def from_clauses(cls, n_vars: int, clauses: Iterable[tuple[int, int]]) -> "TwoCnf":
        """Build from literal-code pairs, merging duplicates (order-insensitive)."""
        arr = np.array(list(clauses), dtype=np.int64).reshape(-1, 2)
        if arr.size and (arr.min() < 0 or arr.max() >= 2 * n_vars):
            raise ValueError("literal code out of range")
        arr = np.unique(np.sort(arr, axis=1), axis=0)
        return cls(n_vars, arr.astype(np.int32))

    @classmethod
    def from_dimacs_clauses(cls, n_vars: int, clauses: Iterable[tuple[int, int]]) -> "TwoCnf":
        """Clauses as signed 1-based DIMACS integers."""
        def code(x):
            return 2 * (abs(x) - 1) + (x < 0)

        return cls.from_clauses(n_vars, [(code(a), code(b)) for a, b in clauses])

    @property
    def num_clauses(self) -> int:
        return int(self.clauses.shape[0])

    def used_variables(self) -> np.ndarray:
        """Boolean mask of variables occurring in some clause."""
        used = np.zeros(self.n_vars, dtype=bool)
        used[self.clauses.ravel() >> 1] = True
        return used

    def satisfied_by(self, values: np.ndarray) -> bool:
        if self.num_clauses == 0:
            return True
        lits = self.clauses
        truth = values[lits >> 1].astype(bool) ^ (lits & 1).astype(bool)
        return bool(truth.any(axis=1).all())

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.n_vars} {self.num_clauses}"]
        signed = np.where(self.clauses & 1, -((self.clauses >> 1) + 1), (self.clauses >> 1) + 1)
        lines.extend(f"{a} {b} 0" for a, b in signed.tolist())
        return "\n".join(lines)


@dataclass(frozen=True, eq=False)
class Assignment:
    """Truth values indexed by variable; ``value(u, v)`` reads ``x(u, v)``."""

    n: int
    values: np.ndarray

    def value(self, u: int, v: int) -> int:
        bit = int(self.values[var_index(min(u, v), max(u, v), self.n)])
        return bit if u < v else 1 - bit

    def flipped(self, u: int, v: int) -> "Assignment":
        values = self.values.copy()
        values[var_index(min(u, v), max(u, v), self.n)] ^= 1
        return Assignment(self.n, values)


def build_formula(H: Digraph) -> TwoCnf:
    """One clause ``x(u, v) or x(v, w)`` per triple of distinct u, v, w with
    ``(u,w) in E, (u,v) not in E`` or ``(w,u) in E, (v,u) not in E``,
    ordered by triple. Distinct triples give distinct clauses."""
    n = H.n
    n_vars = n * (n - 1) // 2
    if n < 3 or H.m == 0:
        return TwoCnf(n_vars, np.empty((0, 2), np.int32), n)
    clauses = formula_clauses(pack_rows(H.adj), pack_rows(H.adj.T), n)
    return TwoCnf(n_vars, clauses, n)


def implication_graph_csr(phi: TwoCnf) -> tuple[np.ndarray, np.ndarray]:
    """CSR of G(phi) over the ``2 * n_vars`` literal codes."""
    return clause_graph_csr(phi.clauses, 2 * phi.n_vars)


def solve_2sat(phi: TwoCnf) -> Assignment | None:
    """Satisfying assignment, or None when some variable and its negation
    share a strong component of G(phi).

    A literal is set true when its component comes later in topological
    order than its negation's. Variables absent from every clause are 0.
    """
    if phi.num_clauses == 0:
        return Assignment(phi.n, np.zeros(phi.n_vars, np.uint8))
    indptr, indices = implication_graph_csr(phi)
    comp, _ = tarjan_scc(indptr, indices)
    pos, neg = comp[0::2], comp[1::2]
    if np.any(pos == neg):
        return None
    # tarjan ids are reverse topological: smaller id = later in topological order
    values = ((pos < neg) & phi.used_variables()).astype(np.uint8)
    if not phi.satisfied_by(values):
        raise RuntimeError("2-SAT model check failed")
    return Assignment(phi.n, values)


def formula_graph_edges(phi: TwoCnf) -> tuple[np.ndarray, np.ndarray]:
    indptr, indices = implication_graph_csr(phi)
    src = np.repeat(np.arange(2 * phi.n_vars, dtype=np.int64), np.diff(indptr))
    return src, indices.astype(np.int64)


def literal_to_pair(code: int, n: int) -> tuple[int, int]:
    """The H* node matching a literal: ``x(u, v)`` asserts ``v -> u``, which is node ``(v, u)``."""
    lo, hi = variable_pairs(n)[code >> 1]
    return (int(hi), int(lo)) if code & 1 == 0 else (int(lo), int(hi))


def formula_implication_graph_isomorphic_to_hstar(H: Digraph) -> bool:
    """Check that G(phi_H) equals H* with isolated nodes removed, under
    the node map ``x(u, v) -> (v, u)``."""
    n = H.n
    phi = build_formula(H)
    hstar = build_implication_graph(H)
    if n < 2:
        return phi.num_clauses == 0 and hstar.num_edges == 0

    pairs = variable_pairs(n)
    lo, hi = pairs[:, 0], pairs[:, 1]
    # node of literal code 2k is (hi, lo); of 2k+1 is (lo, hi)
    lit_node = np.empty(2 * phi.n_vars, np.int64)
    lit_node[0::2] = pair_id(hi, lo, n)
    lit_node[1::2] = pair_id(lo, hi, n)

    used = np.repeat(phi.used_variables(), 2)
    g_nodes = np.zeros(hstar.num_nodes, dtype=bool)
    g_nodes[lit_node[used]] = True
    if not np.array_equal(g_nodes, hstar.non_isolated()):
        return False

    src, dst = formula_graph_edges(phi)
    g_codes = np.unique(lit_node[src] * hstar.num_nodes + lit_node[dst])
    if g_codes.size != src.size:
        return False
    h_src, h_dst = hstar.edge_arrays()
    h_codes = np.unique(h_src * hstar.num_nodes + h_dst)
    return bool(np.array_equal(g_codes, h_codes))
