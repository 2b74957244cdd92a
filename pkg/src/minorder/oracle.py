"""Brute-force ground truth for small digraphs and the exhaustive self-test."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from minorder.digraph import Digraph, all_reflexive, serialize_digraph
from minorder.implication import (
    PairGraph,
    build_implication_graph,
    build_pair_digraph,
    invertible_mask,
    pair_id,
)
from minorder.verify import verify_full_min_ordering, verify_invertible_pair, verify_min_ordering

MAX_PERMUTATION_N = 10
MAX_CLOSURE_N = 12


class OracleLimitError(ValueError):
    pass


def brute_force_min_ordering(H: Digraph) -> tuple[int, ...] | None:
    """Lexicographically first permutation with no forbidden pattern.

    Permutations are enumerated depth-first in lexicographic order; a prefix
    is abandoned as soon as its last vertex completes a forbidden triple, so
    the first complete survivor is the same one plain enumeration would find.
    """
    n = H.n
    if n > MAX_PERMUTATION_N:
        raise OracleLimitError(f"permutation oracle limited to n <= {MAX_PERMUTATION_N}")
    A = H.adj
    into = [sum(1 << u for u in range(n) if A[u, w]) for w in range(n)]
    outof = [sum(1 << u for u in range(n) if A[w, u]) for w in range(n)]
    order: list[int] = []

    # placed: vertices so far; bad_out: placed u with a later v, (u,v) not in E;
    # bad_in: placed u with a later v, (v,u) not in E
    def extend(placed: int, bad_out: int, bad_in: int) -> bool:
        if len(order) == n:
            return True
        for w in range(n):
            if placed >> w & 1:
                continue
            if into[w] & bad_out or outof[w] & bad_in:
                continue
            order.append(w)
            if extend(
                placed | 1 << w,
                bad_out | (placed & ~into[w]),
                bad_in | (placed & ~outof[w]),
            ):
                return True
            order.pop()
        return False

    return tuple(order) if extend(0, 0, 0) else None


def naive_min_ordering(H: Digraph) -> tuple[int, ...] | None:
    """Plain ``itertools.permutations`` scan; reference for the pruned search."""
    if H.n > MAX_PERMUTATION_N:
        raise OracleLimitError(f"permutation oracle limited to n <= {MAX_PERMUTATION_N}")
    for perm in itertools.permutations(range(H.n)):
        if verify_min_ordering(H, perm):
            return perm
    return None


def transitive_closure(G: PairGraph) -> np.ndarray:
    """Reflexive-transitive reachability matrix by Floyd-Warshall."""
    N = G.num_nodes
    reach = np.eye(N, dtype=bool)
    src, dst = G.edge_arrays()
    reach[src, dst] = True
    for k in range(N):
        reach |= reach[:, k][:, None] & reach[k][None, :]
    return reach


def closure_invertible_pairs(G: PairGraph) -> set[tuple[int, int]]:
    n = G.n
    reach = transitive_closure(G)
    found = set()
    for u in range(n):
        for v in range(n):
            if u != v:
                a, b = pair_id(u, v, n), pair_id(v, u, n)
                if reach[a, b] and reach[b, a]:
                    found.add((u, v))
    return found


def brute_force_invertible_pairs(H: Digraph) -> set[tuple[int, int]]:
    """All invertible pairs, by transitive closure of the pair digraph H+."""
    if H.n > MAX_CLOSURE_N:
        raise OracleLimitError(f"closure oracle limited to n <= {MAX_CLOSURE_N}")
    return closure_invertible_pairs(build_pair_digraph(H))


@dataclass
class ExhaustiveReport:
    n: int
    instances: int = 0
    yes: int = 0
    no: int = 0

    def __str__(self):
        return f"n={self.n}: {self.instances} instances, {self.yes} yes, {self.no} no"


class ExhaustiveFailure(AssertionError):
    pass


def check_instance(H: Digraph) -> bool:
    """Cross-check the pipeline against the oracles on one digraph.

    Returns the yes/no class; raises ExhaustiveFailure with the serialized
    instance on any disagreement.
    """
    from minorder.recognize import recognize
    from minorder.twosat import build_formula, solve_2sat

    def fail(msg):
        raise ExhaustiveFailure(f"{msg}\n{serialize_digraph(H)}")

    result = recognize(H, verify=False)
    oracle_order = brute_force_min_ordering(H)
    if result.is_yes != (oracle_order is not None):
        fail("pipeline and permutation oracle disagree")
    if result.ordering is not None:
        if not (verify_min_ordering(H, result.ordering) and verify_full_min_ordering(H, result.ordering)):
            fail("emitted min ordering does not verify")
    if result.certificate is not None and not verify_invertible_pair(H, result.certificate):
        fail("emitted certificate does not verify")

    hstar_pairs = {tuple(map(int, p)) for p in np.argwhere(invertible_mask(build_implication_graph(H)))}
    hplus_pairs = brute_force_invertible_pairs(H)
    if hstar_pairs != hplus_pairs:
        fail("H* and H+ disagree on invertible pairs")
    sat = solve_2sat(build_formula(H)) is not None
    if not (sat == (not hstar_pairs) == (oracle_order is not None)):
        fail("SAT, invertible-pair and min-ordering classes disagree")
    return result.is_yes


def exhaustive_driver(n: int) -> ExhaustiveReport:
    if not 1 <= n <= 4:
        raise OracleLimitError("exhaustive driver supports 1 <= n <= 4")
    report = ExhaustiveReport(n)
    for H in all_reflexive(n):
        report.instances += 1
        if check_instance(H):
            report.yes += 1
        else:
            report.no += 1
    return report
