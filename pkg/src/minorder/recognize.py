"""End-to-end recognition: formula, 2-SAT, then either a min ordering from the
repaired tournament or an invertible pair from the implication graph."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from minorder.digraph import Digraph, random_reflexive
from minorder.implication import (
    InvertiblePairCertificate,
    build_implication_graph,
    extract_certificate,
    find_invertible_pair,
)
from minorder.orientation import MinOrdering, make_acyclic, orientation_from_assignment, topological_order
from minorder.twosat import build_formula, solve_2sat
from minorder.verify import invertible_pair_problem, forbidden_pattern


class VerificationError(RuntimeError):
    """A produced certificate failed its independent check (an internal bug)."""


@dataclass
class Stats:
    n: int
    m: int
    variables: int = 0
    clauses: int = 0
    hstar_nodes: int | None = None
    hstar_edges: int | None = None
    timings: dict[str, float] = field(default_factory=dict)

    def bounds_text(self) -> str:
        # a (vertex, edge) pair can fire two triples, so the clause bound is
        # 2nm and the H* edge bound 4nm
        n, m = self.n, self.m
        parts = [
            f"STATS n={n} m={m}",
            f"vars={self.variables}/{n * (n - 1) // 2}",
            f"clauses={self.clauses}/{2 * n * m}",
        ]
        if self.hstar_edges is not None:
            parts.append(f"hstar-nodes={self.hstar_nodes}/{n * (n - 1)}")
            parts.append(f"hstar-edges={self.hstar_edges}/{4 * n * m}")
        return " ".join(parts)


@dataclass
class RecognitionResult:
    ordering: MinOrdering | None
    certificate: InvertiblePairCertificate | None
    stats: Stats

    @property
    def is_yes(self) -> bool:
        return self.ordering is not None

    def to_text(self, certificate: bool = False) -> str:
        if self.ordering is not None:
            return self.ordering.to_text()
        cert = self.certificate
        head = f"INVERTIBLE-PAIR: {cert.u} {cert.v}"
        if not certificate:
            return head
        return "\n".join([head] + cert.to_text().splitlines()[1:])


def recognize(H: Digraph, verify: bool = True, debug: bool = False) -> RecognitionResult:
    stats = Stats(H.n, H.m)
    clock = time.perf_counter
    t = clock()

    phi = build_formula(H)
    stats.variables, stats.clauses = phi.n_vars, phi.num_clauses
    stats.timings["formula"] = clock() - t
    t = clock()

    phi_empty = phi.num_clauses == 0
    tau = solve_2sat(phi)
    stats.timings["solve"] = clock() - t
    t = clock()
    del phi

    if tau is not None and phi_empty:
        # all-false assignment: the index order, already acyclic
        result = RecognitionResult(MinOrdering(tuple(range(H.n))), None, stats)
        stats.timings["orient"] = clock() - t
    elif tau is not None:
        T = orientation_from_assignment(tau, H.n)
        ordering = topological_order(make_acyclic(T, H, debug=debug))
        stats.timings["orient"] = clock() - t
        result = RecognitionResult(ordering, None, stats)
    else:
        hstar = build_implication_graph(H)
        stats.hstar_nodes, stats.hstar_edges = hstar.num_nodes, hstar.num_edges
        pair = find_invertible_pair(H, hstar)
        if pair is None:
            raise VerificationError("formula is unsatisfiable but no invertible pair was found")
        cert = extract_certificate(H, pair, hstar)
        del hstar
        stats.timings["certificate"] = clock() - t
        result = RecognitionResult(None, cert, stats)

    if verify:
        t = clock()
        if result.ordering is not None:
            bad = forbidden_pattern(H, result.ordering)
            if bad is not None:
                raise VerificationError(f"ordering has forbidden pattern {bad}")
        else:
            problem = invertible_pair_problem(H, result.certificate)
            if problem is not None:
                raise VerificationError(problem)
        stats.timings["verify"] = clock() - t
    stats.timings["total"] = sum(stats.timings.values())
    return result


@dataclass
class BenchConfig:
    sizes: list[int] = field(default_factory=lambda: [64, 128, 256])
    p: float = 0.5
    seed: int = 0
    reps: int = 3


BENCH_COLUMNS = [
    "n", "p", "rep", "m", "result",
    "t_formula", "t_solve", "t_orient", "t_certificate", "t_verify", "t_total",
    "clauses", "hstar_edges",
]


def instance_seed(seed: int, n: int, rep: int) -> int:
    return int(np.random.SeedSequence([seed, n, rep]).generate_state(1)[0])


def bench(config: BenchConfig) -> list[dict]:
    """One row per (n, rep); instances depend only on (seed, n, rep)."""
    rows = []
    for n in config.sizes:
        for rep in range(config.reps):
            H = random_reflexive(n, config.p, instance_seed(config.seed, n, rep))
            res = recognize(H)
            tm = res.stats.timings
            rows.append({
                "n": n, "p": config.p, "rep": rep, "m": H.m,
                "result": "yes" if res.is_yes else "no",
                **{f"t_{k}": tm.get(k, 0.0) for k in ("formula", "solve", "orient", "certificate", "verify", "total")},
                "clauses": res.stats.clauses,
                "hstar_edges": res.stats.hstar_edges if res.stats.hstar_edges is not None else "",
            })
    return rows


def median_totals(rows: list[dict]) -> dict[int, float]:
    out = {}
    for n in sorted({r["n"] for r in rows}):
        out[n] = float(np.median([r["t_total"] for r in rows if r["n"] == n]))
    return out

