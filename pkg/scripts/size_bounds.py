"""Measure H* edge and clause counts against n*m on random digraphs.

A vertex and an edge (a, b) can fire two triples, (a, v, b) and (b, v, a),
so the counts are bounded by 4nm edges and 2nm clauses; this script reports
how often the tighter 2nm / nm figures are exceeded.
"""
import argparse
from dataclasses import dataclass, field

import numpy as np

from minorder.digraph import random_reflexive
from minorder.implication import build_implication_graph
from minorder.twosat import build_formula


@dataclass
class SizeConfig:
    sizes: list[int] = field(default_factory=lambda: [5, 8, 16, 32, 64])
    ps: list[float] = field(default_factory=lambda: [0.05, 0.1, 0.3, 0.5, 0.8])
    count: int = 200
    seed: int = 0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=SizeConfig.count)
    ap.add_argument("--seed", type=int, default=SizeConfig.seed)
    args = ap.parse_args()
    config = SizeConfig(count=args.count, seed=args.seed)

    rng = np.random.default_rng(config.seed)
    print(f"{'n':>4} {'p':>5} {'max E/nm':>9} {'max C/nm':>9} {'E>2nm':>6}")
    for n in config.sizes:
        for p in config.ps:
            edge_ratio, clause_ratio, over = [], [], 0
            for _ in range(config.count):
                H = random_reflexive(n, p, int(rng.integers(2**32)))
                if H.m == 0:
                    continue
                e = build_implication_graph(H).num_edges
                c = build_formula(H).num_clauses
                edge_ratio.append(e / (n * H.m))
                clause_ratio.append(c / (n * H.m))
                over += e > 2 * n * H.m
            if edge_ratio:
                print(f"{n:4d} {p:5.2f} {max(edge_ratio):9.3f} {max(clause_ratio):9.3f} {over:6d}")


if __name__ == "__main__":
    main()
