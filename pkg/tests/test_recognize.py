import time

import pytest

from conftest import interval_instance, random_instances
from minorder.digraph import Digraph, random_reflexive
from minorder.recognize import BENCH_COLUMNS, BenchConfig, bench, instance_seed, median_totals, recognize
from minorder.verify import verify_invertible_pair, verify_min_ordering


def test_g3_yes(G3):
    res = recognize(G3)
    assert res.is_yes and res.certificate is None
    assert verify_min_ordering(G3, res.ordering)
    assert res.to_text() == "MIN-ORDERING: " + " ".join(map(str, res.ordering.order))


def test_g2_no(G2):
    res = recognize(G2)
    assert not res.is_yes and res.ordering is None
    assert verify_invertible_pair(G2, res.certificate)
    text = res.to_text(certificate=True).splitlines()
    assert text[0] == f"INVERTIBLE-PAIR: {res.certificate.u} {res.certificate.v}"
    assert text[1].startswith("FORWARD") and text[2].startswith("BACK")
    assert res.to_text() == text[0]


def test_complete_graph_identity():
    assert recognize(Digraph.complete(7)).ordering.order == tuple(range(7))


def test_single_vertex():
    assert recognize(Digraph.complete(1)).ordering.order == (0,)


def test_stats_bounds_text(G2):
    res = recognize(G2)
    s = res.stats
    assert s.hstar_nodes == 6 and s.hstar_edges <= 4 * s.n * s.m
    assert res.stats.bounds_text().startswith("STATS n=3 m=3 vars=3/3 clauses=")
    assert "hstar-edges=" in s.bounds_text()
    assert "hstar" not in recognize(Digraph.complete(3)).stats.bounds_text()


def test_stats_timings_present():
    res = recognize(random_reflexive(20, 0.5, 0))
    assert {"formula", "solve", "total"} <= set(res.stats.timings)
    assert res.stats.timings["total"] >= 0


def test_larger_yes_instances():
    for seed in range(20):
        H = interval_instance(80, seed)
        res = recognize(H, debug=seed < 3)
        assert res.is_yes and verify_min_ordering(H, res.ordering)


def test_random_instances_are_certified():
    for H in random_instances(100, (9, 40), seed=51):
        res = recognize(H)
        if res.is_yes:
            assert verify_min_ordering(H, res.ordering)
        else:
            assert verify_invertible_pair(H, res.certificate)


def test_edgeless_is_fast():
    H = random_reflexive(1024, 0.0, 0)
    recognize(H)
    t = time.perf_counter()
    res = recognize(H)
    assert time.perf_counter() - t < 0.05
    assert res.ordering.order == tuple(range(1024))


def test_bench_rows():
    rows = bench(BenchConfig(sizes=[8, 16], p=0.3, seed=1, reps=2))
    assert [(r["n"], r["rep"]) for r in rows] == [(8, 0), (8, 1), (16, 0), (16, 1)]
    assert all(set(r) == set(BENCH_COLUMNS) for r in rows)
    assert set(median_totals(rows)) == {8, 16}
    again = bench(BenchConfig(sizes=[8, 16], p=0.3, seed=1, reps=2))
    assert [(r["m"], r["result"]) for r in rows] == [(r["m"], r["result"]) for r in again]


def test_instance_seed_is_stable():
    assert instance_seed(0, 8, 0) == instance_seed(0, 8, 0)
    assert instance_seed(0, 8, 0) != instance_seed(0, 8, 1)
