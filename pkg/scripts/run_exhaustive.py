"""Cross-check the pipeline against the brute-force oracles on every
reflexive digraph with n vertices, for n = 1..N."""
import argparse
import time

from minorder.oracle import exhaustive_driver


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4, choices=range(1, 5))
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        t = time.perf_counter()
        report = exhaustive_driver(n)
        print(f"{report}  ({time.perf_counter() - t:.1f}s)")


if __name__ == "__main__":
    main()
