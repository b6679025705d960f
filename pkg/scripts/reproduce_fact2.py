"""Verify the arithmetic-progression construction for every admissible (b1, d).

    python scripts/reproduce_fact2.py --b1max 40 --kmax 12
"""
import argparse
import time

from subsetsum.construct import build_a_thm13
from subsetsum.verify import verify_trace


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--b1max", type=int, default=40)
    ap.add_argument("--kmax", type=int, default=12)
    args = ap.parse_args()
    t0 = time.perf_counter()
    pairs = stages = bad = 0
    for b1 in [4, 7, 8] + list(range(11, args.b1max + 1)):
        for d in range(b1 + 2, 2 * b1 + 2):
            pairs += 1
            for r in verify_trace(build_a_thm13(b1, d, args.kmax)):
                stages += 1
                if not r.verified:
                    bad += 1
                    print(f"mismatch b1={b1} d={d} k={r.k}: {r.match}")
    print(f"{pairs} (b1, d) pairs, {stages} stages, {bad} mismatches, "
          f"{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
