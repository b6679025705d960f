"""Build and verify the recurrence-family construction over a grid of b1 and stages.

    python scripts/reproduce_fact1.py --b1 11 30 --kmax 10
"""
import argparse
import time

from subsetsum.construct import build_a_thm11
from subsetsum.verify import verify_complement, verify_trace


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--b1", type=int, nargs=2, default=(11, 30), metavar=("LO", "HI"))
    ap.add_argument("--kmax", type=int, default=10)
    args = ap.parse_args()

    print(f"{'b1':>4} {'k':>3} {'|A_k|':>6} {'span':>12} {'holes':>6}  status")
    t0 = time.perf_counter()
    failures = 0
    for b1 in range(args.b1[0], args.b1[1] + 1):
        trace = build_a_thm11(b1, args.kmax)
        for r in verify_trace(trace):
            failures += not r.verified
            print(f"{b1:>4} {r.k:>3} {r.size:>6} {r.span:>12} {len(r.expected_holes):>6}  {r.status}")
        final = trace.final
        comp = verify_complement(final.elements, trace.bspec, final.span)
        print(f"     complement on [0, {final.span}]: {comp.status}, "
              f"exact up to {comp.exact_upto}, pending {len(comp.pending)}")
    print(f"\n{failures} failing stages, {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
