"""Search-tree certificates for b2 = 3b1 + c with small c, and the b1-only cases.

Prints the outcome and node count for each instance.

    python scripts/certify_nonexistence.py --b1max 20 --offsets 2 3 4 5
"""
import argparse

from subsetsum.search import nonexistence_search


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--b1max", type=int, default=20)
    ap.add_argument("--offsets", type=int, nargs="+", default=[2, 3, 4, 5])
    args = ap.parse_args()

    print("b1 only:")
    for b1 in range(2, 13):
        out = nonexistence_search([b1])
        print(f"  B=[{b1}]: {out.kind} ({out.nodes} nodes)")

    header = "  b1 " + "".join(f"{'3b1+' + str(c):>26}" for c in args.offsets)
    print("\nB = [b1, 3b1 + c]:")
    print(header)
    for b1 in [4, 7, 8] + list(range(11, args.b1max + 1)):
        cells = []
        for c in args.offsets:
            out = nonexistence_search([b1, 3 * b1 + c])
            cells.append(f"{out.kind} ({out.nodes})")
        print(f"{b1:>4} " + "".join(f"{c:>26}" for c in cells))


if __name__ == "__main__":
    main()
