"""Print extremal vectors for the A_3 example and for rank-2 types.

Usage: python3 scripts/extremal_tables.py [--max-m 2] [--max-L 8]
"""
import argparse
import itertools

from polycrystal.crystal import INFINITY
from polycrystal.extremal import extremal_oracle, solve_extremal
from polycrystal.rank2 import Rank2Params, l_max, rank2_extremal, w_L
from polycrystal.rootdata import CartanMatrix, Weight, WeylWord
from polycrystal.sequence import IotaSequence


def a3_table(max_m: int) -> None:
    A = CartanMatrix.from_rows([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
    iota = IotaSequence((1, 2, 3, 2, 1, 2), (3, 2, 1))
    letters = (1, 2, 3, 2, 1, 2)
    print("A_3, iota prefix 1,2,3,2,1,2; vectors shown as (x_1, ..., x_6)")
    for lam in itertools.product(range(max_m + 1), repeat=3):
        rows = []
        for L in (3, 4, 5, 6):
            x = solve_extremal(A, iota, Weight(lam), WeylWord(letters[:L]))
            rows.append(tuple(list(x) + [0] * (6 - len(x))))
        print(f"  lambda={lam}: " + "  ".join(str(r) for r in rows))


def rank2_table(max_m: int, max_L: int) -> None:
    print("rank 2: closed form vs solver vs oracle")
    for c1, c2 in [(0, 0), (1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2), (2, 3)]:
        bad = 0
        for m1, m2 in itertools.product(range(max_m + 1), repeat=2):
            p = Rank2Params(c1, c2, m1, m2)
            top = l_max(p)
            top = max_L if top is INFINITY else min(top, max_L)
            for L in range(top + 1):
                args = (p.cartan(), p.iota(), p.weight(), w_L(L, p))
                if not rank2_extremal(p, L) == solve_extremal(*args) == extremal_oracle(*args):
                    bad += 1
        top = l_max(Rank2Params(c1, c2))
        longest = rank2_extremal(Rank2Params(c1, c2, 1, 1), max_L if top is INFINITY else top)
        print(f"  c=({c1},{c2}) l_max={top}  mismatches={bad}  x for m=(1,1): {longest}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=2)
    ap.add_argument("--max-L", type=int, default=8)
    args = ap.parse_args()
    a3_table(args.max_m)
    rank2_table(args.max_m, args.max_L)


if __name__ == "__main__":
    main()
