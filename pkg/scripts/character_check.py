"""Compare crystal characters of Demazure crystals with Demazure operators.

Usage: python3 scripts/character_check.py [--max-m 2] [--max-len 6]
"""
import argparse
import itertools
import time

from polycrystal.character import Character, character_of, demazure_D_w
from polycrystal.crystal import CrystalContext, demazure_crystal, enumerate_image
from polycrystal.rootdata import CartanMatrix, Weight, reduced_words
from polycrystal.sequence import IotaSequence

TYPES = {
    "A1xA1": [[2, 0], [0, 2]],
    "A2": [[2, -1], [-1, 2]],
    "B2": [[2, -1], [-2, 2]],
    "G2": [[2, -1], [-3, 2]],
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=2)
    ap.add_argument("--max-len", type=int, default=6)
    args = ap.parse_args()
    for name, rows in TYPES.items():
        t = time.perf_counter()
        A = CartanMatrix.from_rows(rows)
        words = reduced_words(A, args.max_len)
        checked = differ = truncation = 0
        for w in words:
            iota = IotaSequence.extending(w, (1, 2))
            for m in itertools.product(range(args.max_m + 1), repeat=2):
                ctx = CrystalContext(A, iota, Weight(m))
                pts = demazure_crystal(ctx, w)
                checked += 1
                if character_of(ctx, pts) != demazure_D_w(A, w, Character.highest(ctx.lam)):
                    differ += 1
                full = enumerate_image(ctx)
                if pts != [p for p in full.points if len(p) <= len(w)]:
                    truncation += 1
        print(f"{name:6s} words={len(words):3d} crystals={checked:4d} "
              f"character mismatches={differ} truncation mismatches={truncation} "
              f"({time.perf_counter() - t:.2f}s)")


if __name__ == "__main__":
    main()
