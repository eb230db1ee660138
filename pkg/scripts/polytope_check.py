"""Generate inequality sets and compare their lattice points with the crystal image.

Usage: python3 scripts/polytope_check.py [--var-cutoff 9]
"""
import argparse
import itertools

from polycrystal.crystal import CrystalContext, enumerate_image
from polycrystal.polyhedral import box_from_points, check_ample, enumerate_truncated, generate_Xi_lambda
from polycrystal.rank2 import Rank2Params, rank2_polytope
from polycrystal.rootdata import CartanMatrix, Weight
from polycrystal.sequence import IotaSequence


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--var-cutoff", type=int, default=9)
    args = ap.parse_args()
    iota = IotaSequence.periodic(1, 2)
    print("rank 2: generated forms, closed-form polytope, BFS image")
    for c1, c2 in [(0, 0), (1, 1), (1, 2), (2, 1), (1, 3), (3, 1)]:
        for m in itertools.product(range(3), repeat=2):
            p = Rank2Params(c1, c2, *m)
            A = CartanMatrix.from_rows([[2, -c1], [-c2, 2]])
            full = enumerate_image(CrystalContext(A, iota, Weight(m)))
            forms, top = rank2_polytope(p)
            box = box_from_points(full.points, top)
            xi = generate_Xi_lambda(iota, A, Weight(m), args.var_cutoff)
            ample = check_ample(iota, A, Weight(m), args.var_cutoff)
            same_closed = enumerate_truncated(forms, top, box) == full.points
            same_xi = enumerate_truncated(xi, top, box) == full.points
            print(f"  c=({c1},{c2}) m={m}: |B|={len(full):4d} forms={len(xi):3d} {xi.status().split(' (')[0]} "
                  f"ample={ample.value} closed-form={'ok' if same_closed else 'DIFF'} "
                  f"generated={'ok' if same_xi else 'DIFF'}")
    A3 = CartanMatrix.from_rows([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
    io = IotaSequence((1, 2, 3, 2, 1, 2), (3, 2, 1))
    for lam in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
        v = check_ample(io, A3, Weight(lam), 12, 20_000)
        print(f"A_3 example, lambda={lam}: ample={v.value} certain={v.certain}")


if __name__ == "__main__":
    main()
