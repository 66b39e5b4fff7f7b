"""Blow up the negative chamber at random and tabulate the resulting
Poincare polynomials and their Rost / Severi-Brauer decompositions."""

import argparse
import random

from toromotive import build_root_datum, compactification_poincare, decompose, stellar_subdivide, symmetrize, validate_fan, weyl_chamber_fan
from toromotive.fan import cones_in_negative_chamber
from toromotive.polyhedral import primitive


def blowup(rd, fan, rng):
    cone = rng.choice(cones_in_negative_chamber(rd, fan))
    ray = primitive([sum(col) for col in zip(*cone.rays)])
    return symmetrize(rd, stellar_subdivide(rd, fan, ray))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=10)
    ap.add_argument("--steps", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    rd = build_root_datum(("A", 2), "simply_connected")
    start = symmetrize(rd, stellar_subdivide(rd, weyl_chamber_fan(rd), (-1, -1)))
    for i in range(args.samples):
        fan = start
        for _ in range(rng.randint(0, args.steps)):
            fan = blowup(rd, fan, rng)
        rep = validate_fan(rd, fan)
        res = compactification_poincare(rd, fan)
        dec = decompose(res.product, 3)
        print(f"{i:3d} s={rep.s:3d} k={rep.k:2d} P={res.product.to_list()} sb_total={dec.sb_total}")


if __name__ == "__main__":
    main()
