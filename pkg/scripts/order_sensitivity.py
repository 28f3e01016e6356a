"""Does the generating set depend on the order in which 4-subsets are visited?

Runs the replacement algorithm under random permutations of the 4-subsets
and reports how many distinct output sets appear, their sizes, and whether
they all span the same degree-4 Magnus image.

    python3 scripts/order_sensitivity.py --m 5 --complexes 10 --orders 20
"""

from __future__ import annotations

import argparse
import itertools
import random
import sys
from dataclasses import dataclass

from racg_lcs import gf2
from racg_lcs.complexes import Complex1Skeleton
from racg_lcs.lcs import l4_generators, magnus_matrix


@dataclass
class OrderConfig:
    m: int = 5
    complexes: int = 10
    orders: int = 20
    edge_probability: float = 0.4
    seed: int = 3


def run(cfg: OrderConfig):
    rng = random.Random(cfg.seed)
    quads = list(itertools.combinations(range(1, cfg.m + 1), 4))
    pairs = list(itertools.combinations(range(1, cfg.m + 1), 2))
    for n in range(cfg.complexes):
        K = Complex1Skeleton(cfg.m, tuple(e for e in pairs if rng.random() < cfg.edge_probability))
        base = l4_generators(K)
        outputs = {tuple(base)}
        same_span = True
        for _ in range(cfg.orders):
            order = quads[:]
            rng.shuffle(order)
            gens = l4_generators(K, order=order)
            outputs.add(tuple(gens))
            same_span &= gf2.same_span(magnus_matrix(K, base, 4), magnus_matrix(K, gens, 4))
        sizes = sorted({len(o) for o in outputs})
        yield K, len(outputs), sizes, same_span


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=OrderConfig.m)
    ap.add_argument("--complexes", type=int, default=OrderConfig.complexes)
    ap.add_argument("--orders", type=int, default=OrderConfig.orders)
    ap.add_argument("--p", type=float, default=OrderConfig.edge_probability)
    ap.add_argument("--seed", type=int, default=OrderConfig.seed)
    args = ap.parse_args(argv)
    cfg = OrderConfig(args.m, args.complexes, args.orders, args.p, args.seed)
    print("edges\tdistinct_outputs\tsizes\tsame_mu4_span")
    for K, distinct, sizes, same in run(cfg):
        edges = " ".join(f"{a}-{b}" for a, b in K.edges) or "-"
        print(f"{edges}\t{distinct}\t{sizes}\t{same}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
