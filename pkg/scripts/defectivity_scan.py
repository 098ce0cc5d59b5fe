#!/usr/bin/env python3
"""Scan Grassmannians with the secant-dimension oracle.

For every (r, n) in range and every h up to the combinatorial bound
(or a flat cap) the oracle computes the dimension of the h-secant
variety over a 62-bit prime field and reports the verdict.  Shapes
whose parametrization would exceed the term cap are skipped, so the
scan stays desk-scale.
"""

import argparse
import sys
import time
from dataclasses import dataclass
from math import factorial

sys.path.insert(0, "src")

from grassdef import (
    DEFAULT_PRIME,
    DEFAULT_SEED,
    GrassShape,
    grass_bound,
    secant_dimension,
)


@dataclass(frozen=True)
class Config:
    r_max: int
    n_max: int
    h_cap: int
    trials: int
    seed: int
    max_terms: int


def parse_args(argv=None) -> Config:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r-max", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=9)
    ap.add_argument("--h-cap", type=int, default=6)
    ap.add_argument("--trials", type=int, default=1)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--max-terms", type=int, default=500_000)
    args = ap.parse_args(argv)
    return Config(args.r_max, args.n_max, args.h_cap, args.trials, args.seed, args.max_terms)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    defective = []
    for r in range(1, cfg.r_max + 1):
        for n in range(2 * r + 1, cfg.n_max + 1):
            shape = GrassShape(r, n)
            if shape.num_coords * factorial(shape.r + 1) > cfg.max_terms:
                print(f"{shape.label}: skipped, parametrization over the term cap")
                continue
            h_max = cfg.h_cap if r < 2 else min(cfg.h_cap, grass_bound(r, n).max_h + 2)
            for h in range(1, h_max + 1):
                start = time.perf_counter()
                cert = secant_dimension(
                    shape, h, trials=cfg.trials, prime=DEFAULT_PRIME, seed=cfg.seed
                )
                elapsed = time.perf_counter() - start
                print(
                    f"{shape.label} h={h}: computed {cert.computed_dim},"
                    f" expected {cert.expected_dim}, defect {cert.defect},"
                    f" {cert.verdict} ({elapsed:.2f} s)"
                )
                if cert.defect > 0:
                    defective.append((shape.label, h, cert.defect))
                if cert.computed_dim == shape.ambient_dim:
                    break
    print()
    if defective:
        print("defect evidence:")
        for label, h, d in defective:
            print(f"  {label} h={h}: defect {d}")
    else:
        print("no defect evidence in range")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
