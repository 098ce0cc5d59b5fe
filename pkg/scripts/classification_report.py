#!/usr/bin/env python3
"""Classification sweep for blow-ups of a rank-one ambient at k points.

Prints, for each k in range, the Fano/weak-Fano verdict, the spherical
status, and the Mori-dream-space status of the blow-up, plus the Mori
chamber decomposition of the one-point blow-up when the ambient is a
Grassmannian of lines.
"""

import argparse
import sys
from dataclasses import dataclass

sys.path.insert(0, "src")

from grassdef import (
    Ambient,
    anticanonical,
    classify_fano,
    mds_status,
    mori_chambers_g1n1,
    spherical_status,
    top_self_intersection,
)


@dataclass(frozen=True)
class Config:
    kind: str
    r: int
    n: int
    k_max: int
    chambers: bool


def parse_args(argv=None) -> Config:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kind", choices=("grass", "quadric", "proj"), default="grass")
    ap.add_argument("--r", type=int, default=1)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--k-max", type=int, default=8)
    ap.add_argument("--chambers", action="store_true")
    args = ap.parse_args(argv)
    return Config(args.kind, args.r, args.n, args.k_max, args.chambers)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    if cfg.kind == "grass":
        ambient = Ambient.grassmannian(cfg.r, cfg.n)
    elif cfg.kind == "quadric":
        ambient = Ambient.quadric(cfg.n)
    else:
        ambient = Ambient.projective(cfg.n)
    print(f"{ambient.label}: dim {ambient.dim}, degree {ambient.degree}, index {ambient.index}")
    for k in range(cfg.k_max + 1):
        fano = classify_fano(ambient, k)
        top = top_self_intersection(ambient, anticanonical(ambient, k))
        line = f"  k={k}: {fano.verdict:<13} (-K)^dim={top:<8} [{fano.source}]"
        if cfg.kind != "quadric":
            r = ambient.r if cfg.kind == "grass" else 0
            mds = mds_status(r, ambient.n, k)
            line += f" MDS={mds.summary}"
            if k >= 1:
                sph = spherical_status(r, ambient.n, k)
                line += f" spherical={'yes' if sph.spherical else 'no'}({sph.rule})"
        print(line)
    if cfg.chambers and cfg.kind == "grass" and ambient.r == 1:
        dec = mori_chambers_g1n1(ambient.n)
        print(f"chambers of {ambient.label} blown up at one point:")
        print(f"  walls: {', '.join(w.name for w in dec.walls)}")
        for chamber in dec.chambers:
            print(f"  [{chamber.rays[0].name}, {chamber.rays[1].name}] -> {chamber.model}")
        if dec.note:
            print(f"  note: {dec.note}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
